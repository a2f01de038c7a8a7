// SPDX-License-Identifier: Apache-2.0
#include "prym/rational.hpp"

#include <cctype>

#include "prym/error.hpp"

namespace prym {

std::string_view error_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NonSquareMatrix: return "NonSquareMatrix";
        case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
        case ErrorKind::OddDimension: return "OddDimension";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::InadmissibleCover: return "InadmissibleCover";
        case ErrorKind::OutOfValidityWindow: return "OutOfValidityWindow";
        case ErrorKind::InvalidGerm: return "InvalidGerm";
        case ErrorKind::WrongChart: return "WrongChart";
        case ErrorKind::LinearizationMismatch: return "LinearizationMismatch";
        case ErrorKind::ParityError: return "ParityError";
        case ErrorKind::StructureViolation: return "StructureViolation";
        case ErrorKind::ParityViolation: return "ParityViolation";
        case ErrorKind::EmptyLocus: return "EmptyLocus";
        case ErrorKind::InadmissibleInput: return "InadmissibleInput";
        case ErrorKind::UnknownScenario: return "UnknownScenario";
        case ErrorKind::GridTooLarge: return "GridTooLarge";
        case ErrorKind::MalformedInput: return "MalformedInput";
    }
    return "Unknown";
}

std::string to_string(const Rat& q) { return q.get_str(10); }

namespace {

bool is_integer_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Int parse_int(std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return Int(std::string(s), 10);
}

}  // namespace

std::optional<Rat> parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_text(text)) return std::nullopt;
        return Rat(parse_int(text));
    }
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+')
        return std::nullopt;
    Int d = parse_int(den);
    if (d == 0) return std::nullopt;
    Rat q(parse_int(num), d);
    q.canonicalize();
    return q;
}

std::optional<Rat> rational_sqrt(const Rat& q) {
    if (sgn(q) < 0) return std::nullopt;
    const Int& num = q.get_num();
    const Int& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    Int a, b;
    mpz_sqrt(a.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(b.get_mpz_t(), den.get_mpz_t());
    Rat r(a, b);
    r.canonicalize();
    return r;
}

}  // namespace prym
