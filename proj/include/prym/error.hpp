// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace prym {

/// Named failure modes. The name of each kind is part of the CLI contract
/// (it is printed verbatim on exit code 65).
enum class ErrorKind {
    NonSquareMatrix,
    NotAntisymmetric,
    OddDimension,
    DimensionMismatch,
    InadmissibleCover,
    OutOfValidityWindow,
    InvalidGerm,
    WrongChart,
    LinearizationMismatch,
    ParityError,
    StructureViolation,
    ParityViolation,
    EmptyLocus,
    InadmissibleInput,
    UnknownScenario,
    GridTooLarge,
    MalformedInput,
};

std::string_view error_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind), detail_(what) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return error_name(kind_); }
    /// The message without the "Name: " prefix.
    const std::string& detail() const noexcept { return detail_; }

   private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace prym
