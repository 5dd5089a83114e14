#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fca {

enum class ErrorKind {
    DuplicateName,
    UnknownName,
    ContextMismatch,
    EmptyInput,
    CapacityExceeded,
    UncoveredColumn,
    KindMismatch,
    ValueOutOfRange,
    UnknownCategory,
    InvalidScheme,
    MalformedScheme,
    UnknownAttribute,
    NonPartition,
    MalformedHeader,
    DimensionMismatch,
    IllegalIncidenceChar,
    RaggedRow,
    NonNumericCell,
    MissingCell,
    EmptyHeader,
    MalformedCrossTab,
    Io,
};

std::string_view kind_name(ErrorKind kind) noexcept;

/// Domain error raised by every fca operation. The CLI reports these as
/// `ERROR <kind>: <detail>` with exit code 1.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail) : std::runtime_error(detail), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace fca
