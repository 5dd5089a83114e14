#include "fca/error.hpp"

namespace fca {

std::string_view kind_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DuplicateName: return "DuplicateName";
        case ErrorKind::UnknownName: return "UnknownName";
        case ErrorKind::ContextMismatch: return "ContextMismatch";
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::CapacityExceeded: return "CapacityExceeded";
        case ErrorKind::UncoveredColumn: return "UncoveredColumn";
        case ErrorKind::KindMismatch: return "KindMismatch";
        case ErrorKind::ValueOutOfRange: return "ValueOutOfRange";
        case ErrorKind::UnknownCategory: return "UnknownCategory";
        case ErrorKind::InvalidScheme: return "InvalidScheme";
        case ErrorKind::MalformedScheme: return "MalformedScheme";
        case ErrorKind::UnknownAttribute: return "UnknownAttribute";
        case ErrorKind::NonPartition: return "NonPartition";
        case ErrorKind::MalformedHeader: return "MalformedHeader";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::IllegalIncidenceChar: return "IllegalIncidenceChar";
        case ErrorKind::RaggedRow: return "RaggedRow";
        case ErrorKind::NonNumericCell: return "NonNumericCell";
        case ErrorKind::MissingCell: return "MissingCell";
        case ErrorKind::EmptyHeader: return "EmptyHeader";
        case ErrorKind::MalformedCrossTab: return "MalformedCrossTab";
        case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

}  // namespace fca
