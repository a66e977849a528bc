#include "sedf/error.hpp"

namespace sedf {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidGroup: return "invalid-group";
        case ErrorKind::InvalidElement: return "invalid-element";
        case ErrorKind::EmptySet: return "empty-set";
        case ErrorKind::InvalidField: return "invalid-field";
        case ErrorKind::InvalidPolynomial: return "invalid-polynomial";
        case ErrorKind::ReducibleModulus: return "reducible-modulus";
        case ErrorKind::Capacity: return "capacity";
        case ErrorKind::ZeroElement: return "zero-element";
        case ErrorKind::Range: return "range";
        case ErrorKind::Divisibility: return "divisibility";
        case ErrorKind::UnsupportedParity: return "unsupported-parity";
        case ErrorKind::Parameter: return "parameter";
        case ErrorKind::Shape: return "shape";
        case ErrorKind::Partition: return "partition";
        case ErrorKind::Uniformity: return "uniformity";
        case ErrorKind::Parse: return "parse";
    }
    return "unknown";
}

}  // namespace sedf
