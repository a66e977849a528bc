#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sedf {

/// Category of a rejected input or unsupported request.
enum class ErrorKind {
    InvalidGroup,
    InvalidElement,
    EmptySet,
    InvalidField,
    InvalidPolynomial,
    ReducibleModulus,
    Capacity,
    ZeroElement,
    Range,
    Divisibility,
    UnsupportedParity,
    Parameter,
    Shape,
    Partition,
    Uniformity,
    Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace sedf
