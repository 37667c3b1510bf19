#pragma once

#include <stdexcept>
#include <string>

namespace graycycle {

/// Length or alphabet mismatch between words that must agree.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A parameter (p, n, k, parity, ...) outside the accepted range.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A character outside 0..p-1.
class DomainError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A count that would overflow 64 bits or exceed the materialization limit.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

} // namespace graycycle
