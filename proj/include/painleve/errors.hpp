#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace painleve {

/// Malformed input text. `position` is a 0-based character offset into the
/// offending string when one is known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position = 0)
        : std::runtime_error(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A parameter vector or argument violates a structural constraint
/// (wrong dimension, sum not zero, precondition not met).
class ConstraintError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Symbolic exponent that is not a literal integer, e.g. y^c.
class UnsupportedExponent : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A division by a quantity that vanishes (identically or at a point).
class PoleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Numeric evaluation left the domain where the requested quantity is real.
class RegionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace painleve
