#ifndef HSTAR_ERRORS_HPP
#define HSTAR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hstar {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input text. `position` is a 1-based character offset into the input.
class parse_error : public error {
public:
    parse_error(const std::string& msg, std::size_t position)
        : error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Operands belong to different rings (or incompatible coefficient fields).
class ring_mismatch_error : public error {
public:
    explicit ring_mismatch_error(const std::string& msg) : error(msg) {}
};

/// Structural precondition violated (non-homogeneous input, bad graph, degenerate spec, ...).
class validation_error : public error {
public:
    explicit validation_error(const std::string& msg) : error(msg) {}
};

/// A configured resource cap was exceeded. Signals that the computation is
/// beyond desk scale, not a mathematical failure.
class cap_exceeded_error : public error {
public:
    explicit cap_exceeded_error(const std::string& msg) : error(msg) {}
};

/// Coordinate-wise product of two points vanished in every coordinate.
class undefined_product_error : public error {
public:
    explicit undefined_product_error(const std::string& msg) : error(msg) {}
};

/// A long-running computation was cancelled via the caps' cancel flag.
class cancelled_error : public error {
public:
    cancelled_error() : error("computation cancelled") {}
};

} // namespace hstar

#endif
