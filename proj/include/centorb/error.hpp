#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace centorb {

/// Operand shapes or lengths do not fit together.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The characteristic polynomial has a root outside the rationals.
class NonSplittingCharPoly : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A label that does not belong to the lattice it was used with.
class InvalidLabel : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed user input (operator descriptions, vectors, moduli).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration refused because it would exceed its size cap.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string& what, std::size_t requested, std::size_t cap)
        : std::runtime_error(what + ": " + std::to_string(requested) + " exceeds cap " +
                             std::to_string(cap)),
          requested_(requested), cap_(cap) {}

    std::size_t requested() const { return requested_; }
    std::size_t cap() const { return cap_; }

private:
    std::size_t requested_;
    std::size_t cap_;
};

}  // namespace centorb
