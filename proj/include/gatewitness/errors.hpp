#pragma once

#include <stdexcept>

namespace gatewitness {

// Malformed or out-of-range arguments: bad dimensions, bad labels, bad ranges.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A mathematical precondition does not hold: non-unitary gate, non-Hermitian
// matrix, invalid density matrix, indefinite measurement parity,
// unclassifiable gate outputs.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An internal consistency check failed; this means a bug, not bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace gatewitness
