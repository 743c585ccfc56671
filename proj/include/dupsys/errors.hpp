#ifndef DUPSYS_ERRORS_HPP
#define DUPSYS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dupsys {

// Bad argument to an operation (out-of-range length, wrong model kind, ...).
class InvalidParameter : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// A probability measure that is not shift-invariant or does not sum to one.
class InvalidMeasure : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Request outside the supported regime (e.g. pure substitution entropy surface).
class Unsupported : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A mathematical invariant failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace dupsys

#endif
