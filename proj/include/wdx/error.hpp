#pragma once

#include <stdexcept>
#include <string>

namespace wdx {

/// Bad arguments: mismatched variable counts, out-of-range parameters,
/// violated preconditions.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured resource cap (oracle dimension, orbit size) would be exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two independent computations disagree, or a quantity that must be an
/// integer power of two is not. Always indicates a bug or misapplied formula.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace wdx
