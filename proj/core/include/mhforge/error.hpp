#pragma once

#include <stdexcept>
#include <string>

namespace mhf {

// Malformed or inconsistent input (CLI exit code 2).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Arithmetic or structural impossibility: division by zero, singular map,
// missing local-unit strategy.
class MathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A partial map (finite window of an infinite basis) was evaluated outside
// the region where it is defined.
class WindowOverflow : public MathError {
public:
    using MathError::MathError;
};

}  // namespace mhf
