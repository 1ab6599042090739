#pragma once

#include <stdexcept>
#include <string>

namespace tjoin {

// Library-wide absolute tolerance for floating-point comparisons.
inline constexpr double kTol = 1e-9;

// Malformed user input (files, CLI arguments). Mapped to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Structurally sound input outside the class an algorithm supports
// (e.g. exact12 on a graph that is not a (1,2)-graph). Exit code 3.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tjoin
