#pragma once

#include <stdexcept>
#include <string>

namespace llab {

/// Malformed or inconsistent user input (files, CLI arguments, parameter maps).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A mathematical precondition does not hold for the given data
/// (degenerate frames, wrong radical rank, singular Gram matrices, ...).
struct math_error : std::runtime_error {
    explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace llab
