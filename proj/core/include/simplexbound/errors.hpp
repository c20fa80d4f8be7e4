#pragma once

#include <stdexcept>
#include <string>

namespace simplexbound {

// R(Z) vanished identically; callers distinguish this from input validation.
struct DegenerateResultant : std::runtime_error {
    explicit DegenerateResultant(const std::string& what) : std::runtime_error(what) {}
};

// Malformed user input (expression text, files, flag combinations).
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace simplexbound
