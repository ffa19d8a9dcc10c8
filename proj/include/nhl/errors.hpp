#pragma once

#include <stdexcept>
#include <string>

namespace nhl {

// Bad caller-supplied data: malformed files, shape mismatches, violated
// operation preconditions.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Internally inconsistent state: singular twist where an inverse is required,
// negative cohomology dimension, and similar conditions that indicate either
// corrupt input structure or a kernel bug.
class structural_error : public std::runtime_error {
public:
    explicit structural_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace nhl
