#pragma once

#include <stdexcept>
#include <string>

namespace qlbkit {

// Malformed or inconsistent user input (bad files, unknown labels, shape mismatch).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// An operation was called on data that violates its documented precondition.
class PreconditionError : public std::logic_error {
public:
    explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

// Requested computation exceeds the configured finite window.
class SizeError : public std::length_error {
public:
    explicit SizeError(const std::string& what) : std::length_error(what) {}
};

}  // namespace qlbkit
