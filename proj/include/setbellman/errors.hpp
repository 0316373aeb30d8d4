#pragma once

#include <stdexcept>
#include <string>

namespace setbellman {

/// Input data violates a documented invariant (bad probabilities,
/// inverted intervals, non-stochastic policies, out-of-range scalars).
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Operands have incompatible shapes.
class dimension_error : public std::invalid_argument {
public:
    explicit dimension_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed JSON input; the message names the offending field.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// File could not be read or written.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical routine failed a correctness check it should not be able
/// to fail on valid input (singular solve, residual above tolerance).
class solve_error : public std::runtime_error {
public:
    explicit solve_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace setbellman
