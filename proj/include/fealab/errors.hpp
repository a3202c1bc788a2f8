#pragma once

#include <stdexcept>
#include <string>

namespace fealab {

/// Bad user input: dimensions, counts, unknown names.
class argument_error : public std::invalid_argument {
public:
    explicit argument_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Degenerate or inverted element geometry.
class geometry_error : public std::runtime_error {
public:
    explicit geometry_error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed run configuration or an invalid strategy/DLB combination.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// File read/write failure.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

/// Broken internal invariant (sparsity miss, safety-check violation).
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

/// Iterative solve did not reach the requested tolerance.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

/// Task engine watchdog fired: no completion within the window.
class deadlock_error : public std::runtime_error {
public:
    explicit deadlock_error(const std::string& what) : std::runtime_error(what) {}
};

/// Misuse of the rendezvous protocol (e.g. double entry per step).
class protocol_error : public std::logic_error {
public:
    explicit protocol_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace fealab
