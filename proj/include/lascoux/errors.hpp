#ifndef LASCOUX_ERRORS_HPP
#define LASCOUX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lascoux {

// Error taxonomy, mapped onto CLI exit codes: input 1, consistency 2, resource 3.

/// Malformed or out-of-contract input (bad set, size mismatch, division by zero, ...).
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Two routes that must agree (recurrence vs oracle, interpolant vs extra sample) disagreed.
/// This is the error that must never be swallowed.
class consistency_error : public std::runtime_error {
public:
    explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

/// A configured computational budget was exceeded.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lascoux

#endif
