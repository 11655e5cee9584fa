#ifndef ARR_ERRORS_HPP
#define ARR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace arr {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Mismatched ambient dimension / variable count between operands.
struct dimension_error : error {
    explicit dimension_error(const std::string& msg) : error(msg) {}
};

/// An operation that requires a central arrangement got an affine one (or vice versa).
struct centrality_error : error {
    explicit centrality_error(const std::string& msg) : error(msg) {}
};

/// Membership precondition violated (H not in A, X not a flat, ...).
struct membership_error : error {
    explicit membership_error(const std::string& msg) : error(msg) {}
};

/// A computation exceeded its step or time budget.
struct resource_cap : error {
    explicit resource_cap(const std::string& msg) : error(msg) {}
};

/// Two independent computation routes disagreed.  Always fatal.
struct oracle_mismatch : error {
    explicit oracle_mismatch(const std::string& msg) : error(msg) {}
};

struct parse_error : error {
    explicit parse_error(const std::string& msg) : error(msg) {}
};

} // namespace arr

#endif
