#pragma once

#include <stdexcept>
#include <string>

namespace epnt {

// Precondition of a bound function violated. The message names the condition.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Query outside the data actually held (e.g. psi beyond the sieve limit).
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Bad run configuration (sieve limit, precision, grid step ...).
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed input data: rows files, cache files.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

}  // namespace epnt
