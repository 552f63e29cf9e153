#ifndef MACQ_ERRORS_HPP
#define MACQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace macq {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct division_by_zero : error {
    explicit division_by_zero(const std::string& what) : error("division by zero: " + what) {}
};

struct singular_system : error {
    explicit singular_system(const std::string& what) : error("singular linear system: " + what) {}
};

struct degenerate_specialization : error {
    explicit degenerate_specialization(const std::string& what)
        : error("degenerate specialization: " + what) {}
};

struct parse_error : error {
    explicit parse_error(const std::string& what) : error("parse error: " + what) {}
};

// Cache failures keep their causes apart so callers can tell a missing
// record from a damaged or incompatible one.
struct cache_missing : error {
    explicit cache_missing(const std::string& path) : error("cache miss: " + path) {}
};

struct cache_corrupt : error {
    explicit cache_corrupt(const std::string& what) : error("cache corrupt: " + what) {}
};

struct cache_fingerprint_mismatch : error {
    explicit cache_fingerprint_mismatch(const std::string& what)
        : error("cache fingerprint mismatch: " + what) {}
};

struct internal_error : error {
    explicit internal_error(const std::string& what) : error("internal error: " + what) {}
};

} // namespace macq

#endif
