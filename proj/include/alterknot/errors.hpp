#ifndef ALTERKNOT_ERRORS_HPP
#define ALTERKNOT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace alterknot {

// Base class for everything this library throws on bad input or a failed
// internal certification. Parse errors, domain errors and derivation
// mismatches all derive from it so callers can catch one type at the CLI
// boundary and map it to an exit code.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

struct malformed_code : error {
    explicit malformed_code(const std::string& m) : error("malformed code: " + m) {}
};
struct label_mismatch : error {
    explicit label_mismatch(const std::string& m) : error("label mismatch: " + m) {}
};
struct non_planar : error {
    explicit non_planar(const std::string& m) : error("not planar: " + m) {}
};
struct unrealizable : error {
    explicit unrealizable(const std::string& m) : error("unrealizable code: " + m) {}
};
struct not_reduced : error {
    explicit not_reduced(const std::string& m) : error("diagram not reduced: " + m) {}
};
struct not_prime : error {
    explicit not_prime(const std::string& m) : error("diagram not prime: " + m) {}
};
struct not_alternating : error {
    explicit not_alternating(const std::string& m) : error("diagram not alternating: " + m) {}
};
struct not_twist_reduced : error {
    explicit not_twist_reduced(const std::string& m) : error("diagram not twist reduced: " + m) {}
};
struct threshold_violation : error {
    explicit threshold_violation(const std::string& m) : error("threshold violation: " + m) {}
};
struct domain_error : error {
    explicit domain_error(const std::string& m) : error("domain error: " + m) {}
};
struct derivation_mismatch : error {
    explicit derivation_mismatch(const std::string& m) : error("derivation mismatch: " + m) {}
};
struct incomplete_enumeration : error {
    explicit incomplete_enumeration(const std::string& m) : error("incomplete enumeration: " + m) {}
};
struct schema_error : error {
    explicit schema_error(const std::string& m) : error("schema error: " + m) {}
};
struct internal_error : error {
    explicit internal_error(const std::string& m) : error("internal invariant failed: " + m) {}
};

} // namespace alterknot

#endif
