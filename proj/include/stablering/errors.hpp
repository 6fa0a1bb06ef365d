#ifndef STABLERING_ERRORS_HPP
#define STABLERING_ERRORS_HPP

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace stablering {

// Bad input: malformed specs, failed group axioms, out-of-range indices.
// CLI exit code 2.
class validation_error : public std::runtime_error {
public:
  explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Requested class is empty (K_mu(n) = 0); a special case of bad input.
class class_empty_error : public validation_error {
public:
  explicit class_empty_error(const std::string& msg) : validation_error(msg) {}
};

// Enumeration would exceed the configured cap. CLI exit code 3.
class size_limit_error : public std::runtime_error {
public:
  explicit size_limit_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A mathematical assertion failed (stability witness disagreement, fit
// failure, centrality violation). CLI exit code 4.
class math_error : public std::runtime_error {
public:
  explicit math_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct Caps {
  long long group_enum = 1'000'000;  // |Gamma|^n * n!
  int partition_weight = 40;
  int pvf_weight = 12;
};

// Default caps; STABLERING_CAP overrides the group enumeration cap.
inline Caps default_caps() {
  Caps c;
  if (const char* env = std::getenv("STABLERING_CAP")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) c.group_enum = v;
  }
  return c;
}

}  // namespace stablering

#endif
