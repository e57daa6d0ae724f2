#pragma once

#include <stdexcept>
#include <string>

namespace gcns {

enum class errc {
  parameter_domain,
  gcd_violation,
  nonpositive_generator,
  arithmetic_overflow,
  condition_not_met,
  integrality_violation,
  w_not_member,
  empty_generators,
  length_mismatch,
};

/// Canonical name, e.g. errc::gcd_violation -> "GcdViolation".
const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message);
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] void raise(errc code, const std::string& message);

}  // namespace gcns
