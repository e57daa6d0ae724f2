#include "gcns/errors.hpp"

namespace gcns {

const char* errc_name(errc code) {
  switch (code) {
    case errc::parameter_domain: return "ParameterDomain";
    case errc::gcd_violation: return "GcdViolation";
    case errc::nonpositive_generator: return "NonpositiveGenerator";
    case errc::arithmetic_overflow: return "ArithmeticOverflow";
    case errc::condition_not_met: return "ConditionNotMet";
    case errc::integrality_violation: return "IntegralityViolation";
    case errc::w_not_member: return "WNotMember";
    case errc::empty_generators: return "EmptyGenerators";
    case errc::length_mismatch: return "LengthMismatch";
  }
  return "UnknownError";
}

Error::Error(errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void raise(errc code, const std::string& message) { throw Error(code, message); }

}  // namespace gcns
