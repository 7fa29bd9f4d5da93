#pragma once

// Error taxonomy for the noncommutative-torus toolkit.
//
// Every recoverable failure is reported as an nct::Error carrying a stable
// error code so callers (library users, the test suite, the CLI) can branch
// on the *kind* of failure without parsing message text.

#include <stdexcept>
#include <string>

namespace nct {

enum class errc {
  invalid_parameter,    // argument outside its documented domain
  parameter_mismatch,   // two values built over different rotation parameters
  dimension_mismatch,   // incompatible matrix dimensions
  support_exceeds_band, // element support does not fit the truncation band
  not_in_range,         // no trace-range point within tolerance
  ambiguous_resolution, // more than one candidate within tolerance
  not_a_projection,     // matrix fails the projection invariants
  degenerate_input,     // input collapses the computation (duplicates, too few terms)
  precision_loss,       // request exceeds what double precision can certify
  unsupported,          // operation undefined for this parameter class
  numerical_failure     // an underlying dense solver did not converge
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_parameter: return "invalid_parameter";
    case errc::parameter_mismatch: return "parameter_mismatch";
    case errc::dimension_mismatch: return "dimension_mismatch";
    case errc::support_exceeds_band: return "support_exceeds_band";
    case errc::not_in_range: return "not_in_range";
    case errc::ambiguous_resolution: return "ambiguous_resolution";
    case errc::not_a_projection: return "not_a_projection";
    case errc::degenerate_input: return "degenerate_input";
    case errc::precision_loss: return "precision_loss";
    case errc::unsupported: return "unsupported";
    case errc::numerical_failure: return "numerical_failure";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, errc code, const std::string& message) {
  if (!condition) raise(code, message);
}

}  // namespace nct
