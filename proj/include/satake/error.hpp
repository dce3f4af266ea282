#ifndef SATAKE_ERROR_HPP
#define SATAKE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace satake {

enum class errc {
  not_finite_type,
  pinning_violated,
  not_finite_order,
  not_dominant,
  not_sigma_fixed,
  not_antidominant,
  orbit_too_large,
  method_mismatch,
  mode_mismatch,
  not_in_span,
  sigma_nontrivial,
  weyl_group_too_large,
  not_prime_power,
  mismatch,
  precision_exhausted,
  singular,
  envelope_exceeded,
  support_violation,
  constraint_violated,
  unknown_name,
  non_polynomial,
  not_integral,
  parse_error,
};

const char* errc_name(errc c);

class satake_error : public std::runtime_error {
public:
  satake_error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw satake_error(code, what);
}

} // namespace satake

#endif
