#pragma once

#include <stdexcept>
#include <string>

namespace codealg {

enum class errc {
  // codes
  length_mismatch,
  dependent_rows,
  empty_cstar,
  not_constant_weight,
  too_large,
  // scalar
  division_by_zero,
  discriminant_mismatch,
  zero_input,
  unordered_field,
  factorization_limit,
  // algebra
  missing_param,
  not_an_automorphism,
  not_regular,
  not_a_subcode,
  dim_too_large,
  // spectral
  not_semisimple,
  missing_unit_labels,
  no_grading,
  // smap
  params_not_constant,
  no_root_in_field,
  degenerate_mu_zero,
  degenerate_half_case,
  degenerate_third_case,
  // form
  zero_form,
  // group
  grading_fails,
  aut_too_large,
  // structure
  degenerate,
  // io / cli
  parse_error,
  fixture_mismatch,
  internal,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

}  // namespace codealg
