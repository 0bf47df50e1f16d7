#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rees {

enum class errc {
  reducible_minimal_polynomial,
  incompatible_fields,
  inexact_division,
  zero_input,
  division_by_zero,
  parse_error,
  not_coprime,
  bad_extra_term,
  bad_degrees,
  not_eisenstein,
  index_out_of_range,
  degree_bound_exceeded,
  divides_tangent_cone,
  constant_outside_field,
  degenerate_constant,
  not_unit_order,
  root_outside_field,
  singular_contact_matrix,
  non_integral_exponent,
  not_y_general,
  non_normal_field,
  invalid_input,
  truncation_cap,
};

inline std::string_view errc_name(errc c) {
  switch (c) {
    case errc::reducible_minimal_polynomial: return "ReducibleMinimalPolynomial";
    case errc::incompatible_fields: return "IncompatibleFields";
    case errc::inexact_division: return "InexactDivision";
    case errc::zero_input: return "ZeroInput";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::parse_error: return "ParseError";
    case errc::not_coprime: return "NotCoprime";
    case errc::bad_extra_term: return "BadExtraTerm";
    case errc::bad_degrees: return "BadDegrees";
    case errc::not_eisenstein: return "NotEisenstein";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::degree_bound_exceeded: return "DegreeBoundExceeded";
    case errc::divides_tangent_cone: return "DividesTangentCone";
    case errc::constant_outside_field: return "ConstantOutsideField";
    case errc::degenerate_constant: return "DegenerateConstant";
    case errc::not_unit_order: return "NotUnitOrder";
    case errc::root_outside_field: return "RootOutsideField";
    case errc::singular_contact_matrix: return "SingularContactMatrix";
    case errc::non_integral_exponent: return "NonIntegralExponent";
    case errc::not_y_general: return "NotYGeneral";
    case errc::non_normal_field: return "NonNormalField";
    case errc::invalid_input: return "InvalidInput";
    case errc::truncation_cap: return "TruncationCap";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the `errc` codes.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace rees
