#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qhsing {

enum class errc {
  parse_error,
  unknown_variable,
  bad_exponent,
  dimension_mismatch,
  not_quasihomogeneous,
  degenerate_weights,
  unused_variable,
  inexact_division,
  non_integer_milnor_number,
  galois_orbit_nonuniform,
  no_lift,
  out_of_range,
  forbidden_modulus,
  not_isolated,
  singular_point,
  not_on_hypersurface,
  not_tangent,
  base_not_on_curve,
  frame_degenerate,
  off_hypersurface,
  internal,
};

class Error : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Error(errc code, const std::string& what, std::size_t pos = npos)
      : std::runtime_error(what), code_(code), pos_(pos) {}

  errc code() const noexcept { return code_; }

  /// Byte offset into the input for parser errors, npos otherwise.
  std::size_t position() const noexcept { return pos_; }

 private:
  errc code_;
  std::size_t pos_;
};

}  // namespace qhsing
