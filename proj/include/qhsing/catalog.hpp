#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhsing/linktopo.hpp"
#include "qhsing/poly.hpp"
#include "qhsing/weights.hpp"

namespace qhsing {

/// One family of the normal-form catalog.
struct CatalogEntry {
  Family family;
  int k_min = 0;  // 0 when the family has no k parameter
  bool has_modulus = false;
  std::string modulus_rule;  // human-readable constraint on the modulus
};

const std::vector<CatalogEntry>& catalog_entries();

/// Normal form in n+1 variables (z1..z{n+1}):
///   A_k : z1^(k+1) + z2^2 + ... (k >= 1)
///   D_k : z1^2 z2 + z2^(k-1) + z3^2 + ... (k >= 4)
///   E6  : z1^3 + z2^4 + ...     E7 : z1^3 + z1 z2^3 + ...
///   E8  : z1^3 + z2^5 + ...
///   P8  : z1^3 + z2^3 + z3^3 + a z1 z2 z3 + z4^2 + ...  (a^3 + 27 != 0)
///   X9  : z1^4 + z2^4 + a z1^2 z2^2 + ...               (a^2 != 4)
///   J10 : z1^3 + z2^6 + a z1^2 z2^2 + ...               (4a^3 + 27 != 0)
/// The modulus defaults to 0 where permitted. Throws
/// errc::forbidden_modulus when the constraint fails, errc::out_of_range
/// for invalid k or n.
Poly catalog_normal_form(const TypeTag& tag, int n,
                         const std::optional<Rat>& modulus = std::nullopt);

/// Weight vector of the normal form (in variable order, not sorted).
std::vector<Rat> catalog_weights(const TypeTag& tag, int n);

/// Closed-form kappa: n/2 plus 1/(k+1), 1/(2(k-1)), 1/12, 1/18, 1/30 for
/// A_k, D_k, E6, E7, E8 and n/2 for the parabolic families.
Rat catalog_kappa(const TypeTag& tag, int n);

Int catalog_mu(const TypeTag& tag);

/// Smallest n for which the normal form exists (1 except P8, which needs
/// three variables).
int catalog_min_n(Family f);

}  // namespace qhsing
