#pragma once

#include <optional>
#include <string>

#include "qhsing/milnor.hpp"
#include "qhsing/weights.hpp"

namespace qhsing {

enum class SphereAnswer { Yes, No, NotApplicable };

struct LinkClass {
  Int delta_at_one;
  SphereAnswer sphere = SphereAnswer::NotApplicable;
  std::string sphere_note;
  bool rational_sphere = false;
  int n = 0;
};

enum class Family { A, D, E6, E7, E8, P8, X9, J10, Unknown };

struct TypeTag {
  Family family = Family::Unknown;
  std::optional<int> k;  // present iff family is A or D

  bool operator==(const TypeTag&) const = default;
};

std::string to_string(const TypeTag& t);
std::string family_name(Family f);

/// Exact product of Phi_k(1)^{m_k}.
Int delta_at_one(const CycloFactorization& delta);

/// Rational homology sphere iff Delta(1) != 0; sphere iff |Delta(1)| = 1,
/// reported as a homeomorphism statement for n > 2, as a homology-sphere
/// statement for n = 2, and as not applicable for n = 1.
LinkClass classify_link(const CycloFactorization& delta, int n);

/// Match the weight multiset (padded catalog patterns) against the
/// A/D/E6/E7/E8/P8/X9/J10 families, cross-checking mu.
TypeTag recognize_type(const WeightSystem& w, const Int& mu);

}  // namespace qhsing
