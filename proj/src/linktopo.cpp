#include "qhsing/linktopo.hpp"

#include <algorithm>

#include "qhsing/cyclotomic.hpp"

namespace qhsing {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::P8: return "P8";
    case Family::X9: return "X9";
    case Family::J10: return "J10";
    case Family::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string to_string(const TypeTag& t) {
  std::string s = family_name(t.family);
  if (t.k) s += std::to_string(*t.k);
  return s;
}

Int delta_at_one(const CycloFactorization& delta) {
  Int out = 1;
  for (const auto& [k, mult] : delta.factors) {
    Int base = cyclotomic_at_one(k);
    if (base == 0) return 0;
    for (Int i = 0; i < mult; ++i) out *= base;
  }
  return out;
}

LinkClass classify_link(const CycloFactorization& delta, int n) {
  LinkClass lc;
  lc.n = n;
  lc.delta_at_one = delta_at_one(delta);
  lc.rational_sphere = (lc.delta_at_one != 0);
  if (n <= 1) {
    lc.sphere = SphereAnswer::NotApplicable;
    lc.sphere_note = "sphere test requires complex dimension n >= 2";
    return lc;
  }
  bool unit = (lc.delta_at_one == 1 || lc.delta_at_one == -1);
  lc.sphere = unit ? SphereAnswer::Yes : SphereAnswer::No;
  lc.sphere_note = (n == 2) ? "n=2: the test answers whether the link is a homology sphere"
                            : "homeomorphic to the sphere iff |Delta(1)| = 1";
  return lc;
}

namespace {

bool matches_pattern(const std::vector<Rat>& sorted_weights,
                     std::vector<Rat> pattern) {
  const std::size_t nv = sorted_weights.size();
  if (pattern.size() > nv) return false;
  pattern.resize(nv, Rat(1, 2));
  std::sort(pattern.begin(), pattern.end());
  return pattern == sorted_weights;
}

}  // namespace

TypeTag recognize_type(const WeightSystem& w, const Int& mu) {
  std::vector<Rat> sorted = w.a;
  std::sort(sorted.begin(), sorted.end());

  if (mu >= 1 && mu <= 1000000) {
    int k = static_cast<int>(to_long(mu));
    if (matches_pattern(sorted, {Rat(1, k + 1)})) {
      return TypeTag{Family::A, k};
    }
    if (k >= 4 && matches_pattern(sorted, {Rat(k - 2, 2 * k - 2), Rat(1, k - 1)})) {
      return TypeTag{Family::D, k};
    }
  }
  if (mu == 6 && matches_pattern(sorted, {Rat(1, 3), Rat(1, 4)})) {
    return TypeTag{Family::E6, std::nullopt};
  }
  if (mu == 7 && matches_pattern(sorted, {Rat(1, 3), Rat(2, 9)})) {
    return TypeTag{Family::E7, std::nullopt};
  }
  if (mu == 8 && matches_pattern(sorted, {Rat(1, 3), Rat(1, 5)})) {
    return TypeTag{Family::E8, std::nullopt};
  }
  if (mu == 8 &&
      matches_pattern(sorted, {Rat(1, 3), Rat(1, 3), Rat(1, 3)})) {
    return TypeTag{Family::P8, std::nullopt};
  }
  if (mu == 9 && matches_pattern(sorted, {Rat(1, 4), Rat(1, 4)})) {
    return TypeTag{Family::X9, std::nullopt};
  }
  if (mu == 10 && matches_pattern(sorted, {Rat(1, 3), Rat(1, 6)})) {
    return TypeTag{Family::J10, std::nullopt};
  }
  return TypeTag{Family::Unknown, std::nullopt};
}

}  // namespace qhsing
