#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhsing/linktopo.hpp"
#include "qhsing/milnor.hpp"
#include "qhsing/weights.hpp"

namespace qhsing {

enum class TargetTag { BorelMooreHomology, ImagePD, Cohomology };

std::string to_string(TargetTag t);

struct TargetGroup {
  TargetTag tag;
  Rat p;
  int n;
};

enum class Verdict { Yes, No, Unknown };

std::string to_string(Verdict v);

struct LiftReport {
  Rat kappa;
  bool kappa_criterion = false;           // kappa > 1
  bool spectrum_criterion = false;        // 0 not a spectral number
  bool rational_sphere_criterion = false; // Delta(1) != 0
  Verdict lifts_to_ih = Verdict::Unknown;
  Verdict lifts_to_cohomology = Verdict::Unknown;
  std::optional<long> chosen_m;
  std::optional<Rat> alpha;
  std::vector<std::string> notes;
};

/// alpha = p*m*(kappa - 1) + (2 - p)*n - 1, exactly.
Rat lp_exponent(const Rat& p, long m, const Rat& kappa, int n);

/// Smallest integer m >= 1 with lp_exponent(p, m, kappa, n) > -1.
/// Throws errc::no_lift when kappa <= 1 (the exponent never clears -1).
long min_scaling(const Rat& p, const Rat& kappa, int n);

/// Which group the p-range selects:
///   1 + 1/(2n-1) <= p < 2        -> Borel-Moore homology
///   2 <= p < 2 + 2/(n-1)         -> image of Poincare duality
///   p >= 2 + 2/(n-1)             -> cohomology
/// Throws errc::out_of_range below the first threshold or for n < 2.
TargetGroup perversity_target(const Rat& p, int n);

/// Evaluate the three sufficient lift criteria and combine into verdicts.
/// "no" is asserted only for the catalog counterexample (P8 at n=2);
/// otherwise absence of criteria yields "unknown".
LiftReport lift_verdict(const WeightSystem& w, const Spectrum& sp,
                        const CycloFactorization& delta, int n, const Rat& p);

}  // namespace qhsing
