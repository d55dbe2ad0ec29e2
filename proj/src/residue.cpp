#include "qhsing/residue.hpp"

#include <algorithm>

namespace qhsing {

std::string to_string(TargetTag t) {
  switch (t) {
    case TargetTag::BorelMooreHomology: return "BorelMooreHomology";
    case TargetTag::ImagePD: return "ImagePD";
    case TargetTag::Cohomology: return "Cohomology";
  }
  return "";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "";
}

Rat lp_exponent(const Rat& p, long m, const Rat& kappa, int n) {
  return p * m * (kappa - 1) + (2 - p) * n - 1;
}

long min_scaling(const Rat& p, const Rat& kappa, int n) {
  if (p < 1) {
    throw Error(errc::out_of_range, "integrability exponent must be >= 1");
  }
  if (kappa <= 1) {
    throw Error(errc::no_lift,
                "kappa = " + rat_str(kappa) +
                    " <= 1: the exponent stays at or below -1 for every m");
  }
  // alpha > -1  <=>  m > (p-2)n / (p(kappa-1)).
  Rat threshold = (p - 2) * n / (p * (kappa - 1));
  Int m = rat_floor(threshold) + 1;
  if (m < 1) m = 1;
  return to_long(m);
}

TargetGroup perversity_target(const Rat& p, int n) {
  if (n < 2) {
    throw Error(errc::out_of_range,
                "perversity ranges need complex dimension n >= 2");
  }
  Rat low = 1 + Rat(1, 2 * n - 1);
  Rat high = 2 + Rat(2, n - 1);
  if (p < low) {
    throw Error(errc::out_of_range,
                "p = " + rat_str(p) + " below the first threshold " +
                    rat_str(low));
  }
  TargetGroup tg{TargetTag::BorelMooreHomology, p, n};
  if (p < 2) {
    tg.tag = TargetTag::BorelMooreHomology;
  } else if (p < high) {
    tg.tag = TargetTag::ImagePD;
  } else {
    tg.tag = TargetTag::Cohomology;
  }
  return tg;
}

LiftReport lift_verdict(const WeightSystem& w, const Spectrum& sp,
                        const CycloFactorization& delta, int n, const Rat& p) {
  LiftReport r;
  r.kappa = w.kappa;
  r.kappa_criterion = (w.kappa > 1);
  r.spectrum_criterion = !sp.contains(Rat(0));
  Int d1 = delta_at_one(delta);
  r.rational_sphere_criterion = (d1 != 0);

  if (r.kappa_criterion) {
    long m = min_scaling(p, w.kappa, n);
    r.chosen_m = m;
    r.alpha = lp_exponent(p, m, w.kappa, n);
    r.notes.push_back("kappa = " + rat_str(w.kappa) +
                      " > 1: the residue form is Lp-integrable for the "
                      "conelike metric with scaling m = " + std::to_string(m) +
                      " (growth exponent " + rat_str(*r.alpha) + " > -1)");
  }
  if (r.spectrum_criterion) {
    r.notes.push_back("0 is not a spectral number: the class pairs to zero "
                      "with every boundary cycle");
  }
  if (r.rational_sphere_criterion) {
    r.notes.push_back("Delta(1) = " + int_str(d1) +
                      " != 0: the link is a rational homology sphere and "
                      "Poincare duality is an isomorphism");
  }

  if (r.kappa_criterion || r.spectrum_criterion) {
    r.lifts_to_ih = Verdict::Yes;
  } else {
    TypeTag tag = recognize_type(w, delta.mu);
    if (tag.family == Family::P8 && n == 2) {
      r.lifts_to_ih = Verdict::No;
      r.notes.push_back("known counterexample: the parabolic P8 germ in "
                        "three variables has no lift to intersection "
                        "homology");
    } else {
      r.lifts_to_ih = Verdict::Unknown;
      r.notes.push_back("no sufficient criterion applies; the lift to "
                        "intersection homology is undecided");
    }
  }

  if (r.rational_sphere_criterion) {
    r.lifts_to_cohomology = Verdict::Yes;
  } else if (r.kappa_criterion && n >= 2) {
    r.lifts_to_cohomology = Verdict::Yes;
    Rat p_coh = 2 + Rat(2, n - 1);
    long m = min_scaling(p_coh, w.kappa, n);
    r.notes.push_back("kappa > 1 with exponent p >= " + rat_str(p_coh) +
                      " (m = " + std::to_string(m) +
                      ") lifts the class to cohomology");
  } else {
    r.lifts_to_cohomology = Verdict::Unknown;
  }
  return r;
}

}  // namespace qhsing
