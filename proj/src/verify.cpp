#include "qhsing/verify.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qhsing/catalog.hpp"
#include "qhsing/numcheck.hpp"
#include "qhsing/parse.hpp"

namespace qhsing {

namespace {

struct Runner {
  std::ostream& out;
  bool all_ok = true;

  void check(const std::string& name, double err, double tol) {
    bool ok = err < tol;
    all_ok = all_ok && ok;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "[%s] %-38s err %.3e  tol %.0e",
                  ok ? "PASS" : "FAIL", name.c_str(), err, tol);
    out << buf << "\n";
  }
};

Complex random_unit_disk(SplitMix64& rng, double radius) {
  return {rng.uniform(-radius, radius), rng.uniform(-radius, radius)};
}

/// Random smooth point of one of the sample hypersurfaces; coordinates
/// stay well inside modulus 10.
ComplexPoint sample_point(SplitMix64& rng, const Poly& s, int kind) {
  for (;;) {
    ComplexPoint z;
    if (kind == 0) {  // z1^3 + z2^3 + z3^3
      z = ComplexPoint(3);
      z[0] = random_unit_disk(rng, 2.0);
      z[1] = random_unit_disk(rng, 2.0);
      Complex rest = -(z[0] * z[0] * z[0] + z[1] * z[1] * z[1]);
      z[2] = std::pow(rest, 1.0 / 3.0);
    } else if (kind == 1) {  // z1^2 + z2^2 + z3^2
      z = ComplexPoint(3);
      z[0] = random_unit_disk(rng, 2.0);
      z[1] = random_unit_disk(rng, 2.0);
      z[2] = std::sqrt(-(z[0] * z[0] + z[1] * z[1]));
    } else {  // x*y, alternating branches
      z = ComplexPoint(2);
      Complex c = random_unit_disk(rng, 2.0);
      if (std::abs(c) < 0.2) continue;
      if (rng.below(2) == 0) {
        z[0] = Complex(0.0, 0.0);
        z[1] = c;
      } else {
        z[0] = c;
        z[1] = Complex(0.0, 0.0);
      }
    }
    if (z.norm() < 0.5) continue;
    double grad_norm = 0.0;
    Eigen::VectorXcd grad(s.nvars());
    for (int i = 0; i < s.nvars(); ++i) {
      grad[i] = evaluate(differentiate(s, i), z);
    }
    grad_norm = grad.norm();
    if (grad_norm < 0.1) continue;  // stay away from the singular point
    return z;
  }
}

std::vector<ComplexPoint> unitary_kernel_frame(const Poly& s,
                                               const ComplexPoint& z) {
  const int nv = s.nvars();
  Eigen::VectorXcd grad(nv);
  for (int i = 0; i < nv; ++i) grad[i] = evaluate(differentiate(s, i), z);
  Eigen::MatrixXcd row(1, nv);
  row = grad.transpose();
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(row);
  Eigen::MatrixXcd kernel = lu.kernel();
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(kernel);
  Eigen::MatrixXcd frame =
      qr.householderQ() * Eigen::MatrixXcd::Identity(nv, nv - 1);
  std::vector<ComplexPoint> vs;
  for (int i = 0; i < nv - 1; ++i) vs.push_back(frame.col(i));
  return vs;
}

}  // namespace

bool run_verification(std::ostream& out) {
  Runner run{out};

  // Circle integrals.
  {
    NumResult a = circle_integral(CircleForm::InverseY, 1.0);
    run.check("circle dy/y, radius 1", a.abs_error, 1e-10);
    NumResult b = circle_integral(CircleForm::InverseY, 0.01);
    run.check("circle dy/y, radius 0.01", b.abs_error, 1e-10);
    NumResult c = circle_integral(CircleForm::InverseYSquared, 1.0);
    run.check("circle dy/y^2, radius 1", c.abs_error, 1e-10);
  }

  // Cubic fiber integral and linearity in the base tangent vector.
  {
    NumResult a = p8_fiber_integral({-1.0, 0.0}, {0.0, 0.0},
                                    Eigen::Vector2cd(0.0, 1.0));
    run.check("fiber integral at (-1,0)", a.abs_error, 1e-8);
    run.check("fiber integral refinement 1024->2048", a.richardson_delta,
              1e-12);
    NumResult b = p8_fiber_integral({0.0, 0.0}, {-1.0, 0.0},
                                    Eigen::Vector2cd(1.0, 0.0));
    run.check("fiber integral at (0,-1)", b.abs_error, 1e-8);
    NumResult doubled = p8_fiber_integral({-1.0, 0.0}, {0.0, 0.0},
                                          Eigen::Vector2cd(0.0, 2.0));
    run.check("fiber integral linearity in v",
              std::abs(doubled.value - 2.0 * a.value), 1e-12);
  }

  // Pointwise norm identity |r| = |g| / |ds| at sampled smooth points.
  {
    struct Sample {
      const char* name;
      Poly s;
      int kind;
    };
    std::vector<Sample> samples;
    samples.push_back({"z1^3+z2^3+z3^3",
                       parse_polynomial("z1^3+z2^3+z3^3", default_vars(3)), 0});
    samples.push_back({"z1^2+z2^2+z3^2",
                       parse_polynomial("z1^2+z2^2+z3^2", default_vars(3)), 1});
    samples.push_back({"x*y", parse_polynomial("x*y", {"x", "y"}), 2});
    SplitMix64 rng(0x5eedf00dULL);
    for (const auto& sample : samples) {
      Poly g = Poly::constant(sample.s.nvars(), 1);
      double worst = 0.0;
      for (int i = 0; i < 100; ++i) {
        ComplexPoint z = sample_point(rng, sample.s, sample.kind);
        NumResult r = residue_norm_check(sample.s, g, z);
        worst = std::max(worst, r.abs_error);
      }
      run.check(std::string("norm identity, 100 pts, ") + sample.name, worst,
                1e-10);
    }
  }

  // Pivot independence of the residue value.
  {
    Poly s = parse_polynomial("z1^3+z2^3+z3^3", default_vars(3));
    Poly g = Poly::constant(3, 1);
    SplitMix64 rng(0xabcdef12ULL);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      ComplexPoint z = sample_point(rng, s, 0);
      auto frame = unitary_kernel_frame(s, z);
      Eigen::VectorXcd grad(3);
      for (int j = 0; j < 3; ++j) grad[j] = evaluate(differentiate(s, j), z);
      double gmax = grad.cwiseAbs().maxCoeff();
      Complex base = residue_value(s, g, z, frame);
      for (int piv = 0; piv < 3; ++piv) {
        if (std::abs(grad[piv]) < 0.05 * gmax) continue;
        Complex other = residue_value(s, g, z, frame, piv);
        worst = std::max(worst, std::abs(other - base) / std::abs(base));
      }
    }
    run.check("pivot independence, 20 pts", worst, 1e-9);
  }

  // Ray growth exponents of the pulled-back norm.
  {
    std::vector<double> t_grid = {1.0, 0.8, 0.6, 0.45, 0.3, 0.2, 0.1};
    Poly a1 = parse_polynomial("z1^2+z2^2+z3^2", default_vars(3));
    WeightSystem wa1 = find_weights(a1);
    Poly g = Poly::constant(3, 1);
    ComplexPoint z0(3);
    z0 << Complex(3.0, 0.0), Complex(4.0, 0.0), Complex(0.0, 5.0);

    NumResult m2 = orbit_slope(a1, wa1, g, 2, z0, t_grid);
    run.check("ray slope z1^2+z2^2+z3^2, m=2", m2.abs_error, 1e-3);
    ComplexPoint u0 = weighted_radial_map_inverse(z0, wa1, 4);
    NumResult m4 = orbit_slope(a1, wa1, g, 4, u0, t_grid);
    run.check("ray slope z1^2+z2^2+z3^2, m=4", m4.abs_error, 1e-3);

    Poly p8 = parse_polynomial("z1^3+z2^3+z3^3", default_vars(3));
    WeightSystem wp8 = find_weights(p8);
    ComplexPoint c0(3);
    c0 << Complex(1.0, 0.0), Complex(1.0, 0.0),
        Complex(-std::cbrt(2.0), 0.0);
    NumResult m3 = orbit_slope(p8, wp8, g, 3, c0, t_grid);
    run.check("ray slope z1^3+z2^3+z3^3, m=3", m3.abs_error, 1e-3);
  }

  out << (run.all_ok ? "verification passed\n" : "verification FAILED\n");
  return run.all_ok;
}

}  // namespace qhsing
