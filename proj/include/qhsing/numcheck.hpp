#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qhsing/poly.hpp"
#include "qhsing/weights.hpp"

namespace qhsing {

using Complex = std::complex<double>;
using ComplexPoint = Eigen::VectorXcd;

struct NumResult {
  Complex value{};
  Complex reference{};
  double abs_error = 0.0;
  int nodes = 0;
  /// |value at n nodes - value at n/2 nodes| for quadratures, 0 otherwise.
  double richardson_delta = 0.0;
};

/// Tolerances for the pointwise checks (relative).
inline constexpr double kOnHypersurfaceTol = 1e-9;
inline constexpr double kTangencyTol = 1e-9;

/// Value of the residue form of (g/s) dz_1 ^ ... ^ dz_{n+1} at z on the
/// tangent n-frame v: g/(ds/dz_i) * (-1)^i * det of the v-components away
/// from the pivot coordinate i, with i chosen to maximize |ds/dz_i| unless
/// forced. Throws errc::singular_point, errc::not_on_hypersurface,
/// errc::not_tangent.
Complex residue_value(const Poly& s, const Poly& g, const ComplexPoint& z,
                      const std::vector<ComplexPoint>& v,
                      int forced_pivot = -1);

/// Intrinsic pointwise norm (value on a unitary frame of ker ds) against
/// the closed form |g(z)| / |ds(z)|.
NumResult residue_norm_check(const Poly& s, const Poly& g,
                             const ComplexPoint& z);

/// Integral of dz2^dz3 / (3 z1^2) over the circle fiber above the cubic
/// point (1 : y2 : y3), on the lifted tangent vector (0, y1 v2, y1 v3);
/// closed form (2/3) pi i (y2 v3 - y3 v2). Composite trapezoid on the
/// periodic integrand. Throws errc::base_not_on_curve.
NumResult p8_fiber_integral(Complex y2, Complex y3,
                            const Eigen::Vector2cd& v, int nodes = 2048);

enum class CircleForm { InverseY, InverseYSquared };

/// Circle integral of dy/y (reference 2 pi i) or dy/y^2 (reference 0).
NumResult circle_integral(CircleForm form, double radius, int nodes = 2048);

/// The radial reparametrization u_i -> u_i |u_i|^(m a_i - 1); conjugates
/// the weighted scaling action into honest cones. Smooth away from the
/// coordinate hyperplanes.
ComplexPoint weighted_radial_map(const ComplexPoint& u, const WeightSystem& w,
                                 int m);
ComplexPoint weighted_radial_map_inverse(const ComplexPoint& z,
                                         const WeightSystem& w, int m);

/// Log-log slope of the pulled-back residue norm along the ray t*u0.
/// The norm proxy at each t is the root-sum-square of the form over an
/// orthonormal real frame of the tangent space of the preimage of {s=0},
/// built from the Jacobian of s after the radial reparametrization.
/// Reference slope: m*(kappa-1) - n + m*(weighted degree of g).
/// Throws errc::frame_degenerate, errc::off_hypersurface.
NumResult orbit_slope(const Poly& s, const WeightSystem& w, const Poly& g,
                      int m, const ComplexPoint& u0,
                      const std::vector<double>& t_grid);

}  // namespace qhsing
