#include "qhsing/numcheck.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "qhsing/errors.hpp"

namespace qhsing {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

ComplexPoint gradient_at(const Poly& s, const ComplexPoint& z) {
  ComplexPoint grad(s.nvars());
  for (int i = 0; i < s.nvars(); ++i) {
    grad[i] = evaluate(differentiate(s, i), z);
  }
  return grad;
}

void require_on_hypersurface(const Poly& s, const ComplexPoint& z) {
  double scale = std::max(term_magnitude(s, z), 1e-300);
  if (std::abs(evaluate(s, z)) > kOnHypersurfaceTol * scale) {
    throw Error(errc::not_on_hypersurface,
                "point is not on the hypersurface within tolerance");
  }
}

}  // namespace

Complex residue_value(const Poly& s, const Poly& g, const ComplexPoint& z,
                      const std::vector<ComplexPoint>& v, int forced_pivot) {
  const int nv = s.nvars();
  const int n = nv - 1;
  if (z.size() != nv) {
    throw Error(errc::dimension_mismatch, "point arity mismatch");
  }
  if (static_cast<int>(v.size()) != n) {
    throw Error(errc::dimension_mismatch,
                "expected " + std::to_string(n) + " tangent vectors");
  }
  require_on_hypersurface(s, z);

  ComplexPoint grad = gradient_at(s, z);
  double grad_scale = 0.0;
  for (int i = 0; i < nv; ++i) {
    grad_scale += term_magnitude(differentiate(s, i), z);
  }
  double grad_norm = grad.norm();
  if (grad_norm <= kTangencyTol * std::max(grad_scale, 1e-300)) {
    throw Error(errc::singular_point, "all partial derivatives vanish");
  }

  for (const ComplexPoint& tangent : v) {
    if (tangent.size() != nv) {
      throw Error(errc::dimension_mismatch, "tangent vector arity mismatch");
    }
    Complex pairing = grad.cwiseProduct(tangent).sum();  // ds(v), bilinear
    if (std::abs(pairing) > kTangencyTol * grad_norm * tangent.norm()) {
      throw Error(errc::not_tangent, "vector is not tangent to {s=0}");
    }
  }

  int pivot = forced_pivot;
  if (pivot < 0) {
    pivot = 0;
    for (int i = 1; i < nv; ++i) {
      if (std::abs(grad[i]) > std::abs(grad[pivot])) pivot = i;
    }
  } else if (pivot >= nv || grad[pivot] == Complex(0.0, 0.0)) {
    throw Error(errc::singular_point, "forced pivot has vanishing partial");
  }

  // r = (-1)^pivot * g/(ds/dz_pivot) * dz_{..pivot omitted..}; evaluate the
  // omitted-coordinate determinant of the frame.
  Eigen::MatrixXcd minor(n, n);
  for (int row = 0; row < n; ++row) {
    int col = 0;
    for (int j = 0; j < nv; ++j) {
      if (j == pivot) continue;
      minor(row, col++) = v[row][j];
    }
  }
  Complex det = (n == 0) ? Complex(1.0, 0.0) : minor.determinant();
  double sign = (pivot % 2 == 0) ? 1.0 : -1.0;
  return sign * evaluate(g, z) / grad[pivot] * det;
}

NumResult residue_norm_check(const Poly& s, const Poly& g,
                             const ComplexPoint& z) {
  const int nv = s.nvars();
  const int n = nv - 1;
  require_on_hypersurface(s, z);
  ComplexPoint grad = gradient_at(s, z);
  if (grad.norm() == 0.0) {
    throw Error(errc::singular_point, "all partial derivatives vanish");
  }

  // Unitary frame of ker(ds): kernel basis, then thin QR.
  Eigen::MatrixXcd row(1, nv);
  row = grad.transpose();
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(row);
  Eigen::MatrixXcd kernel = lu.kernel();
  if (kernel.cols() != n) {
    throw Error(errc::frame_degenerate, "kernel dimension mismatch");
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(kernel);
  Eigen::MatrixXcd frame =
      qr.householderQ() * Eigen::MatrixXcd::Identity(nv, n);

  std::vector<ComplexPoint> vs;
  vs.reserve(n);
  for (int i = 0; i < n; ++i) vs.push_back(frame.col(i));

  NumResult res;
  res.value = std::abs(residue_value(s, g, z, vs));
  res.reference = std::abs(evaluate(g, z)) / grad.norm();
  res.abs_error = std::abs(res.value - res.reference);
  return res;
}

NumResult p8_fiber_integral(Complex y2, Complex y3, const Eigen::Vector2cd& v,
                            int nodes) {
  if (nodes < 2) {
    throw Error(errc::out_of_range, "need at least 2 quadrature nodes");
  }
  double scale = 1.0 + std::pow(std::abs(y2), 3) + std::pow(std::abs(y3), 3);
  if (std::abs(1.0 + y2 * y2 * y2 + y3 * y3 * y3) > 1e-9 * scale) {
    throw Error(errc::base_not_on_curve,
                "base point does not satisfy 1 + y2^3 + y3^3 = 0");
  }
  double rho = 1.0 / std::sqrt(1.0 + std::norm(y2) + std::norm(y3));

  auto quadrature = [&](int count) {
    Complex sum(0.0, 0.0);
    for (int j = 0; j < count; ++j) {
      double theta = 2.0 * kPi * j / count;
      Complex y1 = rho * std::exp(kI * theta);
      // Fiber point z = (y1, y1 y2, y1 y3); velocity z' = i z; lifted
      // tangent vector V = (0, y1 v2, y1 v3).
      Complex dz2 = kI * y1 * y2;
      Complex dz3 = kI * y1 * y3;
      Complex v2 = y1 * v(0);
      Complex v3 = y1 * v(1);
      Complex det = dz2 * v3 - dz3 * v2;
      sum += det / (3.0 * y1 * y1);
    }
    return sum * (2.0 * kPi / static_cast<double>(count));
  };

  NumResult res;
  Complex coarse = quadrature(nodes / 2);
  res.value = quadrature(nodes);
  res.nodes = nodes;
  res.richardson_delta = std::abs(res.value - coarse);
  res.reference = (2.0 / 3.0) * kPi * kI * (y2 * v(1) - y3 * v(0));
  res.abs_error = std::abs(res.value - res.reference);
  return res;
}

NumResult circle_integral(CircleForm form, double radius, int nodes) {
  if (radius <= 0.0) {
    throw Error(errc::out_of_range, "radius must be positive");
  }
  if (nodes < 2) {
    throw Error(errc::out_of_range, "need at least 2 quadrature nodes");
  }
  auto quadrature = [&](int count) {
    Complex sum(0.0, 0.0);
    for (int j = 0; j < count; ++j) {
      double theta = 2.0 * kPi * j / count;
      Complex y = radius * std::exp(kI * theta);
      Complex dy = kI * y;  // velocity of the parametrization
      Complex f = (form == CircleForm::InverseY) ? 1.0 / y : 1.0 / (y * y);
      sum += f * dy;
    }
    return sum * (2.0 * kPi / static_cast<double>(count));
  };
  NumResult res;
  Complex coarse = quadrature(nodes / 2);
  res.value = quadrature(nodes);
  res.nodes = nodes;
  res.richardson_delta = std::abs(res.value - coarse);
  res.reference = (form == CircleForm::InverseY) ? 2.0 * kPi * kI
                                                 : Complex(0.0, 0.0);
  res.abs_error = std::abs(res.value - res.reference);
  return res;
}

namespace {

struct RadialExponents {
  std::vector<double> c;  // c_i = m a_i - 1
};

RadialExponents radial_exponents(const WeightSystem& w, int m) {
  RadialExponents e;
  e.c.reserve(w.nvars());
  for (const Rat& ai : w.a) e.c.push_back(m * to_double(ai) - 1.0);
  return e;
}

/// Differential of u -> u |u|^c at u, applied to h (R-linear in h).
Complex radial_differential(Complex u, double c, Complex h) {
  double r = std::abs(u);
  double rc = std::pow(r, c);
  if (c == 0.0) return h;
  return rc * h + c * std::pow(r, c - 2.0) * u * (std::conj(u) * h).real();
}

void combinations(int total, int choose, std::vector<int>& scratch, int start,
                  const std::function<void(const std::vector<int>&)>& fn) {
  if (static_cast<int>(scratch.size()) == choose) {
    fn(scratch);
    return;
  }
  for (int i = start; i <= total - (choose - static_cast<int>(scratch.size())); ++i) {
    scratch.push_back(i);
    combinations(total, choose, scratch, i + 1, fn);
    scratch.pop_back();
  }
}

}  // namespace

ComplexPoint weighted_radial_map(const ComplexPoint& u, const WeightSystem& w,
                                 int m) {
  RadialExponents e = radial_exponents(w, m);
  ComplexPoint z(u.size());
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    z[i] = u[i] * std::pow(std::abs(u[i]), e.c[i]);
  }
  return z;
}

ComplexPoint weighted_radial_map_inverse(const ComplexPoint& z,
                                         const WeightSystem& w, int m) {
  ComplexPoint u(z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    double ma = m * to_double(w.a[i]);
    u[i] = z[i] * std::pow(std::abs(z[i]), 1.0 / ma - 1.0);
  }
  return u;
}

NumResult orbit_slope(const Poly& s, const WeightSystem& w, const Poly& g,
                      int m, const ComplexPoint& u0,
                      const std::vector<double>& t_grid) {
  const int nv = s.nvars();
  const int n = nv - 1;
  if (u0.size() != nv) {
    throw Error(errc::dimension_mismatch, "base point arity mismatch");
  }
  if (t_grid.size() < 6) {
    throw Error(errc::out_of_range, "t grid needs at least 6 points");
  }
  for (double t : t_grid) {
    if (!(t > 0.0 && t <= 1.0)) {
      throw Error(errc::out_of_range, "t grid must lie in (0, 1]");
    }
  }
  for (Eigen::Index i = 0; i < u0.size(); ++i) {
    if (std::abs(u0[i]) < 1e-12) {
      throw Error(errc::frame_degenerate,
                  "base point has a zero coordinate; the radial map is not "
                  "smooth there");
    }
  }
  auto gdeg = uniform_weighted_degree(g, w);
  if (!gdeg) {
    throw Error(errc::not_quasihomogeneous,
                "numerator is not quasihomogeneous for the given weights");
  }
  {
    ComplexPoint z0 = weighted_radial_map(u0, w, m);
    double scale = std::max(term_magnitude(s, z0), 1e-300);
    if (std::abs(evaluate(s, z0)) > 1e-9 * scale) {
      throw Error(errc::off_hypersurface,
                  "image of the base point is not on {s=0}");
    }
  }

  RadialExponents exps = radial_exponents(w, m);
  std::vector<double> log_t, log_norm;
  log_t.reserve(t_grid.size());
  log_norm.reserve(t_grid.size());

  for (double t : t_grid) {
    ComplexPoint u = t * u0;
    ComplexPoint z = weighted_radial_map(u, w, m);
    ComplexPoint grad = gradient_at(s, z);

    // Real Jacobian of s after the radial reparametrization: the map is
    // diagonal, so column (j, re/im part) is grad_j * dPhi_j(1 or i).
    Eigen::MatrixXd jac(2, 2 * nv);
    for (int j = 0; j < nv; ++j) {
      Complex dre = grad[j] * radial_differential(u[j], exps.c[j], 1.0);
      Complex dim = grad[j] * radial_differential(u[j], exps.c[j], kI);
      jac(0, 2 * j) = dre.real();
      jac(1, 2 * j) = dre.imag();
      jac(0, 2 * j + 1) = dim.real();
      jac(1, 2 * j + 1) = dim.imag();
    }

    Eigen::MatrixXd jt = jac.transpose();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(jt);
    Eigen::MatrixXd qrm = qr.matrixQR();
    if (std::abs(qrm(1, 1)) <= 1e-12 * std::max(std::abs(qrm(0, 0)), 1e-300)) {
      throw Error(errc::frame_degenerate,
                  "Jacobian of the reparametrized equation is rank-deficient");
    }
    Eigen::MatrixXd qfull =
        qr.householderQ() * Eigen::MatrixXd::Identity(2 * nv, 2 * nv);
    // Columns 2 .. 2nv-1 are an orthonormal basis of ker(jac).
    std::vector<ComplexPoint> images;
    images.reserve(2 * n);
    for (int c = 2; c < 2 * nv; ++c) {
      ComplexPoint tangent(nv);
      for (int j = 0; j < nv; ++j) {
        Complex h(qfull(2 * j, c), qfull(2 * j + 1, c));
        tangent[j] = radial_differential(u[j], exps.c[j], h);
      }
      images.push_back(std::move(tangent));
    }

    // Root-sum-square of the pulled-back form over all n-subsets of the
    // frame; invariant under orthonormal changes of the frame.
    double sq = 0.0;
    std::vector<int> subset;
    combinations(2 * n, n, subset, 0,
                 [&](const std::vector<int>& pick) {
                   std::vector<ComplexPoint> vs;
                   vs.reserve(n);
                   for (int idx : pick) vs.push_back(images[idx]);
                   Complex val = residue_value(s, g, z, vs);
                   sq += std::norm(val);
                 });
    double norm_proxy = std::sqrt(sq);
    if (!(norm_proxy > 0.0) || !std::isfinite(norm_proxy)) {
      throw Error(errc::frame_degenerate, "norm proxy vanished on the ray");
    }
    log_t.push_back(std::log(t));
    log_norm.push_back(std::log(norm_proxy));
  }

  // Least-squares slope of log norm against log t.
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < log_t.size(); ++i) {
    mean_x += log_t[i];
    mean_y += log_norm[i];
  }
  mean_x /= static_cast<double>(log_t.size());
  mean_y /= static_cast<double>(log_t.size());
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < log_t.size(); ++i) {
    sxx += (log_t[i] - mean_x) * (log_t[i] - mean_x);
    sxy += (log_t[i] - mean_x) * (log_norm[i] - mean_y);
  }
  if (sxx == 0.0) {
    throw Error(errc::out_of_range, "t grid points must be distinct");
  }

  NumResult res;
  res.value = sxy / sxx;
  res.reference = to_double(Rat(m * (w.kappa - 1) - n + *gdeg * m));
  res.abs_error = std::abs(res.value - res.reference);
  res.nodes = static_cast<int>(t_grid.size());
  return res;
}

}  // namespace qhsing
