#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Core>

#include <cstdint>
#include <string>

namespace qhsing {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

/// Canonical text form: "n" for integers, "n/d" otherwise. Rat is kept
/// reduced with positive denominator, so equal values print identically.
std::string rat_str(const Rat& r);

std::string int_str(const Int& v);

/// Largest integer <= r.
Int rat_floor(const Rat& r);

/// Throws std::overflow_error outside the long range.
long to_long(const Int& v);

double to_double(const Rat& r);

/// splitmix64. Fixed-seed runs are reproducible bit for bit on every
/// platform, unlike <random> distributions.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next();
  std::uint64_t below(std::uint64_t n);
  double uniform();  // [0,1), 53-bit
  double uniform(double lo, double hi);
};

}  // namespace qhsing
