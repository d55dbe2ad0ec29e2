#include "qhsing/numeric.hpp"

#include <limits>
#include <stdexcept>

namespace qhsing {

std::string rat_str(const Rat& r) {
  Int num = numerator(r);
  Int den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string int_str(const Int& v) { return v.str(); }

Int rat_floor(const Rat& r) {
  Int num = numerator(r);
  Int den = denominator(r);
  Int q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

long to_long(const Int& v) {
  if (v > std::numeric_limits<long>::max() ||
      v < std::numeric_limits<long>::min()) {
    throw std::overflow_error("integer out of long range: " + v.str());
  }
  return v.convert_to<long>();
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) { return next() % n; }

double SplitMix64::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

}  // namespace qhsing
