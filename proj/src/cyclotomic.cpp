#include "qhsing/cyclotomic.hpp"

#include <algorithm>

namespace qhsing {

long euler_phi(long k) {
  long result = k;
  for (long p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    while (k % p == 0) k /= p;
    result -= result / p;
  }
  if (k > 1) result -= result / k;
  return result;
}

std::vector<long> divisors(long k) {
  std::vector<long> small, large;
  for (long d = 1; d * d <= k; ++d) {
    if (k % d != 0) continue;
    small.push_back(d);
    if (d != k / d) large.push_back(k / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

IntPoly cyclotomic(long k) {
  IntPoly num = -IntPoly::one_minus_power(static_cast<int>(k));  // t^k - 1
  for (long d : divisors(k)) {
    if (d == k) continue;
    num = num.divide_exact(cyclotomic(d));
  }
  return num;
}

Int cyclotomic_at_one(long k) {
  if (k == 1) return 0;
  // Phi_{p^r}(1) = p; every other Phi_k(1) = 1.
  for (long p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    long rest = k;
    while (rest % p == 0) rest /= p;
    return rest == 1 ? Int(p) : Int(1);
  }
  return Int(k);  // k prime
}

}  // namespace qhsing
