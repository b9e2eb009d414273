#include "ctcsim/numtheory.hpp"

#include <algorithm>
#include <string>

namespace ctcsim::numtheory {

Int isqrt(Int n) {
  if (n < 0) throw InvalidArgument("isqrt of a negative number");
  // Galloping search for an upper bound, then bisection on r * r <= n.
  Int hi = 1;
  while (hi <= n / hi) hi *= 2;
  Int lo = 0;
  while (hi - lo > 1) {
    const Int mid = lo + (hi - lo) / 2;
    if (mid <= n / mid) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

FactorView factor_view(Int n) {
  if (n < 2) throw InvalidArgument("factor_view needs n >= 2, got " + std::to_string(n));
  FactorView v;
  v.n = n;
  v.smallest_nontrivial = n;

  std::vector<Int> small;
  std::vector<Int> large;
  const Int root = isqrt(n);
  for (Int d = 2; d <= root; ++d) {
    if (n % d != 0) continue;
    if (small.empty()) v.smallest_nontrivial = d;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  v.divisors_gt1 = std::move(small);
  v.divisors_gt1.insert(v.divisors_gt1.end(), large.rbegin(), large.rend());
  v.divisors_gt1.push_back(n);
  v.is_prime = v.divisors_gt1.size() == 1;
  return v;
}

bool is_prime(Int n) { return n >= 2 && factor_view(n).is_prime; }

}  // namespace ctcsim::numtheory
