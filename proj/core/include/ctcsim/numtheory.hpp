#pragma once

#include <vector>

#include "ctcsim/ast.hpp"
#include "ctcsim/error.hpp"

// Plain trial-division number theory, kept deliberately simpler than the
// interpreter so it can serve as an oracle for it.
namespace ctcsim::numtheory {

struct FactorView {
  Int n = 0;
  std::vector<Int> divisors_gt1;  // ascending, always ends with n
  Int smallest_nontrivial = 0;    // smallest divisor in [2, isqrt(n)], else n
  bool is_prime = false;
};

/// Throws InvalidArgument for n < 2.
FactorView factor_view(Int n);

/// Largest r with r * r <= n, found by integer search. n >= 0.
Int isqrt(Int n);

bool is_prime(Int n);

}  // namespace ctcsim::numtheory
