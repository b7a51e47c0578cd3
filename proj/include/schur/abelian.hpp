#pragma once

#include <string>
#include <vector>

#include "schur/error.hpp"

namespace schur {

// Invariant-factor description of a finite abelian group, stored as
// n1, n2, ..., nk with n_{i+1} | n_i and every n_i >= 2.  The trivial
// group is the empty list and renders as "1".
struct AbelianInvariants {
  std::vector<long long> factors;

  bool trivial() const { return factors.empty(); }

  unsigned long long order() const {
    unsigned long long o = 1;
    for (long long f : factors) o *= static_cast<unsigned long long>(f);
    return o;
  }

  // "Z4 x Z2", or "1" for the trivial group.
  std::string render() const;

  bool operator==(const AbelianInvariants& other) const { return factors == other.factors; }
  bool operator!=(const AbelianInvariants& other) const { return !(*this == other); }
};

// Sorts an arbitrary list of cyclic orders into the canonical divisibility
// chain (computed via Smith normal form of the diagonal relation matrix).
// Orders equal to 1 are dropped; non-positive orders raise NonPositiveOrder.
AbelianInvariants canonicalize(const std::vector<long long>& orders);

// Tensor product over Z: pairwise gcd multiset, canonicalized.
AbelianInvariants tensor(const AbelianInvariants& a, const AbelianInvariants& b);

// Multiplier of an abelian group Z_{n1} x ... x Z_{nk} with n_{i+1} | n_i:
// Z_{n2} x Z_{n3}^(2) x ... x Z_{nk}^(k-1).
AbelianInvariants multiplier_abelian(const AbelianInvariants& a);

// Removes a direct factor: whole = result x factor.  Works on elementary
// divisors per prime; raises NotADirectFactor naming the first prime power
// of `factor` that `whole` cannot supply.
AbelianInvariants cancel_direct_factor(const AbelianInvariants& whole,
                                       const AbelianInvariants& factor);

// log_p of a p-power, raising NotPGroup when v is not a power of p.
int log_prime(unsigned long long v, long long p);

}  // namespace schur
