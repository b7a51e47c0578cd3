#pragma once

#include "schur/abelian.hpp"
#include "schur/group.hpp"
#include "schur/homology.hpp"

namespace schur {

// A finite p-group G together with a normal subgroup N and a fixed
// complement K: trivial intersection with N and NK = G.  p is 0 only for
// the trivial group.
struct PairContext {
  FiniteGroup g;
  Subgroup n;
  Subgroup k;
  long long p = 0;
  int nlog = 0;  // log_p |N|
  int mlog = 0;  // log_p |K|
};

// Validates normality and searches for a complement; NoComplement when none
// exists.
PairContext make_pair(const FiniteGroup& g, const Subgroup& n);

// Same with a caller-supplied complement, validated.
PairContext make_pair_with(const FiniteGroup& g, const Subgroup& n, const Subgroup& k);

struct PairData {
  AbelianInvariants mg;   // M(G)
  AbelianInvariants mk;   // M(K)
  AbelianInvariants mgn;  // M(G, N) = M(G) with the M(K) factor cancelled
  int t = 0;              // p-exponent of slack in |M(G,N)| <= p^{n(2m+n-1)/2}
  long long bound1_slack = 0;         // n(2m+n-1)/2 - log_p |M(G,N)|, equals t
  bool bound7_holds = false;          // |M(G,N)| |[N,G]| <= p^{n(2m+n-1)/2}
  unsigned long long commutator_order = 1;   // |[N, G]|
  unsigned long long pair_center_order = 1;  // |Z(N, G)|
  // The second inequality with n read from |N / Z(N,G)| instead of |N|.
  // Diagnostic only: it fails on e.g. (D8, N = G, K = 1).
  bool bound7_quotient_holds = false;
};

PairData pair_data(const PairContext& ctx, MultiplierCache& cache, int budget = 32);

// M(G, N) alone.
AbelianInvariants pair_multiplier(const PairContext& ctx, MultiplierCache& cache, int budget = 32);

// |M(N)| * |N^ab tensor K^ab|; agrees with |M(G,N)| whenever G = N x K.
// Requires K normal.
unsigned long long pair_multiplier_order_direct(const PairContext& ctx, MultiplierCache& cache,
                                                int budget = 32);

}  // namespace schur
