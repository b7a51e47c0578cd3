#include "schur/pair.hpp"

#include <optional>
#include <string>

#include "schur/error.hpp"

namespace schur {

namespace {

PairContext finish_context(const FiniteGroup& g, const Subgroup& n, const Subgroup& k) {
  PairContext ctx{g, n, k, 0, 0, 0};
  if (g.order() > 1) {
    ctx.p = prime_of_order(g.order());
    ctx.nlog = log_prime(static_cast<unsigned long long>(n.order()), ctx.p);
    ctx.mlog = log_prime(static_cast<unsigned long long>(k.order()), ctx.p);
  }
  return ctx;
}

}  // namespace

PairContext make_pair(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) fail(Errc::not_normal, "N is not a normal subgroup of G");
  std::optional<Subgroup> k = find_complement(g, n);
  if (!k) {
    fail(Errc::no_complement, "no complement of N (order " + std::to_string(n.order()) +
                                  ") in G (order " + std::to_string(g.order()) + ")");
  }
  return finish_context(g, n, *k);
}

PairContext make_pair_with(const FiniteGroup& g, const Subgroup& n, const Subgroup& k) {
  if (!is_normal(g, n)) fail(Errc::not_normal, "N is not a normal subgroup of G");
  if (static_cast<long long>(n.order()) * k.order() != g.order()) {
    fail(Errc::semantic_error, "|N| |K| = " + std::to_string(n.order()) + " * " +
                                   std::to_string(k.order()) + " != |G|, K is not a complement");
  }
  for (int x : k.elems) {
    if (x != 0 && n.contains(x)) {
      fail(Errc::semantic_error, "K meets N at element " + std::to_string(x));
    }
  }
  return finish_context(g, n, k);
}

PairData pair_data(const PairContext& ctx, MultiplierCache& cache, int budget) {
  PairData d;
  d.mg = cache.multiplier(ctx.g, budget);
  d.mk = cache.multiplier(subgroup_as_group(ctx.g, ctx.k).group, budget);
  d.mgn = cancel_direct_factor(d.mg, d.mk);
  d.commutator_order = static_cast<unsigned long long>(pair_commutator(ctx.g, ctx.n).order());
  d.pair_center_order = static_cast<unsigned long long>(pair_center(ctx.g, ctx.n).order());
  if (ctx.p == 0) {
    d.bound7_holds = true;
    d.bound7_quotient_holds = true;
    return d;
  }
  const long long n = ctx.nlog;
  const long long m = ctx.mlog;
  const long long e1 = n * (2 * m + n - 1) / 2;
  const int mlog = log_prime(d.mgn.order(), ctx.p);
  if (mlog > e1) {
    fail(Errc::bound_violation, "|M(G,N)| = " + std::to_string(d.mgn.order()) +
                                    " exceeds p^" + std::to_string(e1));
  }
  d.t = static_cast<int>(e1 - mlog);
  d.bound1_slack = e1 - mlog;
  const int clog = log_prime(d.commutator_order, ctx.p);
  d.bound7_holds = clog <= d.t;
  const long long nq = n - log_prime(d.pair_center_order, ctx.p);
  const long long e7 = nq * (2 * m + nq - 1) / 2;
  d.bound7_quotient_holds = mlog + clog <= e7;
  return d;
}

AbelianInvariants pair_multiplier(const PairContext& ctx, MultiplierCache& cache, int budget) {
  AbelianInvariants mg = cache.multiplier(ctx.g, budget);
  AbelianInvariants mk = cache.multiplier(subgroup_as_group(ctx.g, ctx.k).group, budget);
  return cancel_direct_factor(mg, mk);
}

unsigned long long pair_multiplier_order_direct(const PairContext& ctx, MultiplierCache& cache,
                                                int budget) {
  if (!is_normal(ctx.g, ctx.k)) {
    fail(Errc::semantic_error, "the direct-route formula needs a normal complement");
  }
  AbelianInvariants mn = cache.multiplier(subgroup_as_group(ctx.g, ctx.n).group, budget);
  AbelianInvariants tens = tensor(abelianize_subgroup(ctx.g, ctx.n).invariants,
                                  abelianize_subgroup(ctx.g, ctx.k).invariants);
  return mn.order() * tens.order();
}

}  // namespace schur
