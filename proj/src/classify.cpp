#include "schur/classify.hpp"

#include <vector>

#include "schur/catalog.hpp"

namespace schur {

PairProfile profile_pair(const PairContext& ctx, const PairData& d) {
  PairProfile pr;
  pr.p = ctx.p;
  pr.nlog = ctx.nlog;
  pr.mlog = ctx.mlog;
  pr.t = d.t;
  pr.k_normal = is_normal(ctx.g, ctx.k);
  pr.n_trivial = ctx.n.order() == 1;
  pr.k_trivial = ctx.k.order() == 1;
  pr.g_elem_ab =
      ctx.g.order() == 1 || (ctx.g.is_abelian() && ctx.g.exponent() == ctx.p);
  if (ctx.p == 0) return pr;
  pr.extraspecial = is_extraspecial_pair(ctx.g, ctx.n, ctx.p);

  const long long p = ctx.p;
  const long long p3 = p * p * p;
  const FiniteGroup ng = subgroup_as_group(ctx.g, ctx.n).group;
  const long long no = ng.order();
  if (ng.is_abelian()) {
    const std::vector<long long>& f = abelianize(ng).invariants.factors;
    pr.n_is_zp = f == std::vector<long long>{p};
    pr.n_is_zp2 = f == std::vector<long long>{p * p};
    pr.n_is_zp3 = f == std::vector<long long>{p3};
    pr.n_is_zpzp = f == std::vector<long long>{p, p};
    pr.n_is_zpzp2 = f == std::vector<long long>{p * p, p};
    pr.n_is_zpzpzp = f == std::vector<long long>{p, p, p};
    pr.n_is_zpzpzp2 = f == std::vector<long long>{p * p, p, p};
  } else if (p == 2) {
    if (no == 8) {
      int invol = 0;
      for (int x = 1; x < 8; ++x) {
        if (ng.mul(x, x) == 0) ++invol;
      }
      pr.n_is_q8 = invol == 1;
      pr.n_is_d8 = invol == 5;
    } else if (no == 16) {
      pr.n_is_d8z2 = are_isomorphic(ng, direct_product(dihedral8(), cyclic_group(2)));
    }
  } else {
    if (no == p3) {
      pr.n_is_e1 = ng.exponent() == p;
      pr.n_is_e2 = !pr.n_is_e1;
    } else if (no == p3 * p) {
      pr.n_is_zpe1 = are_isomorphic(
          ng, direct_product(cyclic_group(static_cast<int>(p)), extraspecial_exp_p(p)));
    } else if (no == p3 * p * p) {
      pr.n_is_e1zpzp =
          are_isomorphic(ng, direct_product(direct_product(extraspecial_exp_p(p),
                                                           cyclic_group(static_cast<int>(p))),
                                            cyclic_group(static_cast<int>(p))));
    }
  }

  const FiniteGroup kg = subgroup_as_group(ctx.g, ctx.k).group;
  pr.dk = min_generator_count(kg);
  if (kg.order() > 1 && kg.is_abelian()) {
    const std::vector<long long>& f = abelianize(kg).invariants.factors;
    pr.k_is_zp = f == std::vector<long long>{p};
    pr.k_is_zp2 = f == std::vector<long long>{p * p};
    pr.k_is_zpzp = f == std::vector<long long>{p, p};
  }
  return pr;
}

const std::vector<CaseInfo>& all_cases() {
  static const std::vector<CaseInfo> cases = {
      {"T10.i", 10, 0, true, false, 0, "N = 1", false,
       [](const PairProfile& q) { return q.n_trivial; },
       [](long long) { return 1LL; }},
      {"T10.ii", 10, 0, true, false, 0, "G elementary abelian, N != 1", false,
       [](const PairProfile& q) { return q.g_elem_ab && !q.n_trivial; },
       [](long long p) { return p; }},

      {"T12.i", 12, 1, false, false, 0, "G = N x K, N ~ Z_{p^2}, K = 1", false,
       [](const PairProfile& q) { return q.n_is_zp2 && q.k_trivial; },
       [](long long p) { return p * p; }},
      {"T12.ii", 12, 1, false, false, 0, "G = N x K, N ~ Z_p, d(K) = m-1", false,
       [](const PairProfile& q) { return q.n_is_zp && q.dk == q.mlog - 1; },
       [](long long p) { return p * p * p; }},
      {"T12.iii", 12, 1, false, false, 0, "(G,N) an extraspecial pair", true,
       [](const PairProfile& q) { return q.extraspecial; },
       [](long long p) { return p * p * p; }},

      {"T13.i", 13, 1, true, true, 0, "N ~ Z_{p^2}, K = 1", false,
       [](const PairProfile& q) { return q.n_is_zp2 && q.k_trivial; },
       [](long long p) { return p * p; }},
      {"T13.ii", 13, 1, true, true, 0, "N ~ Z_p, d(K) = m-1", false,
       [](const PairProfile& q) { return q.n_is_zp && q.dk == q.mlog - 1; },
       [](long long p) { return p * p * p; }},
      {"T13.iii", 13, 1, true, true, 1, "N ~ E1(p), K = 1", false,
       [](const PairProfile& q) { return q.n_is_e1 && q.k_trivial; },
       [](long long p) { return p * p * p; }},

      {"T14.i", 14, 2, true, true, 0, "N ~ Z_p x Z_{p^2}, K = 1", false,
       [](const PairProfile& q) { return q.n_is_zpzp2 && q.k_trivial; },
       [](long long p) { return p * p * p; }},
      {"T14.ii", 14, 2, true, true, 2, "N ~ D8, K = 1", false,
       [](const PairProfile& q) { return q.n_is_d8 && q.k_trivial; },
       [](long long) { return 8LL; }},
      {"T14.iii", 14, 2, true, true, 1, "N ~ Z_p x E1(p), K = 1", false,
       [](const PairProfile& q) { return q.n_is_zpe1 && q.k_trivial; },
       [](long long p) { return p * p * p * p; }},
      {"T14.iv", 14, 2, true, true, 0, "N ~ Z_{p^2}, K ~ Z_p", false,
       [](const PairProfile& q) { return q.n_is_zp2 && q.k_is_zp; },
       [](long long p) { return p * p * p; }},
      {"T14.v", 14, 2, true, true, 1, "N ~ E1(p), K ~ Z_p", false,
       [](const PairProfile& q) { return q.n_is_e1 && q.k_is_zp; },
       [](long long p) { return p * p * p * p; }},
      {"T14.vi", 14, 2, true, true, 0, "N ~ Z_p x Z_p, d(K) = m-1", false,
       [](const PairProfile& q) { return q.n_is_zpzp && q.dk == q.mlog - 1; },
       [](long long p) { return p * p * p * p; }},
      {"T14.vii", 14, 2, true, true, 0, "N ~ Z_p, d(K) = m-2", false,
       [](const PairProfile& q) { return q.n_is_zp && q.dk == q.mlog - 2; },
       [](long long p) { return p * p * p * p; }},

      {"T15.i", 15, 3, true, true, 0, "N ~ Z_{p^3}, K = 1", false,
       [](const PairProfile& q) { return q.n_is_zp3 && q.k_trivial; },
       [](long long p) { return p * p * p; }},
      {"T15.ii", 15, 3, true, true, 0, "N ~ Z_p x Z_p x Z_{p^2}, K = 1", false,
       [](const PairProfile& q) { return q.n_is_zpzpzp2 && q.k_trivial; },
       [](long long p) { return p * p * p * p; }},
      {"T15.iii", 15, 3, true, true, 2, "N ~ Q8, K = 1", false,
       [](const PairProfile& q) { return q.n_is_q8 && q.k_trivial; },
       [](long long) { return 8LL; }},
      {"T15.iv", 15, 3, true, true, 1, "N ~ E2(p), K = 1", false,
       [](const PairProfile& q) { return q.n_is_e2 && q.k_trivial; },
       [](long long p) { return p * p * p; }},
      {"T15.v", 15, 3, true, true, 2, "N ~ D8 x Z2, K = 1", false,
       [](const PairProfile& q) { return q.n_is_d8z2 && q.k_trivial; },
       [](long long) { return 16LL; }},
      {"T15.vi", 15, 3, true, true, 1, "N ~ E1(p) x Z_p x Z_p, K = 1", false,
       [](const PairProfile& q) { return q.n_is_e1zpzp && q.k_trivial; },
       [](long long p) { return p * p * p * p * p; }},
      {"T15.vii", 15, 3, true, true, 0, "N ~ Z_{p^2}, K ~ Z_{p^2}", false,
       [](const PairProfile& q) { return q.n_is_zp2 && q.k_is_zp2; },
       [](long long p) { return p * p * p * p; }},
      {"T15.viii", 15, 3, true, true, 0, "N ~ Z_{p^2} x Z_p, K ~ Z_p", false,
       [](const PairProfile& q) { return q.n_is_zpzp2 && q.k_is_zp; },
       [](long long p) { return p * p * p * p; }},
      {"T15.ix", 15, 3, true, true, 2, "N ~ D8, K ~ Z2", false,
       [](const PairProfile& q) { return q.n_is_d8 && q.k_is_zp; },
       [](long long) { return 16LL; }},
      {"T15.x", 15, 3, true, true, 1, "N ~ Z_p x E1(p), K ~ Z_p", false,
       [](const PairProfile& q) { return q.n_is_zpe1 && q.k_is_zp; },
       [](long long p) { return p * p * p * p * p; }},
      {"T15.xi", 15, 3, true, true, 0, "N ~ Z_{p^2}, K ~ Z_p x Z_p", false,
       [](const PairProfile& q) { return q.n_is_zp2 && q.k_is_zpzp; },
       [](long long p) { return p * p * p * p; }},
      {"T15.xii", 15, 3, true, true, 1, "N ~ E1(p), K ~ Z_p x Z_p", false,
       [](const PairProfile& q) { return q.n_is_e1 && q.k_is_zpzp; },
       [](long long p) { return p * p * p * p * p; }},
      {"T15.xiii", 15, 3, true, true, 0, "N ~ Z_p, d(K) = m-3", false,
       [](const PairProfile& q) { return q.n_is_zp && q.dk == q.mlog - 3; },
       [](long long p) { return p * p * p * p * p; }},
      {"T15.xiv", 15, 3, true, true, 0, "N ~ Z_p x Z_p x Z_p, d(K) = m-1", false,
       [](const PairProfile& q) { return q.n_is_zpzpzp && q.dk == q.mlog - 1; },
       [](long long p) { return p * p * p * p * p; }},
  };
  return cases;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::confirmed: return "Confirmed";
    case Verdict::unlisted: return "Unlisted";
    case Verdict::mismatch: return "Mismatch";
  }
  return "Unknown";
}

Classification classify_profile(const PairProfile& pr) {
  Classification c;
  c.t = pr.t;
  bool any_right = false;
  bool any_sufficient_wrong = false;
  for (const CaseInfo& ci : all_cases()) {
    if (ci.parity != 0 && (pr.p == 0 || (ci.parity == 2) != (pr.p == 2))) continue;
    if (ci.requires_normal_k && !pr.k_normal) continue;
    if (!ci.matches(pr)) continue;
    c.matched.push_back(&ci);
    c.matched_ids.push_back(ci.annotate ? std::string(ci.id) + " (capability unverified)"
                                        : std::string(ci.id));
    if (ci.t == pr.t) any_right = true;
    if (ci.sufficiency && ci.t != pr.t) any_sufficient_wrong = true;
  }
  c.verdict = any_sufficient_wrong
                  ? Verdict::mismatch
                  : (any_right ? Verdict::confirmed : Verdict::unlisted);
  return c;
}

Classification classify_pair(const PairContext& ctx, const PairData& d) {
  return classify_profile(profile_pair(ctx, d));
}

}  // namespace schur
