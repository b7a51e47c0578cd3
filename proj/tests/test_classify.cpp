#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "schur/catalog.hpp"
#include "schur/classify.hpp"
#include "schur/homology.hpp"
#include "schur/pair.hpp"

using namespace schur;

namespace {

bool has_id(const Classification& c, const std::string& id) {
  return std::find(c.matched_ids.begin(), c.matched_ids.end(), id) != c.matched_ids.end();
}

Classification classify_direct(const FiniteGroup& n, const FiniteGroup& k) {
  FiniteGroup g = direct_product(n, k);
  std::vector<int> n_elems;
  for (int y = 0; y < n.order(); ++y) n_elems.push_back(y * k.order());
  std::vector<int> k_elems;
  for (int y = 0; y < k.order(); ++y) k_elems.push_back(y);
  PairContext ctx = make_pair_with(g, subgroup_from_elements(g, n_elems),
                                   subgroup_from_elements(g, k_elems));
  MultiplierCache cache;
  return classify_pair(ctx, pair_data(ctx, cache, 81));
}

Classification classify_whole(const FiniteGroup& g) {
  PairContext ctx = make_pair(g, whole_group(g));
  MultiplierCache cache;
  return classify_pair(ctx, pair_data(ctx, cache, 81));
}

}  // namespace

TEST_CASE("case table shape") {
  const std::vector<CaseInfo>& cases = all_cases();
  CHECK(cases.size() == 29);
  int suff = 0;
  for (const CaseInfo& ci : cases) {
    CHECK(ci.level >= 10);
    CHECK(ci.level <= 15);
    if (ci.sufficiency) ++suff;
    if (ci.level >= 13) CHECK(ci.requires_normal_k);
    if (ci.level == 12) CHECK_FALSE(ci.sufficiency);
  }
  CHECK(suff == 26);
}

TEST_CASE("deficiency zero") {
  Classification triv = classify_whole(trivial_group());
  CHECK(triv.t == 0);
  CHECK(triv.verdict == Verdict::confirmed);
  CHECK(triv.matched_ids == std::vector<std::string>{"T10.i"});

  Classification z2 = classify_whole(cyclic_group(2));
  CHECK(z2.t == 0);
  CHECK(z2.matched_ids == std::vector<std::string>{"T10.ii"});
  CHECK(z2.verdict == Verdict::confirmed);

  Classification z33 = classify_direct(elem_abelian(3, 2), cyclic_group(3));
  CHECK(z33.t == 0);
  CHECK(has_id(z33, "T10.ii"));
  CHECK(z33.verdict == Verdict::confirmed);
}

TEST_CASE("deficiency one") {
  Classification z9 = classify_direct(cyclic_group(9), trivial_group());
  CHECK(z9.t == 1);
  CHECK(z9.matched_ids == std::vector<std::string>{"T12.i", "T13.i"});
  CHECK(z9.verdict == Verdict::confirmed);

  Classification z2z4 = classify_direct(cyclic_group(2), cyclic_group(4));
  CHECK(z2z4.t == 1);
  CHECK(has_id(z2z4, "T12.ii"));
  CHECK(has_id(z2z4, "T13.ii"));
  CHECK(z2z4.verdict == Verdict::confirmed);

  Classification e1 = classify_whole(extraspecial_exp_p(3));
  CHECK(e1.t == 1);
  CHECK(has_id(e1, "T12.iii (capability unverified)"));
  CHECK(has_id(e1, "T13.iii"));
  CHECK(e1.verdict == Verdict::confirmed);
}

TEST_CASE("deficiency two") {
  Classification z4z2 = classify_direct(cyclic_group(4), cyclic_group(2));
  CHECK(z4z2.t == 2);
  CHECK(z4z2.matched_ids == std::vector<std::string>{"T14.iv"});
  CHECK(z4z2.verdict == Verdict::confirmed);

  Classification d8 = classify_whole(dihedral8());
  CHECK(d8.t == 2);
  CHECK(has_id(d8, "T12.iii (capability unverified)"));
  CHECK(has_id(d8, "T14.ii"));
  CHECK(d8.verdict == Verdict::confirmed);

  Classification z2z8 = classify_direct(cyclic_group(2), cyclic_group(8));
  CHECK(z2z8.t == 2);
  CHECK(has_id(z2z8, "T14.vii"));
  CHECK(z2z8.verdict == Verdict::confirmed);
}

TEST_CASE("deficiency three") {
  Classification q8 = classify_whole(quaternion8());
  CHECK(q8.t == 3);
  CHECK(has_id(q8, "T12.iii (capability unverified)"));
  CHECK(has_id(q8, "T15.iii"));
  CHECK(q8.verdict == Verdict::confirmed);

  Classification e2 = classify_whole(extraspecial_exp_p2(3));
  CHECK(e2.t == 3);
  CHECK(has_id(e2, "T15.iv"));
  CHECK(e2.verdict == Verdict::confirmed);

  Classification z4z4 = classify_direct(cyclic_group(4), cyclic_group(4));
  CHECK(z4z4.t == 3);
  CHECK(z4z4.matched_ids == std::vector<std::string>{"T15.vii"});
  CHECK(z4z4.verdict == Verdict::confirmed);
}

TEST_CASE("pairs outside the tables come back Unlisted") {
  Classification z16 = classify_whole(cyclic_group(16));
  CHECK(z16.t == 6);
  CHECK(z16.matched.empty());
  CHECK(z16.verdict == Verdict::unlisted);
}

TEST_CASE("twisted complement drops the normal-K cases") {
  const FiniteGroup d8 =
      semidirect_product(cyclic_group(4), cyclic_group(2), {{0, 1, 2, 3}, {0, 3, 2, 1}});
  PairContext ctx = make_pair_with(d8, subgroup_from_elements(d8, {0, 2, 4, 6}),
                                   subgroup_from_elements(d8, {0, 1}));
  MultiplierCache cache;
  Classification c = classify_pair(ctx, pair_data(ctx, cache, 81));
  CHECK(c.t == 2);
  CHECK(c.matched_ids == std::vector<std::string>{"T12.iii (capability unverified)"});
  CHECK(c.verdict == Verdict::unlisted);
}

TEST_CASE("classify_profile verdict logic") {
  PairProfile pr;
  pr.p = 2;
  pr.nlog = 2;
  pr.mlog = 0;
  pr.k_normal = true;
  pr.k_trivial = true;
  pr.n_is_zp2 = true;

  pr.t = 1;
  CHECK(classify_profile(pr).verdict == Verdict::confirmed);

  // a sufficiency case matching at the wrong t is a refutation
  pr.t = 2;
  Classification lying = classify_profile(pr);
  CHECK(lying.verdict == Verdict::mismatch);
  CHECK(has_id(lying, "T13.i"));
}

TEST_CASE("classify_profile parity gate") {
  PairProfile pr;
  pr.p = 3;
  pr.nlog = 3;
  pr.k_normal = true;
  pr.k_trivial = true;
  pr.n_is_d8 = true;  // impossible at p = 3; the gate must not consult it
  pr.t = 2;
  Classification c = classify_profile(pr);
  CHECK_FALSE(has_id(c, "T14.ii"));
  CHECK(c.verdict == Verdict::unlisted);
}

TEST_CASE("classify_profile normal-K gate") {
  PairProfile pr;
  pr.p = 2;
  pr.nlog = 1;
  pr.mlog = 3;
  pr.dk = 2;
  pr.k_normal = false;
  pr.n_is_zp = true;
  pr.t = 1;
  Classification c = classify_profile(pr);
  CHECK(has_id(c, "T12.ii"));
  CHECK_FALSE(has_id(c, "T13.ii"));
}
