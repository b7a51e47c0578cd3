#include <vector>

#include "doctest.h"
#include "schur/catalog.hpp"
#include "schur/error.hpp"
#include "schur/homology.hpp"
#include "schur/pair.hpp"
#include "test_util.hpp"

using namespace schur;
using schur_test::error_code_of;

namespace {

// (N x K, N) with N embedded as the first factor
PairContext direct_pair(const FiniteGroup& n, const FiniteGroup& k) {
  FiniteGroup g = direct_product(n, k);
  std::vector<int> n_elems;
  for (int y = 0; y < n.order(); ++y) n_elems.push_back(y * k.order());
  std::vector<int> k_elems;
  for (int y = 0; y < k.order(); ++y) k_elems.push_back(y);
  return make_pair_with(g, subgroup_from_elements(g, n_elems),
                        subgroup_from_elements(g, k_elems));
}

PairContext whole_pair(const FiniteGroup& g) { return make_pair(g, whole_group(g)); }

}  // namespace

TEST_CASE("pair context bookkeeping") {
  const PairContext ctx = direct_pair(cyclic_group(4), cyclic_group(2));
  CHECK(ctx.p == 2);
  CHECK(ctx.nlog == 2);
  CHECK(ctx.mlog == 1);

  const PairContext triv = direct_pair(trivial_group(), trivial_group());
  CHECK(triv.p == 0);
  CHECK(triv.nlog == 0);
}

TEST_CASE("make_pair finds a complement or reports none") {
  const FiniteGroup d8 = dihedral8();
  const PairContext ctx = make_pair(d8, subgroup_from_elements(d8, {0, 2, 4, 6}));
  CHECK(ctx.nlog == 2);
  CHECK(ctx.mlog == 1);

  const FiniteGroup z4 = cyclic_group(4);
  CHECK(error_code_of([&] { make_pair(z4, subgroup_from_elements(z4, {0, 2})); }) ==
        Errc::no_complement);

  const FiniteGroup s3 =
      semidirect_product(cyclic_group(3), cyclic_group(2), {{0, 1, 2}, {0, 2, 1}});
  CHECK(error_code_of([&] { make_pair(s3, subgroup_from_elements(s3, {0, 1})); }) ==
        Errc::not_normal);
}

TEST_CASE("make_pair_with validates the claimed complement") {
  const FiniteGroup z4 = cyclic_group(4);
  CHECK(error_code_of([&] {
          make_pair_with(z4, subgroup_from_elements(z4, {0, 2}),
                         subgroup_from_elements(z4, {0, 2}));
        }) == Errc::semantic_error);
}

TEST_CASE("deficiency on direct products") {
  MultiplierCache cache;

  PairContext z9 = direct_pair(cyclic_group(9), trivial_group());
  PairData d9 = pair_data(z9, cache, 81);
  CHECK(d9.t == 1);
  CHECK(d9.mgn.trivial());
  CHECK(d9.bound1_slack == 1);
  CHECK(d9.bound7_holds);

  PairContext z4z2 = direct_pair(cyclic_group(4), cyclic_group(2));
  PairData d42 = pair_data(z4z2, cache, 81);
  CHECK(d42.t == 2);
  CHECK(d42.mg.factors == std::vector<long long>{2});
  CHECK(d42.mk.trivial());
  CHECK(d42.mgn.factors == std::vector<long long>{2});

  PairContext e1z3 = direct_pair(extraspecial_exp_p(3), cyclic_group(3));
  PairData de1 = pair_data(e1z3, cache, 81);
  CHECK(de1.t == 2);
  CHECK(de1.mgn.order() == 81);  // |M(N)| * |N^ab tensor K^ab| = 9 * 9

  PairContext z4z4 = direct_pair(cyclic_group(4), cyclic_group(4));
  PairData d44 = pair_data(z4z4, cache, 81);
  CHECK(d44.t == 3);
  CHECK(d44.mgn.factors == std::vector<long long>{4});

  PairContext z3z3 = direct_pair(elem_abelian(3, 2), cyclic_group(3));
  PairData d33 = pair_data(z3z3, cache, 81);
  CHECK(d33.t == 0);
  CHECK(d33.mgn.order() == 27);
}

TEST_CASE("degenerate pairs recover the single-group deficiency") {
  MultiplierCache cache;

  PairData d8 = pair_data(whole_pair(dihedral8()), cache, 81);
  CHECK(d8.t == 2);
  CHECK(d8.commutator_order == 2);
  CHECK(d8.pair_center_order == 2);
  CHECK(d8.bound7_holds);
  // the same inequality read over quotient orders fails on this group
  CHECK_FALSE(d8.bound7_quotient_holds);

  PairData e1 = pair_data(whole_pair(extraspecial_exp_p(3)), cache, 81);
  CHECK(e1.t == 1);
  CHECK(e1.mgn.factors == std::vector<long long>{3, 3});
  CHECK(e1.bound7_holds);
  CHECK_FALSE(e1.bound7_quotient_holds);

  PairData q8 = pair_data(whole_pair(quaternion8()), cache, 81);
  CHECK(q8.t == 3);
  CHECK(q8.mgn.trivial());
  CHECK(q8.bound7_holds);

  PairData z16 = pair_data(whole_pair(cyclic_group(16)), cache, 81);
  CHECK(z16.t == 6);
}

TEST_CASE("twisted pairs factor through the complement") {
  MultiplierCache cache;
  const FiniteGroup d8 =
      semidirect_product(cyclic_group(4), cyclic_group(2), {{0, 1, 2, 3}, {0, 3, 2, 1}});
  std::vector<int> n_elems{0, 2, 4, 6};
  const PairContext ctx = make_pair_with(d8, subgroup_from_elements(d8, n_elems),
                                         subgroup_from_elements(d8, {0, 1}));
  const PairData d = pair_data(ctx, cache, 81);
  CHECK(d.t == 2);
  CHECK(d.mg.factors == std::vector<long long>{2});
  CHECK(d.mk.trivial());
  CHECK(d.mgn.factors == std::vector<long long>{2});
  CHECK(d.commutator_order == 2);
  CHECK(d.pair_center_order == 2);
}

TEST_CASE("order formula for direct pairs matches cancellation") {
  MultiplierCache cache;
  const PairContext z4z2 = direct_pair(cyclic_group(4), cyclic_group(2));
  CHECK(pair_multiplier_order_direct(z4z2, cache, 81) == 2);

  const PairContext e1z3 = direct_pair(extraspecial_exp_p(3), cyclic_group(3));
  CHECK(pair_multiplier_order_direct(e1z3, cache, 81) == 81);

  const FiniteGroup d8 =
      semidirect_product(cyclic_group(4), cyclic_group(2), {{0, 1, 2, 3}, {0, 3, 2, 1}});
  const PairContext twisted = make_pair_with(d8, subgroup_from_elements(d8, {0, 2, 4, 6}),
                                             subgroup_from_elements(d8, {0, 1}));
  CHECK(error_code_of([&] { pair_multiplier_order_direct(twisted, cache, 81); }) ==
        Errc::semantic_error);
}

TEST_CASE("pair multiplier respects the budget") {
  MultiplierCache cache;
  const PairContext big = direct_pair(cyclic_group(16), cyclic_group(4));
  CHECK(error_code_of([&] { pair_data(big, cache, 32); }) == Errc::budget_exceeded);
}
