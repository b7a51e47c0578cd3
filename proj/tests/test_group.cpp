#include <algorithm>
#include <vector>

#include "doctest.h"
#include "schur/catalog.hpp"
#include "schur/error.hpp"
#include "schur/group.hpp"
#include "test_util.hpp"

using namespace schur;
using schur_test::error_code_of;

namespace {

FiniteGroup s3() {
  // Z3 with the inverting Z2 on top
  return semidirect_product(cyclic_group(3), cyclic_group(2),
                            {{0, 1, 2}, {0, 2, 1}});
}

int count_involutions(const FiniteGroup& g) {
  int n = 0;
  for (int x = 1; x < g.order(); ++x) {
    if (g.element_order(x) == 2) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("cyclic group basics") {
  const FiniteGroup z6 = cyclic_group(6);
  CHECK(z6.order() == 6);
  CHECK(z6.is_abelian());
  CHECK(z6.element_order(1) == 6);
  CHECK(z6.element_order(2) == 3);
  CHECK(z6.exponent() == 6);
  CHECK(z6.mul(4, 5) == 3);
  CHECK(z6.inv(2) == 4);
}

TEST_CASE("table validation rejects broken tables") {
  CHECK(error_code_of([] { FiniteGroup::from_table({{0, 1}, {1}}); }) == Errc::malformed_table);
  CHECK(error_code_of([] { FiniteGroup::from_table({{1, 1}, {1, 1}}); }) == Errc::no_identity);
  // identity may sit anywhere; construction relabels it to index 0
  const FiniteGroup relabeled = FiniteGroup::from_table({{1, 0}, {0, 1}});
  CHECK(relabeled.order() == 2);
  CHECK(relabeled.mul(0, 1) == 1);
  // associativity failure: a latin square that is not a group table
  CHECK(error_code_of([] {
          FiniteGroup::from_table({{0, 1, 2, 3, 4},
                                   {1, 0, 3, 4, 2},
                                   {2, 4, 0, 1, 3},
                                   {3, 2, 4, 0, 1},
                                   {4, 3, 1, 2, 0}});
        }) == Errc::not_associative);
}

TEST_CASE("direct products and isomorphism testing") {
  CHECK(are_isomorphic(direct_product(cyclic_group(2), cyclic_group(3)), cyclic_group(6)));
  CHECK_FALSE(are_isomorphic(cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2))));
  CHECK_FALSE(are_isomorphic(dihedral8(), quaternion8()));
  CHECK(are_isomorphic(dihedral8(), dihedral8()));
}

TEST_CASE("dihedral group of order 8") {
  const FiniteGroup d8 = dihedral8();
  CHECK(d8.order() == 8);
  CHECK_FALSE(d8.is_abelian());
  CHECK(d8.exponent() == 4);
  CHECK(count_involutions(d8) == 5);
  CHECK(center(d8).order() == 2);
  CHECK(derived_subgroup(d8).order() == 2);
  CHECK(conjugacy_classes(d8).size() == 5);
  CHECK(min_generator_count(d8) == 2);
  CHECK(frattini_subgroup(d8).order() == 2);
  CHECK(automorphisms(d8).size() == 8);
  CHECK(abelianize(d8).invariants.factors == std::vector<long long>{2, 2});
  CHECK(is_extraspecial_pair(d8, whole_group(d8), 2));

  const QuotientResult q = quotient(d8, center(d8));
  CHECK(q.group.order() == 4);
  CHECK(q.group.is_abelian());
  CHECK(q.group.exponent() == 2);
}

TEST_CASE("quaternion group of order 8") {
  const FiniteGroup q8 = quaternion8();
  CHECK(q8.order() == 8);
  CHECK_FALSE(q8.is_abelian());
  CHECK(count_involutions(q8) == 1);
  CHECK(center(q8).order() == 2);
  CHECK(derived_subgroup(q8).order() == 2);
  CHECK(is_extraspecial_pair(q8, whole_group(q8), 2));
}

TEST_CASE("semidirect products detect bad actions") {
  CHECK(error_code_of([] {
          semidirect_product(cyclic_group(3), cyclic_group(2), {{0, 1, 2}, {1, 2, 0}});
        }) == Errc::not_automorphism);
  CHECK(error_code_of([] {
          semidirect_product(cyclic_group(4), cyclic_group(2), {{0, 1, 2, 3}, {0, 1, 2, 3}});
        }) == std::nullopt);  // trivial action is a valid homomorphism
}

TEST_CASE("symmetric group on three letters as a twisted product") {
  const FiniteGroup g = s3();
  CHECK(g.order() == 6);
  CHECK_FALSE(g.is_abelian());
  CHECK(center(g).order() == 1);
  CHECK_FALSE(are_isomorphic(g, cyclic_group(6)));

  // the rotation part is normal, a reflection line is not
  const Subgroup rot = subgroup_from_elements(g, {0, 2, 4});
  const Subgroup refl = subgroup_from_elements(g, {0, 1});
  CHECK(is_normal(g, rot));
  CHECK_FALSE(is_normal(g, refl));
}

TEST_CASE("pair-relative subgroups inside the dihedral group") {
  const FiniteGroup d8 = dihedral8();
  const Subgroup rotations = subgroup_from_elements(d8, {0, 2, 4, 6});
  CHECK(is_normal(d8, rotations));
  CHECK(pair_commutator(d8, rotations).order() == 2);
  CHECK(pair_center(d8, rotations).order() == 2);
  CHECK(pair_upper_center(d8, rotations).order() == 4);

  const auto comp = find_complement(d8, rotations);
  REQUIRE(comp.has_value());
  CHECK(comp->order() == 2);

  const FiniteGroup q8 = quaternion8();
  const Subgroup i4 = subgroup_generated(q8, {1});
  CHECK(i4.order() == 4);
  CHECK_FALSE(find_complement(q8, i4).has_value());
}

TEST_CASE("subgroup as its own group and abelianization") {
  const FiniteGroup d8 = dihedral8();
  const Subgroup rotations = subgroup_from_elements(d8, {0, 2, 4, 6});
  const SubgroupAsGroup sub = subgroup_as_group(d8, rotations);
  CHECK(sub.group.order() == 4);
  CHECK(are_isomorphic(sub.group, cyclic_group(4)));
  CHECK(abelianize_subgroup(d8, rotations).invariants.factors == std::vector<long long>{4});
}

TEST_CASE("generator words reach the whole group") {
  const FiniteGroup z6 = cyclic_group(6);
  const GeneratorWords w = generator_words(z6, {1});
  CHECK(w.order.size() == 6);
  CHECK(w.order[0] == 0);
  for (int x = 0; x < 6; ++x) CHECK(w.in_span[static_cast<size_t>(x)]);

  const FiniteGroup d8 = dihedral8();
  const std::vector<int> gens = minimal_generators(d8);
  CHECK(gens.size() == 2);
  const GeneratorWords wd = generator_words(d8, gens);
  CHECK(wd.order.size() == 8);
}

TEST_CASE("prime power detection") {
  CHECK(prime_of_order(8) == 2);
  CHECK(prime_of_order(81) == 3);
  CHECK(error_code_of([] { prime_of_order(12); }) == Errc::not_p_group);
}
