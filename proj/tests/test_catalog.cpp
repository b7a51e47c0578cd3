#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "schur/catalog.hpp"
#include "schur/error.hpp"
#include "schur/group.hpp"
#include "test_util.hpp"

using namespace schur;
using schur_test::error_code_of;

namespace {
const std::string kData = SCHUR_TEST_DATA;
}

TEST_CASE("spec parsing and rendering round trips") {
  CHECK(render_spec(parse_group_spec("Z2 x Z4")) == "Z2 x Z4");
  CHECK(render_spec(parse_group_spec("  Z2xZ4  ")) == "Z2 x Z4");
  CHECK(render_spec(parse_group_spec("1")) == "1");
  CHECK(render_spec(parse_group_spec("D8 x Q8")) == "D8 x Q8");
  CHECK(render_spec(parse_group_spec("E1(3)")) == "E1(3)");
  CHECK(render_spec(parse_group_spec("E2( 5 )")) == "E2(5)");
  CHECK(render_spec(parse_group_spec("ElemAb(3,2)")) == "ElemAb(3,2)");
  CHECK(render_spec(parse_group_spec("Sd(Z3,Z2,act.json)")) == "Sd(Z3, Z2, act.json)");
  CHECK(render_spec(parse_group_spec("@tables/k4.json")) == "@tables/k4.json");
}

TEST_CASE("spec parse failures carry positions and kinds") {
  CHECK(error_code_of([] { parse_group_spec(""); }) == Errc::parse_error);
  CHECK(error_code_of([] { parse_group_spec("Zx"); }) == Errc::parse_error);
  CHECK(error_code_of([] { parse_group_spec("Z4 x"); }) == Errc::parse_error);
  CHECK(error_code_of([] { parse_group_spec("Q9"); }) == Errc::parse_error);
  CHECK(error_code_of([] { parse_group_spec("ElemAb(3)"); }) == Errc::parse_error);
  CHECK(error_code_of([] { parse_group_spec("Z2 junk"); }) == Errc::parse_error);
  try {
    parse_group_spec("Z4 x ?");
  } catch (const Error& e) {
    const std::string what = e.what();
    CHECK(what.find("offset") != std::string::npos);
  }
  // grammar accepts these, semantics reject them
  CHECK(error_code_of([] { build_group(parse_group_spec("E1(2)")); }) == Errc::semantic_error);
  CHECK(error_code_of([] { build_group(parse_group_spec("E2(2)")); }) == Errc::semantic_error);
  CHECK(error_code_of([] { build_group(parse_group_spec("E1(4)")); }) == Errc::semantic_error);
  CHECK(error_code_of([] { build_group(parse_group_spec("ElemAb(6,2)")); }) ==
        Errc::semantic_error);
  CHECK(error_code_of([] { build_group(parse_group_spec("Z0")); }).has_value());
}

TEST_CASE("named builders have the advertised shapes") {
  CHECK(dihedral8().order() == 8);
  CHECK(quaternion8().order() == 8);
  CHECK(elem_abelian(3, 2).order() == 9);
  CHECK(elem_abelian(3, 2).exponent() == 3);
  CHECK(elem_abelian(2, 3).order() == 8);

  const FiniteGroup e1 = extraspecial_exp_p(3);
  CHECK(e1.order() == 27);
  CHECK_FALSE(e1.is_abelian());
  CHECK(e1.exponent() == 3);
  CHECK(center(e1).order() == 3);
  CHECK(derived_subgroup(e1).order() == 3);
  CHECK(is_extraspecial_pair(e1, whole_group(e1), 3));

  const FiniteGroup e2 = extraspecial_exp_p2(3);
  CHECK(e2.order() == 27);
  CHECK_FALSE(e2.is_abelian());
  CHECK(e2.exponent() == 9);
  CHECK(center(e2).order() == 3);
  CHECK(is_extraspecial_pair(e2, whole_group(e2), 3));
  CHECK_FALSE(are_isomorphic(e1, e2));

  const FiniteGroup e1_5 = extraspecial_exp_p(5);
  CHECK(e1_5.order() == 125);
  CHECK(e1_5.exponent() == 5);
}

TEST_CASE("build_group designates the first factor as N") {
  const BuiltGroup b = build_group(parse_group_spec("Z4 x Z2"));
  CHECK(b.group.order() == 8);
  CHECK(b.n.order() == 4);
  CHECK(is_normal(b.group, b.n));

  const BuiltGroup single = build_group(parse_group_spec("D8"));
  CHECK(single.n.order() == 8);

  CHECK(error_code_of([] { build_group(parse_group_spec("Z100000")); }) ==
        Errc::budget_exceeded);
}

TEST_CASE("complete lists of groups of small prime-power order") {
  CHECK(groups_of_order(2, 0).size() == 1);
  CHECK(groups_of_order(2, 1).size() == 1);
  CHECK(groups_of_order(2, 2).size() == 2);
  CHECK(groups_of_order(3, 2).size() == 2);

  const std::vector<CatalogEntry> o8 = groups_of_order(2, 3);
  REQUIRE(o8.size() == 5);
  int nonabelian = 0;
  for (const CatalogEntry& e : o8) {
    CHECK(e.group.order() == 8);
    if (!e.group.is_abelian()) ++nonabelian;
  }
  CHECK(nonabelian == 2);
  for (size_t i = 0; i < o8.size(); ++i) {
    for (size_t j = i + 1; j < o8.size(); ++j) {
      CHECK_FALSE(are_isomorphic(o8[i].group, o8[j].group));
    }
  }

  const std::vector<CatalogEntry> o27 = groups_of_order(3, 3);
  REQUIRE(o27.size() == 5);
  for (size_t i = 0; i < o27.size(); ++i) {
    for (size_t j = i + 1; j < o27.size(); ++j) {
      CHECK_FALSE(are_isomorphic(o27[i].group, o27[j].group));
    }
  }

  CHECK(error_code_of([] { groups_of_order(2, 4); }) == Errc::unsupported_order);
  CHECK(error_code_of([] { groups_of_order(6, 2); }) == Errc::semantic_error);
}

TEST_CASE("catalog closure enumerates products up to iso within budget") {
  const std::vector<CatalogEntry> c2 = catalog_closure(2, 32);
  CHECK(c2.size() == 27);
  CHECK(c2.front().name == "1");
  bool has_d8 = false;
  bool has_z32 = false;
  for (const CatalogEntry& e : c2) {
    CHECK(e.group.order() <= 32);
    if (e.name == "D8") {
      has_d8 = true;
      CHECK_FALSE(e.group.is_abelian());
    }
    if (e.group.order() == 32 && e.group.is_abelian() && e.group.exponent() == 32) {
      has_z32 = true;
    }
  }
  CHECK(has_d8);
  CHECK(has_z32);
  for (size_t i = 0; i < c2.size(); ++i) {
    for (size_t j = i + 1; j < c2.size(); ++j) {
      CHECK_FALSE(are_isomorphic(c2[i].group, c2[j].group));
    }
  }

  const std::vector<CatalogEntry> c3 = catalog_closure(3, 81);
  CHECK(c3.size() == 16);
  for (const CatalogEntry& e : c3) CHECK(e.group.order() <= 81);

  const std::vector<CatalogEntry> tiny = catalog_closure(2, 4);
  std::set<int> orders;
  for (const CatalogEntry& e : tiny) orders.insert(e.group.order());
  CHECK(orders == std::set<int>{1, 2, 4});
  CHECK(tiny.size() == 4);  // 1, Z2, Z4, Z2 x Z2
}

TEST_CASE("cayley table files round trip through the group expression grammar") {
  const FiniteGroup k4 = load_cayley_file(kData + "/klein4.json");
  CHECK(k4.order() == 4);
  CHECK(k4.exponent() == 2);

  const BuiltGroup via_spec = build_group(parse_group_spec("@" + kData + "/klein4.json"));
  CHECK(are_isomorphic(via_spec.group, elem_abelian(2, 2)));

  CHECK(error_code_of([] { load_cayley_file(kData + "/does_not_exist.json"); }) ==
        Errc::io_error);
  CHECK(error_code_of([] { load_cayley_file(kData + "/bad_table.json"); }) ==
        Errc::malformed_table);
}

TEST_CASE("action files build twisted products") {
  const BuiltGroup d8ish =
      build_group(parse_group_spec("Sd(Z4, Z2, " + kData + "/inv_z4.json)"));
  CHECK(d8ish.group.order() == 8);
  CHECK(are_isomorphic(d8ish.group, dihedral8()));
  CHECK(d8ish.n.order() == 4);
  CHECK(is_normal(d8ish.group, d8ish.n));

  const FiniteGroup z4 = cyclic_group(4);
  CHECK(error_code_of([&] { load_action_file(kData + "/bad_table.json", z4, cyclic_group(2)); }) ==
        Errc::io_error);
  CHECK(error_code_of([&] { load_action_file(kData + "/half_span.json", z4, cyclic_group(4)); }) ==
        Errc::semantic_error);
}
