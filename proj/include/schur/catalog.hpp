#pragma once

#include <string>
#include <vector>

#include "schur/group.hpp"

namespace schur {

FiniteGroup dihedral8();
FiniteGroup quaternion8();
FiniteGroup elem_abelian(long long p, int k);

// Heisenberg group over F_p: order p^3, exponent p, center of order p.
// Odd p only (at p = 2 the same table is D8).
FiniteGroup extraspecial_exp_p(long long p);

// Z_{p^2} semidirect Z_p, the generator acting as multiplication by 1+p:
// order p^3, exponent p^2.  Odd p only.
FiniteGroup extraspecial_exp_p2(long long p);

// Group expressions:
//   spec := atom { "x" atom }
//   atom := "1" | "Z" int | "ElemAb(" p "," k ")" | "D8" | "Q8"
//         | "E1(" p ")" | "E2(" p ")" | "Sd(" spec "," spec "," path ")"
//         | "@" path
// Whitespace is insignificant outside paths.  "@" loads a Cayley-table file;
// "Sd" loads the action for N from a generator-image file.
struct GroupSpec {
  enum class Kind { trivial, cyclic, elem_ab, d8, q8, e1, e2, product, semidirect, file };
  Kind kind = Kind::trivial;
  long long a = 0;  // cyclic order, or the prime of elem_ab / e1 / e2
  long long b = 0;  // exponent k of elem_ab
  std::string path;
  std::vector<GroupSpec> kids;  // product factors, or semidirect N and K
};

GroupSpec parse_group_spec(const std::string& text);
std::string render_spec(const GroupSpec& s);

struct BuiltGroup {
  FiniteGroup group;
  // First factor of a top-level product or the N of a semidirect build,
  // embedded in `group`; the whole group for plain atoms.
  Subgroup n;
};
BuiltGroup build_group(const GroupSpec& s);

// {"order": n, "table": [[...], ...]}
FiniteGroup load_cayley_file(const std::string& path);

// {"generator_images": {"<k-index>": [n', ...], ...}}, completed to a full
// action of k on n by composing along products of the given generators.
std::vector<std::vector<int>> load_action_file(const std::string& path, const FiniteGroup& n,
                                               const FiniteGroup& k);

struct CatalogEntry {
  std::string name;
  FiniteGroup group;
};

// Complete list of the groups of order p^k, k <= 3 (1, 1, 2, 5 entries).
std::vector<CatalogEntry> groups_of_order(long long p, int k);

// Closure swept by the verification harness: all direct products of cyclic
// p-groups and the two order-p^3 nonabelian groups, up to the order budget,
// deduplicated up to isomorphism.  Leads with the trivial group.
std::vector<CatalogEntry> catalog_closure(long long p, int budget);

}  // namespace schur
