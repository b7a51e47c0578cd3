#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schur/abelian.hpp"
#include "schur/error.hpp"

namespace schur {

// Finite group given by its multiplication table. Element 0 is always the
// identity; from_table relabels if the input has its identity elsewhere.
class FiniteGroup {
 public:
  static FiniteGroup from_table(const std::vector<std::vector<int>>& table);

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a) * static_cast<size_t>(n_) + static_cast<size_t>(b)]; }
  int inv(int a) const { return inv_[static_cast<size_t>(a)]; }
  // x g x^-1
  int conj(int g, int x) const { return mul(mul(x, g), inv(x)); }
  // x^-1 y^-1 x y
  int comm(int x, int y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }

  int element_order(int a) const;
  long long exponent() const;
  bool is_abelian() const;

 private:
  int n_ = 1;
  std::vector<int> table_{0};
  std::vector<int> inv_{0};
};

// Sorted element list plus membership mask over the parent group.
struct Subgroup {
  std::vector<int> elems;
  std::vector<char> mask;

  int order() const { return static_cast<int>(elems.size()); }
  bool contains(int g) const { return mask[static_cast<size_t>(g)] != 0; }
};

bool subgroup_equal(const Subgroup& a, const Subgroup& b);

FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);

// (a1, b1)(a2, b2) = (a1 a2, b1 b2); element (a, b) gets index a*|B| + b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// (n1, k1)(n2, k2) = (n1 * action[k1](n2), k1 k2); element (n, k) gets index
// n*|K| + k. action[k] must be an automorphism of N and k -> action[k] a
// homomorphism with action[k1 k2] = action[k1] o action[k2].
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& k,
                               const std::vector<std::vector<int>>& action);

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);
Subgroup subgroup_from_elements(const FiniteGroup& g, std::vector<int> elems);
Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& gens);

bool is_normal(const FiniteGroup& g, const Subgroup& h);
Subgroup center(const FiniteGroup& g);
Subgroup derived_subgroup(const FiniteGroup& g);

// [N, G], generated by commutators of N against the whole group.
Subgroup pair_commutator(const FiniteGroup& g, const Subgroup& n);
// Z(N, G) = { x in N : x commutes with all of G } = Z(G) intersect N.
Subgroup pair_center(const FiniteGroup& g, const Subgroup& n);
// Preimage in N of Z(N/Z, G/Z) for Z = Z(N, G).
Subgroup pair_upper_center(const FiniteGroup& g, const Subgroup& n);

// Z(N, G) = [N, G] of order p.
bool is_extraspecial_pair(const FiniteGroup& g, const Subgroup& n, long long p);

struct QuotientResult {
  FiniteGroup group;
  std::vector<int> proj;  // parent element -> quotient element
};
QuotientResult quotient(const FiniteGroup& g, const Subgroup& n);

struct SubgroupAsGroup {
  FiniteGroup group;
  std::vector<int> to_parent;    // subgroup element -> parent element
  std::vector<int> from_parent;  // parent element -> subgroup element or -1
};
SubgroupAsGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h);

// Image {f[x] : x in h} as a subgroup of target.
Subgroup map_subgroup(const FiniteGroup& target, const std::vector<int>& f, const Subgroup& h);
// { x : h contains f[x] } as a subgroup of source.
Subgroup preimage_subgroup(const FiniteGroup& source, const std::vector<int>& f, const Subgroup& h);

struct Abelianization {
  AbelianInvariants invariants;
  // image[g][i] is the i-th coordinate of g in the product of cyclic groups
  // of the (decreasing) invariant orders.
  std::vector<std::vector<long long>> image;
};
Abelianization abelianize(const FiniteGroup& g);
Abelianization abelianize_subgroup(const FiniteGroup& g, const Subgroup& h);

// The prime p with |G| = p^k; rejects other orders.
long long prime_of_order(long long n);

// Burnside minimal generating set of a p-group, smallest elements first.
std::vector<int> minimal_generators(const FiniteGroup& g);
int min_generator_count(const FiniteGroup& g);

Subgroup frattini_subgroup(const FiniteGroup& g);

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

// Cheap isomorphism invariants, usable as a cache key. Equal fingerprints do
// not imply isomorphism except for abelian groups.
std::string group_fingerprint(const FiniteGroup& g);

bool are_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

// All automorphisms as permutation tables, sorted lexicographically.
std::vector<std::vector<int>> automorphisms(const FiniteGroup& g);

// Subgroup K with K intersect N trivial and N K = G, if one exists. Searches
// lifts of a minimal generating set of G/N, smallest lift tuple first.
std::optional<Subgroup> find_complement(const FiniteGroup& g, const Subgroup& n);

// Breadth-first spanning data for <gens>: each non-identity element in the
// span factors as order-earlier parent times one generator.
struct GeneratorWords {
  std::vector<int> order;    // BFS discovery order, starts at the identity
  std::vector<int> parent;   // by element, -1 outside the span and at 0
  std::vector<int> gidx;     // by element, generator index applied to parent
  std::vector<char> in_span;
};
GeneratorWords generator_words(const FiniteGroup& g, const std::vector<int>& gens);

}  // namespace schur
