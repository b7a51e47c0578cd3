#include "schur/group.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>

#include "schur/intmat.hpp"

namespace schur {

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) fail(Errc::malformed_table, "empty table");
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(table[static_cast<size_t>(r)].size()) != n)
      fail(Errc::malformed_table, "row " + std::to_string(r) + " has " +
                                      std::to_string(table[static_cast<size_t>(r)].size()) +
                                      " entries, expected " + std::to_string(n));
    for (int c = 0; c < n; ++c) {
      int v = table[static_cast<size_t>(r)][static_cast<size_t>(c)];
      if (v < 0 || v >= n)
        fail(Errc::malformed_table, "entry " + std::to_string(v) + " at row " + std::to_string(r) +
                                        " col " + std::to_string(c) + " out of range");
    }
  }

  int e = -1;
  for (int cand = 0; cand < n && e < 0; ++cand) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = table[static_cast<size_t>(cand)][static_cast<size_t>(x)] == x &&
           table[static_cast<size_t>(x)][static_cast<size_t>(cand)] == x;
    if (ok) e = cand;
  }
  if (e < 0) fail(Errc::no_identity, "no two-sided identity element");

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int ab = table[static_cast<size_t>(a)][static_cast<size_t>(b)];
        int bc = table[static_cast<size_t>(b)][static_cast<size_t>(c)];
        if (table[static_cast<size_t>(ab)][static_cast<size_t>(c)] !=
            table[static_cast<size_t>(a)][static_cast<size_t>(bc)])
          fail(Errc::not_associative, "(a*b)*c != a*(b*c) at a=" + std::to_string(a) + " b=" +
                                          std::to_string(b) + " c=" + std::to_string(c));
      }

  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n && !found; ++b)
      found = table[static_cast<size_t>(a)][static_cast<size_t>(b)] == e &&
              table[static_cast<size_t>(b)][static_cast<size_t>(a)] == e;
    if (!found) fail(Errc::missing_inverse, "element " + std::to_string(a) + " has no inverse");
  }

  // Swap labels so the identity sits at 0.
  std::vector<int> relab(static_cast<size_t>(n));
  std::iota(relab.begin(), relab.end(), 0);
  std::swap(relab[0], relab[static_cast<size_t>(e)]);

  FiniteGroup g;
  g.n_ = n;
  g.table_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int old = table[static_cast<size_t>(relab[static_cast<size_t>(a)])]
                     [static_cast<size_t>(relab[static_cast<size_t>(b)])];
      g.table_[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)] =
          relab[static_cast<size_t>(old)];
    }
  g.inv_.assign(static_cast<size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == 0) {
        g.inv_[static_cast<size_t>(a)] = b;
        break;
      }
  return g;
}

int FiniteGroup::element_order(int a) const {
  int y = a, c = 1;
  while (y != 0) {
    y = mul(y, a);
    ++c;
  }
  return c;
}

long long FiniteGroup::exponent() const {
  long long e = 1;
  for (int a = 0; a < n_; ++a) e = std::lcm(e, static_cast<long long>(element_order(a)));
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool subgroup_equal(const Subgroup& a, const Subgroup& b) { return a.elems == b.elems; }

FiniteGroup trivial_group() { return FiniteGroup(); }

FiniteGroup cyclic_group(int n) {
  if (n <= 0) fail(Errc::non_positive_order, "cyclic group order " + std::to_string(n));
  std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
  return FiniteGroup::from_table(t);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a1 = 0; a1 < na; ++a1)
    for (int b1 = 0; b1 < nb; ++b1)
      for (int a2 = 0; a2 < na; ++a2)
        for (int b2 = 0; b2 < nb; ++b2)
          t[static_cast<size_t>(a1 * nb + b1)][static_cast<size_t>(a2 * nb + b2)] =
              a.mul(a1, a2) * nb + b.mul(b1, b2);
  return FiniteGroup::from_table(t);
}

FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& k,
                               const std::vector<std::vector<int>>& action) {
  const int nn = n.order(), nk = k.order();
  if (static_cast<int>(action.size()) != nk)
    fail(Errc::action_not_homomorphism, "action has " + std::to_string(action.size()) +
                                            " permutations for a group of order " + std::to_string(nk));
  for (int c = 0; c < nk; ++c) {
    const auto& perm = action[static_cast<size_t>(c)];
    if (static_cast<int>(perm.size()) != nn)
      fail(Errc::not_automorphism, "permutation " + std::to_string(c) + " has wrong size");
    std::vector<char> seen(static_cast<size_t>(nn), 0);
    for (int x : perm) {
      if (x < 0 || x >= nn || seen[static_cast<size_t>(x)])
        fail(Errc::not_automorphism, "permutation " + std::to_string(c) + " is not a bijection");
      seen[static_cast<size_t>(x)] = 1;
    }
    for (int x = 0; x < nn; ++x)
      for (int y = 0; y < nn; ++y)
        if (perm[static_cast<size_t>(n.mul(x, y))] !=
            n.mul(perm[static_cast<size_t>(x)], perm[static_cast<size_t>(y)]))
          fail(Errc::not_automorphism, "permutation " + std::to_string(c) +
                                           " does not respect multiplication at x=" +
                                           std::to_string(x) + " y=" + std::to_string(y));
  }
  for (int c1 = 0; c1 < nk; ++c1)
    for (int c2 = 0; c2 < nk; ++c2) {
      const auto& lhs = action[static_cast<size_t>(k.mul(c1, c2))];
      const auto& f1 = action[static_cast<size_t>(c1)];
      const auto& f2 = action[static_cast<size_t>(c2)];
      for (int x = 0; x < nn; ++x)
        if (lhs[static_cast<size_t>(x)] != f1[static_cast<size_t>(f2[static_cast<size_t>(x)])])
          fail(Errc::action_not_homomorphism,
               "action(k1*k2) != action(k1) o action(k2) at k1=" + std::to_string(c1) +
                   " k2=" + std::to_string(c2));
    }

  const int m = nn * nk;
  std::vector<std::vector<int>> t(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
  for (int n1 = 0; n1 < nn; ++n1)
    for (int k1 = 0; k1 < nk; ++k1)
      for (int n2 = 0; n2 < nn; ++n2)
        for (int k2 = 0; k2 < nk; ++k2) {
          int nprod = n.mul(n1, action[static_cast<size_t>(k1)][static_cast<size_t>(n2)]);
          t[static_cast<size_t>(n1 * nk + k1)][static_cast<size_t>(n2 * nk + k2)] =
              nprod * nk + k.mul(k1, k2);
        }
  return FiniteGroup::from_table(t);
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
  Subgroup s;
  s.elems = {0};
  s.mask.assign(static_cast<size_t>(g.order()), 0);
  s.mask[0] = 1;
  return s;
}

Subgroup whole_group(const FiniteGroup& g) {
  Subgroup s;
  s.elems.resize(static_cast<size_t>(g.order()));
  std::iota(s.elems.begin(), s.elems.end(), 0);
  s.mask.assign(static_cast<size_t>(g.order()), 1);
  return s;
}

Subgroup subgroup_from_elements(const FiniteGroup& g, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  for (int x : elems)
    if (x < 0 || x >= g.order())
      fail(Errc::not_a_subgroup, "element " + std::to_string(x) + " out of range");
  Subgroup s;
  s.elems = std::move(elems);
  s.mask.assign(static_cast<size_t>(g.order()), 0);
  for (int x : s.elems) s.mask[static_cast<size_t>(x)] = 1;
  if (s.elems.empty() || !s.contains(0))
    fail(Errc::not_a_subgroup, "missing identity");
  for (int x : s.elems) {
    if (!s.contains(g.inv(x)))
      fail(Errc::not_a_subgroup, "inverse of " + std::to_string(x) + " escapes");
    for (int y : s.elems)
      if (!s.contains(g.mul(x, y)))
        fail(Errc::not_a_subgroup,
             "product " + std::to_string(x) + "*" + std::to_string(y) + " escapes");
  }
  return s;
}

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<char> mask(static_cast<size_t>(g.order()), 0);
  std::vector<int> queue{0};
  mask[0] = 1;
  for (size_t h = 0; h < queue.size(); ++h)
    for (int gen : gens) {
      int y = g.mul(queue[h], gen);
      if (!mask[static_cast<size_t>(y)]) {
        mask[static_cast<size_t>(y)] = 1;
        queue.push_back(y);
      }
    }
  Subgroup s;
  for (int x = 0; x < g.order(); ++x)
    if (mask[static_cast<size_t>(x)]) s.elems.push_back(x);
  s.mask = std::move(mask);
  return s;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (int x : h.elems)
    for (int y = 0; y < g.order(); ++y)
      if (!h.contains(g.conj(x, y))) return false;
  return true;
}

Subgroup center(const FiniteGroup& g) {
  std::vector<int> elems;
  for (int x = 0; x < g.order(); ++x) {
    bool central = true;
    for (int y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) elems.push_back(x);
  }
  return subgroup_from_elements(g, std::move(elems));
}

Subgroup pair_commutator(const FiniteGroup& g, const Subgroup& n) {
  std::vector<char> seen(static_cast<size_t>(g.order()), 0);
  std::vector<int> gens;
  for (int x : n.elems)
    for (int y = 0; y < g.order(); ++y) {
      int c = g.comm(x, y);
      if (!seen[static_cast<size_t>(c)]) {
        seen[static_cast<size_t>(c)] = 1;
        gens.push_back(c);
      }
    }
  return subgroup_generated(g, gens);
}

Subgroup derived_subgroup(const FiniteGroup& g) { return pair_commutator(g, whole_group(g)); }

Subgroup pair_center(const FiniteGroup& g, const Subgroup& n) {
  std::vector<int> elems;
  for (int x : n.elems) {
    bool central = true;
    for (int y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) elems.push_back(x);
  }
  return subgroup_from_elements(g, std::move(elems));
}

Subgroup pair_upper_center(const FiniteGroup& g, const Subgroup& n) {
  Subgroup z1 = pair_center(g, n);
  if (z1.order() == n.order()) return n;
  QuotientResult q = quotient(g, z1);
  Subgroup nq = map_subgroup(q.group, q.proj, n);
  Subgroup zq = pair_center(q.group, nq);
  return preimage_subgroup(g, q.proj, zq);
}

bool is_extraspecial_pair(const FiniteGroup& g, const Subgroup& n, long long p) {
  Subgroup c = pair_commutator(g, n);
  if (c.order() != p) return false;
  return subgroup_equal(c, pair_center(g, n));
}

QuotientResult quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) fail(Errc::not_normal, "subgroup of order " + std::to_string(n.order()) + " is not normal");
  const int go = g.order();
  std::vector<int> cid(static_cast<size_t>(go), -1);
  std::vector<int> reps;
  for (int x = 0; x < go; ++x) {
    if (cid[static_cast<size_t>(x)] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int h : n.elems) cid[static_cast<size_t>(g.mul(x, h))] = id;
  }
  const int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> t(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      t[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          cid[static_cast<size_t>(g.mul(reps[static_cast<size_t>(i)], reps[static_cast<size_t>(j)]))];
  QuotientResult out{FiniteGroup::from_table(t), std::move(cid)};
  return out;
}

SubgroupAsGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
  const int m = h.order();
  SubgroupAsGroup out;
  out.to_parent = h.elems;  // sorted, identity first
  out.from_parent.assign(static_cast<size_t>(g.order()), -1);
  for (int i = 0; i < m; ++i) out.from_parent[static_cast<size_t>(out.to_parent[static_cast<size_t>(i)])] = i;
  std::vector<std::vector<int>> t(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      t[static_cast<size_t>(i)][static_cast<size_t>(j)] = out.from_parent[static_cast<size_t>(
          g.mul(out.to_parent[static_cast<size_t>(i)], out.to_parent[static_cast<size_t>(j)]))];
  out.group = FiniteGroup::from_table(t);
  return out;
}

Subgroup map_subgroup(const FiniteGroup& target, const std::vector<int>& f, const Subgroup& h) {
  std::vector<int> elems;
  for (int x : h.elems) elems.push_back(f[static_cast<size_t>(x)]);
  return subgroup_from_elements(target, std::move(elems));
}

Subgroup preimage_subgroup(const FiniteGroup& source, const std::vector<int>& f, const Subgroup& h) {
  std::vector<int> elems;
  for (int x = 0; x < source.order(); ++x)
    if (h.contains(f[static_cast<size_t>(x)])) elems.push_back(x);
  return subgroup_from_elements(source, std::move(elems));
}

Abelianization abelianize(const FiniteGroup& g) {
  QuotientResult q = quotient(g, derived_subgroup(g));
  const int m = q.group.order();
  SparseIntMatrix rel(m, m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int col = a * m + b;
      rel.add(a, col, 1);
      rel.add(b, col, 1);
      rel.add(q.group.mul(a, b), col, -1);
    }
  SnfOptions opts;
  opts.want_u = true;
  SnfResult s = smith_normal_form(rel, opts);
  if (s.rank != m)
    fail(Errc::internal_free_rank, "relation lattice rank " + std::to_string(s.rank) +
                                       ", expected " + std::to_string(m));
  std::vector<long long> dec;
  std::vector<int> rows;
  for (int i = m - 1; i >= 0; --i)
    if (s.invariants[static_cast<size_t>(i)] > 1) {
      dec.push_back(s.invariants[static_cast<size_t>(i)].convert_to<long long>());
      rows.push_back(i);
    }
  Abelianization out;
  out.invariants.factors = dec;
  out.image.assign(static_cast<size_t>(g.order()), std::vector<long long>(dec.size(), 0));
  const DenseIntMatrix& u = *s.u;
  for (int x = 0; x < g.order(); ++x) {
    int a = q.proj[static_cast<size_t>(x)];
    for (size_t j = 0; j < dec.size(); ++j) {
      BigInt v = u.at(rows[j], a) % dec[j];
      if (v < 0) v += dec[j];
      out.image[static_cast<size_t>(x)][j] = v.convert_to<long long>();
    }
  }
  return out;
}

Abelianization abelianize_subgroup(const FiniteGroup& g, const Subgroup& h) {
  return abelianize(subgroup_as_group(g, h).group);
}

long long prime_of_order(long long n) {
  if (n < 2) fail(Errc::not_p_group, "order " + std::to_string(n) + " has no prime base");
  long long p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = n;
  long long m = n;
  while (m % p == 0) m /= p;
  if (m != 1)
    fail(Errc::not_p_group, "order " + std::to_string(n) + " is not a power of " + std::to_string(p));
  return p;
}

Subgroup frattini_subgroup(const FiniteGroup& g) {
  if (g.order() == 1) return trivial_subgroup(g);
  long long p = prime_of_order(g.order());
  std::vector<char> seen(static_cast<size_t>(g.order()), 0);
  std::vector<int> gens;
  auto push = [&](int x) {
    if (!seen[static_cast<size_t>(x)]) {
      seen[static_cast<size_t>(x)] = 1;
      gens.push_back(x);
    }
  };
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y) push(g.comm(x, y));
  for (int x = 0; x < g.order(); ++x) {
    int y = 0;
    for (long long i = 0; i < p; ++i) y = g.mul(y, x);
    push(y);
  }
  return subgroup_generated(g, gens);
}

std::vector<int> minimal_generators(const FiniteGroup& g) {
  if (g.order() == 1) return {};
  Subgroup phi = frattini_subgroup(g);
  std::vector<int> gens;
  Subgroup h = phi;
  while (h.order() < g.order()) {
    int pick = -1;
    for (int x = 0; x < g.order(); ++x)
      if (!h.contains(x)) {
        pick = x;
        break;
      }
    gens.push_back(pick);
    std::vector<int> all = phi.elems;
    all.insert(all.end(), gens.begin(), gens.end());
    h = subgroup_generated(g, all);
  }
  assert(subgroup_generated(g, gens).order() == g.order());
  return gens;
}

int min_generator_count(const FiniteGroup& g) { return static_cast<int>(minimal_generators(g).size()); }

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<char> seen(static_cast<size_t>(g.order()), 0);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < g.order(); ++x) {
    if (seen[static_cast<size_t>(x)]) continue;
    std::vector<int> cls;
    for (int y = 0; y < g.order(); ++y) {
      int c = g.conj(x, y);
      if (!seen[static_cast<size_t>(c)]) {
        seen[static_cast<size_t>(c)] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::string group_fingerprint(const FiniteGroup& g) {
  std::ostringstream os;
  os << "o:" << g.order();
  std::map<int, int> hist;
  for (int x = 0; x < g.order(); ++x) ++hist[g.element_order(x)];
  os << ";eo:";
  for (const auto& [k, v] : hist) os << k << "^" << v << ",";
  os << ";z:" << center(g).order();
  os << ";der:" << derived_subgroup(g).order();
  std::map<int, int> cc;
  for (const auto& cls : conjugacy_classes(g)) ++cc[static_cast<int>(cls.size())];
  os << ";cc:";
  for (const auto& [k, v] : cc) os << k << "^" << v << ",";
  os << ";ab:" << abelianize(g).invariants.render();
  return os.str();
}

GeneratorWords generator_words(const FiniteGroup& g, const std::vector<int>& gens) {
  GeneratorWords w;
  w.parent.assign(static_cast<size_t>(g.order()), -1);
  w.gidx.assign(static_cast<size_t>(g.order()), -1);
  w.in_span.assign(static_cast<size_t>(g.order()), 0);
  w.order.push_back(0);
  w.in_span[0] = 1;
  for (size_t h = 0; h < w.order.size(); ++h) {
    int x = w.order[h];
    for (size_t j = 0; j < gens.size(); ++j) {
      int y = g.mul(x, gens[j]);
      if (!w.in_span[static_cast<size_t>(y)]) {
        w.in_span[static_cast<size_t>(y)] = 1;
        w.parent[static_cast<size_t>(y)] = x;
        w.gidx[static_cast<size_t>(y)] = static_cast<int>(j);
        w.order.push_back(y);
      }
    }
  }
  return w;
}

namespace {

// Extends images of the generators underlying w to the whole span; empty on
// any injectivity or multiplicativity failure.
std::vector<int> try_extend(const FiniteGroup& a, const GeneratorWords& w, const FiniteGroup& b,
                            const std::vector<int>& imgs) {
  std::vector<int> f(static_cast<size_t>(a.order()), -1);
  std::vector<char> used(static_cast<size_t>(b.order()), 0);
  f[0] = 0;
  used[0] = 1;
  for (size_t i = 1; i < w.order.size(); ++i) {
    int y = w.order[i];
    int fy = b.mul(f[static_cast<size_t>(w.parent[static_cast<size_t>(y)])],
                   imgs[static_cast<size_t>(w.gidx[static_cast<size_t>(y)])]);
    if (used[static_cast<size_t>(fy)]) return {};
    f[static_cast<size_t>(y)] = fy;
    used[static_cast<size_t>(fy)] = 1;
  }
  for (int x : w.order)
    for (int y : w.order)
      if (f[static_cast<size_t>(a.mul(x, y))] !=
          b.mul(f[static_cast<size_t>(x)], f[static_cast<size_t>(y)]))
        return {};
  return f;
}

// Depth-first search over generator images. With collect == nullptr stops at
// the first full isomorphism; otherwise gathers every one.
bool iso_search(const FiniteGroup& a, const FiniteGroup& b,
                std::vector<std::vector<int>>* collect) {
  if (a.order() != b.order()) return false;
  std::vector<int> gens = minimal_generators(a);
  const int d = static_cast<int>(gens.size());
  if (d == 0) {
    if (collect) collect->push_back({0});
    return true;
  }
  std::vector<GeneratorWords> level_words;
  for (int i = 1; i <= d; ++i)
    level_words.push_back(generator_words(a, std::vector<int>(gens.begin(), gens.begin() + i)));
  std::vector<std::vector<int>> candidates(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    int want = a.element_order(gens[static_cast<size_t>(i)]);
    for (int x = 0; x < b.order(); ++x)
      if (b.element_order(x) == want) candidates[static_cast<size_t>(i)].push_back(x);
    if (candidates[static_cast<size_t>(i)].empty()) return false;
  }

  std::vector<int> imgs(static_cast<size_t>(d), -1);
  bool found = false;
  auto rec = [&](auto&& self, int level) -> bool {
    for (int cand : candidates[static_cast<size_t>(level)]) {
      imgs[static_cast<size_t>(level)] = cand;
      std::vector<int> f = try_extend(a, level_words[static_cast<size_t>(level)], b,
                                      std::vector<int>(imgs.begin(), imgs.begin() + level + 1));
      if (f.empty()) continue;
      if (level + 1 == d) {
        found = true;
        if (!collect) return true;
        collect->push_back(std::move(f));
      } else if (self(self, level + 1)) {
        return true;
      }
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

bool cheap_invariants_agree(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  std::map<int, int> ha, hb;
  for (int x = 0; x < a.order(); ++x) ++ha[a.element_order(x)];
  for (int x = 0; x < b.order(); ++x) ++hb[b.element_order(x)];
  if (ha != hb) return false;
  if (a.is_abelian() != b.is_abelian()) return false;
  if (center(a).order() != center(b).order()) return false;
  if (derived_subgroup(a).order() != derived_subgroup(b).order()) return false;
  std::map<int, int> ca, cb;
  for (const auto& cls : conjugacy_classes(a)) ++ca[static_cast<int>(cls.size())];
  for (const auto& cls : conjugacy_classes(b)) ++cb[static_cast<int>(cls.size())];
  return ca == cb;
}

}  // namespace

bool are_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (!cheap_invariants_agree(a, b)) return false;
  if (a.is_abelian()) return abelianize(a).invariants == abelianize(b).invariants;
  return iso_search(a, b, nullptr);
}

std::vector<std::vector<int>> automorphisms(const FiniteGroup& g) {
  std::vector<std::vector<int>> out;
  iso_search(g, g, &out);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Subgroup> find_complement(const FiniteGroup& g, const Subgroup& n) {
  const int m = g.order() / n.order();
  if (m == 1) return trivial_subgroup(g);
  QuotientResult q = quotient(g, n);
  std::vector<int> qgens = minimal_generators(q.group);
  const int d = static_cast<int>(qgens.size());
  std::vector<std::vector<int>> lifts(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i)
    for (int x = 0; x < g.order(); ++x)
      if (q.proj[static_cast<size_t>(x)] == qgens[static_cast<size_t>(i)])
        lifts[static_cast<size_t>(i)].push_back(x);

  std::vector<size_t> idx(static_cast<size_t>(d), 0);
  std::vector<int> pick(static_cast<size_t>(d));
  for (;;) {
    for (int i = 0; i < d; ++i) pick[static_cast<size_t>(i)] = lifts[static_cast<size_t>(i)][idx[static_cast<size_t>(i)]];
    Subgroup k = subgroup_generated(g, pick);
    if (k.order() == m) {
      bool disjoint = true;
      for (int x : k.elems)
        if (x != 0 && n.contains(x)) {
          disjoint = false;
          break;
        }
      if (disjoint) return k;
    }
    int pos = d - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] + 1 == lifts[static_cast<size_t>(pos)].size()) {
      idx[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++idx[static_cast<size_t>(pos)];
  }
  return std::nullopt;
}

}  // namespace schur
