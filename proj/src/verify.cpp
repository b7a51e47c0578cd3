#include "schur/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "schur/error.hpp"
#include "schur/homology.hpp"

namespace schur {

namespace {

bool is_small_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

long long pow_ll(long long p, int e) {
  long long v = 1;
  for (int i = 0; i < e; ++i) v *= p;
  return v;
}

// (f o g)(x) = f(g(x))
std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> out(g.size());
  for (size_t x = 0; x < g.size(); ++x) {
    out[x] = f[static_cast<size_t>(g[x])];
  }
  return out;
}

std::vector<int> invert_perm(const std::vector<int>& f) {
  std::vector<int> out(f.size());
  for (size_t x = 0; x < f.size(); ++x) out[static_cast<size_t>(f[x])] = static_cast<int>(x);
  return out;
}

Subgroup first_factor_sub(const FiniteGroup& g, int n_order, int k_order) {
  std::vector<int> elems(static_cast<size_t>(n_order));
  for (int y = 0; y < n_order; ++y) elems[static_cast<size_t>(y)] = y * k_order;
  return subgroup_from_elements(g, elems);
}

Subgroup second_factor_sub(const FiniteGroup& g, int k_order) {
  std::vector<int> elems(static_cast<size_t>(k_order));
  for (int y = 0; y < k_order; ++y) elems[static_cast<size_t>(y)] = y;
  return subgroup_from_elements(g, elems);
}

}  // namespace

int default_budget(long long p) { return p == 2 ? 32 : kHardOrderCap; }

Harness::Harness(long long p, int budget) : p_(p), budget_(budget) {
  if (!is_small_prime(p)) {
    fail(Errc::semantic_error, "p must be prime, got " + std::to_string(p));
  }
  if (budget < 1) fail(Errc::semantic_error, "budget must be positive");
  if (budget > kHardOrderCap) {
    fail(Errc::semantic_error, "budget " + std::to_string(budget) +
                                   " exceeds the desk-scale cap " + std::to_string(kHardOrderCap));
  }
}

void Harness::ensure_closure() {
  if (closure_built_) return;
  closure_ = catalog_closure(p_, budget_);
  closure_dk_.reserve(closure_.size());
  for (const CatalogEntry& e : closure_) closure_dk_.push_back(min_generator_count(e.group));
  closure_built_ = true;
}

const std::vector<CatalogEntry>& Harness::closure() {
  ensure_closure();
  return closure_;
}

const std::vector<PairRecord>& Harness::pairs() {
  ensure_pairs();
  return pairs_;
}

void Harness::add_record(std::string desc, bool direct, PairContext ctx) {
  PairRecord rec;
  rec.desc = std::move(desc);
  rec.direct = direct;
  rec.ctx = std::move(ctx);
  try {
    rec.data = pair_data(rec.ctx, cache_, budget_);
  } catch (const Error& e) {
    build_failures_.push_back(rec.desc + ": " + e.what());
    return;
  }
  rec.profile = profile_pair(rec.ctx, rec.data);
  pairs_.push_back(std::move(rec));
}

void Harness::sweep_direct() {
  for (size_t i = 0; i < closure_.size(); ++i) {
    for (size_t j = 0; j < closure_.size(); ++j) {
      const FiniteGroup& ng = closure_[i].group;
      const FiniteGroup& kg = closure_[j].group;
      if (static_cast<long long>(ng.order()) * kg.order() > budget_) continue;
      FiniteGroup g = direct_product(ng, kg);
      PairContext ctx = make_pair_with(g, first_factor_sub(g, ng.order(), kg.order()),
                                       second_factor_sub(g, kg.order()));
      add_record("N=" + closure_[i].name + ", K=" + closure_[j].name, true, std::move(ctx));
    }
  }
}

void Harness::sweep_semidirect() {
  const long long p3 = p_ * p_ * p_;
  for (size_t i = 0; i < closure_.size(); ++i) {
    const FiniteGroup& ng = closure_[i].group;
    if (ng.order() < 2 || ng.order() > p3) continue;
    if (static_cast<long long>(ng.order()) * 2 > budget_) continue;
    const std::vector<std::vector<int>> auts = automorphisms(ng);
    if (auts.size() <= 1) continue;
    std::map<std::vector<int>, int> aut_index;
    for (size_t a = 0; a < auts.size(); ++a) aut_index[auts[a]] = static_cast<int>(a);
    std::vector<std::vector<int>> aut_inv(auts.size());
    for (size_t a = 0; a < auts.size(); ++a) aut_inv[a] = invert_perm(auts[a]);
    for (size_t j = 0; j < closure_.size(); ++j) {
      const FiniteGroup& kg = closure_[j].group;
      if (kg.order() < 2 || kg.order() > p3) continue;
      if (static_cast<long long>(ng.order()) * kg.order() > budget_) continue;
      const std::vector<int> gens = minimal_generators(kg);
      const GeneratorWords words = generator_words(kg, gens);
      const int d = static_cast<int>(gens.size());
      std::vector<int> tuple(static_cast<size_t>(d), 0);
      std::set<std::vector<int>> seen;
      int kept = 0;
      while (true) {
        const bool all_zero =
            std::all_of(tuple.begin(), tuple.end(), [](int v) { return v == 0; });
        if (!all_zero && seen.find(tuple) == seen.end()) {
          std::vector<std::vector<int>> phi(static_cast<size_t>(kg.order()));
          phi[0] = auts[0];
          for (size_t idx = 1; idx < words.order.size(); ++idx) {
            const int x = words.order[idx];
            phi[static_cast<size_t>(x)] =
                compose(phi[static_cast<size_t>(words.parent[static_cast<size_t>(x)])],
                        auts[static_cast<size_t>(
                            tuple[static_cast<size_t>(words.gidx[static_cast<size_t>(x)])])]);
          }
          bool ok = true;
          for (int x = 0; ok && x < kg.order(); ++x) {
            for (int y = 0; y < kg.order(); ++y) {
              if (phi[static_cast<size_t>(kg.mul(x, y))] !=
                  compose(phi[static_cast<size_t>(x)], phi[static_cast<size_t>(y)])) {
                ok = false;
                break;
              }
            }
          }
          if (ok) {
            for (size_t a = 0; a < auts.size(); ++a) {
              std::vector<int> conj(static_cast<size_t>(d));
              for (int q = 0; q < d; ++q) {
                conj[static_cast<size_t>(q)] = aut_index.at(compose(
                    compose(auts[a], auts[static_cast<size_t>(tuple[static_cast<size_t>(q)])]),
                    aut_inv[a]));
              }
              seen.insert(std::move(conj));
            }
            FiniteGroup g = semidirect_product(ng, kg, phi);
            PairContext ctx = make_pair_with(g, first_factor_sub(g, ng.order(), kg.order()),
                                             second_factor_sub(g, kg.order()));
            add_record("N=" + closure_[i].name + ", K=" + closure_[j].name + ", action#" +
                           std::to_string(kept),
                       false, std::move(ctx));
            ++kept;
          }
        }
        int pos = d - 1;
        while (pos >= 0 && tuple[static_cast<size_t>(pos)] == static_cast<int>(auts.size()) - 1) {
          tuple[static_cast<size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
        ++tuple[static_cast<size_t>(pos)];
      }
    }
  }
}

void Harness::ensure_pairs() {
  if (pairs_built_) return;
  ensure_closure();
  sweep_direct();
  sweep_semidirect();
  pairs_built_ = true;
}

ForwardCaseReport Harness::forward_case(const CaseInfo& ci) {
  ForwardCaseReport fr;
  fr.case_id = ci.id;
  fr.pattern = ci.pattern;
  fr.declared_t = ci.t;
  const std::string id = ci.id;

  if (id == "T12.iii") {
    // Necessity-only: report extraspecial t=1 pairs observed in the sweep.
    ensure_pairs();
    for (const PairRecord& rec : pairs_) {
      if (!rec.profile.extraspecial || rec.profile.t != 1) continue;
      ++fr.candidates;
      if (fr.witnesses.size() < 3) fr.witnesses.push_back(rec.desc + " -> t=1");
    }
    fr.status = fr.candidates > 0 ? "ok" : "no-witness";
    return fr;
  }

  const long long mo = ci.min_order(p_);
  if (mo > kHardOrderCap) {
    fr.status = "beyond-desk-scale";
    return fr;
  }
  if (mo > budget_) {
    fr.status = "blocked-by-budget";
    return fr;
  }
  ensure_closure();

  const int pi = static_cast<int>(p_);
  FiniteGroup ng;
  std::string nname;
  std::vector<std::pair<FiniteGroup, std::string>> kand;

  auto fixed_k = [&](const FiniteGroup& kg, const std::string& label) {
    fr.candidates = 1;
    kand.push_back({kg, label});
  };
  auto param_k = [&](int c) {
    for (size_t j = 0; j < closure_.size(); ++j) {
      const FiniteGroup& kg = closure_[j].group;
      if (static_cast<long long>(ng.order()) * kg.order() > budget_) continue;
      const int mlog =
          kg.order() == 1 ? 0 : log_prime(static_cast<unsigned long long>(kg.order()), p_);
      if (closure_dk_[j] != mlog - c) continue;
      ++fr.candidates;
      if (kand.size() < 3) kand.push_back({kg, closure_[j].name});
    }
  };
  auto any_k = [&]() {
    for (size_t j = 0; j < closure_.size(); ++j) {
      if (static_cast<long long>(ng.order()) * closure_[j].group.order() > budget_) continue;
      ++fr.candidates;
      if (kand.size() < 3) kand.push_back({closure_[j].group, closure_[j].name});
    }
  };
  auto elem_ab_k = [&]() {
    for (size_t j = 0; j < closure_.size(); ++j) {
      const FiniteGroup& kg = closure_[j].group;
      if (static_cast<long long>(ng.order()) * kg.order() > budget_) continue;
      if (kg.order() > 1 && (!kg.is_abelian() || kg.exponent() != p_)) continue;
      ++fr.candidates;
      if (kand.size() < 3) kand.push_back({kg, closure_[j].name});
    }
  };

  const std::string zp = "Z" + std::to_string(p_);
  const std::string zp2s = "Z" + std::to_string(p_ * p_);
  const std::string zp3s = "Z" + std::to_string(p_ * p_ * p_);
  const std::string e1s = "E1(" + std::to_string(p_) + ")";

  if (id == "T10.i") {
    ng = trivial_group();
    nname = "1";
    any_k();
  } else if (id == "T10.ii") {
    ng = cyclic_group(pi);
    nname = zp;
    elem_ab_k();
  } else if (id == "T12.i" || id == "T13.i") {
    ng = cyclic_group(pi * pi);
    nname = zp2s;
    fixed_k(trivial_group(), "1");
  } else if (id == "T12.ii" || id == "T13.ii") {
    ng = cyclic_group(pi);
    nname = zp;
    param_k(1);
  } else if (id == "T13.iii") {
    ng = extraspecial_exp_p(p_);
    nname = e1s;
    fixed_k(trivial_group(), "1");
  } else if (id == "T14.i") {
    ng = direct_product(cyclic_group(pi), cyclic_group(pi * pi));
    nname = zp + " x " + zp2s;
    fixed_k(trivial_group(), "1");
  } else if (id == "T14.ii") {
    ng = dihedral8();
    nname = "D8";
    fixed_k(trivial_group(), "1");
  } else if (id == "T14.iii") {
    ng = direct_product(cyclic_group(pi), extraspecial_exp_p(p_));
    nname = zp + " x " + e1s;
    fixed_k(trivial_group(), "1");
  } else if (id == "T14.iv") {
    ng = cyclic_group(pi * pi);
    nname = zp2s;
    fixed_k(cyclic_group(pi), zp);
  } else if (id == "T14.v") {
    ng = extraspecial_exp_p(p_);
    nname = e1s;
    fixed_k(cyclic_group(pi), zp);
  } else if (id == "T14.vi") {
    ng = elem_abelian(p_, 2);
    nname = zp + " x " + zp;
    param_k(1);
  } else if (id == "T14.vii") {
    ng = cyclic_group(pi);
    nname = zp;
    param_k(2);
  } else if (id == "T15.i") {
    ng = cyclic_group(pi * pi * pi);
    nname = zp3s;
    fixed_k(trivial_group(), "1");
  } else if (id == "T15.ii") {
    ng = direct_product(elem_abelian(p_, 2), cyclic_group(pi * pi));
    nname = zp + " x " + zp + " x " + zp2s;
    fixed_k(trivial_group(), "1");
  } else if (id == "T15.iii") {
    ng = quaternion8();
    nname = "Q8";
    fixed_k(trivial_group(), "1");
  } else if (id == "T15.iv") {
    ng = extraspecial_exp_p2(p_);
    nname = "E2(" + std::to_string(p_) + ")";
    fixed_k(trivial_group(), "1");
  } else if (id == "T15.v") {
    ng = direct_product(dihedral8(), cyclic_group(2));
    nname = "D8 x Z2";
    fixed_k(trivial_group(), "1");
  } else if (id == "T15.vi") {
    ng = direct_product(direct_product(extraspecial_exp_p(p_), cyclic_group(pi)),
                        cyclic_group(pi));
    nname = e1s + " x " + zp + " x " + zp;
    fixed_k(trivial_group(), "1");
  } else if (id == "T15.vii") {
    ng = cyclic_group(pi * pi);
    nname = zp2s;
    fixed_k(cyclic_group(pi * pi), zp2s);
  } else if (id == "T15.viii") {
    ng = direct_product(cyclic_group(pi * pi), cyclic_group(pi));
    nname = zp2s + " x " + zp;
    fixed_k(cyclic_group(pi), zp);
  } else if (id == "T15.ix") {
    ng = dihedral8();
    nname = "D8";
    fixed_k(cyclic_group(2), "Z2");
  } else if (id == "T15.x") {
    ng = direct_product(cyclic_group(pi), extraspecial_exp_p(p_));
    nname = zp + " x " + e1s;
    fixed_k(cyclic_group(pi), zp);
  } else if (id == "T15.xi") {
    ng = cyclic_group(pi * pi);
    nname = zp2s;
    fixed_k(elem_abelian(p_, 2), zp + " x " + zp);
  } else if (id == "T15.xii") {
    ng = extraspecial_exp_p(p_);
    nname = e1s;
    fixed_k(elem_abelian(p_, 2), zp + " x " + zp);
  } else if (id == "T15.xiii") {
    ng = cyclic_group(pi);
    nname = zp;
    param_k(3);
  } else if (id == "T15.xiv") {
    ng = elem_abelian(p_, 3);
    nname = zp + " x " + zp + " x " + zp;
    param_k(1);
  } else {
    fail(Errc::semantic_error, "no witness plan for case " + id);
  }

  bool bad = false;
  for (const auto& [kg, klabel] : kand) {
    FiniteGroup g = direct_product(ng, kg);
    PairContext ctx = make_pair_with(g, first_factor_sub(g, ng.order(), kg.order()),
                                     second_factor_sub(g, kg.order()));
    PairData d = pair_data(ctx, cache_, budget_);
    std::string line = "N=" + nname + ", K=" + klabel + " -> t=" + std::to_string(d.t);
    if (d.t != ci.t) {
      line += " (declared " + std::to_string(ci.t) + ")";
      bad = true;
    }
    fr.witnesses.push_back(line);
  }
  if (kand.empty()) {
    // min_order admitted the case, so the closure should have offered a K.
    fr.status = "no-witness";
  } else {
    fr.status = bad ? "mismatch" : "ok";
  }
  return fr;
}

TheoremReport Harness::verify_theorem(const std::string& theorem) {
  static const std::map<std::string, int> levels = {
      {"T10", 10}, {"T12", 12}, {"T13", 13}, {"T14", 14}, {"T15", 15}};
  const auto lv = levels.find(theorem);
  if (lv == levels.end()) {
    fail(Errc::semantic_error,
         "unknown theorem " + theorem + " (expected T10, T12, T13, T14, or T15)");
  }
  const int level = lv->second;
  ensure_pairs();

  TheoremReport rep;
  rep.theorem = theorem;
  rep.p = p_;
  rep.budget = budget_;

  const int target_t = level == 10 ? 0 : (level == 14 ? 2 : (level == 15 ? 3 : 1));
  const bool need_normal = level >= 13;

  for (const CaseInfo& ci : all_cases()) {
    if (ci.level != level) continue;
    if (ci.parity != 0 && (ci.parity == 2) != (p_ == 2)) continue;
    rep.forward.push_back(forward_case(ci));
  }

  BackwardReport& back = rep.backward;
  for (const PairRecord& rec : pairs_) {
    if (need_normal && !rec.profile.k_normal) continue;
    ++back.pairs_checked;
    bool matched_level = false;
    for (const CaseInfo& ci : all_cases()) {
      if (ci.level != level) continue;
      if (ci.parity != 0 && (ci.parity == 2) != (p_ == 2)) continue;
      if (ci.requires_normal_k && !rec.profile.k_normal) continue;
      if (!ci.matches(rec.profile)) continue;
      if (ci.t == rec.profile.t) matched_level = true;
      if (ci.sufficiency && ci.t != rec.profile.t) {
        back.mismatches.push_back({rec.desc, ci.id, ci.t, rec.profile.t});
      }
    }
    if (rec.profile.t == target_t) {
      if (matched_level) {
        ++back.confirmed;
      } else {
        back.unlisted.push_back(rec.desc);
      }
    }
  }

  long long direct_count = 0;
  long long twisted_count = 0;
  for (const PairRecord& r : pairs_) {
    if (r.direct) {
      ++direct_count;
    } else {
      ++twisted_count;
    }
  }
  std::string note = "p=" + std::to_string(p_) + ", budget=" + std::to_string(budget_) + ": " +
                     std::to_string(closure_.size()) + " catalog groups, " +
                     std::to_string(direct_count) + " direct pairs, " +
                     std::to_string(twisted_count) +
                     " twisted pairs (twisted factor orders up to " +
                     std::to_string(std::min(p_ * p_ * p_, static_cast<long long>(budget_))) + ")";
  if (need_normal) note += "; backward sweep ranges over normal-complement pairs only";
  std::string beyond;
  std::string blocked;
  for (const ForwardCaseReport& f : rep.forward) {
    if (f.status == "beyond-desk-scale") beyond += (beyond.empty() ? "" : ", ") + f.case_id;
    if (f.status == "blocked-by-budget") blocked += (blocked.empty() ? "" : ", ") + f.case_id;
  }
  if (!beyond.empty()) note += "; beyond desk scale at this p: " + beyond;
  if (!blocked.empty()) note += "; blocked by the order budget: " + blocked;
  if (!build_failures_.empty()) {
    note += "; " + std::to_string(build_failures_.size()) + " pairs failed to build";
  }
  rep.coverage_note = note;
  return rep;
}

std::vector<std::string> Harness::factorization_violations() {
  ensure_pairs();
  std::vector<std::string> out = build_failures_;
  for (const PairRecord& r : pairs_) {
    if (r.data.mg.order() != r.data.mgn.order() * r.data.mk.order()) {
      out.push_back(r.desc + ": |M(G)| = " + std::to_string(r.data.mg.order()) +
                    " != " + std::to_string(r.data.mgn.order()) + " * " +
                    std::to_string(r.data.mk.order()));
    }
  }
  return out;
}

std::vector<std::string> Harness::direct_route_violations() {
  ensure_pairs();
  std::vector<std::string> out;
  for (const PairRecord& r : pairs_) {
    if (!r.direct) continue;
    unsigned long long via_n = 0;
    try {
      via_n = pair_multiplier_order_direct(r.ctx, cache_, budget_);
    } catch (const Error& e) {
      out.push_back(r.desc + ": " + e.what());
      continue;
    }
    if (via_n != r.data.mgn.order()) {
      out.push_back(r.desc + ": |M(N)| |N^ab tensor K^ab| gives " + std::to_string(via_n) +
                    ", cancellation gives " + std::to_string(r.data.mgn.order()));
    }
  }
  return out;
}

std::vector<std::string> Harness::bound_violations() {
  ensure_pairs();
  std::vector<std::string> out;
  for (const PairRecord& r : pairs_) {
    if (r.data.bound1_slack < 0) {
      out.push_back(r.desc + ": negative slack " + std::to_string(r.data.bound1_slack));
    }
    if (!r.data.bound7_holds) {
      out.push_back(r.desc + ": |M(G,N)| |[N,G]| exceeds p^{n(2m+n-1)/2}");
    }
  }
  return out;
}

std::vector<std::string> abelian_multiplier_oracle_failures(long long p, int max_order) {
  if (!is_small_prime(p)) {
    fail(Errc::semantic_error, "p must be prime, got " + std::to_string(p));
  }
  std::vector<std::string> out;
  std::vector<int> exps;
  auto emit = [&]() {
    std::vector<long long> orders;
    FiniteGroup g = trivial_group();
    std::string name;
    for (size_t i = 0; i < exps.size(); ++i) {
      const long long o = pow_ll(p, exps[i]);
      orders.push_back(o);
      g = direct_product(g, cyclic_group(static_cast<int>(o)));
      if (i) name += " x ";
      name += "Z" + std::to_string(o);
    }
    const AbelianInvariants want = multiplier_abelian(canonicalize(orders));
    const AbelianInvariants got = schur_multiplier(g, max_order);
    if (want.factors != got.factors) {
      out.push_back(name + ": formula " + want.render() + ", resolution " + got.render());
    }
  };
  auto rec = [&](auto&& self, int max_e, long long room) -> void {
    for (int e = max_e; e >= 1; --e) {
      const long long pe = pow_ll(p, e);
      if (pe > room) continue;
      exps.push_back(e);
      emit();
      self(self, e, room / pe);
      exps.pop_back();
    }
  };
  int emax = 0;
  long long v = 1;
  while (v <= max_order / p) {
    v *= p;
    ++emax;
  }
  rec(rec, emax, max_order);
  return out;
}

}  // namespace schur
