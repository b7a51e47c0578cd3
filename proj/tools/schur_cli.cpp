#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "schur/catalog.hpp"
#include "schur/classify.hpp"
#include "schur/error.hpp"
#include "schur/homology.hpp"
#include "schur/pair.hpp"
#include "schur/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace schur;

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::parse_error:
    case Errc::semantic_error:
    case Errc::unsupported_order:
      return 2;
    case Errc::budget_exceeded:
      return 3;
    case Errc::no_complement:
    case Errc::not_a_direct_factor:
      return 5;
    default:
      return 4;
  }
}

void check_budget(int budget) {
  if (budget < 1 || budget > kHardOrderCap) {
    fail(Errc::semantic_error,
         "budget must lie between 1 and " + std::to_string(kHardOrderCap));
  }
}

void maybe_load_cache(MultiplierCache& cache, const std::string& path) {
  if (path.empty()) return;
  std::ifstream in(path, std::ios::binary);
  if (!in) return;  // absent cache file: start cold
  std::stringstream ss;
  ss << in.rdbuf();
  cache.load_json(ss.str());
}

void save_cache_text(const std::string& blob, const std::string& path) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::io_error, "cannot write cache file " + path);
  out << blob;
}

void emit_json(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

ordered_json invariants_json(const AbelianInvariants& inv) {
  ordered_json o;
  o["factors"] = inv.factors;
  return o;
}

std::string joined(const std::vector<std::string>& items) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out;
}

int run_multiplier(const std::string& spec_text, int budget, const std::string& format,
                   const std::string& cache_path) {
  check_budget(budget);
  BuiltGroup built = build_group(parse_group_spec(spec_text));
  const FiniteGroup& g = built.group;
  MultiplierCache cache;
  maybe_load_cache(cache, cache_path);
  const AbelianInvariants m = cache.multiplier(g, budget);

  bool has_t = false;
  int t = 0;
  if (g.order() == 1) {
    has_t = true;
  } else {
    try {
      const long long p = prime_of_order(static_cast<unsigned long long>(g.order()));
      const int n = log_prime(static_cast<unsigned long long>(g.order()), p);
      const int mlog = log_prime(m.order(), p);
      t = n * (n - 1) / 2 - mlog;
      has_t = true;
    } catch (const Error&) {
      has_t = false;  // not a prime power: no deficiency to report
    }
  }

  if (format == "json") {
    ordered_json doc;
    doc["group_order"] = g.order();
    doc["m"] = invariants_json(m);
    doc["m_rendered"] = m.render();
    doc["m_order"] = m.order();
    if (has_t) doc["t"] = t;
    emit_json(doc);
  } else {
    std::cout << "M = " << m.render() << " (order " << m.order() << ")";
    if (has_t) std::cout << ", t = " << t;
    std::cout << "\n";
  }
  if (!cache_path.empty()) save_cache_text(cache.save_json(), cache_path);
  return 0;
}

int run_pair(bool with_verdict, const std::string& nspec, const std::string& kspec,
             const std::string& action_path, int budget, const std::string& format,
             const std::string& cache_path) {
  check_budget(budget);
  FiniteGroup n = build_group(parse_group_spec(nspec)).group;
  FiniteGroup k = build_group(parse_group_spec(kspec)).group;
  FiniteGroup g = action_path.empty()
                      ? direct_product(n, k)
                      : semidirect_product(n, k, load_action_file(action_path, n, k));
  if (g.order() > budget) {
    fail(Errc::budget_exceeded, "|G| = " + std::to_string(g.order()) + " exceeds budget " +
                                    std::to_string(budget));
  }
  std::vector<int> n_elems(static_cast<size_t>(n.order()));
  for (int y = 0; y < n.order(); ++y) n_elems[static_cast<size_t>(y)] = y * k.order();
  std::vector<int> k_elems(static_cast<size_t>(k.order()));
  for (int y = 0; y < k.order(); ++y) k_elems[static_cast<size_t>(y)] = y;
  PairContext ctx = make_pair_with(g, subgroup_from_elements(g, n_elems),
                                   subgroup_from_elements(g, k_elems));

  MultiplierCache cache;
  maybe_load_cache(cache, cache_path);
  const PairData d = pair_data(ctx, cache, budget);
  const Classification cls = classify_pair(ctx, d);

  if (format == "json") {
    ordered_json doc;
    doc["mG"] = invariants_json(d.mg);
    doc["mK"] = invariants_json(d.mk);
    doc["mGN"] = invariants_json(d.mgn);
    doc["t"] = d.t;
    doc["bound1_slack"] = d.bound1_slack;
    doc["bound7_holds"] = d.bound7_holds;
    doc["commutator_order"] = d.commutator_order;
    doc["pair_center_order"] = d.pair_center_order;
    doc["matched_cases"] = cls.matched_ids;
    if (with_verdict) doc["verdict"] = verdict_name(cls.verdict);
    emit_json(doc);
  } else {
    std::cout << "|G| = " << g.order() << " = |N| * |K| = " << n.order() << " * " << k.order()
              << "\n";
    std::cout << "M(G) = " << d.mg.render() << " (order " << d.mg.order() << ")\n";
    std::cout << "M(K) = " << d.mk.render() << " (order " << d.mk.order() << ")\n";
    std::cout << "M(G,N) = " << d.mgn.render() << " (order " << d.mgn.order() << ")\n";
    std::cout << "|[N,G]| = " << d.commutator_order << ", |Z(N,G)| = " << d.pair_center_order
              << "\n";
    std::cout << "bound1_slack = " << d.bound1_slack << ", bound7_holds = "
              << (d.bound7_holds ? "yes" : "no") << "\n";
    std::cout << "t = " << d.t;
    if (cls.matched_ids.empty()) {
      std::cout << ", matched none\n";
    } else {
      std::cout << ", matched " << joined(cls.matched_ids) << "\n";
    }
    if (with_verdict) std::cout << "verdict = " << verdict_name(cls.verdict) << "\n";
  }
  if (!cache_path.empty()) save_cache_text(cache.save_json(), cache_path);
  return 0;
}

ordered_json report_json(const TheoremReport& rep) {
  ordered_json doc;
  doc["theorem"] = rep.theorem;
  doc["p"] = rep.p;
  doc["budget"] = rep.budget;
  ordered_json fwd = ordered_json::array();
  for (const ForwardCaseReport& f : rep.forward) {
    ordered_json fc;
    fc["case"] = f.case_id;
    fc["pattern"] = f.pattern;
    fc["declared_t"] = f.declared_t;
    fc["status"] = f.status;
    fc["candidates"] = f.candidates;
    fc["witnesses"] = f.witnesses;
    fwd.push_back(std::move(fc));
  }
  doc["forward"] = std::move(fwd);
  ordered_json back;
  back["pairs_checked"] = rep.backward.pairs_checked;
  back["confirmed"] = rep.backward.confirmed;
  back["unlisted"] = rep.backward.unlisted;
  ordered_json mm = ordered_json::array();
  for (const BackwardMismatch& m : rep.backward.mismatches) {
    ordered_json e;
    e["pair"] = m.pair_desc;
    e["case"] = m.case_id;
    e["declared_t"] = m.declared_t;
    e["computed_t"] = m.computed_t;
    mm.push_back(std::move(e));
  }
  back["mismatches"] = std::move(mm);
  doc["backward"] = std::move(back);
  doc["coverage_note"] = rep.coverage_note;
  return doc;
}

void report_text(const TheoremReport& rep, std::ostream& os) {
  os << "== " << rep.theorem << ", p=" << rep.p << ", budget " << rep.budget << " ==\n";
  os << "forward cases:\n";
  for (const ForwardCaseReport& f : rep.forward) {
    os << "  " << f.case_id << "  [" << f.status << "]  declared t=" << f.declared_t << "  "
       << f.pattern;
    if (f.candidates > 1) os << "  (" << f.candidates << " candidates)";
    os << "\n";
    for (const std::string& w : f.witnesses) os << "      " << w << "\n";
  }
  os << "backward: pairs_checked=" << rep.backward.pairs_checked
     << " confirmed=" << rep.backward.confirmed
     << " unlisted=" << rep.backward.unlisted.size()
     << " mismatches=" << rep.backward.mismatches.size() << "\n";
  for (const std::string& u : rep.backward.unlisted) os << "  unlisted: " << u << "\n";
  for (const BackwardMismatch& m : rep.backward.mismatches) {
    os << "  mismatch: " << m.pair_desc << " matched " << m.case_id << " (declared t="
       << m.declared_t << ", computed t=" << m.computed_t << ")\n";
  }
  os << "coverage: " << rep.coverage_note << "\n";
}

int run_verify(const std::string& theorem, const std::vector<long long>& p_set, int budget_opt,
               const std::string& format, const std::string& cache_path) {
  if (p_set.empty()) fail(Errc::semantic_error, "verify needs at least one prime");
  if (budget_opt > 0) check_budget(budget_opt);
  std::vector<std::string> names;
  if (theorem == "all") {
    names = {"T10", "T12", "T13", "T14", "T15"};
  } else {
    names = {theorem};
  }

  std::string cache_blob;
  if (!cache_path.empty()) {
    std::ifstream in(cache_path, std::ios::binary);
    if (in) {
      std::stringstream ss;
      ss << in.rdbuf();
      cache_blob = ss.str();
    }
  }

  std::vector<TheoremReport> reports;
  long long mismatch_count = 0;
  long long unlisted_count = 0;
  std::vector<std::string> blocked;
  for (long long p : p_set) {
    Harness h(p, budget_opt > 0 ? budget_opt : default_budget(p));
    if (!cache_blob.empty()) h.cache().load_json(cache_blob);
    for (const std::string& name : names) {
      TheoremReport rep = h.verify_theorem(name);
      for (const ForwardCaseReport& f : rep.forward) {
        if (f.status == "mismatch") ++mismatch_count;
        if (f.status == "blocked-by-budget") {
          blocked.push_back(f.case_id + " (p=" + std::to_string(p) + ")");
        }
      }
      mismatch_count += static_cast<long long>(rep.backward.mismatches.size());
      unlisted_count += static_cast<long long>(rep.backward.unlisted.size());
      reports.push_back(std::move(rep));
    }
    if (!cache_path.empty()) cache_blob = h.cache().save_json();
  }

  if (format == "json") {
    ordered_json doc = ordered_json::array();
    for (const TheoremReport& rep : reports) doc.push_back(report_json(rep));
    emit_json(doc);
  } else {
    for (size_t i = 0; i < reports.size(); ++i) {
      if (i) std::cout << "\n";
      report_text(reports[i], std::cout);
    }
  }
  if (!cache_path.empty()) save_cache_text(cache_blob, cache_path);

  if (mismatch_count > 0 || unlisted_count > 0) {
    std::cerr << "verification failed: " << mismatch_count << " mismatches, " << unlisted_count
              << " unlisted in-coverage pairs\n";
    return 1;
  }
  if (!blocked.empty()) {
    std::cerr << "budget blocks forward witnesses for: " << joined(blocked) << "\n";
    return 3;
  }
  return 0;
}

int run_catalog(const std::string& order_spec, const std::string& format) {
  if (!order_spec.empty()) {
    const size_t caret = order_spec.find('^');
    long long p = 0;
    int k = 0;
    try {
      size_t used = 0;
      if (caret == std::string::npos) {
        fail(Errc::parse_error, "--order expects p^k, got " + order_spec);
      }
      p = std::stoll(order_spec.substr(0, caret), &used);
      if (used != caret) fail(Errc::parse_error, "--order expects p^k, got " + order_spec);
      const std::string rest = order_spec.substr(caret + 1);
      k = std::stoi(rest, &used);
      if (used != rest.size()) fail(Errc::parse_error, "--order expects p^k, got " + order_spec);
    } catch (const Error&) {
      throw;
    } catch (...) {
      fail(Errc::parse_error, "--order expects p^k, got " + order_spec);
    }
    std::vector<CatalogEntry> groups = groups_of_order(p, k);
    if (format == "json") {
      ordered_json doc;
      doc["p"] = p;
      doc["k"] = k;
      ordered_json names = ordered_json::array();
      for (const CatalogEntry& e : groups) names.push_back(e.name);
      doc["groups"] = std::move(names);
      emit_json(doc);
    } else {
      long long order = 1;
      for (int i = 0; i < k; ++i) order *= p;
      std::cout << "groups of order " << order << " = " << p << "^" << k << " (" << groups.size()
                << "):\n";
      for (const CatalogEntry& e : groups) std::cout << "  " << e.name << "\n";
    }
    return 0;
  }

  ordered_json doc = ordered_json::array();
  for (long long p : {2LL, 3LL}) {
    const int budget = default_budget(p);
    std::vector<CatalogEntry> closure = catalog_closure(p, budget);
    if (format == "json") {
      ordered_json block;
      block["p"] = p;
      block["budget"] = budget;
      ordered_json names = ordered_json::array();
      for (const CatalogEntry& e : closure) {
        ordered_json row;
        row["name"] = e.name;
        row["order"] = e.group.order();
        names.push_back(std::move(row));
      }
      block["groups"] = std::move(names);
      doc.push_back(std::move(block));
    } else {
      std::cout << "p=" << p << " closure within budget " << budget << " (" << closure.size()
                << " groups):\n";
      for (const CatalogEntry& e : closure) {
        std::cout << "  " << e.name << " (order " << e.group.order() << ")\n";
      }
    }
  }
  if (format == "json") emit_json(doc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur multiplier engine for finite p-groups and pairs with a complement"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  std::string cache_path;
  app.add_option("--cache", cache_path, "multiplier cache file (loaded if present, rewritten)");

  std::string mspec;
  int mbudget = kHardOrderCap;
  CLI::App* cmd_mult = app.add_subcommand("multiplier", "Schur multiplier of one group");
  cmd_mult->add_option("spec", mspec, "group expression, e.g. \"Z2 x Z4\" or \"D8\"")->required();
  cmd_mult->add_option("--budget", mbudget, "largest group order to accept");

  std::string nspec;
  std::string kspec;
  std::string action_path;
  int pbudget = kHardOrderCap;
  CLI::App* cmd_pair = app.add_subcommand("pair", "multiplier of a pair (G,N) with complement K");
  cmd_pair->add_option("nspec", nspec, "normal factor N")->required();
  cmd_pair->add_option("kspec", kspec, "complement K")->required();
  cmd_pair->add_option("--action", action_path, "JSON action file: K acting on N");
  cmd_pair->add_option("--budget", pbudget, "largest group order to accept");
  CLI::App* cmd_classify =
      app.add_subcommand("classify", "pair analysis plus the classification verdict");
  cmd_classify->add_option("nspec", nspec, "normal factor N")->required();
  cmd_classify->add_option("kspec", kspec, "complement K")->required();
  cmd_classify->add_option("--action", action_path, "JSON action file: K acting on N");
  cmd_classify->add_option("--budget", pbudget, "largest group order to accept");

  std::string theorem;
  std::vector<long long> p_set{2, 3};
  int vbudget = -1;
  CLI::App* cmd_verify = app.add_subcommand("verify", "sweep a classification theorem");
  cmd_verify->add_option("theorem", theorem, "T10, T12, T13, T14, T15, or all")
      ->required()
      ->check(CLI::IsMember({"T10", "T12", "T13", "T14", "T15", "all"}));
  cmd_verify->add_option("--p", p_set, "primes to sweep")->delimiter(',');
  cmd_verify->add_option("--budget", vbudget, "order budget (default 32 at p=2, 81 otherwise)");

  std::string order_spec;
  CLI::App* cmd_catalog = app.add_subcommand("catalog", "list catalog groups");
  cmd_catalog->add_option("--order", order_spec, "prime power p^k with k <= 3");

  // Let --format and --cache appear on either side of the subcommand name.
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_mult->parsed()) return run_multiplier(mspec, mbudget, format, cache_path);
    if (cmd_pair->parsed()) {
      return run_pair(false, nspec, kspec, action_path, pbudget, format, cache_path);
    }
    if (cmd_classify->parsed()) {
      return run_pair(true, nspec, kspec, action_path, pbudget, format, cache_path);
    }
    if (cmd_verify->parsed()) return run_verify(theorem, p_set, vbudget, format, cache_path);
    if (cmd_catalog->parsed()) return run_catalog(order_spec, format);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
