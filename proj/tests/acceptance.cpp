// Acceptance gate: every release-blocking check as one PASS/FAIL line.
// Run with --criterion N to restrict to a single criterion.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "intmat_suite.hpp"
#include "schur/catalog.hpp"
#include "schur/homology.hpp"
#include "schur/verify.hpp"
#include "test_util.hpp"

using namespace schur;

namespace {

Harness& h2() {
  static Harness h(2, 32);
  return h;
}

Harness& h3() {
  static Harness h(3, 81);
  return h;
}

Harness& harness(long long p) { return p == 2 ? h2() : h3(); }

const std::vector<TheoremReport>& all_reports() {
  static std::vector<TheoremReport> reports = [] {
    std::vector<TheoremReport> out;
    for (long long p : {2LL, 3LL}) {
      for (const char* name : {"T10", "T12", "T13", "T14", "T15"}) {
        out.push_back(harness(p).verify_theorem(name));
      }
    }
    return out;
  }();
  return reports;
}

std::vector<std::string> check_abelian_oracle() {
  std::vector<std::string> bad = abelian_multiplier_oracle_failures(2, 64);
  std::vector<std::string> bad3 = abelian_multiplier_oracle_failures(3, 81);
  bad.insert(bad.end(), bad3.begin(), bad3.end());
  return bad;
}

std::vector<std::string> check_golden_multipliers() {
  MultiplierCache cache;
  std::vector<std::string> bad;
  auto expect = [&](const std::string& name, const FiniteGroup& g, unsigned long long want) {
    const unsigned long long got = cache.multiplier(g, kHardOrderCap).order();
    if (got != want) {
      bad.push_back(name + ": |M| = " + std::to_string(got) + ", expected " +
                    std::to_string(want));
    }
  };
  for (long long p : {2LL, 3LL}) {
    for (int n = 1; n <= 3; ++n) {
      unsigned long long want = 1;
      for (int i = 0; i < n * (n - 1) / 2; ++i) want *= static_cast<unsigned long long>(p);
      expect("Z" + std::to_string(p) + "^" + std::to_string(n), elem_abelian(p, n), want);
    }
  }
  expect("Z4", cyclic_group(4), 1);
  expect("Z9", cyclic_group(9), 1);
  expect("E1(3)", extraspecial_exp_p(3), 9);
  expect("E2(3)", extraspecial_exp_p2(3), 1);
  expect("D8", dihedral8(), 2);
  expect("Q8", quaternion8(), 1);
  expect("Z2 x Z4", direct_product(cyclic_group(2), cyclic_group(4)), 2);
  expect("Z3 x Z9", direct_product(cyclic_group(3), cyclic_group(9)), 3);
  expect("D8 x Z2", direct_product(dihedral8(), cyclic_group(2)), 8);
  return bad;
}

std::vector<std::string> check_factorization() {
  std::vector<std::string> bad = h2().factorization_violations();
  std::vector<std::string> bad3 = h3().factorization_violations();
  bad.insert(bad.end(), bad3.begin(), bad3.end());
  return bad;
}

std::vector<std::string> check_direct_route() {
  std::vector<std::string> bad = h2().direct_route_violations();
  std::vector<std::string> bad3 = h3().direct_route_violations();
  bad.insert(bad.end(), bad3.begin(), bad3.end());
  return bad;
}

std::vector<std::string> check_bounds() {
  std::vector<std::string> bad = h2().bound_violations();
  std::vector<std::string> bad3 = h3().bound_violations();
  bad.insert(bad.end(), bad3.begin(), bad3.end());
  return bad;
}

std::vector<std::string> check_forward() {
  std::vector<std::string> bad;
  for (const TheoremReport& rep : all_reports()) {
    const std::string where = rep.theorem + " (p=" + std::to_string(rep.p) + ") ";
    for (const ForwardCaseReport& f : rep.forward) {
      const bool benign =
          f.status == "ok" || f.status == "beyond-desk-scale" ||
          (f.status == "no-witness" && f.case_id == "T12.iii");
      if (!benign) {
        bad.push_back(where + f.case_id + ": status " + f.status);
        continue;
      }
      if (f.status != "ok") continue;
      if (f.candidates < 1) {
        bad.push_back(where + f.case_id + ": ok with no candidates");
      }
      const size_t want = std::min<size_t>(3, static_cast<size_t>(f.candidates));
      if (f.witnesses.size() != want) {
        bad.push_back(where + f.case_id + ": " + std::to_string(f.witnesses.size()) +
                      " witnesses for " + std::to_string(f.candidates) + " candidates");
      }
    }
  }
  return bad;
}

std::vector<std::string> check_backward() {
  std::vector<std::string> bad;
  for (const TheoremReport& rep : all_reports()) {
    const std::string where = rep.theorem + " (p=" + std::to_string(rep.p) + "): ";
    if (rep.backward.pairs_checked <= 0) bad.push_back(where + "no pairs swept");
    for (const BackwardMismatch& m : rep.backward.mismatches) {
      bad.push_back(where + "mismatch " + m.case_id + " on " + m.pair_desc + " (declared t=" +
                    std::to_string(m.declared_t) + ", computed t=" +
                    std::to_string(m.computed_t) + ")");
    }
    for (const std::string& u : rep.backward.unlisted) {
      bad.push_back(where + "unlisted " + u);
    }
  }
  return bad;
}

std::vector<std::string> check_integer_linear() { return schur_test::intmat_suite_failures(); }

std::vector<std::string> check_determinism() {
  std::vector<std::string> bad;
  const std::string cache_path = "acceptance_cache.json";
  {
    MultiplierCache merged;
    merged.load_json(h2().cache().save_json());
    merged.load_json(h3().cache().save_json());
    std::ofstream out(cache_path, std::ios::binary);
    out << merged.save_json();
    if (!out) {
      bad.push_back("could not write " + cache_path);
      return bad;
    }
  }
  const std::string base = std::string(SCHUR_CLI_PATH) + " --format json --cache " + cache_path +
                           " verify all";
  for (int run = 0; run < 2; ++run) {
    const std::string out_file = "acceptance_verify_" + std::to_string(run) + ".json";
    const int rc = schur_test::run_command(base + " >" + out_file + " 2>acceptance_verify_err.txt");
    if (rc != 0) {
      bad.push_back("verify all run " + std::to_string(run) + " exited " + std::to_string(rc));
    }
  }
  if (!bad.empty()) return bad;
  const std::string first = schur_test::slurp_file("acceptance_verify_0.json");
  const std::string second = schur_test::slurp_file("acceptance_verify_1.json");
  if (first.empty()) bad.push_back("verify all produced no output");
  if (first != second) bad.push_back("verify all output differs between identical runs");
  return bad;
}

struct Criterion {
  int number;
  const char* label;
  std::vector<std::string> (*run)();
};

const Criterion kCriteria[] = {
    {1, "bar resolution agrees with the abelian multiplier formula", check_abelian_oracle},
    {2, "golden multiplier table", check_golden_multipliers},
    {3, "|M(G)| = |M(G,N)| |M(K)| on every swept pair", check_factorization},
    {4, "direct-pair order formula agrees with cancellation", check_direct_route},
    {5, "slack nonnegative and commutator bound on every swept pair", check_bounds},
    {6, "forward witnesses for every tabulated case", check_forward},
    {7, "backward sweep: no mismatches, no unlisted pairs in coverage", check_backward},
    {8, "integer linear algebra suite", check_integer_linear},
    {9, "verify all twice: exit 0, byte-identical reports", check_determinism},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  int failed = 0;
  for (const Criterion& c : kCriteria) {
    if (only != 0 && c.number != only) continue;
    std::vector<std::string> problems;
    try {
      problems = c.run();
    } catch (const std::exception& e) {
      problems.push_back(std::string("exception: ") + e.what());
    }
    if (problems.empty()) {
      std::cout << "PASS criterion " << c.number << ": " << c.label << "\n";
    } else {
      ++failed;
      std::cout << "FAIL criterion " << c.number << ": " << c.label << "\n";
      const size_t shown = std::min<size_t>(problems.size(), 10);
      for (size_t i = 0; i < shown; ++i) std::cout << "    " << problems[i] << "\n";
      if (problems.size() > shown) {
        std::cout << "    ... and " << problems.size() - shown << " more\n";
      }
    }
    std::cout.flush();
  }
  return failed == 0 ? 0 : 1;
}
