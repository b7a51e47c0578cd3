#pragma once

#include <string>
#include <vector>

#include "schur/catalog.hpp"
#include "schur/classify.hpp"
#include "schur/pair.hpp"

namespace schur {

// 32 at p = 2, 81 otherwise (the hard cap).
int default_budget(long long p);

struct PairRecord {
  std::string desc;
  bool direct = false;  // built as N x K rather than a twisted product
  PairContext ctx;
  PairData data;
  PairProfile profile;
};

struct ForwardCaseReport {
  std::string case_id;
  std::string pattern;
  int declared_t = 0;
  // ok | no-witness | blocked-by-budget | beyond-desk-scale | mismatch
  std::string status;
  int candidates = 0;  // complement choices available within budget
  std::vector<std::string> witnesses;
};

struct BackwardMismatch {
  std::string pair_desc;
  std::string case_id;
  int declared_t = 0;
  int computed_t = 0;
};

struct BackwardReport {
  long long pairs_checked = 0;
  long long confirmed = 0;
  std::vector<std::string> unlisted;
  std::vector<BackwardMismatch> mismatches;
};

struct TheoremReport {
  std::string theorem;
  long long p = 0;
  int budget = 0;
  std::vector<ForwardCaseReport> forward;
  BackwardReport backward;
  std::string coverage_note;
};

// Sweeps every pair the catalog closure affords at one prime: direct products
// N x K up to the order budget plus twisted products with both factor orders
// up to p^3, deduplicated up to conjugacy of the action.
class Harness {
 public:
  Harness(long long p, int budget);

  long long p() const { return p_; }
  int budget() const { return budget_; }

  TheoremReport verify_theorem(const std::string& theorem);  // "T10", "T12", ...

  const std::vector<CatalogEntry>& closure();
  const std::vector<PairRecord>& pairs();

  // Each returns human-readable violation strings; all empty on a good run.
  std::vector<std::string> factorization_violations();  // |M(G)| = |M(G,N)| |M(K)|
  std::vector<std::string> direct_route_violations();   // order formula on direct pairs
  std::vector<std::string> bound_violations();          // slack >= 0, commutator bound

  MultiplierCache& cache() { return cache_; }

 private:
  void ensure_closure();
  void ensure_pairs();
  void sweep_direct();
  void sweep_semidirect();
  void add_record(std::string desc, bool direct, PairContext ctx);
  ForwardCaseReport forward_case(const CaseInfo& ci);

  long long p_;
  int budget_;
  MultiplierCache cache_;
  bool closure_built_ = false;
  std::vector<CatalogEntry> closure_;
  std::vector<int> closure_dk_;
  bool pairs_built_ = false;
  std::vector<PairRecord> pairs_;
  std::vector<std::string> build_failures_;
};

// Builds every abelian p-group of order up to max_order from cyclic factors
// and compares the resolution-computed multiplier against the
// invariant-factor formula.  Returns mismatch descriptions.
std::vector<std::string> abelian_multiplier_oracle_failures(long long p, int max_order);

}  // namespace schur
