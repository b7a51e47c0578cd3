#pragma once

#include <string>
#include <vector>

#include "schur/pair.hpp"

namespace schur {

// Everything the case patterns look at, computed once per pair.
struct PairProfile {
  long long p = 0;
  int nlog = 0;
  int mlog = 0;
  int t = 0;
  bool k_normal = false;
  bool n_trivial = false;
  bool k_trivial = false;
  bool g_elem_ab = false;
  bool extraspecial = false;  // Z(N,G) = [N,G] of order p
  int dk = 0;                 // minimal generator count of K

  bool n_is_zp = false;
  bool n_is_zp2 = false;        // Z_{p^2}
  bool n_is_zp3 = false;        // Z_{p^3}
  bool n_is_zpzp = false;       // Z_p x Z_p
  bool n_is_zpzp2 = false;      // Z_p x Z_{p^2}
  bool n_is_zpzpzp = false;     // Z_p x Z_p x Z_p
  bool n_is_zpzpzp2 = false;    // Z_p x Z_p x Z_{p^2}
  bool n_is_d8 = false;
  bool n_is_q8 = false;
  bool n_is_e1 = false;
  bool n_is_e2 = false;
  bool n_is_d8z2 = false;       // D8 x Z2
  bool n_is_zpe1 = false;       // Z_p x E1(p)
  bool n_is_e1zpzp = false;     // E1(p) x Z_p x Z_p

  bool k_is_zp = false;
  bool k_is_zp2 = false;
  bool k_is_zpzp = false;
};

PairProfile profile_pair(const PairContext& ctx, const PairData& d);

struct CaseInfo {
  const char* id;       // "T14.iv"
  int level;            // 10, 12, 13, 14, 15
  int t;                // deficiency the case belongs to
  bool sufficiency;     // the pattern forces that t (T12 rows are necessity-only)
  bool requires_normal_k;
  int parity;           // 0 = any p, 2 = p = 2 only, 1 = odd p only
  const char* pattern;
  bool annotate;        // report as "capability unverified"
  bool (*matches)(const PairProfile&);
  long long (*min_order)(long long p);  // smallest |G| realizing the case
};

const std::vector<CaseInfo>& all_cases();

enum class Verdict { confirmed, unlisted, mismatch };

const char* verdict_name(Verdict v);

struct Classification {
  int t = 0;
  Verdict verdict = Verdict::unlisted;
  std::vector<const CaseInfo*> matched;
  std::vector<std::string> matched_ids;  // ids, annotated where applicable
};

Classification classify_profile(const PairProfile& pr);
Classification classify_pair(const PairContext& ctx, const PairData& d);

}  // namespace schur
