#include "schur/abelian.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "schur/intmat.hpp"

namespace schur {

std::string AbelianInvariants::render() const {
  if (factors.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) out += " x ";
    out += "Z" + std::to_string(factors[i]);
  }
  return out;
}

AbelianInvariants canonicalize(const std::vector<long long>& orders) {
  std::vector<long long> kept;
  for (long long n : orders) {
    if (n <= 0) fail(Errc::non_positive_order, "cyclic order " + std::to_string(n));
    if (n > 1) kept.push_back(n);
  }
  if (kept.empty()) return {};

  SparseIntMatrix diag(static_cast<int>(kept.size()), static_cast<int>(kept.size()));
  for (size_t i = 0; i < kept.size(); ++i)
    diag.add(static_cast<int>(i), static_cast<int>(i), kept[i]);

  SnfResult snf = smith_normal_form(diag);
  AbelianInvariants out;
  for (auto it = snf.invariants.rbegin(); it != snf.invariants.rend(); ++it) {
    if (*it == 1) continue;
    out.factors.push_back(it->convert_to<long long>());
  }
  return out;
}

AbelianInvariants tensor(const AbelianInvariants& a, const AbelianInvariants& b) {
  std::vector<long long> gcds;
  for (long long x : a.factors)
    for (long long y : b.factors) gcds.push_back(std::gcd(x, y));
  return canonicalize(gcds);
}

AbelianInvariants multiplier_abelian(const AbelianInvariants& a) {
  std::vector<long long> parts;
  for (size_t i = 1; i < a.factors.size(); ++i)
    for (size_t copies = 0; copies < i; ++copies) parts.push_back(a.factors[i]);
  return canonicalize(parts);
}

namespace {

// order -> multiset of prime powers, as prime -> sorted descending exponents.
void add_elementary_divisors(long long n, std::map<long long, std::vector<int>>& out) {
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    out[p].push_back(e);
  }
  if (n > 1) out[n].push_back(1);
}

}  // namespace

AbelianInvariants cancel_direct_factor(const AbelianInvariants& whole,
                                       const AbelianInvariants& factor) {
  std::map<long long, std::vector<int>> have, remove;
  for (long long n : whole.factors) add_elementary_divisors(n, have);
  for (long long n : factor.factors) add_elementary_divisors(n, remove);

  for (auto& [p, exps] : remove) {
    auto it = have.find(p);
    for (int e : exps) {
      if (it == have.end())
        fail(Errc::not_a_direct_factor,
             "no " + std::to_string(p) + "^" + std::to_string(e) + " summand available");
      auto pos = std::find(it->second.begin(), it->second.end(), e);
      if (pos == it->second.end())
        fail(Errc::not_a_direct_factor,
             "no " + std::to_string(p) + "^" + std::to_string(e) + " summand available");
      it->second.erase(pos);
    }
  }

  // Recombine: i-th invariant factor multiplies the i-th largest power of
  // each prime, which restores the divisibility-decreasing chain.
  size_t depth = 0;
  for (auto& [p, exps] : have) {
    std::sort(exps.begin(), exps.end(), std::greater<int>());
    depth = std::max(depth, exps.size());
  }
  AbelianInvariants out;
  for (size_t i = 0; i < depth; ++i) {
    long long f = 1;
    for (auto& [p, exps] : have)
      if (i < exps.size())
        for (int j = 0; j < exps[i]; ++j) f *= p;
    if (f > 1) out.factors.push_back(f);
  }
  return out;
}

int log_prime(unsigned long long v, long long p) {
  if (v == 0 || p < 2) fail(Errc::not_p_group, "log_" + std::to_string(p) + " of " + std::to_string(v));
  int e = 0;
  while (v % static_cast<unsigned long long>(p) == 0) v /= static_cast<unsigned long long>(p), ++e;
  if (v != 1)
    fail(Errc::not_p_group, std::to_string(v) + " left over, not a power of " + std::to_string(p));
  return e;
}

}  // namespace schur
