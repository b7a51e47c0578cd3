#include "schur/homology.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "json.hpp"
#include "schur/abelian.hpp"
#include "schur/error.hpp"

namespace schur {

BarBoundaries bar_boundaries(const FiniteGroup& g) {
  const int n = g.order();
  const int m = n - 1;
  BarBoundaries b{SparseIntMatrix(m, m * m), SparseIntMatrix(m * m, m * m * m)};
  for (int x = 1; x < n; ++x) {
    for (int y = 1; y < n; ++y) {
      const int col = (x - 1) * m + (y - 1);
      b.d2.add(y - 1, col, 1);
      b.d2.add(x - 1, col, 1);
      const int xy = g.mul(x, y);
      if (xy != 0) b.d2.add(xy - 1, col, -1);
    }
  }
  for (int x = 1; x < n; ++x) {
    for (int y = 1; y < n; ++y) {
      const int xy = g.mul(x, y);
      for (int z = 1; z < n; ++z) {
        const int col = ((x - 1) * m + (y - 1)) * m + (z - 1);
        b.d3.add((y - 1) * m + (z - 1), col, 1);
        b.d3.add((x - 1) * m + (y - 1), col, -1);
        if (xy != 0) b.d3.add((xy - 1) * m + (z - 1), col, -1);
        const int yz = g.mul(y, z);
        if (yz != 0) b.d3.add((x - 1) * m + (yz - 1), col, 1);
      }
    }
  }
  return b;
}

AbelianInvariants schur_multiplier(const FiniteGroup& g, int budget) {
  const int limit = std::min(budget, kHardOrderCap);
  if (g.order() > limit) {
    fail(Errc::budget_exceeded, "group of order " + std::to_string(g.order()) +
                                    " exceeds the homology budget " + std::to_string(limit));
  }
  if (g.order() == 1) return {};
  const BarBoundaries b = bar_boundaries(g);
  long long p = 0;
  try {
    p = prime_of_order(g.order());
  } catch (const Error&) {
  }
  HomologyResult h = p != 0
                         ? homology_p_primary(b.d2, b.d3, p, log_prime(
                               static_cast<unsigned long long>(g.order()), p))
                         : homology(b.d2, b.d3);
  if (h.free_rank != 0) {
    fail(Errc::internal_free_rank,
         "H2 of a finite group came out with free rank " + std::to_string(h.free_rank));
  }
  return std::move(h.torsion);
}

AbelianInvariants MultiplierCache::multiplier(const FiniteGroup& g, int budget) {
  const std::string fp = group_fingerprint(g);
  if (auto it = trusted_.find(fp); it != trusted_.end()) {
    ++hits_;
    return it->second;
  }
  auto& bucket = buckets_[fp];
  for (const Entry& e : bucket) {
    if (are_isomorphic(e.rep, g)) {
      ++hits_;
      return e.inv;
    }
  }
  ++misses_;
  AbelianInvariants inv = schur_multiplier(g, budget);
  bucket.push_back(Entry{g, inv});
  return inv;
}

std::string MultiplierCache::save_json() const {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& [fp, inv] : trusted_) {
    entries.push_back({{"fingerprint", fp}, {"multiplier", inv.factors}});
  }
  for (const auto& [fp, bucket] : buckets_) {
    for (const Entry& e : bucket) {
      entries.push_back({{"fingerprint", fp}, {"multiplier", e.inv.factors}});
    }
  }
  nlohmann::ordered_json doc;
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

void MultiplierCache::load_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::io_error, std::string("cache file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array()) {
    fail(Errc::io_error, "cache file must be an object with an \"entries\" array");
  }
  for (const auto& item : doc["entries"]) {
    if (!item.is_object() || !item.contains("fingerprint") || !item["fingerprint"].is_string() ||
        !item.contains("multiplier") || !item["multiplier"].is_array()) {
      fail(Errc::io_error, "cache entry must carry a fingerprint and a multiplier list");
    }
    AbelianInvariants inv;
    for (const auto& f : item["multiplier"]) {
      if (!f.is_number_integer()) fail(Errc::io_error, "cache multiplier entries must be integers");
      inv.factors.push_back(f.get<long long>());
    }
    for (size_t i = 0; i < inv.factors.size(); ++i) {
      if (inv.factors[i] < 2 || (i + 1 < inv.factors.size() && inv.factors[i] % inv.factors[i + 1] != 0)) {
        fail(Errc::io_error, "cache multiplier " + inv.render() + " is not an invariant chain");
      }
    }
    trusted_[item["fingerprint"].get<std::string>()] = std::move(inv);
  }
}

}  // namespace schur
