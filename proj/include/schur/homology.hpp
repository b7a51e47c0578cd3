#pragma once

#include <map>
#include <string>
#include <vector>

#include "schur/group.hpp"
#include "schur/intmat.hpp"

namespace schur {

inline constexpr int kHardOrderCap = 81;

struct BarBoundaries {
  SparseIntMatrix d2;  // C2 -> C1
  SparseIntMatrix d3;  // C3 -> C2
};

// Boundary maps of the normalized bar resolution in degrees 2 and 3. C_k has
// one basis vector per k-tuple of non-identity elements, indexed mixed-radix
// over |G|-1 symbols.
BarBoundaries bar_boundaries(const FiniteGroup& g);

// H_2(G; Z) for finite G, via ker(d2)/im(d3). Refuses |G| above
// min(budget, 81) before building anything large.
AbelianInvariants schur_multiplier(const FiniteGroup& g, int budget = 32);

// Memoizes multipliers keyed by cheap invariants; colliding fingerprints are
// disambiguated with a real isomorphism test against the stored
// representative. Entries loaded from a file trust the fingerprint alone.
class MultiplierCache {
 public:
  AbelianInvariants multiplier(const FiniteGroup& g, int budget = 32);

  long long hits() const { return hits_; }
  long long misses() const { return misses_; }

  std::string save_json() const;
  void load_json(const std::string& text);

 private:
  struct Entry {
    FiniteGroup rep;
    AbelianInvariants inv;
  };
  std::map<std::string, std::vector<Entry>> buckets_;
  std::map<std::string, AbelianInvariants> trusted_;
  long long hits_ = 0;
  long long misses_ = 0;
};

}  // namespace schur
