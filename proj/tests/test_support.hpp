#pragma once

// Naive reference computations for test expectations. Everything here works
// from the definitions alone and stays independent of the library's own
// code paths.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "semforest/gap_semigroup.hpp"

namespace testsupport {

// Membership in <gens> by dynamic programming over 0..target.
inline bool reachable(const std::vector<std::int64_t>& gens, std::int64_t target) {
  if (target < 0) return false;
  std::vector<char> hit(static_cast<std::size_t>(target) + 1, 0);
  hit[0] = 1;
  for (std::int64_t n = 1; n <= target; ++n) {
    for (std::int64_t g : gens) {
      if (g <= n && hit[static_cast<std::size_t>(n - g)]) {
        hit[static_cast<std::size_t>(n)] = 1;
        break;
      }
    }
  }
  return hit[static_cast<std::size_t>(target)] != 0;
}

// Minimal generators straight from the definition, scanned over a window
// that provably contains them all.
inline std::vector<std::int64_t> naive_minimal_generators(const semforest::GapSemigroup& s) {
  if (s.is_naturals()) return {1};
  const std::int64_t limit = 2 * s.frobenius() + 2;
  std::vector<std::int64_t> gens;
  for (std::int64_t n = 1; n <= limit; ++n) {
    if (!s.contains(n)) continue;
    bool sum = false;
    for (std::int64_t a = 1; a < n; ++a) {
      if (s.contains(a) && s.contains(n - a) && n - a >= 1) {
        sum = true;
        break;
      }
    }
    if (!sum) gens.push_back(n);
  }
  return gens;
}

// Pseudo-Frobenius numbers from the definition, with the member scan pushed
// well past the point where sums leave the gap range.
inline std::vector<std::int64_t> naive_pseudo_frobenius(const semforest::GapSemigroup& s) {
  const std::int64_t f = s.frobenius();
  std::vector<std::int64_t> pf;
  for (std::int64_t x : s.gaps()) {
    bool ok = true;
    for (std::int64_t m = 1; m <= f + s.multiplicity(); ++m) {
      if (s.contains(m) && !s.contains(x + m)) {
        ok = false;
        break;
      }
    }
    if (ok) pf.push_back(x);
  }
  return pf;
}

// Least member in each residue class mod n by direct search.
inline std::vector<std::int64_t> naive_apery(const semforest::GapSemigroup& s, std::int64_t n) {
  std::vector<std::int64_t> w(static_cast<std::size_t>(n), -1);
  std::int64_t remaining = n;
  for (std::int64_t v = 0; remaining > 0; ++v) {
    if (!s.contains(v)) continue;
    auto& slot = w[static_cast<std::size_t>(v % n)];
    if (slot < 0) {
      slot = v;
      --remaining;
    }
  }
  return w;
}

// Canonical identity of a semigroup for set comparisons.
inline std::string gap_key(const semforest::GapSemigroup& s) { return semforest::to_csv(s.gaps()); }

inline std::set<std::string> gap_keys(const std::vector<semforest::GapSemigroup>& list) {
  std::set<std::string> keys;
  for (const auto& s : list) keys.insert(gap_key(s));
  return keys;
}

}  // namespace testsupport
