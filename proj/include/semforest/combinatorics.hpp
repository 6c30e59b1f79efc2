#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace semforest {

/// Exact binomial coefficient C(n, k). Throws std::overflow_error when the
/// result does not fit in a signed 64-bit integer.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) {
    throw std::invalid_argument("binomial: arguments must be nonnegative");
  }
  if (k > n) {
    return 0;
  }
  if (k > n - k) {
    k = n - k;
  }
  unsigned __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // exact at every step: r holds C(n - k + i, i) after the division
    r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (r > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max())) {
      throw std::overflow_error("binomial: result exceeds 64 bits");
    }
  }
  return static_cast<std::int64_t>(r);
}

/// Advances a strictly increasing combination drawn from values up to `hi`
/// to its lexicographic successor. Returns false when `comb` was already the
/// last combination (comb is left in that final state).
inline bool next_combination(std::vector<std::int64_t>& comb, std::int64_t hi) {
  const auto k = static_cast<std::int64_t>(comb.size());
  std::int64_t t = k - 1;
  while (t >= 0 && comb[t] == hi - (k - 1 - t)) {
    --t;
  }
  if (t < 0) {
    return false;
  }
  ++comb[t];
  for (std::int64_t j = t + 1; j < k; ++j) {
    comb[j] = comb[j - 1] + 1;
  }
  return true;
}

/// The k-subset of {0, ..., n-1} holding zero-based `rank` in lexicographic
/// order. Inverse of the iteration order produced by next_combination.
inline std::vector<std::int64_t> unrank_combination(std::int64_t n, std::int64_t k,
                                                    std::int64_t rank) {
  if (n < 0 || k < 0 || k > n) {
    throw std::invalid_argument("unrank_combination: need 0 <= k <= n");
  }
  if (rank < 0 || rank >= binomial(n, k)) {
    throw std::out_of_range("unrank_combination: rank out of range");
  }
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(k));
  std::int64_t c = 0;
  for (std::int64_t t = 0; t < k; ++t) {
    for (;; ++c) {
      const std::int64_t block = binomial(n - c - 1, k - t - 1);
      if (rank < block) {
        break;
      }
      rank -= block;
    }
    out.push_back(c++);
  }
  return out;
}

}  // namespace semforest
