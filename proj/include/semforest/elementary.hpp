#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "semforest/combinatorics.hpp"
#include "semforest/gap_semigroup.hpp"
#include "semforest/kunz_vector.hpp"

namespace semforest {

/// True when a semigroup with the given Frobenius number and genus exists:
/// g <= F <= 2g-1.
constexpr bool feasible(std::int64_t frobenius, std::int64_t genus) noexcept {
  return genus >= 1 && frobenius >= genus && frobenius <= 2 * genus - 1;
}

inline void require_feasible(std::int64_t frobenius, std::int64_t genus) {
  if (!feasible(frobenius, genus)) {
    throw std::invalid_argument("no semigroups with frobenius " + std::to_string(frobenius) +
                                " and genus " + std::to_string(genus));
  }
}

/// A semigroup is elementary when its Frobenius number is below twice its
/// multiplicity; these are the roots of the class trees.
inline bool is_elementary(const GapSemigroup& s) {
  return s.is_naturals() || s.frobenius() < 2 * s.multiplicity();
}

inline bool is_elementary(const KunzVector& x) {
  return x.max_one_index() < 2 * x.min_zero_index();
}

/// Number of elementary semigroups with the given invariants:
/// C(ceil(F/2) - 1, F - g).
inline std::int64_t count_elementary(std::int64_t frobenius, std::int64_t genus) {
  require_feasible(frobenius, genus);
  return binomial((frobenius + 1) / 2 - 1, frobenius - genus);
}

/// One elementary class root. It is determined by its Frobenius number F,
/// genus g and the set of its members strictly between F/2 and F; that set
/// has exactly F - g elements drawn from {ceil((F+1)/2), ..., F-1}.
struct ElementarySeed {
  std::int64_t frobenius = 0;
  std::int64_t genus = 0;
  std::vector<std::int64_t> members;  // sorted members below the Frobenius number

  /// Gap-set view: everything in [1, F] except the chosen members.
  GapSemigroup semigroup() const {
    std::vector<std::int64_t> gaps;
    gaps.reserve(static_cast<std::size_t>(genus));
    std::size_t next = 0;
    for (std::int64_t i = 1; i <= frobenius; ++i) {
      if (next < members.size() && members[next] == i) {
        ++next;
      } else {
        gaps.push_back(i);
      }
    }
    return GapSemigroup::from_gaps(std::move(gaps));
  }

  /// Coordinate view: ones on [1, F] except the chosen members, zeros beyond.
  KunzVector kunz() const {
    KunzVector x(genus);
    std::size_t next = 0;
    for (std::int64_t i = 1; i <= frobenius; ++i) {
      if (next < members.size() && members[next] == i) {
        ++next;
      } else {
        x.set_bit(i, true);
      }
    }
    return x;
  }
};

/// Least allowed member of a seed for Frobenius number F: ceil((F+1)/2).
constexpr std::int64_t seed_window_low(std::int64_t frobenius) noexcept {
  return (frobenius + 2) / 2;
}

/// Calls fn(const ElementarySeed&) for every root with the given invariants,
/// in lexicographic order of the member set. No recursion, O(1) amortized
/// per step, so the stream splits cleanly across workers by rank.
template <typename Fn>
void for_each_elementary(std::int64_t frobenius, std::int64_t genus, Fn&& fn) {
  require_feasible(frobenius, genus);
  require_supported_genus(genus);
  const std::int64_t lo = seed_window_low(frobenius);
  const std::int64_t hi = frobenius - 1;
  ElementarySeed seed{frobenius, genus, {}};
  seed.members.resize(static_cast<std::size_t>(frobenius - genus));
  std::iota(seed.members.begin(), seed.members.end(), lo);
  for (;;) {
    fn(static_cast<const ElementarySeed&>(seed));
    if (!next_combination(seed.members, hi)) {
      break;
    }
  }
}

/// Materialized variant of for_each_elementary.
inline std::vector<ElementarySeed> enumerate_elementary(std::int64_t frobenius,
                                                        std::int64_t genus) {
  std::vector<ElementarySeed> seeds;
  for_each_elementary(frobenius, genus, [&](const ElementarySeed& s) { seeds.push_back(s); });
  return seeds;
}

/// Seed at a given zero-based rank of the lexicographic order; the handle the
/// parallel driver uses to split the stream.
inline ElementarySeed elementary_seed_at(std::int64_t frobenius, std::int64_t genus,
                                         std::int64_t rank) {
  require_feasible(frobenius, genus);
  require_supported_genus(genus);
  const std::int64_t lo = seed_window_low(frobenius);
  const std::int64_t window = (frobenius + 1) / 2 - 1;
  ElementarySeed seed{frobenius, genus, {}};
  for (std::int64_t offset : unrank_combination(window, frobenius - genus, rank)) {
    seed.members.push_back(lo + offset);
  }
  return seed;
}

}  // namespace semforest
