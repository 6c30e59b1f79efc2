#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "semforest/elementary.hpp"
#include "semforest/gap_semigroup.hpp"
#include "semforest/kunz_vector.hpp"

namespace semforest {

/// Projects a semigroup with Frobenius number F onto the elementary root of
/// its class: every nonzero member below F/2 is traded for its F-complement.
/// Idempotent; the fixed points are exactly the elementary semigroups.
inline GapSemigroup theta(const GapSemigroup& s, std::int64_t frobenius) {
  if (s.is_naturals() || s.frobenius() != frobenius) {
    throw std::invalid_argument("theta: semigroup does not have Frobenius number " +
                                std::to_string(frobenius));
  }
  std::vector<std::int64_t> low;  // members in (0, F/2)
  for (std::int64_t v = 1; 2 * v < frobenius; ++v) {
    if (s.contains(v)) {
      low.push_back(v);
    }
  }
  if (low.empty()) {
    return s;
  }
  std::vector<std::int64_t> freed;  // their F-complements, gaps of s by closure
  freed.reserve(low.size());
  for (std::int64_t v : low) {
    freed.push_back(frobenius - v);
  }
  std::sort(freed.begin(), freed.end());
  std::vector<std::int64_t> gaps;
  gaps.reserve(s.gaps().size());
  for (std::int64_t gap : s.gaps()) {
    if (!std::binary_search(freed.begin(), freed.end(), gap)) {
      gaps.push_back(gap);
    }
  }
  gaps.insert(gaps.end(), low.begin(), low.end());
  std::sort(gaps.begin(), gaps.end());
  return GapSemigroup::from_gaps(std::move(gaps));
}

/// Coordinate form of theta: every zero coordinate below F/2 is set and its
/// F-complement cleared.
inline KunzVector theta_kunz(KunzVector x, std::int64_t frobenius) {
  if (x.max_one_index() != frobenius) {
    throw std::invalid_argument("theta_kunz: vector does not have Frobenius index " +
                                std::to_string(frobenius));
  }
  for (std::int64_t i = 1; 2 * i < frobenius; ++i) {
    if (!x.bit(i)) {
      x.set_bit(i, true);
      x.set_bit(frobenius - i, false);  // F-i > F/2, never revisited by the loop
    }
  }
  return x;
}

/// One step toward the class root: trade the multiplicity m for F - m.
/// Disengaged exactly on elementary vectors, where the walk terminates.
inline std::optional<KunzVector> parent_step(const KunzVector& x, std::int64_t frobenius) {
  const std::int64_t m = x.min_zero_index();
  if (frobenius <= 2 * m) {
    return std::nullopt;
  }
  KunzVector parent = x;
  parent.set_bit(m, true);
  parent.set_bit(frobenius - m, false);
  return parent;
}

/// Indices i for which swapping coordinates i and F-i of z yields a tree
/// child, in increasing order. Cheap index tests run first, then the two
/// generator window scans, and last the single pseudo-Frobenius window test
/// on z with coordinate i set.
inline std::vector<std::int64_t> child_indices(const KunzVector& z, std::int64_t frobenius) {
  std::vector<std::int64_t> picks;
  const std::int64_t m = z.min_zero_index();
  for (std::int64_t i = frobenius / 2 + 1; i < frobenius; ++i) {
    if (frobenius - i >= m) {
      continue;  // the child's multiplicity would not drop below m
    }
    if (2 * frobenius == 3 * i) {
      continue;  // F would become three times the new multiplicity
    }
    if (z.bit(i)) {
      continue;
    }
    if (z.bit(2 * (frobenius - i))) {
      continue;
    }
    if (!kunz_window_generator(z, i)) {
      continue;
    }
    if (!kunz_window_generator(z, 2 * (frobenius - i))) {
      continue;
    }
    KunzVector punctured = z;
    punctured.set_bit(i, true);  // drop the generator i from the member set
    if (!kunz_pf_contains(punctured, frobenius - i)) {
      continue;
    }
    picks.push_back(i);
  }
  return picks;
}

/// Children of z in its class tree, coordinate form.
inline std::vector<KunzVector> children(const KunzVector& z, std::int64_t frobenius) {
  std::vector<KunzVector> out;
  for (std::int64_t i : child_indices(z, frobenius)) {
    KunzVector child = z;
    child.set_bit(i, true);
    child.set_bit(frobenius - i, false);
    out.push_back(std::move(child));
  }
  return out;
}

namespace detail {

/// t belongs to the pseudo-Frobenius set of q with the member x removed.
inline bool pf_of_punctured_contains(const GapSemigroup& q, std::int64_t x, std::int64_t t) {
  const std::int64_t f = q.frobenius();
  for (std::int64_t s = 1; s <= f; ++s) {
    if (s == x || !q.contains(s)) {
      continue;
    }
    const std::int64_t sum = t + s;  // sums above f are members and differ from x
    if (sum == x || !q.contains(sum)) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

/// Children on the semigroup view: trade a minimal generator x in (F/2, F)
/// for F - x, under the same conditions as the coordinate form. Kept as an
/// independently coded twin of child_indices; the two are compared in tests.
inline std::vector<GapSemigroup> children(const GapSemigroup& q, std::int64_t frobenius) {
  if (q.is_naturals() || q.frobenius() != frobenius) {
    throw std::invalid_argument("children: semigroup does not have Frobenius number " +
                                std::to_string(frobenius));
  }
  const std::int64_t m = q.multiplicity();
  const auto gens = q.minimal_generators();
  std::vector<GapSemigroup> out;
  for (std::int64_t x : gens) {
    if (2 * x <= frobenius || x >= frobenius) {
      continue;
    }
    if (frobenius - x >= m) {
      continue;
    }
    if (2 * frobenius == 3 * x) {
      continue;
    }
    if (!std::binary_search(gens.begin(), gens.end(), 2 * (frobenius - x))) {
      continue;
    }
    if (!detail::pf_of_punctured_contains(q, x, frobenius - x)) {
      continue;
    }
    std::vector<std::int64_t> gaps = q.gaps();
    gaps.erase(std::find(gaps.begin(), gaps.end(), frobenius - x));
    gaps.insert(std::upper_bound(gaps.begin(), gaps.end(), x), x);
    out.push_back(GapSemigroup::from_gaps(std::move(gaps)));
  }
  return out;
}

/// Depth-first walk of one class tree: the root is visited first, children
/// in increasing swap index, every class member exactly once (no visited set
/// is needed, the classes really are trees). Returns the visit count.
/// The visitor receives (vector, F, g) and must not retain engine state.
template <typename Visitor>
std::uint64_t traverse_class(const KunzVector& root, std::int64_t frobenius, Visitor&& visit) {
  if (!is_elementary(root) || root.max_one_index() != frobenius) {
    throw std::invalid_argument("traverse_class: root is not elementary with Frobenius number " +
                                std::to_string(frobenius));
  }
  const std::int64_t genus = root.genus();
  std::vector<KunzVector> stack;
  stack.push_back(root);
  std::uint64_t visits = 0;
  while (!stack.empty()) {
    const KunzVector node = std::move(stack.back());
    stack.pop_back();
    visit(node, frobenius, genus);
    ++visits;
    const auto picks = child_indices(node, frobenius);
    for (auto it = picks.rbegin(); it != picks.rend(); ++it) {  // smallest index on top
      KunzVector child = node;
      child.set_bit(*it, true);
      child.set_bit(frobenius - *it, false);
      stack.push_back(std::move(child));
    }
  }
  return visits;
}

namespace detail {

struct SeedBlock {
  std::int64_t frobenius = 0;
  std::int64_t genus = 0;
  std::int64_t seeds = 0;
  std::int64_t first = 0;  // global rank of this block's first seed
};

inline std::vector<SeedBlock> plan_blocks(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& fg_pairs) {
  std::vector<SeedBlock> blocks;
  std::int64_t first = 0;
  for (const auto& [frobenius, genus] : fg_pairs) {
    require_supported_genus(genus);
    const std::int64_t seeds = count_elementary(frobenius, genus);
    blocks.push_back({frobenius, genus, seeds, first});
    first += seeds;
  }
  return blocks;
}

/// Runs every class traversal of the planned blocks. Sequential mode visits
/// blocks in order, seeds in lexicographic order, nodes in DFS order.
/// Parallel mode hands out seeds through an atomic cursor, one class tree
/// per grab; the visitor is then invoked concurrently and only the total
/// count is kept, so counting needs no storage beyond the DFS stacks.
template <typename Visitor>
std::uint64_t run_blocks(const std::vector<SeedBlock>& blocks, int threads, Visitor&& visit) {
  if (threads <= 1) {
    std::uint64_t visits = 0;
    for (const auto& block : blocks) {
      for_each_elementary(block.frobenius, block.genus, [&](const ElementarySeed& seed) {
        visits += traverse_class(seed.kunz(), block.frobenius, visit);
      });
    }
    return visits;
  }

  const std::int64_t total = blocks.empty() ? 0 : blocks.back().first + blocks.back().seeds;
  std::atomic<std::int64_t> cursor{0};
  std::atomic<std::uint64_t> visits{0};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&] {
    try {
      std::uint64_t local = 0;
      for (;;) {
        const std::int64_t rank = cursor.fetch_add(1, std::memory_order_relaxed);
        if (rank >= total) {
          break;
        }
        auto block = std::upper_bound(blocks.begin(), blocks.end(), rank,
                                      [](std::int64_t r, const SeedBlock& b) { return r < b.first; });
        --block;
        const ElementarySeed seed =
            elementary_seed_at(block->frobenius, block->genus, rank - block->first);
        local += traverse_class(seed.kunz(), block->frobenius, visit);
      }
      visits.fetch_add(local, std::memory_order_relaxed);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) {
        error = std::current_exception();
      }
      cursor.store(total, std::memory_order_relaxed);  // drain remaining work
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back(worker);
  }
  for (auto& th : pool) {
    th.join();
  }
  if (error) {
    std::rethrow_exception(error);
  }
  return visits.load();
}

}  // namespace detail

/// All of Sem(F, g): the disjoint class trees over every elementary root.
/// The visitor receives (vector, F, g); with threads > 1 it is invoked
/// concurrently. Returns the number of semigroups visited.
template <typename Visitor>
std::uint64_t enumerate_fg(std::int64_t frobenius, std::int64_t genus, Visitor&& visit,
                           int threads = 1) {
  require_feasible(frobenius, genus);
  return detail::run_blocks(detail::plan_blocks({{frobenius, genus}}), threads, visit);
}

/// All of Sem(g), grouped by Frobenius number ascending from g to 2g-1.
template <typename Visitor>
std::uint64_t enumerate_genus(std::int64_t genus, Visitor&& visit, int threads = 1) {
  require_supported_genus(genus);
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::int64_t frobenius = genus; frobenius <= 2 * genus - 1; ++frobenius) {
    pairs.emplace_back(frobenius, genus);
  }
  return detail::run_blocks(detail::plan_blocks(pairs), threads, visit);
}

/// Every semigroup with the given Frobenius number, over all feasible genera
/// ceil((F+1)/2) .. F, ascending.
template <typename Visitor>
std::uint64_t enumerate_frobenius(std::int64_t frobenius, Visitor&& visit, int threads = 1) {
  if (frobenius < 1) {
    throw std::invalid_argument("enumerate_frobenius: Frobenius number must be positive");
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::int64_t genus = (frobenius + 2) / 2; genus <= frobenius; ++genus) {
    pairs.emplace_back(frobenius, genus);
  }
  return detail::run_blocks(detail::plan_blocks(pairs), threads, visit);
}

}  // namespace semforest
