#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace semforest {

/// A numerical semigroup stored as its finite, sorted set of gaps (the
/// complement of the semigroup in the nonnegative integers).
///
/// Invariants: gaps are strictly increasing positive integers, 0 is never a
/// gap, and the complement is closed under addition. The derived quantities
/// are genus (number of gaps), Frobenius number (largest gap) and
/// multiplicity (least positive member).
///
/// Values are immutable after construction; they can be shared and copied
/// across threads freely. All operations are const.
class GapSemigroup {
 public:
  /// The semigroup of all nonnegative integers (empty gap set). Its Frobenius
  /// number is undefined; accessing it throws.
  static GapSemigroup naturals() { return GapSemigroup({}); }

  /// Wraps an explicit gap set. Throws std::invalid_argument unless the
  /// sequence is strictly increasing and positive. Additive closure of the
  /// complement is the caller's contract; debug builds verify it.
  static GapSemigroup from_gaps(std::vector<std::int64_t> gaps) {
    for (std::size_t i = 0; i < gaps.size(); ++i) {
      if (gaps[i] < 1) {
        throw std::invalid_argument("GapSemigroup: gaps must be positive");
      }
      if (i > 0 && gaps[i] <= gaps[i - 1]) {
        throw std::invalid_argument("GapSemigroup: gaps must be strictly increasing");
      }
    }
    GapSemigroup s(std::move(gaps));
    assert(s.complement_closed());
    return s;
  }

  /// The least semigroup containing the given generators. Requires a
  /// nonempty list of positive integers with gcd 1; anything else cannot
  /// have a finite complement.
  static GapSemigroup from_generators(const std::vector<std::int64_t>& gens);

  const std::vector<std::int64_t>& gaps() const noexcept { return gaps_; }

  std::int64_t genus() const noexcept { return static_cast<std::int64_t>(gaps_.size()); }

  bool is_naturals() const noexcept { return gaps_.empty(); }

  /// Largest gap. Throws std::domain_error for the naturals, where no gap
  /// exists.
  std::int64_t frobenius() const {
    if (gaps_.empty()) {
      throw std::domain_error("frobenius: undefined for the naturals");
    }
    return gaps_.back();
  }

  /// Least positive member.
  std::int64_t multiplicity() const noexcept {
    std::int64_t m = 1;
    for (std::int64_t gap : gaps_) {
      if (gap != m) {
        break;
      }
      ++m;
    }
    return m;
  }

  /// Membership test. Always true for 0 and for everything above the
  /// Frobenius number.
  bool contains(std::int64_t n) const noexcept {
    if (n < 0) {
      return false;
    }
    return !std::binary_search(gaps_.begin(), gaps_.end(), n);
  }

  /// The minimal generating set: members that are not a sum of two nonzero
  /// members. Feeding the result back through from_generators reproduces
  /// this semigroup.
  std::vector<std::int64_t> minimal_generators() const {
    if (gaps_.empty()) {
      return {1};
    }
    const std::int64_t f = frobenius();
    const std::int64_t m = multiplicity();
    std::vector<std::int64_t> gens;
    // every member above f + m splits off m, so the scan window is complete
    for (std::int64_t s = m; s <= f + m; ++s) {
      if (!contains(s)) {
        continue;
      }
      bool sum = false;
      for (std::int64_t a = m; a + a <= s; ++a) {
        if (contains(a) && contains(s - a)) {
          sum = true;
          break;
        }
      }
      if (!sum) {
        gens.push_back(s);
      }
    }
    return gens;
  }

  /// Gaps x with x + s a member for every nonzero member s. The Frobenius
  /// number always qualifies; the count of these is the type of the
  /// semigroup. Throws std::domain_error for the naturals.
  std::vector<std::int64_t> pseudo_frobenius() const {
    if (gaps_.empty()) {
      throw std::domain_error("pseudo_frobenius: the naturals have no gaps");
    }
    const std::int64_t f = frobenius();
    const std::int64_t m = multiplicity();
    std::vector<std::int64_t> pf;
    for (std::int64_t x : gaps_) {
      bool ok = true;
      // members above f keep x + s above f, so only s <= f can fail
      for (std::int64_t s = m; s <= f; ++s) {
        if (contains(s) && !contains(x + s)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        pf.push_back(x);
      }
    }
    return pf;
  }

  /// Apéry set with respect to a positive member n: slot i holds the least
  /// member congruent to i modulo n (slot 0 is always 0).
  std::vector<std::int64_t> apery_set(std::int64_t n) const {
    if (n < 1 || !contains(n)) {
      throw std::invalid_argument("apery_set: n must be a positive member");
    }
    std::vector<std::int64_t> w(static_cast<std::size_t>(n), -1);
    std::int64_t filled = 0;
    for (std::int64_t s = 0; filled < n; ++s) {
      if (!contains(s)) {
        continue;
      }
      auto& slot = w[static_cast<std::size_t>(s % n)];
      if (slot < 0) {
        slot = s;
        ++filled;
      }
    }
    return w;
  }

  /// Exhaustive additive-closure check of the complement over all pairs of
  /// members up to 2*frobenius + 2. Sums beyond that window are members
  /// automatically.
  bool complement_closed() const noexcept {
    if (gaps_.empty()) {
      return true;
    }
    const std::int64_t bound = 2 * gaps_.back() + 2;
    for (std::int64_t a = 1; a <= bound; ++a) {
      if (!contains(a)) {
        continue;
      }
      for (std::int64_t b = a; a + b <= bound; ++b) {
        if (contains(b) && !contains(a + b)) {
          return false;
        }
      }
    }
    return true;
  }

  friend bool operator==(const GapSemigroup& a, const GapSemigroup& b) noexcept {
    return a.gaps_ == b.gaps_;
  }
  friend bool operator<(const GapSemigroup& a, const GapSemigroup& b) noexcept {
    return a.gaps_ < b.gaps_;
  }

 private:
  explicit GapSemigroup(std::vector<std::int64_t> gaps) : gaps_(std::move(gaps)) {}

  std::vector<std::int64_t> gaps_;
};

inline GapSemigroup GapSemigroup::from_generators(const std::vector<std::int64_t>& gens) {
  if (gens.empty()) {
    throw std::invalid_argument("from_generators: at least one generator required");
  }
  std::int64_t d = 0;
  std::int64_t largest = 0;
  for (std::int64_t gen : gens) {
    if (gen < 1) {
      throw std::invalid_argument("from_generators: generators must be positive");
    }
    d = std::gcd(d, gen);
    largest = std::max(largest, gen);
  }
  if (d != 1) {
    throw std::invalid_argument("from_generators: gcd != 1, not a numerical semigroup");
  }

  // Sieve reachability over 0..bound, growing bound until the top half of the
  // window is one solid run of members; from then on every larger integer is
  // a sum of two members in the run, so no gap is missed.
  std::int64_t bound = 2 * largest + 2;
  for (;;) {
    std::vector<char> member(static_cast<std::size_t>(bound) + 1, 0);
    member[0] = 1;
    for (std::int64_t n = 1; n <= bound; ++n) {
      for (std::int64_t gen : gens) {
        if (gen <= n && member[static_cast<std::size_t>(n - gen)]) {
          member[static_cast<std::size_t>(n)] = 1;
          break;
        }
      }
    }
    std::int64_t run_start = bound;
    while (run_start >= 1 && member[static_cast<std::size_t>(run_start - 1)]) {
      --run_start;
    }
    if (member[static_cast<std::size_t>(bound)] && 2 * run_start <= bound + 1) {
      std::vector<std::int64_t> gaps;
      for (std::int64_t n = 1; n < run_start; ++n) {
        if (!member[static_cast<std::size_t>(n)]) {
          gaps.push_back(n);
        }
      }
      return from_gaps(std::move(gaps));
    }
    bound *= 2;
  }
}

/// Comma-separated rendering of an integer sequence, e.g. "1,2,3,5,7".
/// Doubles as the canonical text encoding of a gap set.
inline std::string to_csv(const std::vector<std::int64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace semforest
