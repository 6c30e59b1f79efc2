#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "semforest/gap_semigroup.hpp"

#ifndef SEMFOREST_MAX_GENUS
#define SEMFOREST_MAX_GENUS 64
#endif

namespace semforest {

/// Largest genus the packed coordinate vectors accept. Compile-time
/// configuration; raising it widens every vector by whole words.
inline constexpr std::int64_t kMaxGenus = SEMFOREST_MAX_GENUS;

static_assert(kMaxGenus >= 1);

/// Fixed-length 0/1 vector x_1..x_{2g-1} encoding a genus-g semigroup with
/// respect to 2g: coordinate i is 1 exactly when i is a gap.
///
/// Storage contract (internal, but relied on by the word-level predicates):
/// coordinate i lives in words_[(i-1)/64] at bit (i-1)%64, so index 1 is the
/// lowest bit of the first word, and bits past 2g-1 are always zero.
class KunzVector {
 public:
  static constexpr std::size_t kWords =
      static_cast<std::size_t>((2 * kMaxGenus - 1 + 63) / 64);

  /// All-zero vector of the given genus. Coordinates are filled afterwards;
  /// semantic validity is the predicates' business, not the container's.
  explicit KunzVector(std::int64_t genus) : genus_(checked_genus(genus)), words_{} {}

  /// Parses the canonical text rendering, x_1 first ("110110100"). The
  /// length must be odd, since every vector has length 2g-1.
  static KunzVector from_string(std::string_view text) {
    const auto len = static_cast<std::int64_t>(text.size());
    if (len < 1 || len % 2 == 0) {
      throw std::invalid_argument("KunzVector: text length must be odd and positive");
    }
    KunzVector x((len + 1) / 2);
    for (std::int64_t i = 1; i <= len; ++i) {
      const char c = text[static_cast<std::size_t>(i - 1)];
      if (c != '0' && c != '1') {
        throw std::invalid_argument("KunzVector: text must consist of 0s and 1s");
      }
      x.set_bit(i, c == '1');
    }
    return x;
  }

  std::int64_t genus() const noexcept { return genus_; }
  std::int64_t length() const noexcept { return 2 * genus_ - 1; }

  bool bit(std::int64_t i) const {
    check_index(i);
    return (words_[word(i)] >> pos(i)) & 1u;
  }

  void set_bit(std::int64_t i, bool value) {
    check_index(i);
    if (value) {
      words_[word(i)] |= std::uint64_t{1} << pos(i);
    } else {
      words_[word(i)] &= ~(std::uint64_t{1} << pos(i));
    }
  }

  /// Number of set coordinates; equals the genus on every valid vector.
  std::int64_t ones_count() const noexcept {
    std::int64_t n = 0;
    for (std::uint64_t w : words_) {
      n += std::popcount(w);
    }
    return n;
  }

  /// Largest set index (the Frobenius number of the encoded semigroup);
  /// 0 when every coordinate is zero.
  std::int64_t max_one_index() const noexcept {
    for (std::size_t w = kWords; w-- > 0;) {
      if (words_[w] != 0) {
        return static_cast<std::int64_t>(w) * 64 + std::bit_width(words_[w]);
      }
    }
    return 0;
  }

  /// Least zero index, or 2g when every coordinate is set (the multiplicity
  /// of the encoded semigroup, since 2g is always a member).
  std::int64_t min_zero_index() const noexcept {
    for (std::size_t w = 0; w * 64 < static_cast<std::size_t>(length()); ++w) {
      const std::uint64_t holes = ~words_[w];
      if (holes != 0) {
        const std::int64_t i = static_cast<std::int64_t>(w) * 64 + std::countr_zero(holes) + 1;
        if (i <= length()) {
          return i;
        }
      }
    }
    return 2 * genus_;
  }

  /// True when x_j >= x_{j+shift} for every j with j + shift <= 2g-1; a
  /// word-level domination test against the self-shifted vector.
  bool dominates_shift(std::int64_t shift) const {
    if (shift < 0) {
      throw std::invalid_argument("dominates_shift: shift must be nonnegative");
    }
    const auto q = static_cast<std::size_t>(shift / 64);
    const auto r = static_cast<unsigned>(shift % 64);
    for (std::size_t w = 0; w * 64 < static_cast<std::size_t>(length()); ++w) {
      std::uint64_t shifted = 0;
      if (w + q < kWords) {
        shifted = words_[w + q] >> r;
        if (r != 0 && w + q + 1 < kWords) {
          shifted |= words_[w + q + 1] << (64 - r);
        }
      }
      if (shifted & ~words_[w]) {
        return false;
      }
    }
    return true;
  }

  /// Canonical rendering, x_1 first: (1,1,0,1,1,0,1,0,0) -> "110110100".
  std::string to_string() const {
    std::string out(static_cast<std::size_t>(length()), '0');
    for (std::int64_t i = 1; i <= length(); ++i) {
      if (bit(i)) {
        out[static_cast<std::size_t>(i - 1)] = '1';
      }
    }
    return out;
  }

  friend bool operator==(const KunzVector& a, const KunzVector& b) noexcept {
    return a.genus_ == b.genus_ && a.words_ == b.words_;
  }

  /// Orders by genus, then lexicographically on x_1, x_2, ...; agrees with
  /// ordering the to_string renderings within one genus.
  friend bool operator<(const KunzVector& a, const KunzVector& b) noexcept {
    if (a.genus_ != b.genus_) {
      return a.genus_ < b.genus_;
    }
    for (std::size_t w = 0; w < kWords; ++w) {
      const std::uint64_t diff = a.words_[w] ^ b.words_[w];
      if (diff != 0) {
        const std::uint64_t lowest = diff & (~diff + 1);
        return (a.words_[w] & lowest) == 0;
      }
    }
    return false;
  }

 private:
  static std::int64_t checked_genus(std::int64_t genus) {
    if (genus < 1 || genus > kMaxGenus) {
      throw std::invalid_argument("KunzVector: genus " + std::to_string(genus) +
                                  " outside [1, " + std::to_string(kMaxGenus) + "]");
    }
    return genus;
  }

  void check_index(std::int64_t i) const {
    if (i < 1 || i > length()) {
      throw std::out_of_range("KunzVector: index " + std::to_string(i) +
                              " outside [1, " + std::to_string(length()) + "]");
    }
  }

  static std::size_t word(std::int64_t i) noexcept { return static_cast<std::size_t>((i - 1) / 64); }
  static unsigned pos(std::int64_t i) noexcept { return static_cast<unsigned>((i - 1) % 64); }

  std::int64_t genus_;
  std::array<std::uint64_t, kWords> words_;
};

/// Guard used by the enumeration drivers before any vector is built.
inline void require_supported_genus(std::int64_t genus) {
  if (genus < 1) {
    throw std::invalid_argument("genus must be positive");
  }
  if (genus > kMaxGenus) {
    throw std::invalid_argument("genus " + std::to_string(genus) +
                                " exceeds the configured cap " + std::to_string(kMaxGenus));
  }
}

/// Kunz coordinates of a semigroup with at least one gap: coordinate i is set
/// exactly for the gaps i in [1, 2g-1]. Agrees with the Apéry-set derivation
/// with respect to 2g.
inline KunzVector kunz_from_semigroup(const GapSemigroup& s) {
  if (s.is_naturals()) {
    throw std::domain_error("kunz_from_semigroup: needs genus >= 1");
  }
  require_supported_genus(s.genus());
  KunzVector x(s.genus());
  for (std::int64_t gap : s.gaps()) {
    x.set_bit(gap, true);  // every gap is at most 2g-1
  }
  return x;
}

/// First failed membership condition of the coordinate characterization of
/// genus-g vectors, as printable text; nullopt when x encodes a semigroup.
inline std::optional<std::string> first_kunz_violation(const KunzVector& x) {
  const std::int64_t len = x.length();
  std::vector<std::int64_t> zeros;
  for (std::int64_t i = 1; i <= len; ++i) {
    if (!x.bit(i)) {
      zeros.push_back(i);
    }
  }
  for (std::size_t a = 0; a < zeros.size(); ++a) {
    for (std::size_t b = a; b < zeros.size(); ++b) {
      const std::int64_t sum = zeros[a] + zeros[b];
      if (sum > len) {
        break;
      }
      if (x.bit(sum)) {
        return "x_" + std::to_string(zeros[a]) + " + x_" + std::to_string(zeros[b]) +
               " - x_" + std::to_string(sum) + " < 0";
      }
    }
  }
  if (x.ones_count() != x.genus()) {
    return "coordinate sum " + std::to_string(x.ones_count()) + " != genus " +
           std::to_string(x.genus());
  }
  return std::nullopt;
}

/// Full coordinate membership test for genus-g vectors: superadditive
/// coordinates summing to the genus.
inline bool is_kunz_vector(const KunzVector& x) { return !first_kunz_violation(x).has_value(); }

/// Membership test for the fixed-Frobenius slice: coordinate F set, zeros
/// beyond it, superadditivity on index sums up to F, and coordinate sum g.
inline bool is_kunz_of_fg(const KunzVector& x, std::int64_t frobenius) {
  const std::int64_t len = x.length();
  if (frobenius < 1 || frobenius > len || !x.bit(frobenius)) {
    return false;
  }
  if (x.max_one_index() != frobenius) {
    return false;
  }
  if (x.ones_count() != x.genus()) {
    return false;
  }
  for (std::int64_t i = 1; i <= frobenius; ++i) {
    if (x.bit(i)) {
      continue;
    }
    for (std::int64_t j = i; i + j <= frobenius; ++j) {
      if (!x.bit(j) && x.bit(i + j)) {
        return false;
      }
    }
  }
  return true;
}

/// Generator test inside the coordinate window: index i is a member and no
/// two nonzero members sum to it.
inline bool kunz_window_generator(const KunzVector& x, std::int64_t i) {
  if (i < 1 || i > x.length() || x.bit(i)) {
    return false;
  }
  for (std::int64_t j = 1; 2 * j <= i; ++j) {
    if (!x.bit(j) && !x.bit(i - j)) {
      return false;
    }
  }
  return true;
}

/// Pseudo-Frobenius window test: t is a gap and pushing any member of the
/// window by t lands on a member again. Valid for any packed vector whose
/// encoded set contains everything past the window, so it may be applied to
/// a vector carrying one extra set coordinate.
inline bool kunz_pf_contains(const KunzVector& x, std::int64_t t) {
  if (t < 1 || t > x.length() || !x.bit(t)) {
    return false;
  }
  return x.dominates_shift(t);
}

/// Invariants read directly off the coordinates. The generator list only
/// covers indices up to 2g-1; generators at 2g and beyond are recovered from
/// the semigroup view instead.
struct KunzInvariants {
  std::int64_t frobenius = 0;
  std::int64_t multiplicity = 0;
  std::vector<std::int64_t> window_generators;
  std::vector<std::int64_t> pseudo_frobenius;
};

inline KunzInvariants kunz_invariants(const KunzVector& x) {
  KunzInvariants inv;
  inv.frobenius = x.max_one_index();
  inv.multiplicity = x.min_zero_index();
  for (std::int64_t i = 1; i <= x.length(); ++i) {
    if (x.bit(i)) {
      if (x.dominates_shift(i)) {
        inv.pseudo_frobenius.push_back(i);
      }
    } else if (kunz_window_generator(x, i)) {
      inv.window_generators.push_back(i);
    }
  }
  return inv;
}

/// Decodes a vector back to its gap set. Throws std::invalid_argument naming
/// the first violated condition when the coordinates do not encode a
/// semigroup.
inline GapSemigroup semigroup_from_kunz(const KunzVector& x) {
  if (auto why = first_kunz_violation(x)) {
    throw std::invalid_argument("not a Kunz vector: " + *why);
  }
  std::vector<std::int64_t> gaps;
  gaps.reserve(static_cast<std::size_t>(x.genus()));
  for (std::int64_t i = 1; i <= x.length(); ++i) {
    if (x.bit(i)) {
      gaps.push_back(i);
    }
  }
  return GapSemigroup::from_gaps(std::move(gaps));
}

}  // namespace semforest
