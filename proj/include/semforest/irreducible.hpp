#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "semforest/elementary.hpp"
#include "semforest/forest.hpp"
#include "semforest/gap_semigroup.hpp"
#include "semforest/kunz_vector.hpp"

namespace semforest {

/// Irreducible semigroups split by the parity of their Frobenius number.
enum class IrreducibleKind { symmetric, pseudo_symmetric };

inline const char* to_string(IrreducibleKind kind) noexcept {
  return kind == IrreducibleKind::symmetric ? "symmetric" : "pseudo-symmetric";
}

struct IrreducibleClassification {
  IrreducibleKind kind;
  GapSemigroup semigroup;
};

/// The genus forced on any irreducible semigroup with Frobenius number F:
/// ceil((F+1)/2), the minimum possible for that F.
constexpr std::int64_t irreducible_genus(std::int64_t frobenius) noexcept {
  return (frobenius + 2) / 2;
}

/// The unique maximal semigroup with Frobenius number F: everything above
/// F/2 except F itself, together with 0. Root of the single class tree that
/// carries all irreducibles with that Frobenius number.
inline GapSemigroup irreducible_tree_root(std::int64_t frobenius) {
  if (frobenius < 1) {
    throw std::invalid_argument("irreducible_tree_root: Frobenius number must be positive");
  }
  std::vector<std::int64_t> gaps;
  for (std::int64_t v = 1; 2 * v < frobenius + 1; ++v) {
    gaps.push_back(v);
  }
  gaps.push_back(frobenius);
  return GapSemigroup::from_gaps(std::move(gaps));
}

/// Classification of a semigroup with at least one gap: engaged exactly when
/// the genus meets the lower bound for its Frobenius number, i.e. when the
/// semigroup is irreducible. Symmetric for odd F, pseudo-symmetric for even.
inline std::optional<IrreducibleClassification> classify(const GapSemigroup& s) {
  if (s.is_naturals()) {
    throw std::domain_error("classify: needs a semigroup with gaps");
  }
  const std::int64_t f = s.frobenius();
  if (s.genus() != irreducible_genus(f)) {
    return std::nullopt;
  }
  const auto kind = (f % 2 != 0) ? IrreducibleKind::symmetric : IrreducibleKind::pseudo_symmetric;
  return IrreducibleClassification{kind, s};
}

/// Streams the irreducible semigroups with Frobenius number F as the single
/// class tree rooted at the maximal semigroup. The visitor receives
/// (vector, kind); the kind is fixed by the parity of F. Returns the count.
template <typename Visitor>
std::uint64_t enumerate_irreducible(std::int64_t frobenius, Visitor&& visit) {
  if (frobenius < 1) {
    throw std::invalid_argument("enumerate_irreducible: Frobenius number must be positive");
  }
  const std::int64_t genus = irreducible_genus(frobenius);
  const auto seeds = enumerate_elementary(frobenius, genus);
  if (seeds.size() != 1 || !(seeds.front().semigroup() == irreducible_tree_root(frobenius))) {
    throw std::logic_error("enumerate_irreducible: the class root must be the maximal semigroup");
  }
  const auto kind =
      (frobenius % 2 != 0) ? IrreducibleKind::symmetric : IrreducibleKind::pseudo_symmetric;
  return traverse_class(seeds.front().kunz(), frobenius,
                        [&](const KunzVector& x, std::int64_t, std::int64_t) { visit(x, kind); });
}

}  // namespace semforest
