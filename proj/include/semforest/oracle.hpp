#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "semforest/forest.hpp"
#include "semforest/gap_semigroup.hpp"
#include "semforest/kunz_vector.hpp"

namespace semforest {

/// Ceilings for the deliberately naive reference enumerators below. They
/// exist to verify the class-tree engine, not to compete with it.
inline constexpr std::int64_t kGenusTreeCap = 12;
inline constexpr std::int64_t kKunzScanCap = 7;

/// Reference enumeration of Sem(0..g_max): starting from the naturals,
/// children arise by deleting one minimal generator above the Frobenius
/// number, which makes level k exactly the genus-k semigroups, each produced
/// once. Shares nothing with the class-tree engine beyond GapSemigroup.
inline std::vector<std::vector<GapSemigroup>> oracle_genus_tree(std::int64_t g_max,
                                                                std::int64_t cap = kGenusTreeCap) {
  if (g_max < 0 || g_max > cap) {
    throw std::invalid_argument("oracle_genus_tree: genus " + std::to_string(g_max) +
                                " is beyond the cap " + std::to_string(cap));
  }
  std::vector<std::vector<GapSemigroup>> levels;
  levels.push_back({GapSemigroup::naturals()});
  for (std::int64_t g = 1; g <= g_max; ++g) {
    std::vector<GapSemigroup> next;
    for (const GapSemigroup& s : levels.back()) {
      const std::int64_t floor = s.is_naturals() ? 0 : s.frobenius();
      for (std::int64_t x : s.minimal_generators()) {
        if (x <= floor) {
          continue;  // the restriction that makes every semigroup appear once
        }
        std::vector<std::int64_t> gaps = s.gaps();
        gaps.insert(std::upper_bound(gaps.begin(), gaps.end(), x), x);
        next.push_back(GapSemigroup::from_gaps(std::move(gaps)));
      }
    }
    std::sort(next.begin(), next.end());
    levels.push_back(std::move(next));
  }
  return levels;
}

/// Reference Kunz(g): scans every 0/1 pattern of length 2g-1 and keeps those
/// whose coordinates sum to g and are superadditive. The conditions are
/// re-coded here on raw masks, independent of the kunz module.
inline std::vector<KunzVector> oracle_kunz_exhaustive(std::int64_t genus,
                                                      std::int64_t cap = kKunzScanCap) {
  if (genus < 1 || genus > cap) {
    throw std::invalid_argument("oracle_kunz_exhaustive: genus " + std::to_string(genus) +
                                " is beyond the cap " + std::to_string(cap));
  }
  const std::int64_t len = 2 * genus - 1;
  const auto coord = [](std::uint64_t mask, std::int64_t i) -> std::int64_t {
    return (mask >> (i - 1)) & 1u;
  };
  std::vector<KunzVector> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
    if (std::popcount(mask) != genus) {
      continue;
    }
    bool ok = true;
    for (std::int64_t i = 1; ok && i <= len; ++i) {
      for (std::int64_t j = i; i + j <= len; ++j) {
        if (coord(mask, i) + coord(mask, j) < coord(mask, i + j)) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) {
      continue;
    }
    KunzVector x(genus);
    for (std::int64_t i = 1; i <= len; ++i) {
      if (coord(mask, i)) {
        x.set_bit(i, true);
      }
    }
    out.push_back(std::move(x));
  }
  return out;
}

/// Outcome of checking the class-tree engine against the reference
/// enumerators for one genus (optionally one Frobenius number).
struct OracleReport {
  std::int64_t genus = 0;
  std::optional<std::int64_t> frobenius;
  std::uint64_t expected_count = 0;  // genus-tree reference
  std::uint64_t actual_count = 0;    // class-tree engine
  std::vector<std::string> missing;  // canonical gap lists the engine did not produce
  std::vector<std::string> extra;    // engine output absent from the reference
  bool kunz_scan_ran = false;
  bool kunz_scan_agrees = true;

  bool pass() const noexcept {
    return missing.empty() && extra.empty() && (!kunz_scan_ran || kunz_scan_agrees);
  }

  std::string human() const {
    std::ostringstream out;
    out << "verify genus=" << genus;
    if (frobenius) {
      out << " frobenius=" << *frobenius;
    }
    out << ": " << (pass() ? "pass" : "FAIL") << " (engine " << actual_count << ", reference "
        << expected_count << ")";
    for (const auto& m : missing) {
      out << "\n  missing gaps {" << m << "}";
    }
    for (const auto& e : extra) {
      out << "\n  extra gaps {" << e << "}";
    }
    if (kunz_scan_ran && !kunz_scan_agrees) {
      out << "\n  coordinate-space scan disagrees";
    }
    return out.str();
  }

  /// Key=value rendering, one line per field, for machine consumption.
  std::string key_values() const {
    std::ostringstream out;
    out << "verify.genus=" << genus << '\n';
    if (frobenius) {
      out << "verify.frobenius=" << *frobenius << '\n';
    }
    out << "verify.expected_count=" << expected_count << '\n';
    out << "verify.actual_count=" << actual_count << '\n';
    out << "verify.missing=" << missing.size() << '\n';
    out << "verify.extra=" << extra.size() << '\n';
    out << "verify.kunz_scan=" << (kunz_scan_ran ? (kunz_scan_agrees ? "pass" : "fail") : "skipped")
        << '\n';
    out << "verify.pass=" << (pass() ? "true" : "false") << '\n';
    return out.str();
  }
};

namespace detail {

inline OracleReport compare_with_oracles(std::int64_t genus,
                                         std::optional<std::int64_t> frobenius) {
  OracleReport report;
  report.genus = genus;
  report.frobenius = frobenius;

  std::vector<std::string> expected;
  const auto levels = oracle_genus_tree(genus);
  for (const GapSemigroup& s : levels[static_cast<std::size_t>(genus)]) {
    if (!frobenius || s.frobenius() == *frobenius) {
      expected.push_back(to_csv(s.gaps()));
    }
  }

  std::vector<std::string> actual;
  std::vector<std::string> actual_vectors;
  const auto visit = [&](const KunzVector& x, std::int64_t, std::int64_t) {
    actual.push_back(to_csv(semigroup_from_kunz(x).gaps()));
    actual_vectors.push_back(x.to_string());
  };
  if (frobenius) {
    enumerate_fg(*frobenius, genus, visit);
  } else {
    enumerate_genus(genus, visit);
  }

  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  report.expected_count = expected.size();
  report.actual_count = actual.size();
  std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(),
                      std::back_inserter(report.missing));
  std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(),
                      std::back_inserter(report.extra));

  if (genus <= kKunzScanCap) {
    report.kunz_scan_ran = true;
    std::vector<std::string> scanned;
    for (const KunzVector& x : oracle_kunz_exhaustive(genus)) {
      if (!frobenius || x.max_one_index() == *frobenius) {
        scanned.push_back(x.to_string());
      }
    }
    std::sort(scanned.begin(), scanned.end());
    std::sort(actual_vectors.begin(), actual_vectors.end());
    report.kunz_scan_agrees = (scanned == actual_vectors);
  }
  return report;
}

}  // namespace detail

/// Triple check of Sem(g): class-tree engine against the genus-tree
/// reference, plus the exhaustive coordinate scan when g is within its cap.
inline OracleReport verify_genus(std::int64_t genus) {
  if (genus < 1) {
    throw std::invalid_argument("verify_genus: genus must be positive");
  }
  return detail::compare_with_oracles(genus, std::nullopt);
}

/// Same check restricted to Sem(F, g).
inline OracleReport verify_fg(std::int64_t frobenius, std::int64_t genus) {
  require_feasible(frobenius, genus);
  return detail::compare_with_oracles(genus, frobenius);
}

}  // namespace semforest
