#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "semforest/kunz_vector.hpp"
#include "semforest/oracle.hpp"
#include "test_support.hpp"

using semforest::GapSemigroup;
using semforest::KunzVector;
using I64 = std::vector<std::int64_t>;

TEST_CASE("coordinates of known semigroups", "[kunz]") {
  CHECK(semforest::kunz_from_semigroup(GapSemigroup::from_generators({3, 8, 10})).to_string() ==
        "110110100");
  CHECK(semforest::kunz_from_semigroup(GapSemigroup::from_generators({2, 11})).to_string() ==
        "101010101");
  CHECK(semforest::kunz_from_semigroup(
            GapSemigroup::from_generators({6, 7, 8, 9, 10, 11}))
            .to_string() == "111110000");
  CHECK_THROWS_AS(semforest::kunz_from_semigroup(GapSemigroup::naturals()), std::domain_error);
}

TEST_CASE("decoding", "[kunz]") {
  CHECK(semforest::semigroup_from_kunz(KunzVector::from_string("110110100")).gaps() ==
        I64{1, 2, 4, 5, 7});
  CHECK(semforest::semigroup_from_kunz(KunzVector::from_string("1")).gaps() == I64{1});
  CHECK(semforest::semigroup_from_kunz(KunzVector::from_string("101010101")).gaps() ==
        I64{1, 3, 5, 7, 9});
}

TEST_CASE("decoding rejects invalid coordinates with the violated condition", "[kunz]") {
  CHECK_THROWS_WITH(semforest::semigroup_from_kunz(KunzVector::from_string("011")),
                    Catch::Matchers::ContainsSubstring("x_1 + x_1 - x_2"));
  CHECK_THROWS_WITH(semforest::semigroup_from_kunz(KunzVector::from_string("100")),
                    Catch::Matchers::ContainsSubstring("sum"));
}

TEST_CASE("text parsing", "[kunz]") {
  CHECK(KunzVector::from_string("110110100").to_string() == "110110100");
  CHECK_THROWS_AS(KunzVector::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(KunzVector::from_string("10"), std::invalid_argument);
  CHECK_THROWS_AS(KunzVector::from_string("1x1"), std::invalid_argument);
}

TEST_CASE("coordinate membership predicates", "[kunz]") {
  CHECK(semforest::is_kunz_vector(KunzVector::from_string("101")));       // <2,5>
  CHECK_FALSE(semforest::is_kunz_vector(KunzVector::from_string("011")));  // 1+1=2 breaks closure
  CHECK(semforest::is_kunz_of_fg(KunzVector::from_string("110110100"), 7));
  CHECK_FALSE(semforest::is_kunz_of_fg(KunzVector::from_string("110110100"), 9));
  CHECK_FALSE(semforest::is_kunz_of_fg(KunzVector::from_string("101010101"), 7));
}

TEST_CASE("membership predicate matches the set of realizable vectors", "[kunz][props]") {
  // For every genus up to 6, a 0/1 pattern passes is_kunz_vector exactly
  // when some semigroup of that genus encodes to it.
  const auto levels = semforest::oracle_genus_tree(6);
  for (std::int64_t g = 1; g <= 6; ++g) {
    std::set<std::string> realizable;
    for (const auto& s : levels[static_cast<std::size_t>(g)]) {
      realizable.insert(semforest::kunz_from_semigroup(s).to_string());
    }
    const std::int64_t len = 2 * g - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
      KunzVector x(g);
      for (std::int64_t i = 1; i <= len; ++i) {
        if ((mask >> (i - 1)) & 1u) {
          x.set_bit(i, true);
        }
      }
      CHECK(semforest::is_kunz_vector(x) == (realizable.count(x.to_string()) > 0));
    }
  }
}

TEST_CASE("round trips both ways", "[kunz][props]") {
  const auto levels = semforest::oracle_genus_tree(8);
  for (std::size_t g = 1; g < levels.size(); ++g) {
    for (const auto& s : levels[g]) {
      CHECK(semforest::semigroup_from_kunz(semforest::kunz_from_semigroup(s)) == s);
    }
  }
  for (std::int64_t g = 1; g <= 6; ++g) {
    for (const auto& x : semforest::oracle_kunz_exhaustive(g)) {
      CHECK(semforest::kunz_from_semigroup(semforest::semigroup_from_kunz(x)) == x);
    }
  }
}

TEST_CASE("coordinates agree with the Apéry derivation", "[kunz][props]") {
  // x_i = (w_i - i) / (2g) where w is the Apéry set with respect to 2g.
  const auto levels = semforest::oracle_genus_tree(6);
  for (std::size_t g = 1; g < levels.size(); ++g) {
    for (const auto& s : levels[g]) {
      const std::int64_t n = 2 * s.genus();
      const auto w = testsupport::naive_apery(s, n);
      const auto x = semforest::kunz_from_semigroup(s);
      for (std::int64_t i = 1; i < n; ++i) {
        const std::int64_t xi = (w[static_cast<std::size_t>(i)] - i) / n;
        CHECK(xi == (x.bit(i) ? 1 : 0));
      }
    }
  }
}

TEST_CASE("index-level invariants of known vectors", "[kunz]") {
  const auto inv = semforest::kunz_invariants(KunzVector::from_string("110110100"));
  CHECK(inv.frobenius == 7);
  CHECK(inv.multiplicity == 3);
  CHECK(inv.window_generators == I64{3, 8});  // 10 lies past the window
  CHECK(inv.pseudo_frobenius == I64{5, 7});

  const auto full = semforest::kunz_invariants(KunzVector::from_string("111110000"));
  CHECK(full.frobenius == 5);
  CHECK(full.multiplicity == 6);
  CHECK(full.pseudo_frobenius == I64{1, 2, 3, 4, 5});

  const auto chain = semforest::kunz_invariants(KunzVector::from_string("101010101"));
  CHECK(chain.frobenius == 9);
  CHECK(chain.multiplicity == 2);
  CHECK(chain.pseudo_frobenius == I64{9});
}

TEST_CASE("index-level invariants agree with the semigroup view", "[kunz][props]") {
  const auto levels = semforest::oracle_genus_tree(7);
  for (std::size_t g = 1; g < levels.size(); ++g) {
    for (const auto& s : levels[g]) {
      const auto x = semforest::kunz_from_semigroup(s);
      const auto inv = semforest::kunz_invariants(x);
      CAPTURE(x.to_string());
      CHECK(inv.frobenius == s.frobenius());
      CHECK(inv.multiplicity == s.multiplicity());
      CHECK(inv.pseudo_frobenius == s.pseudo_frobenius());  // always below 2g

      I64 window_gens;
      for (std::int64_t gen : s.minimal_generators()) {
        if (gen <= x.length()) {
          window_gens.push_back(gen);
        }
      }
      CHECK(inv.window_generators == window_gens);
    }
  }
}

TEST_CASE("genus cap is enforced", "[kunz]") {
  CHECK_THROWS_AS(KunzVector(semforest::kMaxGenus + 1), std::invalid_argument);
  CHECK_THROWS_AS(KunzVector(0), std::invalid_argument);
  CHECK(KunzVector(semforest::kMaxGenus).length() == 2 * semforest::kMaxGenus - 1);
}
