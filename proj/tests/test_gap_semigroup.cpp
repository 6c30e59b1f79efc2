#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "semforest/gap_semigroup.hpp"
#include "semforest/oracle.hpp"
#include "test_support.hpp"

using semforest::GapSemigroup;
using I64 = std::vector<std::int64_t>;

TEST_CASE("from_generators reproduces known gap sets", "[gap]") {
  CHECK(GapSemigroup::from_generators({4, 6, 9, 11}).gaps() == I64{1, 2, 3, 5, 7});
  CHECK(GapSemigroup::from_generators({1}).gaps().empty());
  CHECK(GapSemigroup::from_generators({2, 11}).gaps() == I64{1, 3, 5, 7, 9});

  const auto s = GapSemigroup::from_generators({4, 6, 9, 11});
  CHECK(s.genus() == 5);
  CHECK(s.frobenius() == 7);
  CHECK(s.multiplicity() == 4);
}

TEST_CASE("from_generators rejects inputs without finite complement", "[gap]") {
  CHECK_THROWS_AS(GapSemigroup::from_generators({}), std::invalid_argument);
  CHECK_THROWS_AS(GapSemigroup::from_generators({2, 4, 6}), std::invalid_argument);
  CHECK_THROWS_AS(GapSemigroup::from_generators({0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(GapSemigroup::from_generators({-2, 3}), std::invalid_argument);
}

TEST_CASE("from_gaps validates shape", "[gap]") {
  CHECK_THROWS_AS(GapSemigroup::from_gaps({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(GapSemigroup::from_gaps({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(GapSemigroup::from_gaps({1, 1}), std::invalid_argument);
}

TEST_CASE("membership", "[gap]") {
  const auto s = GapSemigroup::from_generators({4, 6, 9, 11});
  CHECK_FALSE(s.contains(7));  // the Frobenius number itself
  CHECK(s.contains(0));
  CHECK(s.contains(8));
  CHECK(s.contains(1000));

  // 13 = 2 + 11, confirmed by independent reachability
  const auto t = GapSemigroup::from_generators({2, 11});
  CHECK(t.contains(13));
  CHECK(testsupport::reachable({2, 11}, 13));
  for (std::int64_t n = 0; n <= 30; ++n) {
    CHECK(t.contains(n) == testsupport::reachable({2, 11}, n));
  }
}

TEST_CASE("minimal generators", "[gap]") {
  CHECK(GapSemigroup::from_gaps({1, 2, 4, 5, 7}).minimal_generators() == I64{3, 8, 10});
  CHECK(GapSemigroup::naturals().minimal_generators() == I64{1});

  // {0, 6, ->}: expectations from the definition-level scan
  const auto half_line = GapSemigroup::from_gaps({1, 2, 3, 4, 5});
  CHECK(half_line.minimal_generators() == testsupport::naive_minimal_generators(half_line));
  CHECK(half_line.minimal_generators() == I64{6, 7, 8, 9, 10, 11});
}

TEST_CASE("pseudo-Frobenius numbers", "[gap]") {
  const auto a = GapSemigroup::from_generators({4, 6, 9, 11});
  CHECK(a.pseudo_frobenius() == testsupport::naive_pseudo_frobenius(a));
  CHECK(a.pseudo_frobenius() == I64{2, 5, 7});

  CHECK(GapSemigroup::from_gaps({1, 2, 3, 4, 5}).pseudo_frobenius() == I64{1, 2, 3, 4, 5});

  const auto sym = GapSemigroup::from_generators({2, 11});
  CHECK(sym.pseudo_frobenius() == testsupport::naive_pseudo_frobenius(sym));
  CHECK(sym.pseudo_frobenius() == I64{9});  // type 1

  CHECK_THROWS_AS(GapSemigroup::naturals().pseudo_frobenius(), std::domain_error);
}

TEST_CASE("Apéry sets and the Selmer identities", "[gap]") {
  const auto two_eleven = GapSemigroup::from_generators({2, 11});
  CHECK(two_eleven.apery_set(2) == I64{0, 11});

  CHECK(GapSemigroup::naturals().apery_set(1) == I64{0});

  const auto s = GapSemigroup::from_generators({3, 8, 10});
  const auto w = s.apery_set(10);
  CHECK(w == testsupport::naive_apery(s, 10));
  std::int64_t sum = 0;
  std::int64_t max = 0;
  for (std::int64_t v : w) {
    sum += v;
    max = std::max(max, v);
  }
  CHECK(2 * sum == 2 * 10 * s.genus() + 10 * (10 - 1));  // g = sum/n - (n-1)/2
  CHECK(s.frobenius() == max - 10);

  CHECK_THROWS_AS(s.apery_set(7), std::invalid_argument);  // 7 is a gap
  CHECK_THROWS_AS(s.apery_set(0), std::invalid_argument);
}

TEST_CASE("frobenius is undefined for the naturals", "[gap]") {
  CHECK_THROWS_AS(GapSemigroup::naturals().frobenius(), std::domain_error);
  CHECK(GapSemigroup::naturals().multiplicity() == 1);
  CHECK(GapSemigroup::naturals().genus() == 0);
}

TEST_CASE("structural invariants over every small semigroup", "[gap][props]") {
  const auto levels = semforest::oracle_genus_tree(8);
  for (const auto& level : levels) {
    for (const auto& s : level) {
      CAPTURE(semforest::to_csv(s.gaps()));
      CHECK(s.complement_closed());
      CHECK(GapSemigroup::from_generators(s.minimal_generators()) == s);
      if (!s.is_naturals()) {
        CHECK(2 * s.genus() >= s.frobenius() + 1);

        const auto pf = s.pseudo_frobenius();
        CHECK(std::binary_search(pf.begin(), pf.end(), s.frobenius()));
        CHECK(pf == testsupport::naive_pseudo_frobenius(s));

        // Apéry set with respect to the multiplicity: n distinct residues
        // and both Selmer identities.
        const std::int64_t n = s.multiplicity();
        const auto w = s.apery_set(n);
        REQUIRE(static_cast<std::int64_t>(w.size()) == n);
        std::int64_t sum = 0;
        std::int64_t max = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
          CHECK(w[i] % n == static_cast<std::int64_t>(i));
          sum += w[i];
          max = std::max(max, w[i]);
        }
        CHECK(2 * sum == 2 * n * s.genus() + n * (n - 1));
        CHECK(s.frobenius() == max - n);
      }
    }
  }
}
