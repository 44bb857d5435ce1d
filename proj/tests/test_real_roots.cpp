#include "support.hpp"

#include "lhp/json_io.hpp"
#include "lhp/real_roots.hpp"

#include <catch_amalgamated.hpp>

#include <map>

using namespace lhp;
using lhp::testing::Rng;

TEST_CASE("sturm_chain", "[sturm]") {
  // x^2 - 2 = (2x)(x/2) - 2, so the next entry is 2.
  CHECK(sturm_chain(Polynomial{-2, 0, 1}) == std::vector<Polynomial>{{-2, 0, 1}, {0, 2}, {2}});
  CHECK(sturm_chain(Polynomial{1, 1}) == std::vector<Polynomial>{{1, 1}, {1}});
  // x^2 + 1 = (2x)(x/2) + 1, so the next entry is -1.
  CHECK(sturm_chain(Polynomial{1, 0, 1}) == std::vector<Polynomial>{{1, 0, 1}, {0, 2}, {-1}});
  CHECK_THROWS_AS(sturm_chain(Polynomial{}), std::invalid_argument);
  CHECK_THROWS_AS(sturm_chain(Polynomial{1, 2, 1}), std::invalid_argument);
}

TEST_CASE("count_real_roots", "[sturm]") {
  const Polynomial x2m2{-2, 0, 1};
  CHECK(count_real_roots(x2m2) == 2);
  CHECK(count_real_roots(Polynomial{1, 0, 1}) == 0);
  CHECK(count_real_roots(x2m2, Interval{0, 2}) == 1);
  CHECK(count_real_roots(x2m2, Interval{-2, 0}) == 1);
  // Endpoints that are roots: (lo, hi] semantics hold without perturbation.
  const Polynomial p{2, 3, 1};  // roots -2, -1
  CHECK(count_real_roots(p, Interval{-2, -1}) == 1);
  CHECK(count_real_roots(p, Interval{-3, -2}) == 1);
  CHECK(count_real_roots(p, Interval{-2, 0}) == 1);
  CHECK(count_real_roots(p, Interval{-3, -1}) == 2);
  CHECK(count_real_roots(p, Interval{-1, 5}) == 0);
}

TEST_CASE("isolate_roots", "[isolation]") {
  SECTION("double root") {
    const auto iso = isolate_roots(Polynomial{1, 2, 1});
    REQUIRE(iso.roots.size() == 1);
    CHECK(iso.roots[0].interval.contains(-1));
    CHECK(iso.roots[0].multiplicity == 2);
  }
  SECTION("no real roots") { CHECK(isolate_roots(Polynomial{1, 1, 1}).roots.empty()); }
  SECTION("two simple roots") {
    const auto iso = isolate_roots(Polynomial{2, 3, 1});
    REQUIRE(iso.roots.size() == 2);
    CHECK(iso.roots[0].interval.contains(-2));
    CHECK(iso.roots[1].interval.contains(-1));
    CHECK(iso.roots[0].multiplicity == 1);
    CHECK(iso.roots[1].multiplicity == 1);
    CHECK(iso.roots[0].interval.hi <= iso.roots[1].interval.lo);
  }
  SECTION("constants have no roots") { CHECK(isolate_roots(Polynomial{3}).roots.empty()); }
  CHECK_THROWS_AS(isolate_roots(Polynomial{}), std::invalid_argument);
}

TEST_CASE("refine", "[isolation]") {
  auto iso = refine(isolate_roots(Polynomial{1, 1}), 0, Rational(1, 1000));
  CHECK(iso.roots[0].interval.width() < Rational(1, 1000));
  CHECK(iso.roots[0].interval.contains(-1));
  auto again = refine(iso, 0, Rational(1, 1000));
  CHECK(again == iso);

  // √2 = 1.41421356...
  auto sqrt2 = isolate_roots(Polynomial{-2, 0, 1});
  sqrt2 = refine(sqrt2, 1, Rational(1, 100));
  const auto& iv = sqrt2.roots[1].interval;
  CHECK(iv.width() < Rational(1, 100));
  CHECK(iv.lo < Rational(141421356, 100000000));
  CHECK(iv.hi > Rational(141421356, 100000000));
  CHECK(iv.lo * iv.lo < 2);
  CHECK(iv.hi * iv.hi >= 2);

  CHECK_THROWS_AS(refine(sqrt2, 2, Rational(1, 10)), std::out_of_range);
  CHECK_THROWS_AS(refine(sqrt2, 0, Rational(0)), std::invalid_argument);
}

TEST_CASE("is_real_rooted", "[real-rooted]") {
  CHECK(is_real_rooted(Polynomial{2, 3, 1}));
  CHECK_FALSE(is_real_rooted(Polynomial{1, 0, 1}));
  // 5x^2 + 5x^3 = 5x^2 (1 + x): roots 0, 0, -1.
  CHECK(is_real_rooted(Polynomial{0, 0, 5, 5}));
  CHECK(is_real_rooted(Polynomial{-4}));
  CHECK_THROWS_AS(is_real_rooted(Polynomial{}), std::invalid_argument);
}

TEST_CASE("root isolation JSON", "[isolation][json]") {
  const auto iso = isolate_roots(Polynomial{2, 3, 1});
  const json j = iso;
  CHECK(j.at("polynomial") == json::parse(R"(["2", "3", "1"])"));
  CHECK(j.at("roots").size() == 2);
  CHECK(j.at("roots")[0].at("multiplicity") == 1);
  CHECK(j.get<RootIsolation>() == iso);
}

TEST_CASE("products of linear factors are recovered", "[isolation][property]") {
  Rng rng(101);
  std::uniform_int_distribution<int> count(1, 6), repeat(0, 3);
  for (int trial = 0; trial < 120; ++trial) {
    std::vector<Rational> roots;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
      // Some repeats to exercise multiplicities.
      if (!roots.empty() && repeat(rng) == 0) {
        roots.push_back(roots[std::uniform_int_distribution<std::size_t>(0, roots.size() - 1)(rng)]);
      } else {
        roots.push_back(-testing::random_positive_rational(rng));
      }
    }
    std::map<Rational, unsigned> expected;
    for (const auto& a : roots) ++expected[a];

    const Polynomial p = testing::from_roots(roots, testing::random_positive_rational(rng));
    REQUIRE(is_real_rooted(p));
    const auto iso = isolate_roots(p);
    REQUIRE(iso.roots.size() == expected.size());
    REQUIRE(iso.real_root_count() == static_cast<unsigned>(p.degree()));
    for (const auto& [root, mult] : expected) {
      int hits = 0;
      for (const auto& r : iso.roots) {
        if (r.interval.contains(root)) {
          ++hits;
          REQUIRE(r.multiplicity == mult);
        }
      }
      REQUIRE(hits == 1);
    }
    for (std::size_t i = 1; i < iso.roots.size(); ++i) REQUIRE(iso.roots[i - 1].interval.hi <= iso.roots[i].interval.lo);
    REQUIRE(count_real_roots(squarefree_part(p)) == iso.roots.size());

    // Refinement never changes the number of isolated roots.
    auto refined = iso;
    for (std::size_t i = 0; i < refined.roots.size(); ++i) refined = refine(refined, i, Rational(1, 1 << 20));
    REQUIRE(refined.roots.size() == iso.roots.size());
    for (std::size_t i = 0; i < refined.roots.size(); ++i) {
      REQUIRE(refined.roots[i].interval.lo >= iso.roots[i].interval.lo);
      REQUIRE(refined.roots[i].interval.hi <= iso.roots[i].interval.hi);
    }
  }
}

TEST_CASE("an irreducible quadratic factor breaks real-rootedness", "[real-rooted][property]") {
  Rng rng(202);
  for (int trial = 0; trial < 100; ++trial) {
    const Rational b = testing::random_rational(rng, -10, 10, 3);
    // c > b^2 / 4
    const Rational c = b * b / 4 + testing::random_positive_rational(rng, 5, 7);
    std::vector<Rational> roots;
    for (int i = 0; i < trial % 4; ++i) roots.push_back(testing::random_rational(rng, -9, 9, 4));
    const Polynomial p = testing::from_roots(roots) * Polynomial{c, b, 1};
    REQUIRE_FALSE(is_real_rooted(p));
    REQUIRE(isolate_roots(p).real_root_count() == roots.size());
  }
}
