#include "doctest.h"

#include "nashcar/error.hpp"
#include "nashcar/polynomial.hpp"
#include "nashcar/rational.hpp"
#include "oracles.hpp"

using namespace nashcar;

namespace {

QPoly poly(std::initializer_list<long> cs) {
  QPoly p;
  for (long c : cs) p.emplace_back(c);
  return p;
}

QPoly random_poly(oracle::Rng& rng, std::int64_t deg) {
  QPoly p;
  for (std::int64_t t = 0; t < deg; ++t) p.push_back(Rat(static_cast<long>(rng.uniform(-4, 4))));
  p.push_back(rng.coefficient());
  return p;
}

}  // namespace

TEST_CASE("rational parsing and normal form") {
  CHECK(Rat::parse("3/6") == Rat(1, 2));
  CHECK(Rat::parse("-4").str() == "-4");
  CHECK(Rat::parse("-2/4").str() == "-1/2");
  CHECK(Rat(6, -4).den() == 2);
  for (const char* bad : {"", "1/0", "abc", "1.5", "1/", "/2", "2/-4"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rat::parse(bad), Error);
  }
}

TEST_CASE("floor, ceil and residues") {
  CHECK(Rat(-3, 2).floor() == -2);
  CHECK(Rat(-3, 2).ceil() == -1);
  CHECK(Rat(7, 1).floor() == 7);
  CHECK(residue(-3, 5) == 2);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(ceil_div(-7, 2) == -3);
  CHECK(mod_inverse(3, 7) == 5);
  for (std::int64_t r = 2; r < 40; ++r)
    for (std::int64_t a = 1; a < r; ++a)
      if (gcd64(a, r) == 1) CHECK(residue(a * mod_inverse(a, r), r) == 1);
}

TEST_CASE("exponent vectors print with their common denominator") {
  CHECK(ExpVec::scaled(2, {9, 11, 3, 2}).str() == "1/2·(9,11,3,2)");
  CHECK(ExpVec::scaled(1, {1, 2, 3}).str() == "(1,2,3)");
  CHECK(ExpVec::scaled(4, {2, 2}).str() == "1/2·(1,1)");
  const ExpVec v = ExpVec::scaled(3, {1, 2, 3});
  CHECK(v.common_denominator() == 3);
  CHECK(v.dot(ExpVec::scaled(1, {3, 3, 3})) == Rat(6));
}

TEST_CASE("monomial maps compose with their inverse to the identity") {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::vector<Rat>> rows(3, std::vector<Rat>(3));
    for (auto& row : rows)
      for (auto& c : row) c = Rat(static_cast<long>(rng.uniform(-3, 3)));
    if (invert_matrix(rows).empty()) {
      CHECK_THROWS_AS(MonomialMap{rows}, Error);
      continue;
    }
    const MonomialMap m(rows);
    CHECK(m * m.inverse() == MonomialMap::identity(3));
    const ExpVec v = ExpVec::scaled(5, {rng.uniform(0, 9), rng.uniform(0, 9), rng.uniform(0, 9)});
    CHECK(m.inverse().apply(m.apply(v)) == v);
  }
}

TEST_CASE("division and gcd") {
  const QPoly a = poly({-1, 0, 1}), b = poly({1, 1});
  const auto [q, r] = divide(a, b);
  CHECK(q == poly({-1, 1}));
  CHECK(r.empty());
  CHECK(gcd(a, poly({1, 2, 1})) == poly({1, 1}));
  CHECK(degree(QPoly{}) == -1);
}

TEST_CASE("bezout coefficients combine to one") {
  oracle::Rng rng(3);
  int found = 0;
  for (int trial = 0; trial < 200 && found < 60; ++trial) {
    const QPoly a = random_poly(rng, rng.uniform(1, 4)), b = random_poly(rng, rng.uniform(1, 4));
    if (degree(gcd(a, b)) != 0) {
      CHECK_THROWS_AS(bezout(a, b), Error);
      continue;
    }
    ++found;
    const auto [s, t] = bezout(a, b);
    CHECK(add(multiply(s, a), multiply(t, b)) == poly({1}));
  }
  CHECK(found > 0);
}

TEST_CASE("squarefree decomposition reconstructs the input") {
  oracle::Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    QPoly p = random_poly(rng, rng.uniform(1, 2));
    const QPoly sq = random_poly(rng, 1);
    p = multiply(p, multiply(sq, sq));
    if (rng.uniform(0, 1) == 1) p = multiply(p, multiply(sq, p));
    const auto parts = squarefree_decomposition(p);
    QPoly back = poly({1});
    for (std::size_t k = 0; k < parts.size(); ++k) {
      CHECK(degree(gcd(parts[k], derivative(parts[k]))) <= 0);
      for (std::size_t e = 0; e <= k; ++e) back = multiply(back, parts[k]);
    }
    CHECK(monic(back) == monic(p));
  }
}

TEST_CASE("rational roots") {
  // (2S - 1)(S + 3)(S^2 + 1)
  const QPoly p = multiply(multiply(poly({-1, 2}), poly({3, 1})), poly({1, 0, 1}));
  const auto roots = rational_roots(p);
  REQUIRE(roots);
  CHECK(*roots == std::vector<Rat>{Rat(-3), Rat(1, 2)});
  for (const auto& x : *roots) CHECK(evaluate(p, x).is_zero());
  CHECK(rational_roots(poly({2, 0, 1}))->empty());
}
