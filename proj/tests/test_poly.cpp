#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mixhom/poly.hpp"

using namespace mixhom;

namespace {

Poly<Rational> qpoly(std::initializer_list<long> coeffs) {
  RationalField fq;
  std::vector<Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  return Poly<Rational>(fq, std::move(v));
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  RationalField fq;
  auto p = qpoly({1, 2});       // 1 + 2x
  auto q = qpoly({0, 0, 3});    // 3x^2
  CHECK((p + q) == qpoly({1, 2, 3}));
  CHECK((p * q) == qpoly({0, 0, 3, 6}));
  CHECK((p - p).is_zero());
  CHECK(qpoly({5, 0, 0}) == qpoly({5}));  // trailing zeros trimmed
  CHECK(p.eval(Rational(3)) == 7);
}

TEST_CASE("cyclic family closed forms") {
  RationalField fq;
  auto cs = PolySeq<Rational>::cyclic(fq);

  CHECK(cs.c(0) == qpoly({1}));
  CHECK(cs.c(1) == qpoly({2, -1}));
  CHECK(cs.c(2) == qpoly({3, -3, 1}));

  // Signed binomial coefficients up to degree 6.
  const std::vector<std::vector<long>> expected = {
      {1},
      {2, -1},
      {3, -3, 1},
      {4, -6, 4, -1},
      {5, -10, 10, -5, 1},
      {6, -15, 20, -15, 6, -1},
      {7, -21, 35, -35, 21, -7, 1},
  };
  for (std::size_t n = 0; n < expected.size(); ++n) {
    auto c = cs.c(static_cast<long>(n));
    REQUIRE(c.size() == expected[n].size());
    for (std::size_t i = 0; i < expected[n].size(); ++i)
      CHECK(c.coeff(i) == expected[n][i]);
  }
}

TEST_CASE("derived constants of the cyclic family") {
  RationalField fq;
  auto cs = PolySeq<Rational>::cyclic(fq);

  const std::vector<long> beta = {1, 2, 3, 4, 5, 6, 7};
  const std::vector<long> eps = {0, 2, 6, 12, 20, 30, 42};
  const std::vector<long> delta = {0, -1, -9, -30, -70, -135, -231};
  for (long n = 0; n <= 6; ++n) {
    CHECK(cs.beta(n) == beta[static_cast<std::size_t>(n)]);
    if (n >= 1) {
      CHECK(cs.eps(n) == eps[static_cast<std::size_t>(n)]);
      CHECK(cs.delta(n) == delta[static_cast<std::size_t>(n)]);
    }
  }

  // f_n = (1 - x)^n.
  auto one_minus_x = qpoly({1, -1});
  auto pw = qpoly({1});
  for (long n = 0; n <= 6; ++n) {
    CHECK(cs.f(n) == pw);
    pw = pw * one_minus_x;
  }
}

TEST_CASE("family invariants hold for every kind") {
  RationalField fq;
  std::vector<PolySeq<Rational>> families = {
      PolySeq<Rational>::cyclic(fq),
      PolySeq<Rational>::constant_one(fq),
      PolySeq<Rational>::geometric(fq, Rational(2)),
      PolySeq<Rational>::explicit_list(
          fq, {qpoly({1, 4}), qpoly({2, -1, 7}), qpoly({3}), qpoly({1, 1, 1, 1})}),
  };
  for (const auto& cs : families) {
    for (long n = 0; n <= 3; ++n) {
      CHECK(cs.eps(n) == cs.beta(n - 1 >= 0 ? n - 1 : -1) * cs.beta(n));
      CHECK(cs.f(n) == cs.c(n) - cs.c(n - 1));
    }
  }
}

TEST_CASE("geometric and constant-one families") {
  RationalField fq;
  auto g = PolySeq<Rational>::geometric(fq, Rational(3));
  CHECK(g.c(0) == qpoly({1}));
  CHECK(g.c(2) == qpoly({9}));
  CHECK(g.beta(4) == 81);
  CHECK(g.delta(3) == 0);

  auto one = PolySeq<Rational>::constant_one(fq);
  CHECK(one.c(5) == qpoly({1}));
  CHECK(one.f(0) == qpoly({1}));
  CHECK(one.f(3).is_zero());
}

TEST_CASE("small characteristic rejected for cyclic families") {
  PrimeField f5(5);
  auto cs = PolySeq<FpElem>::cyclic(f5);
  // beta_4 = 5 = 0 in F_5.
  CHECK(cs.invertible(3));
  CHECK_FALSE(cs.invertible(4));
  CHECK_THROWS_AS(cs.require_invertible_up_to(6), error);
  CHECK_NOTHROW(cs.require_invertible_up_to(3));

  PrimeField f101(101);
  CHECK_NOTHROW(PolySeq<FpElem>::cyclic(f101).require_invertible_up_to(6));
}

TEST_CASE("explicit family bounds") {
  RationalField fq;
  auto cs = PolySeq<Rational>::explicit_list(fq, {qpoly({1})});
  CHECK_NOTHROW(cs.c(0));
  CHECK_THROWS_AS(cs.c(1), error);
}

TEST_CASE("operator evaluation") {
  RationalField fq;
  auto m = Matrix<Rational>(2, 2, fq);
  m.at(0, 1) = 1;  // nilpotent shift

  auto p = qpoly({2, -1});  // 2 - x
  auto pm = eval_at(p, m);
  CHECK(pm.at(0, 0) == 2);
  CHECK(pm.at(0, 1) == -1);
  CHECK(pm.at(1, 1) == 2);

  CHECK(eval_at(qpoly({0, 1}), m) == m);
  CHECK(eval_at(qpoly({1}), m) == Matrix<Rational>::identity(2, fq));
  auto z = Matrix<Rational>(2, 2, fq);
  CHECK(eval_at(qpoly({2, -1}), z) == Matrix<Rational>::identity(2, fq).scaled(Rational(2)));

  // Ring homomorphism on a single (hence commuting) argument.
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> dist(-4, 4);
  for (int t = 0; t < 10; ++t) {
    Matrix<Rational> r(3, 3, fq);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) r.at(i, j) = Rational(dist(rng));
    auto a = qpoly({dist(rng), dist(rng), dist(rng)});
    auto b = qpoly({dist(rng), dist(rng)});
    CHECK(eval_at(a * b, r) == eval_at(a, r) * eval_at(b, r));
    CHECK(eval_at(a + b, r) == eval_at(a, r) + eval_at(b, r));

    // Rectangular Horner forms match the direct evaluation.
    Matrix<Rational> wide(3, 2, fq);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 2; ++j) wide.at(i, j) = Rational(dist(rng));
    CHECK(eval_left(a, r, wide) == eval_at(a, r) * wide);
    CHECK(eval_right(a, wide.transpose(), r) == wide.transpose() * eval_at(a, r));
  }
}
