#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mixhom/linalg.hpp"

using namespace mixhom;

namespace {

template <class K>
Matrix<K> make(const Field<K>& fld, std::size_t rows, std::size_t cols,
               std::initializer_list<long> entries) {
  Matrix<K> m(rows, cols, fld);
  auto it = entries.begin();
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = fld.from_long(*it++);
  return m;
}

template <class K>
Matrix<K> random_matrix(const Field<K>& fld, std::size_t rows, std::size_t cols,
                        std::mt19937_64& rng) {
  Matrix<K> m(rows, cols, fld);
  std::uniform_int_distribution<long> dist(-9, 9);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = fld.from_long(dist(rng));
  return m;
}

}  // namespace

TEST_CASE("field arithmetic basics") {
  RationalField q;
  CHECK(q.parse("-3/4") == Rational(-3, 4));
  CHECK(q.parse("6/4") == Rational(3, 2));
  CHECK(q.parse("7") == Rational(7));
  CHECK_THROWS_AS(q.parse("x"), error);
  CHECK(q.inv(Rational(-2)) == Rational(-1, 2));
  CHECK_THROWS_AS(q.inv(Rational(0)), error);

  PrimeField f101(101);
  CHECK(f101.from_long(-1) == 100);
  CHECK(f101.mul(f101.inv(7), 7) == 1);
  CHECK(f101.parse("-5") == 96);
  CHECK_THROWS_AS(PrimeField(100), error);
  CHECK_THROWS_AS(f101.inv(0), error);

  PrimeField big(1000003);
  CHECK(big.mul(big.inv(999999), 999999) == 1);
}

TEST_CASE("rref ranks and pivots") {
  RationalField fq;
  auto r1 = rref(make(fq, 2, 2, {1, 2, 2, 4}));
  CHECK(r1.pivots == std::vector<std::size_t>{0});
  CHECK(rank(make(fq, 2, 3, {0, 0, 0, 0, 0, 0})) == 0);
  auto id3 = Matrix<Rational>::identity(3, fq);
  auto r3 = rref(id3);
  CHECK(r3.reduced == id3);
  CHECK(r3.pivots == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("fraction-free and generic elimination agree") {
  RationalField fq;
  std::mt19937_64 rng(7);
  for (int t = 0; t < 25; ++t) {
    std::uniform_int_distribution<std::size_t> sz(0, 7);
    auto m = random_matrix(fq, sz(rng), sz(rng), rng);
    // Sprinkle in non-integer entries.
    if (m.rows() && m.cols()) m.at(0, 0) = Rational(1, 3);
    auto a = rref(m);
    auto b = rref_generic(m);
    CHECK(a.reduced == b.reduced);
    CHECK(a.pivots == b.pivots);
  }
}

TEST_CASE("kernel and image bases") {
  RationalField fq;
  CHECK(kernel_basis(make(fq, 2, 3, {0, 0, 0, 0, 0, 0})).cols() == 3);
  CHECK(kernel_basis(Matrix<Rational>::identity(4, fq)).cols() == 0);
  auto k = kernel_basis(make(fq, 1, 2, {1, 1}));
  REQUIRE(k.cols() == 1);
  CHECK(k.at(0, 0) == -k.at(1, 0));
  CHECK(k.at(0, 0) != 0);

  CHECK(image_basis(Matrix<Rational>::identity(3, fq)).dim() == 3);
  CHECK(image_basis(make(fq, 3, 2, {0, 0, 0, 0, 0, 0})).dim() == 0);
  auto im = image_basis(make(fq, 2, 1, {1, 2}));
  REQUIRE(im.dim() == 1);
  CHECK(im.basis().at(1, 0) == 2 * im.basis().at(0, 0));
}

TEST_CASE("rank-nullity over both fields") {
  std::mt19937_64 rng(11);
  RationalField fq;
  PrimeField fp(101);
  for (int t = 0; t < 20; ++t) {
    std::uniform_int_distribution<std::size_t> sz(0, 6);
    auto mq = random_matrix(fq, sz(rng), sz(rng), rng);
    CHECK(rank(mq) + kernel_basis(mq).cols() == mq.cols());
    auto mp = random_matrix(fp, sz(rng), sz(rng), rng);
    CHECK(rank(mp) + kernel_basis(mp).cols() == mp.cols());
  }
}

TEST_CASE("solve") {
  RationalField fq;
  auto a = make(fq, 2, 2, {1, 2, 3, 4});
  auto b = make(fq, 2, 1, {5, 6});
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);

  // Inconsistent system.
  auto sing = make(fq, 2, 2, {1, 2, 2, 4});
  CHECK_FALSE(solve(sing, make(fq, 2, 1, {0, 1})).has_value());

  // Underdetermined: free variables pinned to zero.
  auto wide = make(fq, 1, 3, {1, 1, 1});
  auto xw = solve(wide, make(fq, 1, 1, {3}));
  REQUIRE(xw.has_value());
  CHECK(xw->at(0, 0) == 3);
  CHECK(xw->at(1, 0) == 0);
  CHECK(xw->at(2, 0) == 0);
}

TEST_CASE("subspace operations") {
  RationalField fq;
  auto e1 = make(fq, 2, 1, {1, 0});
  auto e2 = make(fq, 2, 1, {0, 1});
  auto u = Subspace<Rational>::from_span(e1);
  auto v = Subspace<Rational>::from_span(e2);
  CHECK(u.sum(v).dim() == 2);
  CHECK(u.intersect(v).dim() == 0);
  CHECK(u.contained_in(u));
  CHECK_FALSE(u.contained_in(v));

  auto d1 = Subspace<Rational>::from_span(make(fq, 2, 1, {1, 1}));
  auto d2 = Subspace<Rational>::from_span(make(fq, 2, 1, {1, -1}));
  CHECK(d1.intersect(d2).dim() == 0);

  // Canonical form: span of redundant, scaled vectors normalizes.
  auto span1 = Subspace<Rational>::from_span(make(fq, 3, 2, {2, 4, 2, 4, 0, 0}));
  auto span2 = Subspace<Rational>::from_span(make(fq, 3, 1, {1, 1, 0}));
  CHECK(span1 == span2);
}

TEST_CASE("grassmann dimension identity over F_p") {
  PrimeField fp(101);
  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    std::uniform_int_distribution<std::size_t> sz(0, 5);
    std::size_t n = 1 + sz(rng);
    auto u = image_basis(random_matrix(fp, n, sz(rng), rng));
    auto v = image_basis(random_matrix(fp, n, sz(rng), rng));
    CHECK(u.sum(v).dim() + u.intersect(v).dim() == u.dim() + v.dim());
  }
}

TEST_CASE("quotient structure") {
  RationalField fq;

  auto none = QuotientStructure<Rational>(3, Subspace<Rational>::zero(3, fq));
  CHECK(none.dim() == 3);
  CHECK(none.projection() == Matrix<Rational>::identity(3, fq));

  auto all = QuotientStructure<Rational>(2, Subspace<Rational>::full(2, fq));
  CHECK(all.dim() == 0);

  // Quotient of k^2 by {(0, r)}: one surviving coordinate.
  auto axis = Subspace<Rational>::from_span(make(fq, 2, 1, {0, 1}));
  auto q = QuotientStructure<Rational>(2, axis);
  CHECK(q.dim() == 1);
  CHECK(q.projection() * q.section() == Matrix<Rational>::identity(1, fq));
  CHECK((q.projection() * axis.basis()).is_zero());
}

TEST_CASE("quotient identities on random subspaces") {
  PrimeField fp(101);
  std::mt19937_64 rng(31);
  for (int t = 0; t < 20; ++t) {
    std::uniform_int_distribution<std::size_t> sz(0, 5);
    std::size_t n = 1 + sz(rng);
    auto u = image_basis(random_matrix(fp, n, sz(rng), rng));
    QuotientStructure<FpElem> q(n, u);
    CHECK(q.dim() == n - u.dim());
    CHECK(q.projection() * q.section() == Matrix<FpElem>::identity(q.dim(), fp));
    CHECK((q.projection() * u.basis()).is_zero());
  }
}

TEST_CASE("homology dimensions and representatives") {
  RationalField fq;

  // No differentials at all: homology is the whole space.
  auto z_in = Matrix<Rational>(4, 0, fq);
  auto z_out = Matrix<Rational>(0, 4, fq);
  auto h = homology_at(z_in, z_out);
  CHECK(h.dim() == 4);

  // d_in the identity, d_out zero: everything is a boundary.
  auto h0 = homology_at(Matrix<Rational>::identity(3, fq), Matrix<Rational>(0, 3, fq));
  CHECK(h0.dim() == 0);

  // Two-term complex 0 -> k^2 -b-> k^2 -> 0 with b(u,v) = (0,u):
  // at the source, ker b is 1-dimensional and nothing is a boundary.
  auto b1 = make(fq, 2, 2, {0, 0, 1, 0});
  auto h1 = homology_at(Matrix<Rational>(2, 0, fq), b1);
  CHECK(h1.dim() == 1);

  // Representatives really are cycles and independent mod boundaries.
  auto d_in = make(fq, 3, 2, {1, 0, 0, 1, 0, 0});
  auto d_out = Matrix<Rational>(0, 3, fq);
  auto hh = homology_at(d_in, d_out);
  REQUIRE(hh.dim() == 1);
  auto coords = hh.class_coordinates(hh.representatives());
  CHECK(coords == Matrix<Rational>::identity(1, fq));
  CHECK(hh.is_boundary(d_in.col(0)));
  CHECK_FALSE(hh.is_boundary(hh.representatives().col(0)));

  // Composition check fires.
  auto idm = Matrix<Rational>::identity(2, fq);
  CHECK_THROWS_AS(homology_at(idm, idm), error);
}
