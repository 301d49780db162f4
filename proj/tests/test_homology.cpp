#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "mixhom/homology.hpp"

using namespace mixhom;
using Catch::Matchers::ContainsSubstring;
using fixtures::odd_tower;
using fixtures::point_complex;
using fixtures::qmat;
using fixtures::quantum_tower;
using fixtures::staircase;
using fixtures::three_lines;
using fixtures::two_by_two;

namespace {

std::vector<std::size_t> dims_of(const std::vector<HomologySpace<Rational>>& groups) {
  std::vector<std::size_t> out;
  for (const auto& h : groups) out.push_back(h.dim());
  return out;
}

std::vector<std::size_t> head(std::vector<std::size_t> v, std::size_t k) {
  v.resize(k);
  return v;
}

MixedMorphism<Rational> identity_morphism(const ComplexPtr<Rational>& D) {
  MixedMorphism<Rational> m{D, D, {}};
  for (long n = 0; n <= D->top_degree(); ++n)
    m.phi.push_back(Matrix<Rational>::identity(D->dim(n), D->field()));
  return m;
}

}  // namespace

TEST_CASE("linear homology of small complexes") {
  auto D = two_by_two();
  CHECK(dims_of(linear_homology(D, Direction::chain)) == std::vector<std::size_t>{1, 1});
  CHECK(dims_of(linear_homology(D, Direction::cochain)) == std::vector<std::size_t>{0, 0});

  auto L = three_lines();
  CHECK(dims_of(linear_homology(L, Direction::chain)) == std::vector<std::size_t>{0, 0, 1});
  CHECK(dims_of(linear_homology(L, Direction::cochain)) == std::vector<std::size_t>{1, 0, 0});

  auto h = linear_homology(D, Direction::chain);
  CHECK(h[0].degree() == 0);
  CHECK(h[1].representatives().rows() == 2);
  CHECK(h[1].representatives().cols() == 1);

  // The span of xi is a subcomplex on which b restricts to zero, so its
  // boundary homology is the whole thing.
  auto im = image_subcomplex(D, {D->xi_family()});
  CHECK(im.complex->dims() == std::vector<std::size_t>{1, 1});
  CHECK(im.complex->b(1).is_zero());
  CHECK(dims_of(linear_homology(im.complex, Direction::chain)) ==
        std::vector<std::size_t>{1, 1});
}

TEST_CASE("hat quotient") {
  auto D = two_by_two();
  auto hat = hat_quotient(D);
  CHECK(hat.complex->dims() == std::vector<std::size_t>{1, 1});
  CHECK(hat.complex->b(1).is_zero());
  CHECK(hat.complex->xi(0).is_zero());
  CHECK(hat.complex->xi(1).is_zero());
  CHECK(morphism_check(hat.projection).ok);
  CHECK(dims_of(linear_homology(hat.complex, Direction::chain)) ==
        std::vector<std::size_t>{1, 1});

  // xi = 0 already: the quotient changes nothing.
  auto L = three_lines();
  auto hatL = hat_quotient(L);
  CHECK(hatL.complex->dims() == L->dims());
  for (long n = 0; n <= 2; ++n)
    CHECK(hatL.projection.at(n) == Matrix<Rational>::identity(L->dim(n), L->field()));
}

TEST_CASE("total complex of a point") {
  auto P = point_complex();
  TotalComplex<Rational> tot(P, Grading::natural, 6);
  CHECK(tot.max_degree() == 6);
  CHECK(tot.layout(0).slot_degrees == std::vector<long>{0});
  CHECK(tot.layout(3).dim == 0);
  CHECK(tot.layout(4).slot_degrees == std::vector<long>{0});
  std::vector<std::size_t> dims;
  for (long n = 0; n <= 6; ++n) dims.push_back(tot.homology(n).dim());
  CHECK(dims == std::vector<std::size_t>{1, 0, 1, 0, 1, 0, 1});
  CHECK_THROWS_AS(tot.homology(7), error);

  TotalComplex<Rational> per(P, Grading::parity);
  CHECK(per.homology(0).dim() == 1);
  CHECK(per.homology(1).dim() == 0);
  CHECK_THROWS_AS(per.homology(2), error);
}

TEST_CASE("total complex needs a vanishing anticommutator") {
  CHECK_THROWS_WITH(TotalComplex<Rational>(two_by_two(), Grading::natural),
                    ContainsSubstring("square to zero"));
  // mixed_homology passes to the hat quotient first, so it is fine.
  CHECK(mixed_homology(two_by_two()).dims() == std::vector<std::size_t>{1, 0});
}

TEST_CASE("mixed homology of small complexes") {
  CHECK(mixed_homology(point_complex(), Grading::natural, 4).dims() ==
        std::vector<std::size_t>{1, 0, 1, 0, 1});
  CHECK(mixed_homology(three_lines(), Grading::natural, 4).dims() ==
        std::vector<std::size_t>{0, 0, 1, 0, 1});
  CHECK(mixed_homology(three_lines(), Grading::parity).dims() ==
        std::vector<std::size_t>{1, 0});
  // The representatives of a degree-n group live in the degree-n total.
  auto mh = mixed_homology(three_lines());
  CHECK(mh.groups[2].representatives().rows() == mh.tot.layout(2).dim);
}

TEST_CASE("parity grading matches the stabilized natural grading") {
  for (auto C : {point_complex(), three_lines(), two_by_two(), staircase()}) {
    auto nat = mixed_homology(C, Grading::natural, 9);
    auto per = mixed_homology(C, Grading::parity);
    CHECK(nat.groups[8].dim() == per.groups[0].dim());
    CHECK(nat.groups[9].dim() == per.groups[1].dim());
  }
}

TEST_CASE("quantum tower mixed homology") {
  RationalField fq;
  auto D = quantum_tower(2, 6);
  auto c = PolySeq<Rational>::geometric(fq, Rational(2));

  auto hat = hat_quotient(D);
  CHECK(hat.complex->dims() == std::vector<std::size_t>{3, 3, 3, 3, 3, 3, 3});
  CHECK(hat.complex->is_truncated());
  CHECK(hat.complex->trusted_degree() == 4);

  // Plain mixed homology, and the same computed from the hat quotient as
  // a complex in its own right.
  auto mh = mixed_homology(D);
  CHECK(head(mh.dims(), 5) == std::vector<std::size_t>{2, 0, 2, 1, 3});
  CHECK(mixed_homology(hat.complex).dims() == mh.dims());
  CHECK(mixed_homology(D, Grading::natural, 4).dims() == head(mh.dims(), 5));

  // Deformed coboundary on the tower itself and on its hat quotient.
  CHECK(head(mixed_homology(D, c).dims(), 5) == std::vector<std::size_t>{2, 0, 1, 0, 1});
  CHECK(head(mixed_homology(hat.complex, c).dims(), 5) ==
        std::vector<std::size_t>{2, 0, 2, 1, 3});

  // The span of xi inside the deformed complex.
  auto DU = deformed_complex(D, c);
  auto im = image_subcomplex(DU, {D->xi_family()});
  CHECK(im.complex->dims() == std::vector<std::size_t>{0, 1, 1, 1, 1, 1, 1});
  CHECK(head(mixed_homology(im.complex).dims(), 5) == std::vector<std::size_t>{0, 1, 1, 2, 2});
}

TEST_CASE("induced map of the hat projection") {
  auto D = two_by_two();
  auto hat = hat_quotient(D);
  auto ind = induced_map(hat.projection, MapMode::chain);
  CHECK(ind.mode == MapMode::chain);
  CHECK(ind.trusted == 1);
  CHECK(dims_of(ind.source) == std::vector<std::size_t>{1, 1});
  CHECK(dims_of(ind.target) == std::vector<std::size_t>{1, 1});
  // Iso on classes in degree 0, dead in degree 1.
  CHECK(rank(ind.components[0]) == 1);
  CHECK(rank(ind.components[1]) == 0);
  CHECK_FALSE(ind.quasi_iso);
}

TEST_CASE("identity morphism is a quasi-isomorphism in every mode") {
  for (auto C : {three_lines(), quantum_tower(2, 6)}) {
    auto id = identity_morphism(C);
    for (auto mode : {MapMode::chain, MapMode::cochain, MapMode::mixed}) {
      auto ind = induced_map(id, mode);
      CHECK(ind.quasi_iso);
      for (const auto& m : ind.components) CHECK(rank(m) == m.rows());
    }
  }
  auto tower_id = induced_map(identity_morphism(quantum_tower(2, 6)), MapMode::mixed);
  CHECK(tower_id.trusted == 4);
}

TEST_CASE("unit inclusion into the odd tower") {
  auto P = point_complex();
  auto T = odd_tower(6);
  MixedMorphism<Rational> phi{P, T, {qmat(1, 1, {1})}};
  CHECK(morphism_check(phi).ok);

  // Iso on cochain homology: both sides have it only in degree 0.
  auto coch = induced_map(phi, MapMode::cochain);
  CHECK(coch.trusted == 4);
  CHECK(head(dims_of(coch.source), 5) == std::vector<std::size_t>{1, 0, 0, 0, 0});
  CHECK(head(dims_of(coch.target), 5) == std::vector<std::size_t>{1, 0, 0, 0, 0});
  CHECK(coch.quasi_iso);

  // Not an iso on boundary homology: b vanishes on the tower, so every
  // degree there survives.
  auto ch = induced_map(phi, MapMode::chain);
  CHECK(head(dims_of(ch.target), 5) == std::vector<std::size_t>{1, 1, 1, 1, 1});
  CHECK_FALSE(ch.quasi_iso);

  // Not an iso on mixed homology either: the target totals pick up a
  // class in every degree, the source only in even ones.
  auto mx = induced_map(phi, MapMode::mixed);
  CHECK(mx.trusted == 4);
  CHECK(head(dims_of(mx.source), 5) == std::vector<std::size_t>{1, 0, 1, 0, 1});
  CHECK(head(dims_of(mx.target), 5) == std::vector<std::size_t>{1, 1, 1, 1, 1});
  std::vector<std::size_t> ranks;
  for (long n = 0; n <= 4; ++n)
    ranks.push_back(rank(mx.components[static_cast<std::size_t>(n)]));
  CHECK(ranks == std::vector<std::size_t>{1, 0, 1, 0, 1});
  for (long n = 0; n <= 4; ++n) {
    const auto& m = mx.components[static_cast<std::size_t>(n)];
    bool iso = m.rows() == m.cols() && rank(m) == m.rows();
    CHECK(iso == (n % 2 == 0));
  }
  CHECK_FALSE(mx.quasi_iso);
}

TEST_CASE("mode determines which commutations are demanded") {
  auto L = three_lines();
  RationalField fq;
  // Commutes with d but not with b.
  MixedMorphism<Rational> phi{L, L, {qmat(1, 1, {0}), qmat(1, 1, {1}), qmat(1, 1, {1})}};
  CHECK_THROWS_WITH(induced_map(phi, MapMode::chain),
                    ContainsSubstring("for b at degree 1"));
  CHECK_THROWS_WITH(induced_map(phi, MapMode::mixed),
                    ContainsSubstring("for b at degree 1"));
  auto ind = induced_map(phi, MapMode::cochain);
  CHECK(rank(ind.components[0]) == 0);
  CHECK_FALSE(ind.quasi_iso);

  MixedMorphism<Rational> bad{L, L, {qmat(1, 2, {0, 0})}};
  CHECK_THROWS_WITH(induced_map(bad, MapMode::chain), ContainsSubstring("wrong shape"));
}
