#ifndef MIXHOM_TESTS_FIXTURES_HPP
#define MIXHOM_TESTS_FIXTURES_HPP

// Small hand-built complexes shared across the test binaries. Everything
// here is independent of the builders header on purpose: these fixtures
// double as cross-checks for the packaged builders.

#include <initializer_list>

#include "mixhom/complex.hpp"

namespace fixtures {

using namespace mixhom;

inline Matrix<Rational> qmat(std::size_t rows, std::size_t cols,
                             std::initializer_list<long> entries) {
  RationalField fq;
  Matrix<Rational> m(rows, cols, fq);
  auto it = entries.begin();
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Rational(*it++);
  return m;
}

inline Matrix<FpElem> fmat(const Field<FpElem>& f, std::size_t rows, std::size_t cols,
                           std::initializer_list<long> entries) {
  Matrix<FpElem> m(rows, cols, f);
  auto it = entries.begin();
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = f.from_long(*it++);
  return m;
}

// Two-term complex with d the identity and b the rank-one shift
// b(u, v) = (0, u); the smallest complex whose xi is nonzero but singular.
inline ComplexPtr<Rational> two_by_two() {
  RationalField fq;
  return share(MixedComplex<Rational>(
      fq, {2, 2}, {qmat(2, 2, {0, 0, 1, 0})}, {Matrix<Rational>::identity(2, fq)}, "toy"));
}

// Three-term complex of lines with b_1 = d_1 = 1 and everything else 0,
// so xi vanishes identically.
inline ComplexPtr<Rational> three_lines() {
  RationalField fq;
  return share(MixedComplex<Rational>(fq, {1, 1, 1},
                                      {qmat(1, 1, {1}), qmat(1, 1, {0})},
                                      {qmat(1, 1, {0}), qmat(1, 1, {1})}, "lines"));
}

// Four degrees of k^2 with b the downward shift and d the upward shift,
// so xi is singular at the ends and the identity in the middle.
inline ComplexPtr<Rational> staircase() {
  RationalField fq;
  Matrix<Rational> lo = qmat(2, 2, {0, 0, 1, 0});
  Matrix<Rational> hi = qmat(2, 2, {0, 1, 0, 0});
  return share(MixedComplex<Rational>(fq, {2, 2, 2, 2}, {lo, lo, lo}, {hi, hi, hi}, "stairs"));
}

// One line in degree 0 with zero maps.
inline ComplexPtr<Rational> point_complex() {
  RationalField fq;
  return share(MixedComplex<Rational>(fq, {1}, {}, {}, "point"));
}

// A line in every degree up to N with b = 0 and d the identity in odd
// degrees: the coboundary pairs degree 1 with 2, 3 with 4, and so on,
// leaving degree 0 alone.
inline ComplexPtr<Rational> odd_tower(long N) {
  RationalField fq;
  std::vector<std::size_t> dims(static_cast<std::size_t>(N) + 1, 1);
  std::vector<Matrix<Rational>> b(static_cast<std::size_t>(N), qmat(1, 1, {0}));
  std::vector<Matrix<Rational>> d;
  for (long n = 0; n < N; ++n) d.push_back(qmat(1, 1, {n % 2 ? 1 : 0}));
  return share(MixedComplex<Rational>(fq, dims, b, d, "odd-tower", N - 2));
}

// The algebra k<x,y> / (x^2, y^2, xy + q yx) acting on itself by right
// multiplication: degree 0 is the quotient by the span of yx with basis
// {1, x, y}, higher degrees are the whole algebra with basis {1, x, y, yx},
// b multiplies by x and d multiplies by y (cut off at degree N).
inline ComplexPtr<Rational> quantum_tower(long q_num, long N) {
  RationalField fq;
  Matrix<Rational> rx(4, 4, fq), ry(4, 4, fq);
  rx.at(1, 0) = 1;
  rx.at(3, 2) = 1;
  ry.at(2, 0) = 1;
  ry.at(3, 1) = Rational(-q_num);
  Matrix<Rational> b1(3, 4, fq);
  b1.at(1, 0) = 1;
  Matrix<Rational> d0(4, 3, fq);
  d0.at(2, 0) = 1;
  d0.at(3, 1) = Rational(-q_num);
  std::vector<std::size_t> dims{3};
  std::vector<Matrix<Rational>> b{b1}, d{d0};
  for (long n = 1; n <= N; ++n) {
    dims.push_back(4);
    if (n >= 2) b.push_back(rx);
    if (n < N) d.push_back(ry);
  }
  return share(MixedComplex<Rational>(fq, dims, b, d, "tower", N - 2));
}

}  // namespace fixtures

#endif  // MIXHOM_TESTS_FIXTURES_HPP
