#ifndef MIXHOM_POLY_HPP
#define MIXHOM_POLY_HPP

#include <string>
#include <vector>

#include "mixhom/field.hpp"
#include "mixhom/matrix.hpp"

namespace mixhom {

// Polynomial in one variable over an exact field. Coefficient i belongs
// to x^i; trailing zeros are trimmed so the zero polynomial is empty.
template <class K>
class Poly {
 public:
  explicit Poly(const Field<K>& fld) : fld_(fld) {}
  Poly(const Field<K>& fld, std::vector<K> coeffs) : fld_(fld), c_(std::move(coeffs)) {
    trim();
  }

  static Poly zero(const Field<K>& fld) { return Poly(fld); }
  static Poly constant(const Field<K>& fld, const K& v) { return Poly(fld, {v}); }
  static Poly one(const Field<K>& fld) { return constant(fld, fld.one()); }
  static Poly x(const Field<K>& fld) { return Poly(fld, {fld.zero(), fld.one()}); }

  const Field<K>& field() const { return fld_; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }

  K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : fld_.zero(); }

  Poly operator+(const Poly& o) const {
    std::vector<K> r(std::max(c_.size(), o.c_.size()), fld_.zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = fld_.add(coeff(i), o.coeff(i));
    return Poly(fld_, std::move(r));
  }

  Poly operator-(const Poly& o) const {
    std::vector<K> r(std::max(c_.size(), o.c_.size()), fld_.zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = fld_.sub(coeff(i), o.coeff(i));
    return Poly(fld_, std::move(r));
  }

  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return zero(fld_);
    std::vector<K> r(c_.size() + o.c_.size() - 1, fld_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j)
        r[i + j] = fld_.add(r[i + j], fld_.mul(c_[i], o.c_[j]));
    return Poly(fld_, std::move(r));
  }

  bool operator==(const Poly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!fld_.eq(c_[i], o.c_[i])) return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  K eval(const K& v) const {
    K acc = fld_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = fld_.add(fld_.mul(acc, v), c_[i]);
    return acc;
  }

  const std::vector<K>& coeffs() const { return c_; }

 private:
  void trim() {
    while (!c_.empty() && fld_.is_zero(c_.back())) c_.pop_back();
  }

  Field<K> fld_;
  std::vector<K> c_;
};

// p(M) by Horner's rule; M must be square.
template <class K>
Matrix<K> eval_at(const Poly<K>& p, const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw error("eval_at needs a square matrix");
  const Field<K>& fld = m.field();
  Matrix<K> acc(m.rows(), m.rows(), fld);
  Matrix<K> id = Matrix<K>::identity(m.rows(), fld);
  for (std::size_t i = p.size(); i-- > 0;)
    acc = acc * m + id.scaled(p.coeff(i));
  return acc;
}

// p(M) * B without forming p(M): Horner on the rectangular accumulator.
template <class K>
Matrix<K> eval_left(const Poly<K>& p, const Matrix<K>& m, const Matrix<K>& b) {
  if (m.rows() != m.cols() || m.cols() != b.rows())
    throw error("eval_left shape mismatch");
  Matrix<K> acc(b.rows(), b.cols(), b.field());
  for (std::size_t i = p.size(); i-- > 0;)
    acc = m * acc + b.scaled(p.coeff(i));
  return acc;
}

// B * p(M), same idea from the other side.
template <class K>
Matrix<K> eval_right(const Poly<K>& p, const Matrix<K>& b, const Matrix<K>& m) {
  if (m.rows() != m.cols() || b.cols() != m.rows())
    throw error("eval_right shape mismatch");
  Matrix<K> acc(b.rows(), b.cols(), b.field());
  for (std::size_t i = p.size(); i-- > 0;)
    acc = acc * m + b.scaled(p.coeff(i));
  return acc;
}

enum class PolyKind { cyclic, constant_one, geometric, explicit_list };

// The family c_n of deformation polynomials together with its derived
// data: f_n = c_n - c_{n-1} (with c_{-1} := 0), the constant coefficient
// beta_n, and the low-order coefficients eps_n, delta_n, gamma_n of the
// product c_{n-1} * c_n.
template <class K>
class PolySeq {
 public:
  static PolySeq cyclic(const Field<K>& fld) { return PolySeq(PolyKind::cyclic, fld); }

  static PolySeq constant_one(const Field<K>& fld) {
    return PolySeq(PolyKind::constant_one, fld);
  }

  static PolySeq geometric(const Field<K>& fld, const K& q) {
    PolySeq s(PolyKind::geometric, fld);
    s.q_ = q;
    return s;
  }

  static PolySeq explicit_list(const Field<K>& fld, std::vector<Poly<K>> polys) {
    PolySeq s(PolyKind::explicit_list, fld);
    s.polys_ = std::move(polys);
    return s;
  }

  PolyKind kind() const { return kind_; }
  const Field<K>& field() const { return fld_; }
  const K& q() const { return q_; }
  const std::vector<Poly<K>>& polys() const { return polys_; }

  std::string kind_name() const {
    switch (kind_) {
      case PolyKind::cyclic: return "cyclic";
      case PolyKind::constant_one: return "one";
      case PolyKind::geometric: return "geometric";
      case PolyKind::explicit_list: return "explicit";
    }
    return "?";
  }

  // c_n; n = -1 gives the zero polynomial by convention.
  Poly<K> c(long n) const {
    if (n < 0) return Poly<K>::zero(fld_);
    switch (kind_) {
      case PolyKind::cyclic: return cyclic_c(n);
      case PolyKind::constant_one: return Poly<K>::one(fld_);
      case PolyKind::geometric: {
        K v = fld_.one();
        for (long i = 0; i < n; ++i) v = fld_.mul(v, q_);
        return Poly<K>::constant(fld_, v);
      }
      case PolyKind::explicit_list:
        if (static_cast<std::size_t>(n) >= polys_.size())
          throw error("explicit polynomial family has no entry at degree " + std::to_string(n));
        return polys_[static_cast<std::size_t>(n)];
    }
    throw error("unreachable");
  }

  Poly<K> f(long n) const { return c(n) - c(n - 1); }

  K beta(long n) const { return c(n).coeff(0); }
  bool invertible(long n) const { return !fld_.is_zero(beta(n)); }

  K eps(long n) const { return (c(n - 1) * c(n)).coeff(0); }
  K delta(long n) const { return (c(n - 1) * c(n)).coeff(1); }
  K gamma(long n) const { return (c(n - 1) * c(n)).coeff(2); }

  // Every degree up to N must have an invertible constant coefficient for
  // the deformation theory to apply; for cyclic c over F_p this rules out
  // p <= N+1 since beta_n = n+1.
  void require_invertible_up_to(long n_max) const {
    for (long n = 0; n <= n_max; ++n)
      if (!invertible(n))
        throw error("constant coefficient of c_" + std::to_string(n) +
                    " vanishes in this field (characteristic too small?)");
  }

 private:
  PolySeq(PolyKind kind, const Field<K>& fld) : kind_(kind), fld_(fld), q_(fld.zero()) {}

  // Three equivalent presentations, all computed and compared so an
  // arithmetic slip in any one of them is caught immediately:
  //   sum form       sum_{i=0..n} (1-x)^i
  //   binomial form  sum_{i=0..n} (-1)^i C(n+1, i+1) x^i
  //   telescoping    c_n(x) * x = 1 - (1-x)^{n+1}
  Poly<K> cyclic_c(long n) const {
    Poly<K> one_minus_x(fld_, {fld_.one(), fld_.neg(fld_.one())});
    Poly<K> acc = Poly<K>::zero(fld_);
    Poly<K> pw = Poly<K>::one(fld_);
    for (long i = 0; i <= n; ++i) {
      acc = acc + pw;
      pw = pw * one_minus_x;
    }
    // pw now holds (1-x)^{n+1}.

    std::vector<K> binom(static_cast<std::size_t>(n) + 2, fld_.zero());
    binom[0] = fld_.one();  // row n+1 of Pascal's triangle, built in the field
    for (long row = 1; row <= n + 1; ++row)
      for (long j = row; j >= 1; --j) binom[j] = fld_.add(binom[j], binom[j - 1]);
    std::vector<K> alt(static_cast<std::size_t>(n) + 1, fld_.zero());
    for (long i = 0; i <= n; ++i) {
      K v = binom[static_cast<std::size_t>(i) + 1];
      alt[static_cast<std::size_t>(i)] = (i % 2 == 0) ? v : fld_.neg(v);
    }
    Poly<K> alt_poly(fld_, std::move(alt));

    Poly<K> telescoped = Poly<K>::one(fld_) - pw;
    if (acc != alt_poly || acc * Poly<K>::x(fld_) != telescoped)
      throw error("cyclic polynomial closed forms disagree at degree " + std::to_string(n));
    return acc;
  }

  PolyKind kind_;
  Field<K> fld_;
  K q_;
  std::vector<Poly<K>> polys_;
};

}  // namespace mixhom

#endif  // MIXHOM_POLY_HPP
