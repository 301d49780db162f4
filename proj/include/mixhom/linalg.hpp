#ifndef MIXHOM_LINALG_HPP
#define MIXHOM_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "mixhom/field.hpp"
#include "mixhom/matrix.hpp"

namespace mixhom {

template <class K>
struct RrefResult {
  Matrix<K> reduced;
  std::vector<std::size_t> pivots;  // pivot column of row k, in row order
};

// Plain Gauss-Jordan elimination over the field. Pivot choice is the
// first nonzero entry scanning rows top-down in the leftmost open column,
// so the result is a deterministic function of the input. The reduced
// row-echelon form itself is unique regardless of strategy.
template <class K>
RrefResult<K> rref_generic(Matrix<K> m) {
  const Field<K>& fld = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && fld.is_zero(m.at(sel, c))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(sel, j));
    K piv_inv = fld.inv(m.at(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = fld.mul(piv_inv, m.at(r, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || fld.is_zero(m.at(i, c))) continue;
      K factor = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m.at(i, j) = fld.sub(m.at(i, j), fld.mul(factor, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {m, pivots};
}

namespace detail {

// Fraction-free forward elimination for rational matrices: clear each row
// to integers, eliminate with cross-multiplication only, and divide every
// updated row by its content gcd to keep entries small. Division happens
// once per row at the end, which avoids the intermediate coefficient
// explosion of naive rational pivoting on larger tensor-space matrices.
inline RrefResult<Rational> rref_rational(const Matrix<Rational>& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> z(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class den(1);
    for (std::size_t j = 0; j < cols; ++j) den = lcm(den, m.at(i, j).get_den());
    for (std::size_t j = 0; j < cols; ++j) {
      const Rational& q = m.at(i, j);
      z[i][j] = q.get_num() * (den / q.get_den());
    }
  }

  auto reduce_content = [cols](std::vector<mpz_class>& row) {
    mpz_class g(0);
    for (std::size_t j = 0; j < cols; ++j) g = gcd(g, row[j]);
    if (g > 1)
      for (std::size_t j = 0; j < cols; ++j) row[j] /= g;
  };

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && z[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r) std::swap(z[sel], z[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (z[i][c] == 0) continue;
      mpz_class f = z[i][c];
      for (std::size_t j = 0; j < cols; ++j) z[i][j] = z[r][c] * z[i][j] - f * z[r][j];
      reduce_content(z[i]);
    }
    pivots.push_back(c);
    ++r;
  }

  // Back substitution in rationals on the small echelon remainder.
  Field<Rational> fld;
  Matrix<Rational> out(rows, cols, fld);
  for (std::size_t i = 0; i < r; ++i) {
    Rational lead(z[i][pivots[i]]);
    for (std::size_t j = pivots[i]; j < cols; ++j)
      out.at(i, j) = Rational(z[i][j]) / lead;
  }
  for (std::size_t k = r; k-- > 0;) {
    std::size_t pc = pivots[k];
    for (std::size_t i = 0; i < k; ++i) {
      Rational f = out.at(i, pc);
      if (f == 0) continue;
      for (std::size_t j = pc; j < cols; ++j)
        out.at(i, j) -= f * out.at(k, j);
    }
  }
  return {out, pivots};
}

}  // namespace detail

template <class K>
RrefResult<K> rref(const Matrix<K>& m) {
  if constexpr (std::is_same_v<K, Rational>)
    return detail::rref_rational(m);
  else
    return rref_generic(m);
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
  return rref(m).pivots.size();
}

// Columns span {v : Mv = 0}; the basis is the standard one obtained by
// setting each free variable to 1 in turn.
template <class K>
Matrix<K> kernel_basis(const Matrix<K>& m) {
  const Field<K>& fld = m.field();
  RrefResult<K> rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : rr.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  Matrix<K> basis(m.cols(), free_cols.size(), fld);
  for (std::size_t idx = 0; idx < free_cols.size(); ++idx) {
    std::size_t fj = free_cols[idx];
    basis.at(fj, idx) = fld.one();
    for (std::size_t k = 0; k < rr.pivots.size(); ++k)
      basis.at(rr.pivots[k], idx) = fld.neg(rr.reduced.at(k, fj));
  }
  return basis;
}

// Solves A X = B for all columns of B at once. Returns nothing when the
// system is inconsistent; free variables are set to zero.
template <class K>
std::optional<Matrix<K>> solve(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != b.rows()) throw error("solve: row mismatch");
  const Field<K>& fld = a.field();
  RrefResult<K> rr = rref(a.hconcat(b));
  for (std::size_t p : rr.pivots)
    if (p >= a.cols()) return std::nullopt;
  Matrix<K> x(a.cols(), b.cols(), fld);
  for (std::size_t k = 0; k < rr.pivots.size(); ++k)
    for (std::size_t j = 0; j < b.cols(); ++j)
      x.at(rr.pivots[k], j) = rr.reduced.at(k, a.cols() + j);
  return x;
}

// Inverse of a square matrix, or nothing when singular.
template <class K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw error("inverse needs a square matrix");
  return solve(m, Matrix<K>::identity(m.rows(), m.field()));
}

// A linear subspace in canonical form: the basis columns are the nonzero
// rows of the rref of the spanning set read as row vectors. Each basis
// vector owns one pivot coordinate where all the others vanish, which
// makes equality of subspaces a plain matrix comparison.
template <class K>
class Subspace {
 public:
  static Subspace from_span(const Matrix<K>& vectors) {
    RrefResult<K> rr = rref(vectors.transpose());
    std::size_t k = rr.pivots.size();
    Matrix<K> basis(vectors.rows(), k, vectors.field());
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < vectors.rows(); ++i)
        basis.at(i, j) = rr.reduced.at(j, i);
    return Subspace(vectors.rows(), basis, rr.pivots);
  }

  static Subspace zero(std::size_t ambient, const Field<K>& fld) {
    return from_span(Matrix<K>(ambient, 0, fld));
  }

  static Subspace full(std::size_t ambient, const Field<K>& fld) {
    return from_span(Matrix<K>::identity(ambient, fld));
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix<K>& basis() const { return basis_; }
  // Pivot coordinate of each basis vector (strictly increasing).
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains_vector(const Matrix<K>& v) const {
    return solve(basis_, v).has_value();
  }

  // True when this subspace is contained in other.
  bool contained_in(const Subspace& other) const {
    check_ambient(other);
    return solve(other.basis_, basis_).has_value();
  }

  Subspace sum(const Subspace& other) const {
    check_ambient(other);
    return from_span(basis_.hconcat(other.basis_));
  }

  Subspace intersect(const Subspace& other) const {
    check_ambient(other);
    // Solutions of U a + V b = 0 give intersection vectors U a.
    Matrix<K> ker = kernel_basis(basis_.hconcat(other.basis_));
    Matrix<K> a_part(dim(), ker.cols(), basis_.field());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < ker.cols(); ++j) a_part.at(i, j) = ker.at(i, j);
    return from_span(basis_ * a_part);
  }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

 private:
  Subspace(std::size_t ambient, Matrix<K> basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  void check_ambient(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw error("subspace ambient dimension mismatch");
  }

  std::size_t ambient_;
  Matrix<K> basis_;
  std::vector<std::size_t> pivots_;
};

template <class K>
Subspace<K> image_basis(const Matrix<K>& m) {
  return Subspace<K>::from_span(m);
}

template <class K>
Subspace<K> kernel_space(const Matrix<K>& m) {
  return Subspace<K>::from_span(kernel_basis(m));
}

// Quotient of the ambient space by a subspace. The complement is the set
// of non-pivot coordinates of the canonical basis, so projection just
// rewrites a vector modulo the subspace in terms of those coordinates and
// section re-embeds them. Deterministic by construction.
template <class K>
class QuotientStructure {
 public:
  QuotientStructure(std::size_t ambient_dim, const Subspace<K>& sub)
      : ambient_(ambient_dim),
        sub_(sub),
        proj_(0, 0, sub.basis().field()),
        sect_(0, 0, sub.basis().field()) {
    if (sub.ambient_dim() != ambient_dim) throw error("quotient: ambient mismatch");
    const Field<K>& fld = sub.basis().field();
    std::vector<bool> is_pivot(ambient_, false);
    for (std::size_t p : sub.pivots()) is_pivot[p] = true;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!is_pivot[j]) complement_.push_back(j);

    std::size_t q = complement_.size();
    proj_ = Matrix<K>(q, ambient_, fld);
    sect_ = Matrix<K>(ambient_, q, fld);
    for (std::size_t i = 0; i < q; ++i) {
      proj_.at(i, complement_[i]) = fld.one();
      for (std::size_t k = 0; k < sub.pivots().size(); ++k)
        proj_.at(i, sub.pivots()[k]) = fld.neg(sub.basis().at(complement_[i], k));
      sect_.at(complement_[i], i) = fld.one();
    }
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return complement_.size(); }
  const Subspace<K>& sub() const { return sub_; }
  const Matrix<K>& projection() const { return proj_; }
  const Matrix<K>& section() const { return sect_; }
  const std::vector<std::size_t>& complement() const { return complement_; }

 private:
  std::size_t ambient_;
  Subspace<K> sub_;
  Matrix<K> proj_, sect_;
  std::vector<std::size_t> complement_;
};

// Homology at one spot of a complex: ker(d_out) / im(d_in), with a basis
// of cycle representatives whose classes are independent. Keeps the
// boundary subspace around so callers can express further cycles in the
// representative basis (induced maps) or test class vanishing.
template <class K>
class HomologySpace {
 public:
  HomologySpace(long degree, const Matrix<K>& d_in, const Matrix<K>& d_out)
      : degree_(degree),
        boundaries_(Subspace<K>::from_span(d_in)),
        cycles_(kernel_basis(d_out)),
        reps_(0, 0, d_in.field()) {
    if (d_out.cols() != d_in.rows())
      throw error("homology: boundary shapes do not compose");
    if (!(d_out * d_in).is_zero())
      throw error("homology: composite of consecutive differentials is nonzero");
    ambient_ = d_in.rows();

    // Kernel columns whose rref pivot lands beyond the boundary block are
    // independent modulo boundaries; take those as representatives.
    std::size_t nb = boundaries_.dim();
    Matrix<K> merged = boundaries_.basis().hconcat(cycles_);
    RrefResult<K> rr = rref(merged);
    std::vector<std::size_t> chosen;
    for (std::size_t p : rr.pivots)
      if (p >= nb) chosen.push_back(p - nb);
    reps_ = Matrix<K>(ambient_, chosen.size(), d_in.field());
    for (std::size_t j = 0; j < chosen.size(); ++j)
      for (std::size_t i = 0; i < ambient_; ++i)
        reps_.at(i, j) = cycles_.at(i, chosen[j]);
  }

  long degree() const { return degree_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return reps_.cols(); }
  const Matrix<K>& representatives() const { return reps_; }
  const Subspace<K>& boundaries() const { return boundaries_; }

  bool is_boundary(const Matrix<K>& v) const {
    return boundaries_.contains_vector(v);
  }

  // Expresses cycle columns in the representative basis modulo boundaries.
  // Throws when a column is not a class in this space at all.
  Matrix<K> class_coordinates(const Matrix<K>& vecs) const {
    auto sol = solve(boundaries_.basis().hconcat(reps_), vecs);
    if (!sol) throw error("class_coordinates: vector is not a cycle class here");
    std::size_t nb = boundaries_.dim();
    Matrix<K> coords(dim(), vecs.cols(), vecs.field());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < vecs.cols(); ++j)
        coords.at(i, j) = sol->at(nb + i, j);
    return coords;
  }

 private:
  long degree_;
  std::size_t ambient_ = 0;
  Subspace<K> boundaries_;
  Matrix<K> cycles_;
  Matrix<K> reps_;
};

template <class K>
HomologySpace<K> homology_at(const Matrix<K>& d_in, const Matrix<K>& d_out, long degree = 0) {
  return HomologySpace<K>(degree, d_in, d_out);
}

}  // namespace mixhom

#endif  // MIXHOM_LINALG_HPP
