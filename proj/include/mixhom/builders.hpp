#ifndef MIXHOM_BUILDERS_HPP
#define MIXHOM_BUILDERS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "mixhom/complex.hpp"
#include "mixhom/poly.hpp"

// Sources of mixed complexes: finite-dimensional algebras given by
// structure constants, the differential-forms complex of such an
// algebra (optionally twisted by an algebra automorphism), a handful of
// small named examples, and seeded random complexes for property tests.

namespace mixhom {

// A finite-dimensional unital associative algebra over K. table[i][j]
// holds the coefficients of e_i * e_j in the basis e_0..e_{dim-1}, with
// e_0 the unit. An optional twist is a unital algebra endomorphism,
// given by its matrix in the same basis. The constructor checks every
// axiom, so downstream code can trust the table blindly.
template <class K>
class Algebra {
 public:
  Algebra(const Field<K>& fld, std::vector<std::string> labels,
          std::vector<std::vector<std::vector<K>>> table,
          std::optional<Matrix<K>> twist = std::nullopt)
      : fld_(fld),
        labels_(std::move(labels)),
        table_(std::move(table)),
        twisted_(twist.has_value()),
        sigma_(twist ? std::move(*twist)
                     : Matrix<K>::identity(table_.size(), fld)) {
    std::size_t n = table_.size();
    if (n == 0) throw error("algebra needs at least the unit basis vector");
    if (labels_.empty())
      for (std::size_t i = 0; i < n; ++i)
        labels_.push_back("e" + std::to_string(i));
    if (labels_.size() != n)
      throw error("algebra of dimension " + std::to_string(n) + " needs " +
                  std::to_string(n) + " basis labels");
    for (const auto& row : table_) {
      if (row.size() != n)
        throw error("structure constant table must be dim x dim");
      for (const auto& entry : row)
        if (entry.size() != n)
          throw error("each structure constant needs one coefficient per "
                      "basis vector");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!equal(table_[0][j], basis_vector(j)))
        throw error("basis vector 0 is not a left unit on " + labels_[j]);
      if (!equal(table_[j][0], basis_vector(j)))
        throw error("basis vector 0 is not a right unit on " + labels_[j]);
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (!equal(multiply(table_[i][j], basis_vector(k)),
                     multiply(basis_vector(i), table_[j][k])))
            throw error("product is not associative at (" + labels_[i] +
                        ", " + labels_[j] + ", " + labels_[k] + ")");
    if (twisted_) {
      if (sigma_.rows() != n || sigma_.cols() != n)
        throw error("twist matrix must be dim x dim");
      if (!equal(column(sigma_, 0), basis_vector(0)))
        throw error("twist does not fix the unit");
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          std::vector<K> lhs = multiply(column(sigma_, i), column(sigma_, j));
          std::vector<K> rhs(n, fld_.zero());
          for (std::size_t c = 0; c < n; ++c)
            for (std::size_t r = 0; r < n; ++r)
              rhs[r] = fld_.add(rhs[r],
                                fld_.mul(table_[i][j][c], sigma_.at(r, c)));
          if (!equal(lhs, rhs))
            throw error("twist is not an algebra map at (" + labels_[i] +
                        ", " + labels_[j] + ")");
        }
    }
  }

  const Field<K>& field() const { return fld_; }
  std::size_t dim() const { return table_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  // Coefficients of e_i * e_j.
  const std::vector<K>& product(std::size_t i, std::size_t j) const {
    return table_[i][j];
  }

  std::vector<K> multiply(const std::vector<K>& u,
                          const std::vector<K>& v) const {
    std::size_t n = dim();
    std::vector<K> out(n, fld_.zero());
    for (std::size_t i = 0; i < n; ++i) {
      if (fld_.is_zero(u[i])) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (fld_.is_zero(v[j])) continue;
        K c = fld_.mul(u[i], v[j]);
        for (std::size_t k = 0; k < n; ++k)
          out[k] = fld_.add(out[k], fld_.mul(c, table_[i][j][k]));
      }
    }
    return out;
  }

  std::vector<K> basis_vector(std::size_t i) const {
    std::vector<K> out(dim(), fld_.zero());
    out[i] = fld_.one();
    return out;
  }

  // The twist, resolved to the identity when none was given.
  const Matrix<K>& sigma() const { return sigma_; }
  bool twisted() const { return twisted_; }

 private:
  bool equal(const std::vector<K>& u, const std::vector<K>& v) const {
    for (std::size_t i = 0; i < u.size(); ++i)
      if (!fld_.eq(u[i], v[i])) return false;
    return true;
  }

  static std::vector<K> column(const Matrix<K>& m, std::size_t j) {
    std::vector<K> out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.at(i, j));
    return out;
  }

  const Field<K>& fld_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::vector<K>>> table_;
  bool twisted_;
  Matrix<K> sigma_;
};

// Exterior algebra on two generators: basis 1, x, y, xy with
// x^2 = y^2 = 0 and y x = -x y.
template <class K>
Algebra<K> exterior_algebra(const Field<K>& fld,
                            std::optional<Matrix<std::type_identity_t<K>>> twist = std::nullopt) {
  std::size_t n = 4;
  std::vector<std::vector<std::vector<K>>> table(
      n, std::vector<std::vector<K>>(n, std::vector<K>(n, fld.zero())));
  for (std::size_t j = 0; j < n; ++j) {
    table[0][j][j] = fld.one();
    table[j][0][j] = fld.one();
  }
  table[1][2][3] = fld.one();
  table[2][1][3] = fld.neg(fld.one());
  return Algebra<K>(fld, {"1", "x", "y", "xy"}, std::move(table),
                    std::move(twist));
}

// Quantum plane truncation: basis 1, x, y, yx with x^2 = y^2 = 0 and
// x y = -q y x.
template <class K>
Algebra<K> quantum_plane_algebra(const Field<K>& fld, const K& q,
                                 std::optional<Matrix<std::type_identity_t<K>>> twist = std::nullopt) {
  std::size_t n = 4;
  std::vector<std::vector<std::vector<K>>> table(
      n, std::vector<std::vector<K>>(n, std::vector<K>(n, fld.zero())));
  for (std::size_t j = 0; j < n; ++j) {
    table[0][j][j] = fld.one();
    table[j][0][j] = fld.one();
  }
  table[1][2][3] = fld.neg(q);
  table[2][1][3] = fld.one();
  return Algebra<K>(fld, {"1", "x", "y", "yx"}, std::move(table),
                    std::move(twist));
}

// The automorphism negating both generators of either algebra above.
template <class K>
Matrix<K> sign_flip_twist(const Field<K>& fld) {
  Matrix<K> s = Matrix<K>::identity(4, fld);
  s.at(1, 1) = fld.neg(fld.one());
  s.at(2, 2) = fld.neg(fld.one());
  return s;
}

namespace detail {

// Degree-n chains over an algebra of dimension dim are spanned by words
// (t_0, ..., t_n) with t_0 over the full basis and interior slots over
// the non-unit part (t_j >= 1). Words are encoded big-endian:
// index = t_0 (dim-1)^n + sum_j (t_j - 1)(dim-1)^{n-j}.
inline std::size_t word_count(std::size_t dim, long n) {
  std::size_t c = dim;
  for (long j = 0; j < n; ++j) c *= dim - 1;
  return c;
}

inline std::size_t encode_word(const std::vector<std::size_t>& w,
                               std::size_t dim) {
  std::size_t idx = w[0];
  for (std::size_t j = 1; j < w.size(); ++j)
    idx = idx * (dim - 1) + (w[j] - 1);
  return idx;
}

inline std::vector<std::size_t> decode_word(std::size_t idx, std::size_t dim,
                                            long n) {
  std::vector<std::size_t> w(static_cast<std::size_t>(n) + 1);
  for (long j = n; j >= 1; --j) {
    w[static_cast<std::size_t>(j)] = idx % (dim - 1) + 1;
    idx /= dim - 1;
  }
  w[0] = idx;
  return w;
}

// b_n sends a word to the alternating sum of its neighbor products plus
// the twisted wrap-around term moving the last letter to the front.
// Products landing in slot 0 keep all components; products landing in
// an interior slot lose their unit component.
template <class K>
Matrix<K> forms_boundary(const Algebra<K>& A, long n) {
  const Field<K>& F = A.field();
  std::size_t adim = A.dim();
  Matrix<K> M(word_count(adim, n - 1), word_count(adim, n), F);
  for (std::size_t col = 0; col < M.cols(); ++col) {
    std::vector<std::size_t> w = decode_word(col, adim, n);
    K sign = F.one();
    for (long i = 0; i < n; ++i) {
      const std::vector<K>& prod =
          A.product(w[static_cast<std::size_t>(i)],
                    w[static_cast<std::size_t>(i) + 1]);
      for (std::size_t c = (i == 0 ? 0 : 1); c < adim; ++c) {
        if (F.is_zero(prod[c])) continue;
        std::vector<std::size_t> out;
        for (long j = 0; j < i; ++j)
          out.push_back(w[static_cast<std::size_t>(j)]);
        out.push_back(c);
        for (long j = i + 2; j <= n; ++j)
          out.push_back(w[static_cast<std::size_t>(j)]);
        std::size_t row = encode_word(out, adim);
        M.at(row, col) = F.add(M.at(row, col), F.mul(sign, prod[c]));
      }
      sign = F.neg(sign);
    }
    // Wrap-around term, with sign (-1)^n: twist the last letter and
    // multiply it onto the first, landing in slot 0.
    for (std::size_t k = 0; k < adim; ++k) {
      K sk = A.sigma().at(k, w[static_cast<std::size_t>(n)]);
      if (F.is_zero(sk)) continue;
      const std::vector<K>& prod = A.product(k, w[0]);
      for (std::size_t c = 0; c < adim; ++c) {
        if (F.is_zero(prod[c])) continue;
        std::vector<std::size_t> out;
        out.push_back(c);
        for (long j = 1; j < n; ++j)
          out.push_back(w[static_cast<std::size_t>(j)]);
        std::size_t row = encode_word(out, adim);
        M.at(row, col) =
            F.add(M.at(row, col), F.mul(sign, F.mul(sk, prod[c])));
      }
    }
  }
  return M;
}

// d_n prepends a unit in slot 0; the old first letter moves to an
// interior slot, so words starting with the unit die.
template <class K>
Matrix<K> forms_coboundary(const Algebra<K>& A, long n) {
  std::size_t adim = A.dim();
  Matrix<K> M(word_count(adim, n + 1), word_count(adim, n), A.field());
  for (std::size_t col = 0; col < M.cols(); ++col) {
    std::vector<std::size_t> w = decode_word(col, adim, n);
    if (w[0] == 0) continue;
    std::vector<std::size_t> out;
    out.push_back(0);
    for (std::size_t t : w) out.push_back(t);
    M.at(encode_word(out, adim), col) = A.field().one();
  }
  return M;
}

}  // namespace detail

// Differential n-forms of A: D_n = A tensor (A/unit line)^n, with the
// twisted simplicial boundary b and the coboundary d inserting a unit.
// Truncating at N cuts off the maps out of degree N, so homology is
// only trusted up to N-2.
template <class K>
ComplexPtr<K> ncforms(const Algebra<K>& A, long N, std::string name = "") {
  if (N < 1) throw error("forms need top degree at least 1");
  if (name.empty()) name = "forms";
  std::vector<std::size_t> dims;
  for (long n = 0; n <= N; ++n)
    dims.push_back(detail::word_count(A.dim(), n));
  std::vector<Matrix<K>> b, d;
  for (long n = 1; n <= N; ++n) b.push_back(detail::forms_boundary(A, n));
  for (long n = 0; n < N; ++n) d.push_back(detail::forms_coboundary(A, n));
  ComplexPtr<K> out = share(MixedComplex<K>(
      A.field(), std::move(dims), std::move(b), std::move(d),
      std::move(name), N - 2));
  out->require_valid();
  return out;
}

// The rotation operator on degree-n forms: twist the last letter and
// move it to the front, with sign (-1)^n. Exposed for cross-checking
// the closed formulas below against b and d.
template <class K>
Matrix<K> cyclic_rotation(const Algebra<K>& A, long n) {
  const Field<K>& F = A.field();
  std::size_t adim = A.dim();
  std::size_t m = detail::word_count(adim, n);
  Matrix<K> M(m, m, F);
  K sign = (n % 2 == 0) ? F.one() : F.neg(F.one());
  for (std::size_t col = 0; col < m; ++col) {
    std::vector<std::size_t> w = detail::decode_word(col, adim, n);
    if (n >= 1 && w[0] == 0) continue;
    for (std::size_t k = 0; k < adim; ++k) {
      K sk = A.sigma().at(k, w[static_cast<std::size_t>(n)]);
      if (F.is_zero(sk)) continue;
      std::vector<std::size_t> out;
      out.push_back(k);
      if (n >= 1) out.push_back(w[0]);
      for (long j = 1; j < n; ++j)
        out.push_back(w[static_cast<std::size_t>(j)]);
      std::size_t row = detail::encode_word(out, adim);
      M.at(row, col) = F.add(M.at(row, col), F.mul(sign, sk));
    }
  }
  return M;
}

// Closed formula for the anticommutator bd + db on degree-n forms:
// identity minus the rotation, plus a correction inserting a unit in
// front of the twisted-last-times-first product.
template <class K>
Matrix<K> xi_from_rotation(const Algebra<K>& A, long n) {
  const Field<K>& F = A.field();
  std::size_t adim = A.dim();
  std::size_t m = detail::word_count(adim, n);
  Matrix<K> M = Matrix<K>::identity(m, F) - cyclic_rotation(A, n);
  if (n == 0) return M;
  K sign = (n % 2 == 0) ? F.one() : F.neg(F.one());
  for (std::size_t col = 0; col < m; ++col) {
    std::vector<std::size_t> w = detail::decode_word(col, adim, n);
    for (std::size_t k = 0; k < adim; ++k) {
      K sk = A.sigma().at(k, w[static_cast<std::size_t>(n)]);
      if (F.is_zero(sk)) continue;
      const std::vector<K>& prod = A.product(k, w[0]);
      for (std::size_t c = 1; c < adim; ++c) {
        if (F.is_zero(prod[c])) continue;
        std::vector<std::size_t> out;
        out.push_back(0);
        out.push_back(c);
        for (long j = 1; j < n; ++j)
          out.push_back(w[static_cast<std::size_t>(j)]);
        std::size_t row = detail::encode_word(out, adim);
        M.at(row, col) =
            F.add(M.at(row, col), F.mul(sign, F.mul(sk, prod[c])));
      }
    }
  }
  return M;
}

// The twist applied to every slot of a degree-n form, with interior
// unit components dropped. For the cyclic coefficient family the
// deformed anticommutator is the identity minus this operator.
template <class K>
Matrix<K> twist_tensor_power(const Algebra<K>& A, long n) {
  const Field<K>& F = A.field();
  std::size_t adim = A.dim();
  std::size_t m = detail::word_count(adim, n);
  Matrix<K> M(m, m, F);
  for (std::size_t col = 0; col < m; ++col) {
    std::vector<std::size_t> w = detail::decode_word(col, adim, n);
    std::vector<std::pair<std::vector<std::size_t>, K>> terms;
    terms.emplace_back(std::vector<std::size_t>{}, F.one());
    for (long j = 0; j <= n; ++j) {
      std::vector<std::pair<std::vector<std::size_t>, K>> next;
      for (const auto& [word, coeff] : terms)
        for (std::size_t k = (j == 0 ? 0 : 1); k < adim; ++k) {
          K sk = A.sigma().at(k, w[static_cast<std::size_t>(j)]);
          if (F.is_zero(sk)) continue;
          std::vector<std::size_t> nw = word;
          nw.push_back(k);
          next.emplace_back(std::move(nw), F.mul(coeff, sk));
        }
      terms = std::move(next);
    }
    for (const auto& [word, coeff] : terms) {
      std::size_t row = detail::encode_word(word, adim);
      M.at(row, col) = F.add(M.at(row, col), coeff);
    }
  }
  return M;
}

namespace detail {

// Random scalars come straight from the generator words: small signed
// integers over Q, uniform residues over a prime field. Distribution
// adapters are avoided because their output is implementation-defined
// and would break cross-platform determinism.
template <class K>
K random_scalar(const Field<K>& fld, std::mt19937_64& gen) {
  long p = fld.characteristic();
  if (p == 0) return fld.from_long(static_cast<long>(gen() % 7) - 3);
  return fld.from_long(static_cast<long>(gen() % static_cast<std::uint64_t>(p)));
}

template <class K>
Matrix<K> random_matrix(const Field<K>& fld, std::size_t rows,
                        std::size_t cols, std::mt19937_64& gen) {
  Matrix<K> m(rows, cols, fld);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = random_scalar(fld, gen);
  return m;
}

template <class K>
Matrix<K> random_invertible(const Field<K>& fld, std::size_t n,
                            std::mt19937_64& gen) {
  while (true) {
    Matrix<K> m = random_matrix(fld, n, n, gen);
    if (rank(m) == n) return m;
  }
}

}  // namespace detail

// Deterministic pseudo-random mixed complex with the given dimensions.
// b and d are independently conjugated block shifts, so both square to
// zero by construction while their anticommutator is generically not
// zero. The same (field, dims, seed) triple rebuilds identical
// matrices on any platform.
template <class K>
ComplexPtr<K> random_mixed(const Field<K>& fld,
                           const std::vector<std::size_t>& dims,
                           std::uint64_t seed) {
  if (dims.empty()) throw error("random complex needs at least degree 0");
  long N = static_cast<long>(dims.size()) - 1;
  std::mt19937_64 gen(seed);
  auto pick = [&](std::size_t bound) -> std::size_t {
    return static_cast<std::size_t>(gen() % (bound + 1));
  };

  // Ranks of b, chosen from the top down: adjacent blocks may not
  // overlap inside the middle space, which is exactly b.b = 0.
  std::vector<std::size_t> r(static_cast<std::size_t>(N) + 2, 0);
  for (long n = N; n >= 1; --n) {
    std::size_t here = dims[static_cast<std::size_t>(n)] -
                       r[static_cast<std::size_t>(n) + 1];
    std::size_t below = dims[static_cast<std::size_t>(n) - 1];
    r[static_cast<std::size_t>(n)] = pick(std::min(here, below));
  }
  // Ranks of d, bottom up, with the same non-overlap constraint.
  std::vector<std::size_t> s(static_cast<std::size_t>(N) + 1, 0);
  for (long n = 0; n < N; ++n) {
    std::size_t here = dims[static_cast<std::size_t>(n)] -
                       (n >= 1 ? s[static_cast<std::size_t>(n) - 1] : 0);
    std::size_t above = dims[static_cast<std::size_t>(n) + 1];
    s[static_cast<std::size_t>(n)] = pick(std::min(here, above));
  }

  std::vector<Matrix<K>> P, Q;
  for (long n = 0; n <= N; ++n) {
    P.push_back(detail::random_invertible(
        fld, dims[static_cast<std::size_t>(n)], gen));
    Q.push_back(detail::random_invertible(
        fld, dims[static_cast<std::size_t>(n)], gen));
  }

  std::vector<Matrix<K>> b, d;
  for (long n = 1; n <= N; ++n) {
    std::size_t src = dims[static_cast<std::size_t>(n)];
    std::size_t tgt = dims[static_cast<std::size_t>(n) - 1];
    Matrix<K> shift(tgt, src, fld);
    for (std::size_t i = 0; i < r[static_cast<std::size_t>(n)]; ++i)
      shift.at(i, src - r[static_cast<std::size_t>(n)] + i) = fld.one();
    b.push_back(P[static_cast<std::size_t>(n) - 1] * shift *
                *inverse(P[static_cast<std::size_t>(n)]));
  }
  for (long n = 0; n < N; ++n) {
    std::size_t src = dims[static_cast<std::size_t>(n)];
    std::size_t tgt = dims[static_cast<std::size_t>(n) + 1];
    Matrix<K> shift(tgt, src, fld);
    for (std::size_t i = 0; i < s[static_cast<std::size_t>(n)]; ++i)
      shift.at(i, src - s[static_cast<std::size_t>(n)] + i) = fld.one();
    d.push_back(Q[static_cast<std::size_t>(n) + 1] * shift *
                *inverse(Q[static_cast<std::size_t>(n)]));
  }

  ComplexPtr<K> out = share(MixedComplex<K>(
      fld, dims, std::move(b), std::move(d),
      "random-" + std::to_string(seed)));
  out->require_valid();
  return out;
}

// A named example complex together with the coefficient family it is
// usually studied with, and a comparison morphism where the point of
// the example is a map.
template <class K>
struct BuiltinExample {
  ComplexPtr<K> complex;
  PolySeq<K> coefficients;
  std::optional<MixedMorphism<K>> comparison;
};

namespace detail {

// Matrix of right multiplication by e_j.
template <class K>
Matrix<K> right_multiplication(const Algebra<K>& A, std::size_t j) {
  std::size_t n = A.dim();
  Matrix<K> m(n, n, A.field());
  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<K>& prod = A.product(i, j);
    for (std::size_t k = 0; k < n; ++k) m.at(k, i) = prod[k];
  }
  return m;
}

}  // namespace detail

// Small complexes used throughout the test corpus, built from scratch
// here so reports and the command line can refer to them by name.
//
//   appendix0   two-dimensional spaces in degrees 0 and 1; d is the
//               identity and b a nilpotent jordan block
//   banalitaet  a tower with zero b whose odd coboundaries are the
//               identity, compared against the one-point complex
//   example1    the quantum plane truncation acting on itself by right
//               multiplication, over the quotient killing yx in
//               degree 0; takes the parameter q
//   example2    one-dimensional spaces in degrees 0, 1, 2 with b_1 and
//               d_1 the identity
//   exterior2   differential forms of the exterior algebra on two
//               generators
//
// Unbounded examples are truncated at N (default 6, or 4 for
// exterior2). The recommended coefficients are constant one, except
// geometric powers of q for example1 and the cyclic family for
// exterior2.
template <class K>
BuiltinExample<K> builtin_example(const Field<K>& fld, const std::string& name,
                                  std::optional<std::type_identity_t<K>> q = std::nullopt,
                                  std::optional<long> top = std::nullopt) {
  auto reject_q = [&]() {
    if (q) throw error("builtin '" + name + "' does not take a parameter q");
  };
  auto reject_top = [&]() {
    if (top) throw error("builtin '" + name + "' has a fixed top degree");
  };
  auto choose_top = [&](long fallback) {
    long N = top.value_or(fallback);
    if (N < 4)
      throw error("builtin '" + name + "' needs a top degree of at least 4");
    return N;
  };

  if (name == "appendix0") {
    reject_q();
    reject_top();
    Matrix<K> b1(2, 2, fld);
    b1.at(1, 0) = fld.one();
    ComplexPtr<K> D = share(MixedComplex<K>(
        fld, {2, 2}, {b1}, {Matrix<K>::identity(2, fld)}, "appendix0"));
    D->require_valid();
    return {D, PolySeq<K>::constant_one(fld), std::nullopt};
  }

  if (name == "example2") {
    reject_q();
    reject_top();
    Matrix<K> one(1, 1, fld), zero(1, 1, fld);
    one.at(0, 0) = fld.one();
    ComplexPtr<K> D = share(MixedComplex<K>(
        fld, {1, 1, 1}, {one, zero}, {zero, one}, "example2"));
    D->require_valid();
    return {D, PolySeq<K>::constant_one(fld), std::nullopt};
  }

  if (name == "example1") {
    if (!q) throw error("builtin 'example1' needs the parameter q");
    long N = choose_top(6);
    Algebra<K> A = quantum_plane_algebra(fld, *q);
    Matrix<K> rx = detail::right_multiplication(A, 1);
    Matrix<K> ry = detail::right_multiplication(A, 2);
    // Degree 0 is the algebra modulo the line through yx, which both
    // right multiplications respect.
    Matrix<K> span(4, 1, fld);
    span.at(3, 0) = fld.one();
    QuotientStructure<K> quot(4, Subspace<K>::from_span(span));
    std::vector<std::size_t> dims{3};
    for (long n = 1; n <= N; ++n) dims.push_back(4);
    std::vector<Matrix<K>> b{quot.projection() * rx};
    for (long n = 2; n <= N; ++n) b.push_back(rx);
    std::vector<Matrix<K>> d{ry * quot.section()};
    for (long n = 1; n < N; ++n) d.push_back(ry);
    ComplexPtr<K> D = share(MixedComplex<K>(
        fld, std::move(dims), std::move(b), std::move(d), "example1", N - 2));
    D->require_valid();
    return {D, PolySeq<K>::geometric(fld, *q), std::nullopt};
  }

  if (name == "banalitaet") {
    reject_q();
    long N = choose_top(6);
    ComplexPtr<K> point = share(MixedComplex<K>(fld, {1}, {}, {}, "point"));
    std::vector<std::size_t> dims(static_cast<std::size_t>(N) + 1, 1);
    std::vector<Matrix<K>> b, d;
    for (long n = 1; n <= N; ++n) b.emplace_back(1, 1, fld);
    for (long n = 0; n < N; ++n) {
      Matrix<K> dn(1, 1, fld);
      if (n % 2 == 1) dn.at(0, 0) = fld.one();
      d.push_back(dn);
    }
    ComplexPtr<K> tower = share(MixedComplex<K>(
        fld, std::move(dims), std::move(b), std::move(d), "banalitaet",
        N - 2));
    tower->require_valid();
    Matrix<K> phi0(1, 1, fld);
    phi0.at(0, 0) = fld.one();
    MixedMorphism<K> phi{point, tower, {phi0}};
    return {tower, PolySeq<K>::constant_one(fld), phi};
  }

  if (name == "exterior2") {
    reject_q();
    long N = choose_top(4);
    ComplexPtr<K> D = ncforms(exterior_algebra(fld), N, "exterior2");
    return {D, PolySeq<K>::cyclic(fld), std::nullopt};
  }

  throw error("unknown builtin example '" + name +
              "' (available: appendix0, banalitaet, example1, example2, "
              "exterior2)");
}

}  // namespace mixhom

#endif  // MIXHOM_BUILDERS_HPP
