#ifndef MIXHOM_COMPLEX_HPP
#define MIXHOM_COMPLEX_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mixhom/linalg.hpp"

namespace mixhom {

// A finite-dimensional mixed complex: graded spaces D_0 .. D_N with a
// degree-lowering boundary b and a degree-raising coboundary d, each
// squaring to zero. b and d need not anticommute; their anticommutator
// xi = bd + db is the central object of everything downstream.
//
// Out-of-range maps (b_0, d_{-1}, d_N, ...) are zero matrices of the
// appropriate shape, with dimension 0 outside degrees 0..N.
template <class K>
class MixedComplex {
 public:
  MixedComplex(const Field<K>& fld, std::vector<std::size_t> dims,
               std::vector<Matrix<K>> b, std::vector<Matrix<K>> d,
               std::string name = "", std::optional<long> trusted_degree = std::nullopt)
      : fld_(fld),
        dims_(std::move(dims)),
        b_(std::move(b)),
        d_(std::move(d)),
        name_(std::move(name)),
        trusted_(trusted_degree) {
    if (dims_.empty()) throw error("complex needs at least degree 0");
    std::size_t n = dims_.size() - 1;
    if (b_.size() != n || d_.size() != n)
      throw error("complex with top degree " + std::to_string(n) + " needs " +
                  std::to_string(n) + " boundary and coboundary matrices");
  }

  const Field<K>& field() const { return fld_; }
  long top_degree() const { return static_cast<long>(dims_.size()) - 1; }
  const std::string& name() const { return name_; }

  // Highest degree whose homology is unaffected by the truncation cutoff;
  // defaults to the top degree for complexes that are not truncations.
  long trusted_degree() const { return trusted_ ? *trusted_ : top_degree(); }
  bool is_truncated() const { return trusted_.has_value(); }

  std::size_t dim(long n) const {
    if (n < 0 || n > top_degree()) return 0;
    return dims_[static_cast<std::size_t>(n)];
  }
  const std::vector<std::size_t>& dims() const { return dims_; }

  // b_n : D_n -> D_{n-1}, stored for n = 1..N, zero otherwise.
  Matrix<K> b(long n) const {
    if (n >= 1 && n <= top_degree()) return b_[static_cast<std::size_t>(n) - 1];
    return Matrix<K>(dim(n - 1), dim(n), fld_);
  }

  // d_n : D_n -> D_{n+1}, stored for n = 0..N-1, zero otherwise (d_N = 0
  // by the truncation convention).
  Matrix<K> d(long n) const {
    if (n >= 0 && n < top_degree()) return d_[static_cast<std::size_t>(n)];
    return Matrix<K>(dim(n + 1), dim(n), fld_);
  }

  // xi_n = b_{n+1} d_n + d_{n-1} b_n, the obstruction to (b+d)^2 = 0.
  Matrix<K> xi(long n) const { return b(n + 1) * d(n) + d(n - 1) * b(n); }

  Matrix<K> kappa(long n) const {
    return Matrix<K>::identity(dim(n), fld_) - xi(n);
  }

  std::vector<Matrix<K>> xi_family() const {
    std::vector<Matrix<K>> out;
    for (long n = 0; n <= top_degree(); ++n) out.push_back(xi(n));
    return out;
  }

  struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
  };

  ValidationReport validate() const {
    ValidationReport rep;
    auto fail = [&rep](const std::string& msg) {
      rep.ok = false;
      rep.violations.push_back(msg);
    };
    long N = top_degree();
    bool shapes_ok = true;
    for (long n = 1; n <= N; ++n) {
      const Matrix<K>& m = b_[static_cast<std::size_t>(n) - 1];
      if (m.rows() != dim(n - 1) || m.cols() != dim(n)) {
        fail("b[" + std::to_string(n) + "] has shape " + m.shape_str() + ", expected " +
             std::to_string(dim(n - 1)) + "x" + std::to_string(dim(n)));
        shapes_ok = false;
      }
    }
    for (long n = 0; n < N; ++n) {
      const Matrix<K>& m = d_[static_cast<std::size_t>(n)];
      if (m.rows() != dim(n + 1) || m.cols() != dim(n)) {
        fail("d[" + std::to_string(n) + "] has shape " + m.shape_str() + ", expected " +
             std::to_string(dim(n + 1)) + "x" + std::to_string(dim(n)));
        shapes_ok = false;
      }
    }
    if (!shapes_ok) return rep;  // square-zero checks would not even compose
    for (long n = 2; n <= N; ++n)
      if (!(b(n - 1) * b(n)).is_zero())
        fail("b.b is nonzero out of degree " + std::to_string(n));
    for (long n = 0; n + 1 < N; ++n)
      if (!(d(n + 1) * d(n)).is_zero())
        fail("d.d is nonzero out of degree " + std::to_string(n));
    return rep;
  }

  void require_valid() const {
    auto rep = validate();
    if (!rep.ok) throw error("invalid complex '" + name_ + "': " + rep.violations.front());
  }

 private:
  Field<K> fld_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix<K>> b_, d_;
  std::string name_;
  std::optional<long> trusted_;
};

template <class K>
using ComplexPtr = std::shared_ptr<const MixedComplex<K>>;

template <class K>
ComplexPtr<K> share(MixedComplex<K> c) {
  return std::make_shared<const MixedComplex<K>>(std::move(c));
}

// Degree-indexed family of square operators on a complex (xi, kappa, Xi,
// T, projectors, ...). Index n = degree; entries beyond the stored range
// are zero on the zero space.
template <class K>
using OperatorFamily = std::vector<Matrix<K>>;

// A degreewise linear map between complexes. Commutation with b and the
// relevant coboundaries is a property to check (morphism_check), not a
// construction invariant, so failed candidates can be reported.
template <class K>
struct MixedMorphism {
  ComplexPtr<K> source;
  ComplexPtr<K> target;
  std::vector<Matrix<K>> phi;  // index = degree

  Matrix<K> at(long n) const {
    if (n >= 0 && static_cast<std::size_t>(n) < phi.size())
      return phi[static_cast<std::size_t>(n)];
    return Matrix<K>(target->dim(n), source->dim(n), source->field());
  }
};

struct MorphismReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Checks phi b = b phi and phi cob = cob phi degreewise. By default the
// coboundary is each complex's own d; callers verifying deformed
// structures pass the Upsilon families instead.
template <class K>
MorphismReport morphism_check(const MixedMorphism<K>& m,
                              const OperatorFamily<K>* cob_src = nullptr,
                              const OperatorFamily<K>* cob_tgt = nullptr) {
  MorphismReport rep;
  auto fail = [&rep](const std::string& s) {
    rep.ok = false;
    rep.violations.push_back(s);
  };
  const MixedComplex<K>& S = *m.source;
  const MixedComplex<K>& T = *m.target;
  long N = std::max(S.top_degree(), T.top_degree());
  auto cob_at = [](const MixedComplex<K>& c, const OperatorFamily<K>* fam, long n) {
    if (!fam) return c.d(n);
    if (n >= 0 && static_cast<std::size_t>(n) < fam->size())
      return (*fam)[static_cast<std::size_t>(n)];
    return Matrix<K>(c.dim(n + 1), c.dim(n), c.field());
  };
  for (long n = 0; n <= N; ++n) {
    if (m.at(n).rows() != T.dim(n) || m.at(n).cols() != S.dim(n)) {
      fail("component at degree " + std::to_string(n) + " has wrong shape");
      continue;
    }
  }
  if (!rep.ok) return rep;
  for (long n = 1; n <= N; ++n)
    if (m.at(n - 1) * S.b(n) != T.b(n) * m.at(n))
      fail("does not commute with b at degree " + std::to_string(n));
  for (long n = 0; n <= N; ++n)
    if (m.at(n + 1) * cob_at(S, cob_src, n) != cob_at(T, cob_tgt, n) * m.at(n))
      fail("does not commute with the coboundary at degree " + std::to_string(n));
  return rep;
}

namespace detail {

// Restriction of a map to chosen source/target subspaces, solving for the
// coordinates in the target sub-basis. Consistency is guaranteed when the
// subspaces come from an operator commuting with the map; a failure here
// means the caller's commutation check was skipped or wrong.
template <class K>
Matrix<K> restrict_map(const Matrix<K>& map, const Subspace<K>& src, const Subspace<K>& tgt) {
  auto sol = solve(tgt.basis(), map * src.basis());
  if (!sol) throw error("restriction does not map into the designated subspace");
  return *sol;
}

template <class K>
void require_commutes(const MixedComplex<K>& c, const OperatorFamily<K>& op) {
  long N = c.top_degree();
  auto op_at = [&](long n) {
    if (n >= 0 && static_cast<std::size_t>(n) < op.size())
      return op[static_cast<std::size_t>(n)];
    return Matrix<K>(c.dim(n), c.dim(n), c.field());
  };
  for (long n = 0; n <= N; ++n) {
    if (op_at(n).rows() != c.dim(n) || op_at(n).cols() != c.dim(n))
      throw error("operator family has wrong shape at degree " + std::to_string(n));
    if (n >= 1 && op_at(n - 1) * c.b(n) != c.b(n) * op_at(n))
      throw error("operator does not commute with b at degree " + std::to_string(n));
    if (n < N && op_at(n + 1) * c.d(n) != c.d(n) * op_at(n))
      throw error("operator does not commute with d at degree " + std::to_string(n));
  }
}

}  // namespace detail

template <class K>
struct SubComplexResult {
  ComplexPtr<K> complex;
  MixedMorphism<K> inclusion;          // sub -> ambient
  std::vector<Subspace<K>> subspaces;  // per degree, in the ambient space
};

template <class K>
struct QuotientComplexResult {
  ComplexPtr<K> complex;
  MixedMorphism<K> projection;  // ambient -> quotient
  std::vector<QuotientStructure<K>> quotients;
};

namespace detail {

template <class K>
SubComplexResult<K> subcomplex_from(const ComplexPtr<K>& D, std::vector<Subspace<K>> spaces,
                                    const std::string& name) {
  long N = D->top_degree();
  std::vector<std::size_t> dims;
  for (long n = 0; n <= N; ++n) dims.push_back(spaces[static_cast<std::size_t>(n)].dim());
  std::vector<Matrix<K>> b, d;
  for (long n = 1; n <= N; ++n)
    b.push_back(restrict_map(D->b(n), spaces[static_cast<std::size_t>(n)],
                             spaces[static_cast<std::size_t>(n) - 1]));
  for (long n = 0; n < N; ++n)
    d.push_back(restrict_map(D->d(n), spaces[static_cast<std::size_t>(n)],
                             spaces[static_cast<std::size_t>(n) + 1]));
  auto sub = share(MixedComplex<K>(D->field(), std::move(dims), std::move(b), std::move(d),
                                   name,
                                   D->is_truncated() ? std::optional<long>(D->trusted_degree())
                                                     : std::nullopt));
  MixedMorphism<K> incl{sub, D, {}};
  for (long n = 0; n <= N; ++n) incl.phi.push_back(spaces[static_cast<std::size_t>(n)].basis());
  return {sub, std::move(incl), std::move(spaces)};
}

}  // namespace detail

// Subcomplex spanned by the given degreewise subspaces. b and d must map
// each space into its neighbours, which the restriction solve checks.
template <class K>
SubComplexResult<K> subcomplex_from_spaces(const ComplexPtr<K>& D,
                                           std::vector<Subspace<K>> spaces,
                                           const std::string& name) {
  if (spaces.size() != static_cast<std::size_t>(D->top_degree()) + 1)
    throw error("subcomplex needs one subspace per degree");
  return detail::subcomplex_from(D, std::move(spaces), name);
}

// Subcomplex spanned degreewise by the images of the given operator
// families (one or more; their images are summed). Each family must
// commute with b and d, which makes the span a subcomplex.
template <class K>
SubComplexResult<K> image_subcomplex(const ComplexPtr<K>& D,
                                     const std::vector<OperatorFamily<K>>& ops) {
  for (const auto& op : ops) detail::require_commutes(*D, op);
  std::vector<Subspace<K>> spaces;
  for (long n = 0; n <= D->top_degree(); ++n) {
    Matrix<K> span(D->dim(n), 0, D->field());
    for (const auto& op : ops)
      if (static_cast<std::size_t>(n) < op.size())
        span = span.hconcat(op[static_cast<std::size_t>(n)]);
    spaces.push_back(Subspace<K>::from_span(span));
  }
  return detail::subcomplex_from(D, std::move(spaces), D->name() + "/image-sub");
}

// Subcomplex cut out degreewise as the kernel of one operator family.
template <class K>
SubComplexResult<K> kernel_subcomplex(const ComplexPtr<K>& D, const OperatorFamily<K>& op) {
  detail::require_commutes(*D, op);
  std::vector<Subspace<K>> spaces;
  for (long n = 0; n <= D->top_degree(); ++n)
    spaces.push_back(kernel_space(op[static_cast<std::size_t>(n)]));
  return detail::subcomplex_from(D, std::move(spaces), D->name() + "/kernel-sub");
}

// Quotient complex by arbitrary degreewise subspaces, with induced b and
// d on the complement coordinates. Both differentials must map each
// subspace into its neighbour, which is checked.
template <class K>
QuotientComplexResult<K> quotient_by_subspaces(const ComplexPtr<K>& D,
                                               const std::vector<Subspace<K>>& spaces,
                                               const std::string& suffix = "/quotient") {
  long N = D->top_degree();
  if (spaces.size() != static_cast<std::size_t>(N) + 1)
    throw error("quotient needs one subspace per degree");
  std::vector<QuotientStructure<K>> quots;
  for (long n = 0; n <= N; ++n)
    quots.emplace_back(D->dim(n), spaces[static_cast<std::size_t>(n)]);
  std::vector<std::size_t> dims;
  for (long n = 0; n <= N; ++n) dims.push_back(quots[static_cast<std::size_t>(n)].dim());
  std::vector<Matrix<K>> b, d;
  for (long n = 1; n <= N; ++n) {
    auto& qs = quots[static_cast<std::size_t>(n)];
    auto& qt = quots[static_cast<std::size_t>(n) - 1];
    if (!(qt.projection() * D->b(n) * qs.sub().basis()).is_zero())
      throw error("boundary does not descend to the quotient at degree " + std::to_string(n));
    b.push_back(qt.projection() * D->b(n) * qs.section());
  }
  for (long n = 0; n < N; ++n) {
    auto& qs = quots[static_cast<std::size_t>(n)];
    auto& qt = quots[static_cast<std::size_t>(n) + 1];
    if (!(qt.projection() * D->d(n) * qs.sub().basis()).is_zero())
      throw error("coboundary does not descend to the quotient at degree " + std::to_string(n));
    d.push_back(qt.projection() * D->d(n) * qs.section());
  }
  auto q = share(MixedComplex<K>(D->field(), std::move(dims), std::move(b), std::move(d),
                                 D->name() + suffix,
                                 D->is_truncated() ? std::optional<long>(D->trusted_degree())
                                                   : std::nullopt));
  MixedMorphism<K> proj{D, q, {}};
  for (long n = 0; n <= N; ++n)
    proj.phi.push_back(quots[static_cast<std::size_t>(n)].projection());
  return {q, std::move(proj), std::move(quots)};
}

// Quotient complex by the degreewise span of the images of the given
// operator families (one or more; their images are summed). Each family
// must commute with b and d, which makes the descent automatic.
template <class K>
QuotientComplexResult<K> quotient_by_images(const ComplexPtr<K>& D,
                                            const std::vector<OperatorFamily<K>>& ops,
                                            const std::string& suffix = "/quotient") {
  for (const auto& op : ops) detail::require_commutes(*D, op);
  std::vector<Subspace<K>> spaces;
  for (long n = 0; n <= D->top_degree(); ++n) {
    Matrix<K> span(D->dim(n), 0, D->field());
    for (const auto& op : ops)
      if (static_cast<std::size_t>(n) < op.size())
        span = span.hconcat(op[static_cast<std::size_t>(n)]);
    spaces.push_back(Subspace<K>::from_span(span));
  }
  return quotient_by_subspaces(D, spaces, suffix);
}

// Thrown by contracting_homotopy when some xi_n is singular.
class not_invertible : public error {
 public:
  explicit not_invertible(long degree)
      : error("xi is not invertible at degree " + std::to_string(degree)), degree_(degree) {}
  long degree() const { return degree_; }

 private:
  long degree_;
};

template <class K>
struct HomotopyResult {
  std::vector<Matrix<K>> h;            // h_n : D_n -> D_{n+1}
  std::vector<bool> identity_holds;    // b h + h b = id at degree n
  std::vector<long> broken_degrees;    // where the truncation cutoff breaks it
};

// For a complex with invertible xi everywhere, h = xi^{-1} d contracts
// the boundary complex: b h + h b = id away from the truncation edge.
// The top degree loses the b_{n+1} h_n term because d_N = 0, which the
// result reports rather than hides.
template <class K>
HomotopyResult<K> contracting_homotopy(const MixedComplex<K>& D) {
  long N = D.top_degree();
  std::vector<Matrix<K>> xi_inv;
  for (long n = 0; n <= N; ++n) {
    auto inv = inverse(D.xi(n));
    if (!inv) throw not_invertible(n);
    xi_inv.push_back(*inv);
  }
  HomotopyResult<K> res;
  for (long n = 0; n <= N; ++n) {
    if (n < N)
      res.h.push_back(xi_inv[static_cast<std::size_t>(n) + 1] * D.d(n));
    else
      res.h.push_back(Matrix<K>(D.dim(n + 1), D.dim(n), D.field()));
  }
  auto h_at = [&](long n) {
    if (n >= 0 && n <= N) return res.h[static_cast<std::size_t>(n)];
    return Matrix<K>(D.dim(n + 1), D.dim(n), D.field());
  };
  for (long n = 0; n <= N; ++n) {
    bool ok = D.b(n + 1) * h_at(n) + h_at(n - 1) * D.b(n) ==
              Matrix<K>::identity(D.dim(n), D.field());
    res.identity_holds.push_back(ok);
    if (!ok) res.broken_degrees.push_back(n);
  }
  return res;
}

}  // namespace mixhom

#endif  // MIXHOM_COMPLEX_HPP
