#ifndef MIXHOM_DEFORM_HPP
#define MIXHOM_DEFORM_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "mixhom/complex.hpp"
#include "mixhom/poly.hpp"

namespace mixhom {

// Verdict for one named matrix identity at one degree. When the identity
// fails, the witness pins down the first offending entry (or dimension).
struct IdentityCheck {
  std::string identity;
  int degree = 0;
  bool holds = true;
  std::string witness;  // empty when the identity holds
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;

  bool all_hold() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const IdentityCheck& c) { return c.holds; });
  }

  std::vector<IdentityCheck> failures() const {
    std::vector<IdentityCheck> out;
    for (const auto& c : checks)
      if (!c.holds) out.push_back(c);
    return out;
  }

  void add(std::string identity, long degree, bool holds, std::string witness = "") {
    checks.push_back({std::move(identity), static_cast<int>(degree), holds,
                      std::move(witness)});
  }

  void merge(IdentityReport other) {
    for (auto& c : other.checks) checks.push_back(std::move(c));
  }
};

namespace detail {

// Records lhs == rhs under the given name, with the first differing entry
// as witness on failure.
template <class K>
void check_equal(IdentityReport& rep, std::string name, long degree,
                 const Matrix<K>& lhs, const Matrix<K>& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    rep.add(std::move(name), degree, false,
            "shape " + lhs.shape_str() + " vs " + rhs.shape_str());
    return;
  }
  const Field<K>& F = lhs.field();
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t j = 0; j < lhs.cols(); ++j)
      if (!F.eq(lhs.at(i, j), rhs.at(i, j))) {
        rep.add(std::move(name), degree, false,
                "entry (" + std::to_string(i) + "," + std::to_string(j) + "): " +
                    F.str(lhs.at(i, j)) + " vs " + F.str(rhs.at(i, j)));
        return;
      }
  rep.add(std::move(name), degree, true);
}

template <class K>
void check_vanishes(IdentityReport& rep, std::string name, long degree,
                    const Matrix<K>& m) {
  check_equal(rep, std::move(name), degree, m,
              Matrix<K>(m.rows(), m.cols(), m.field()));
}

template <class K>
void check_same_subspace(IdentityReport& rep, std::string name, long degree,
                         const Subspace<K>& lhs, const Subspace<K>& rhs) {
  if (lhs == rhs)
    rep.add(std::move(name), degree, true);
  else
    rep.add(std::move(name), degree, false,
            "subspaces differ (dims " + std::to_string(lhs.dim()) + " vs " +
                std::to_string(rhs.dim()) + ")");
}

// im(map restricted to part) lies inside target_part.
template <class K>
void check_maps_into(IdentityReport& rep, std::string name, long degree,
                     const Matrix<K>& map, const Subspace<K>& part,
                     const Subspace<K>& target_part) {
  bool ok = Subspace<K>::from_span(map * part.basis()).contained_in(target_part);
  rep.add(std::move(name), degree, ok,
          ok ? "" : "image of the summand leaves the corresponding summand");
}

}  // namespace detail

// A mixed complex together with the deformed coboundary induced by a
// coefficient sequence c:
//
//   Upsilon_n = d_n c_n(xi_n),   Xi_n = b_{n+1} Upsilon_n + Upsilon_{n-1} b_n,
//   T_n = id - Xi_n.
//
// Both evaluation orders of Upsilon (d_n c_n(xi_n) and c_n(xi_{n+1}) d_n)
// are computed and compared; they agree because xi commutes with d, so a
// mismatch can only be an arithmetic fault and throws.
template <class K>
class DeformedStructure {
 public:
  DeformedStructure(ComplexPtr<K> base, PolySeq<K> c)
      : base_(std::move(base)), c_(std::move(c)) {
    const MixedComplex<K>& D = *base_;
    if (!(D.field() == c_.field()))
      throw error("deformed structure: complex and coefficient sequence disagree on the field");
    long N = D.top_degree();
    for (long n = 0; n <= N; ++n) {
      Matrix<K> right = eval_right(c_.c(n), D.d(n), D.xi(n));
      Matrix<K> left = eval_left(c_.c(n), D.xi(n + 1), D.d(n));
      if (right != left)
        throw error("the two evaluation orders of Upsilon disagree at degree " +
                    std::to_string(n));
      ups_.push_back(std::move(right));
    }
    for (long n = 0; n <= N; ++n) {
      Matrix<K> x = D.b(n + 1) * ups_[static_cast<std::size_t>(n)];
      if (n >= 1) x = x + ups_[static_cast<std::size_t>(n) - 1] * D.b(n);
      T_.push_back(Matrix<K>::identity(D.dim(n), D.field()) - x);
      Xi_.push_back(std::move(x));
    }
  }

  const MixedComplex<K>& complex() const { return *base_; }
  const ComplexPtr<K>& base() const { return base_; }
  const PolySeq<K>& coefficients() const { return c_; }
  long top_degree() const { return base_->top_degree(); }
  K beta(long n) const { return c_.beta(n); }

  // Upsilon_n : D_n -> D_{n+1}; zero outside 0..N like the structure maps.
  Matrix<K> upsilon(long n) const {
    if (n >= 0 && static_cast<std::size_t>(n) < ups_.size())
      return ups_[static_cast<std::size_t>(n)];
    return Matrix<K>(base_->dim(n + 1), base_->dim(n), base_->field());
  }

  Matrix<K> Xi(long n) const {
    if (n >= 0 && static_cast<std::size_t>(n) < Xi_.size())
      return Xi_[static_cast<std::size_t>(n)];
    return Matrix<K>(base_->dim(n), base_->dim(n), base_->field());
  }

  Matrix<K> T(long n) const {
    if (n >= 0 && static_cast<std::size_t>(n) < T_.size())
      return T_[static_cast<std::size_t>(n)];
    return Matrix<K>::identity(base_->dim(n), base_->field());
  }

  const OperatorFamily<K>& upsilon_family() const { return ups_; }
  const OperatorFamily<K>& Xi_family() const { return Xi_; }

  bool Xi_vanishes() const {
    return std::all_of(Xi_.begin(), Xi_.end(),
                       [](const Matrix<K>& m) { return m.is_zero(); });
  }

 private:
  ComplexPtr<K> base_;
  PolySeq<K> c_;
  std::vector<Matrix<K>> ups_, Xi_, T_;
};

// The mixed complex (D, b, Upsilon): same spaces and boundary, deformed
// coboundary. Upsilon squares to zero because xi commutes with d, and the
// xi-operator of the new complex is exactly Xi.
template <class K>
ComplexPtr<K> deformed_complex(const DeformedStructure<K>& S) {
  const MixedComplex<K>& D = S.complex();
  long N = D.top_degree();
  std::vector<std::size_t> dims;
  std::vector<Matrix<K>> b, d;
  for (long n = 0; n <= N; ++n) dims.push_back(D.dim(n));
  for (long n = 1; n <= N; ++n) b.push_back(D.b(n));
  for (long n = 0; n < N; ++n) d.push_back(S.upsilon(n));
  return share(MixedComplex<K>(D.field(), std::move(dims), std::move(b), std::move(d),
                               D.name() + "/deformed",
                               D.is_truncated() ? std::optional<long>(D.trusted_degree())
                                                : std::nullopt));
}

template <class K>
ComplexPtr<K> deformed_complex(const ComplexPtr<K>& D, const PolySeq<K>& c) {
  return deformed_complex(DeformedStructure<K>(D, c));
}

// Degreewise verification of the closed forms for the anticommutator
// Xi = b Upsilon + Upsilon b. With f_n = c_n - c_{n-1}:
//
//   Xi_n = xi_n c_n(xi_n) - d_{n-1} b_n f_n(xi_n)
//        = b_{n+1} d_n f_n(xi_n) + xi_n c_{n-1}(xi_n)
//
// and therefore the product of the two differences vanishes:
//
//   (Xi_n - xi_n c_n(xi_n)) (Xi_n - xi_n c_{n-1}(xi_n)) = 0.
//
// The closed forms already identify the factors as -d b f_n(xi) and
// b d f_n(xi), so the product check is the only extra computation.
template <class K>
IdentityReport check_deformation_identities(const DeformedStructure<K>& S) {
  IdentityReport rep;
  const MixedComplex<K>& D = S.complex();
  const PolySeq<K>& c = S.coefficients();
  for (long n = 0; n <= D.top_degree(); ++n) {
    Matrix<K> xi = D.xi(n);
    Matrix<K> xi_cn = xi * eval_at(c.c(n), xi);
    Matrix<K> xi_cp = xi * eval_at(c.c(n - 1), xi);
    Matrix<K> dbf = D.d(n - 1) * eval_right(c.f(n), D.b(n), xi);
    Matrix<K> bdf = D.b(n + 1) * eval_right(c.f(n), D.d(n), xi);
    detail::check_equal(rep, "anticommutator_first_closed_form", n, S.Xi(n), xi_cn - dbf);
    detail::check_equal(rep, "anticommutator_second_closed_form", n, S.Xi(n), bdf + xi_cp);
    detail::check_vanishes(rep, "factor_product_vanishes", n,
                           (S.Xi(n) - xi_cn) * (S.Xi(n) - xi_cp));
  }
  return rep;
}

template <class K>
IdentityReport check_deformation_identities(const ComplexPtr<K>& D, const PolySeq<K>& c) {
  return check_deformation_identities(DeformedStructure<K>(D, c));
}

// For the cyclic coefficient sequence, T is controlled by powers of the
// Karoubi operator kappa = id - xi:
//
//   T_n = (id - b_{n+1} d_n) kappa_n^n
//   kappa_n^{n+1} = T_n (id - d_{n-1} b_n)
//   (T_n - kappa_n^{n+1}) (T_n - kappa_n^n) = 0.
template <class K>
IdentityReport check_karoubi_identities(const ComplexPtr<K>& D) {
  IdentityReport rep;
  DeformedStructure<K> S(D, PolySeq<K>::cyclic(D->field()));
  for (long n = 0; n <= D->top_degree(); ++n) {
    Matrix<K> id = Matrix<K>::identity(D->dim(n), D->field());
    Matrix<K> kn = power(D->kappa(n), static_cast<std::size_t>(n));
    Matrix<K> kn1 = D->kappa(n) * kn;
    detail::check_equal(rep, "karoubi_power_form", n, S.T(n),
                        (id - D->b(n + 1) * D->d(n)) * kn);
    detail::check_equal(rep, "karoubi_shifted_power_form", n, kn1,
                        S.T(n) * (id - D->d(n - 1) * D->b(n)));
    detail::check_vanishes(rep, "karoubi_factor_product_vanishes", n,
                           (S.T(n) - kn1) * (S.T(n) - kn));
  }
  return rep;
}

// The reduced complex Dbar = D / im Xi together with the projector that
// splits it as ker(xibar^2) (+) im(xibar^2), and the verdicts for the
// identities behind the split.
template <class K>
struct SplittingResult {
  QuotientComplexResult<K> reduced;      // Dbar, with the projection from D
  OperatorFamily<K> projector;           // pbar_n on Dbar
  std::vector<Subspace<K>> kernel_part;  // ker xibar_n^2 = im pbar_n
  std::vector<Subspace<K>> image_part;   // im xibar_n^2 = ker pbar_n
  IdentityReport report;
};

// Builds Dbar = D / im Xi (well defined since Xi commutes with b and d)
// and the projector
//
//   pbar_n = eps_n^{-2} (eps_n - delta_n xibar_n) c_{n-1}(xibar_n) c_n(xibar_n)
//
// for n >= 1, where eps_n and delta_n are the constant and linear
// coefficients of c_{n-1} c_n. In degree 0 that expression degenerates
// (c_{-1} = 0 forces eps_0 = 0) and beta_0^{-1} c_0(xibar_0) serves
// instead: it is idempotent because xibar_0 c_0(xibar_0) vanishes, by the
// closed form for Xi in degree 0 applied to Dbar.
//
// Verified degreewise: pbar is idempotent, its image is ker(xibar^2), its
// kernel is im(xibar^2), the two parts are complementary and closed under
// b and d, xibar^2 annihilates c_{n-1}(xibar) c_n(xibar) on both sides,
// and im(xibar) meets ker(xibar^2) exactly in im(xibar) meet ker(xibar).
//
// Requires every beta_n invertible; throws otherwise.
template <class K>
SplittingResult<K> kernel_image_splitting(const ComplexPtr<K>& D, const PolySeq<K>& c) {
  const Field<K>& F = D->field();
  long N = D->top_degree();
  c.require_invertible_up_to(N);
  DeformedStructure<K> S(D, c);
  SplittingResult<K> out{quotient_by_images(D, {S.Xi_family()}, "/reduced"),
                         {}, {}, {}, {}};
  const MixedComplex<K>& Dbar = *out.reduced.complex;
  for (long n = 0; n <= N; ++n) {
    Matrix<K> xb = Dbar.xi(n);
    Matrix<K> xb2 = xb * xb;
    Poly<K> cc = c.c(n - 1) * c.c(n);
    Poly<K> proj_poly =
        n == 0 ? Poly<K>::constant(F, F.inv(c.beta(0))) * c.c(0)
               : Poly<K>::constant(F, F.inv(F.mul(c.eps(n), c.eps(n)))) *
                     (Poly<K>::constant(F, c.eps(n)) -
                      Poly<K>::x(F) * Poly<K>::constant(F, c.delta(n))) *
                     cc;
    Matrix<K> p = eval_at(proj_poly, xb);
    Subspace<K> keep = kernel_space(xb2);
    Subspace<K> drop = image_basis(xb2);

    detail::check_equal(out.report, "projector_idempotent", n, p * p, p);
    detail::check_same_subspace(out.report, "projector_image_is_kernel_part", n,
                                image_basis(p), keep);
    detail::check_same_subspace(out.report, "projector_kernel_is_image_part", n,
                                kernel_space(p), drop);
    std::size_t meet = keep.intersect(drop).dim();
    bool complementary = meet == 0 && keep.dim() + drop.dim() == Dbar.dim(n);
    out.report.add("kernel_image_direct_sum", n, complementary,
                   complementary ? ""
                                 : "dims " + std::to_string(keep.dim()) + "+" +
                                       std::to_string(drop.dim()) + " in ambient " +
                                       std::to_string(Dbar.dim(n)) + ", intersection " +
                                       std::to_string(meet));
    if (n >= 1) {
      Matrix<K> ccm = eval_at(cc, xb);
      detail::check_vanishes(out.report, "xibar_squared_annihilates_product", n, xb2 * ccm);
      detail::check_vanishes(out.report, "product_annihilates_xibar_squared", n, ccm * xb2);
    }
    detail::check_same_subspace(out.report, "image_kernel_intersection_stable", n,
                                image_basis(xb).intersect(keep),
                                image_basis(xb).intersect(kernel_space(xb)));

    out.projector.push_back(std::move(p));
    out.kernel_part.push_back(std::move(keep));
    out.image_part.push_back(std::move(drop));
  }
  // The split respects the structure maps, so it is a split of mixed
  // complexes, not merely of graded spaces.
  for (long n = 0; n <= N; ++n) {
    auto part = [&](long m) -> const Subspace<K>& {
      return out.kernel_part[static_cast<std::size_t>(m)];
    };
    auto ipart = [&](long m) -> const Subspace<K>& {
      return out.image_part[static_cast<std::size_t>(m)];
    };
    if (n >= 1) {
      detail::check_maps_into(out.report, "kernel_part_closed_under_b", n,
                              Dbar.b(n), part(n), part(n - 1));
      detail::check_maps_into(out.report, "image_part_closed_under_b", n,
                              Dbar.b(n), ipart(n), ipart(n - 1));
    }
    if (n < N) {
      detail::check_maps_into(out.report, "kernel_part_closed_under_d", n,
                              Dbar.d(n), part(n), part(n + 1));
      detail::check_maps_into(out.report, "image_part_closed_under_d", n,
                              Dbar.d(n), ipart(n), ipart(n + 1));
    }
  }
  return out;
}

// The core E = ker(xibar^2) of Dbar = D / im Xi, carried as a subcomplex,
// plus verification that the deformation collapses on it:
//
//   b xi = 0, d xi = 0, xi^2 = 0,
//   Upsilon_n = beta_n d_n,
//   xi_n = (1 - beta_{n-1}/beta_n) d_{n-1} b_n          (all n; beta_{-1} = 0)
//   xi_n = (1 - beta_n/beta_{n-1}) b_{n+1} d_n          (n >= 1)
//
// where all operators are the restrictions to E. The second expression
// for xi needs beta_{n-1} invertible and is skipped in degree 0, where
// the first expression already forces xi_0 = 0.
//
// Requires every beta_n invertible; throws otherwise.
template <class K>
struct ReducedModel {
  QuotientComplexResult<K> reduced;  // Dbar = D / im Xi
  SubComplexResult<K> core;          // E = ker(xibar^2) inside Dbar
  IdentityReport report;
};

template <class K>
ReducedModel<K> check_reduced_identities(const ComplexPtr<K>& D, const PolySeq<K>& c) {
  const Field<K>& F = D->field();
  long N = D->top_degree();
  c.require_invertible_up_to(N);
  DeformedStructure<K> S(D, c);
  auto reduced = quotient_by_images(D, {S.Xi_family()}, "/reduced");
  OperatorFamily<K> xb2;
  for (long n = 0; n <= N; ++n) {
    Matrix<K> x = reduced.complex->xi(n);
    xb2.push_back(x * x);
  }
  auto core = kernel_subcomplex(reduced.complex, xb2);
  const ComplexPtr<K>& E = core.complex;
  DeformedStructure<K> SE(E, c);
  IdentityReport rep;
  for (long n = 0; n <= N; ++n) {
    Matrix<K> x = E->xi(n);
    detail::check_vanishes(rep, "xi_squared_vanishes_on_core", n, x * x);
    detail::check_vanishes(rep, "boundary_annihilates_xi", n, E->b(n) * x);
    detail::check_vanishes(rep, "coboundary_annihilates_xi", n, E->d(n) * x);
    detail::check_equal(rep, "upsilon_is_beta_scaled_coboundary", n, SE.upsilon(n),
                        E->d(n).scaled(c.beta(n)));
    K lo = F.sub(F.one(), F.div(c.beta(n - 1), c.beta(n)));
    detail::check_equal(rep, "xi_from_coboundary_boundary", n, x,
                        (E->d(n - 1) * E->b(n)).scaled(lo));
    if (n >= 1) {
      K hi = F.sub(F.one(), F.div(c.beta(n), c.beta(n - 1)));
      detail::check_equal(rep, "xi_from_boundary_coboundary", n, x,
                          (E->b(n + 1) * E->d(n)).scaled(hi));
    }
  }
  return {std::move(reduced), std::move(core), std::move(rep)};
}

}  // namespace mixhom

#endif  // MIXHOM_DEFORM_HPP
