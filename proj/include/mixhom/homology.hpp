#ifndef MIXHOM_HOMOLOGY_HPP
#define MIXHOM_HOMOLOGY_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mixhom/complex.hpp"
#include "mixhom/deform.hpp"

namespace mixhom {

enum class Direction { chain, cochain };
enum class Grading { natural, parity };
enum class MapMode { chain, cochain, mixed };

// Homology of (D, b) or of (D, d) in every degree 0..N.
template <class K>
std::vector<HomologySpace<K>> linear_homology(const MixedComplex<K>& D, Direction dir) {
  std::vector<HomologySpace<K>> out;
  for (long n = 0; n <= D.top_degree(); ++n) {
    if (dir == Direction::chain)
      out.push_back(homology_at(D.b(n + 1), D.b(n), n));
    else
      out.push_back(homology_at(D.d(n - 1), D.d(n), n));
  }
  return out;
}

template <class K>
std::vector<HomologySpace<K>> linear_homology(const ComplexPtr<K>& D, Direction dir) {
  return linear_homology(*D, dir);
}

// Quotient of a complex by the image of its own xi-operator. On the
// quotient the induced xi vanishes, which is what makes the direct-sum
// total below a complex.
template <class K>
QuotientComplexResult<K> hat_quotient(const ComplexPtr<K>& D) {
  return quotient_by_images(D, {D->xi_family()}, "/hat");
}

// Slot bookkeeping for one assembled total space: which degrees of the
// underlying complex appear, and at which coordinate offsets.
struct TotalLayout {
  std::vector<long> slot_degrees;
  std::vector<std::size_t> offsets;
  std::size_t dim = 0;

  std::optional<std::size_t> slot_of(long degree) const {
    for (std::size_t j = 0; j < slot_degrees.size(); ++j)
      if (slot_degrees[j] == degree) return j;
    return std::nullopt;
  }
};

// Direct-sum total of a complex whose own xi-operator vanishes (such as
// a hat quotient, or any complex with anticommuting b and d).
//
// Natural grading: tot_n = (+)_{i >= 0} C_{n-2i}, slots listed from degree
// n downwards, with differential b + d sending slot degree m to slot
// degrees m-1 and m+1 of tot_{n-1}. The coboundary out of the top slot
// has no home in tot_{n-1} and is cut off; for that to leave the square
// of the differential zero, xi = 0 is exactly what is needed, and the
// constructor verifies it by multiplying the assembled matrices.
//
// Parity grading: tot_s = (+)_{j} C_{s+2j} for s in {0,1}, slots listed
// from degree s upwards, with the two differentials mapping each parity
// to the other. Nothing is cut off; boundedness of C plays the role of
// the vanishing at the ends.
template <class K>
class TotalComplex {
 public:
  TotalComplex(ComplexPtr<K> base, Grading grading,
               std::optional<long> up_to = std::nullopt)
      : base_(std::move(base)), grading_(grading) {
    const MixedComplex<K>& C = *base_;
    long N = C.top_degree();
    if (grading_ == Grading::natural) {
      max_degree_ = up_to.value_or(N);
      if (max_degree_ < 0) throw error("total complex needs a nonnegative top degree");
      for (long n = 0; n <= max_degree_ + 1; ++n) {
        TotalLayout lay;
        long top = std::min(n, N);
        if ((n - top) % 2 != 0) --top;
        for (long m = top; m >= 0; m -= 2) {
          lay.slot_degrees.push_back(m);
          lay.offsets.push_back(lay.dim);
          lay.dim += C.dim(m);
        }
        layouts_.push_back(std::move(lay));
      }
      diffs_.push_back(Matrix<K>(0, layouts_[0].dim, C.field()));
      for (long n = 1; n <= max_degree_ + 1; ++n)
        diffs_.push_back(assemble(layouts_[static_cast<std::size_t>(n)],
                                  layouts_[static_cast<std::size_t>(n) - 1]));
      for (long n = 1; n <= max_degree_ + 1; ++n)
        if (!(diff(n - 1) * diff(n)).is_zero())
          throw error("total differential does not square to zero at degree " +
                      std::to_string(n) + " (xi of the assembled complex is nonzero)");
    } else {
      max_degree_ = 1;
      for (long s = 0; s <= 1; ++s) {
        TotalLayout lay;
        for (long m = s; m <= N; m += 2) {
          lay.slot_degrees.push_back(m);
          lay.offsets.push_back(lay.dim);
          lay.dim += C.dim(m);
        }
        layouts_.push_back(std::move(lay));
      }
      diffs_.push_back(assemble(layouts_[0], layouts_[1]));
      diffs_.push_back(assemble(layouts_[1], layouts_[0]));
      for (long s = 0; s <= 1; ++s)
        if (!(diffs_[static_cast<std::size_t>(1 - s)] * diffs_[static_cast<std::size_t>(s)])
                 .is_zero())
          throw error("periodic total differential does not square to zero");
    }
  }

  Grading grading() const { return grading_; }
  const ComplexPtr<K>& base() const { return base_; }

  // Largest index with a valid homology group: the requested top degree
  // for the natural grading, 1 for the parity grading.
  long max_degree() const { return max_degree_; }

  const TotalLayout& layout(long idx) const {
    return layouts_.at(static_cast<std::size_t>(idx));
  }

  // Natural grading: the map tot_idx -> tot_{idx-1}. Parity grading: the
  // map tot_idx -> tot_{1-idx}.
  const Matrix<K>& diff(long idx) const {
    return diffs_.at(static_cast<std::size_t>(idx));
  }

  HomologySpace<K> homology(long idx) const {
    if (grading_ == Grading::natural) {
      if (idx < 0 || idx > max_degree_)
        throw error("total homology index out of range");
      return homology_at(diff(idx + 1), diff(idx), idx);
    }
    if (idx < 0 || idx > 1) throw error("parity index must be 0 or 1");
    return homology_at(diff(1 - idx), diff(idx), idx);
  }

 private:
  Matrix<K> assemble(const TotalLayout& src, const TotalLayout& tgt) const {
    const MixedComplex<K>& C = *base_;
    Matrix<K> m(tgt.dim, src.dim, C.field());
    for (std::size_t j = 0; j < src.slot_degrees.size(); ++j) {
      long deg = src.slot_degrees[j];
      if (auto t = tgt.slot_of(deg - 1))
        m.set_block(tgt.offsets[*t], src.offsets[j], C.b(deg));
      if (auto t = tgt.slot_of(deg + 1))
        m.set_block(tgt.offsets[*t], src.offsets[j], C.d(deg));
    }
    return m;
  }

  ComplexPtr<K> base_;
  Grading grading_;
  long max_degree_ = 0;
  std::vector<TotalLayout> layouts_;
  std::vector<Matrix<K>> diffs_;
};

// Block-diagonal total of a componentwise map between two complexes with
// vanishing xi, in the slot layouts of the given totals. Slots present on
// only one side contribute nothing (their counterpart has dimension 0).
template <class K>
Matrix<K> total_component_map(const TotalComplex<K>& tgt, const TotalComplex<K>& src,
                              const MixedMorphism<K>& phi, long idx) {
  const TotalLayout& s = src.layout(idx);
  const TotalLayout& t = tgt.layout(idx);
  Matrix<K> m(t.dim, s.dim, src.base()->field());
  for (std::size_t j = 0; j < s.slot_degrees.size(); ++j)
    if (auto tj = t.slot_of(s.slot_degrees[j]))
      m.set_block(t.offsets[*tj], s.offsets[j], phi.at(s.slot_degrees[j]));
  return m;
}

// Mixed homology of a complex: pass to the hat quotient, totalize, take
// homology. The natural grading yields groups in degrees 0..up_to
// (default: the top degree of D); the parity grading yields one group
// per parity.
template <class K>
struct MixedHomology {
  QuotientComplexResult<K> hat;
  TotalComplex<K> tot;
  std::vector<HomologySpace<K>> groups;

  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> out;
    for (const auto& h : groups) out.push_back(h.dim());
    return out;
  }
};

template <class K>
MixedHomology<K> mixed_homology(const ComplexPtr<K>& D, Grading grading = Grading::natural,
                                std::optional<long> up_to = std::nullopt) {
  auto hat = hat_quotient(D);
  TotalComplex<K> tot(hat.complex, grading, up_to);
  std::vector<HomologySpace<K>> groups;
  for (long idx = 0; idx <= tot.max_degree(); ++idx) groups.push_back(tot.homology(idx));
  return {std::move(hat), std::move(tot), std::move(groups)};
}

// Mixed homology with the coboundary deformed by c.
template <class K>
MixedHomology<K> mixed_homology(const ComplexPtr<K>& D, const PolySeq<K>& c,
                                Grading grading = Grading::natural,
                                std::optional<long> up_to = std::nullopt) {
  return mixed_homology(deformed_complex(D, c), grading, up_to);
}

// The map a morphism induces on homology, expressed degreewise in the
// deterministic representative bases of source and target.
//
// chain mode uses (-, b), cochain mode uses (-, d), mixed mode descends
// to the hat quotients and totalizes (natural grading). In every mode the
// required commutation is checked first and a failure throws. Callers
// wanting a deformed coboundary pass complexes whose d already is the
// deformed map (deformed_complex).
//
// The quasi-isomorphism verdict only quantifies over degrees up to
// trusted, the smaller of the two trusted degrees, since truncation
// artifacts live above it; an untruncated side is honest everywhere.
template <class K>
struct InducedMap {
  MapMode mode;
  std::vector<HomologySpace<K>> source, target;
  std::vector<Matrix<K>> components;  // index = degree
  long trusted = 0;
  bool quasi_iso = true;  // all components invertible in degrees 0..trusted
};

template <class K>
InducedMap<K> induced_map(const MixedMorphism<K>& phi, MapMode mode) {
  const MixedComplex<K>& S = *phi.source;
  const MixedComplex<K>& T = *phi.target;
  long N = std::max(S.top_degree(), T.top_degree());
  for (long n = 0; n <= N; ++n)
    if (phi.at(n).rows() != T.dim(n) || phi.at(n).cols() != S.dim(n))
      throw error("induced map: component at degree " + std::to_string(n) +
                  " has the wrong shape");
  if (mode != MapMode::cochain)
    for (long n = 0; n <= N; ++n)
      if (phi.at(n - 1) * S.b(n) != T.b(n) * phi.at(n))
        throw error("induced map: not a chain map for b at degree " + std::to_string(n));
  if (mode != MapMode::chain)
    for (long n = 0; n <= N; ++n)
      if (phi.at(n + 1) * S.d(n) != T.d(n) * phi.at(n))
        throw error("induced map: not a chain map for d at degree " + std::to_string(n));

  InducedMap<K> out;
  out.mode = mode;
  // A truncated side is only honest up to its trusted degree; an
  // untruncated side is honest everywhere (its groups vanish above the
  // top degree, so comparisons beyond N carry no information anyway).
  long trust_s = S.is_truncated() ? S.trusted_degree() : N;
  long trust_t = T.is_truncated() ? T.trusted_degree() : N;
  out.trusted = std::min(trust_s, trust_t);
  if (mode == MapMode::mixed) {
    auto hatS = hat_quotient(phi.source);
    auto hatT = hat_quotient(phi.target);
    MixedMorphism<K> hphi{hatS.complex, hatT.complex, {}};
    for (long n = 0; n <= N; ++n) {
      if (n > S.top_degree() || n > T.top_degree()) {
        // One side is the zero space there; the descended map is zero.
        hphi.phi.push_back(
            Matrix<K>(hatT.complex->dim(n), hatS.complex->dim(n), S.field()));
        continue;
      }
      // phi maps im xi into im xi (it commutes with b and d), so it
      // descends; assert rather than assume.
      auto& qs = hatS.quotients[static_cast<std::size_t>(n)];
      auto& qt = hatT.quotients[static_cast<std::size_t>(n)];
      if (!(qt.projection() * phi.at(n) * qs.sub().basis()).is_zero())
        throw error("induced map: morphism does not descend to the hat quotients");
      hphi.phi.push_back(qt.projection() * phi.at(n) * qs.section());
    }
    TotalComplex<K> totS(hatS.complex, Grading::natural, N);
    TotalComplex<K> totT(hatT.complex, Grading::natural, N);
    for (long n = 0; n <= N; ++n) {
      out.source.push_back(totS.homology(n));
      out.target.push_back(totT.homology(n));
      Matrix<K> tot_phi = total_component_map(totT, totS, hphi, n);
      out.components.push_back(
          out.target.back().class_coordinates(tot_phi * out.source.back().representatives()));
    }
  } else {
    Direction dir = mode == MapMode::chain ? Direction::chain : Direction::cochain;
    auto hs = linear_homology(S, dir);
    auto ht = linear_homology(T, dir);
    for (long n = 0; n <= N; ++n) {
      HomologySpace<K> a = n <= S.top_degree()
                               ? hs[static_cast<std::size_t>(n)]
                               : homology_at(Matrix<K>(0, 0, S.field()),
                                             Matrix<K>(0, 0, S.field()), n);
      HomologySpace<K> b = n <= T.top_degree()
                               ? ht[static_cast<std::size_t>(n)]
                               : homology_at(Matrix<K>(0, 0, T.field()),
                                             Matrix<K>(0, 0, T.field()), n);
      out.components.push_back(b.class_coordinates(phi.at(n) * a.representatives()));
      out.source.push_back(std::move(a));
      out.target.push_back(std::move(b));
    }
  }
  for (long n = 0; n <= out.trusted && n < static_cast<long>(out.components.size()); ++n) {
    const Matrix<K>& m = out.components[static_cast<std::size_t>(n)];
    if (m.rows() != m.cols() || rank(m) != m.rows()) {
      out.quasi_iso = false;
      break;
    }
  }
  return out;
}

}  // namespace mixhom

#endif  // MIXHOM_HOMOLOGY_HPP
