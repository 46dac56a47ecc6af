#pragma once

// Localization of geometrically multiple eigenvalues in shrunken row disks.
//
// For an eigenvalue whose eigenspace has dimension >= 2 there is an
// eigenvector v with sum_j v_j = 0. Scaling so that the largest component
// v_i equals 1, row i of (m - lambda I) v = 0 reads
//     (lambda - a_ii) = sum_{j != i} a_ij v_j,
// a coefficient-weighted sum of zero-sum planar vectors of length <= 1,
// which the rearrangement bounds confine to the half (and median-shifted)
// radius of row i.

#include <optional>
#include <string>
#include <vector>

#include "gershdisk/disks.hpp"
#include "gershdisk/linalg.hpp"

namespace gershdisk {

template <typename T>
struct LocalizationOptions {
  // Relative tolerance: boundary tolerance is tol * max(1, |c| + r) per
  // disk; eigenvector checks are scaled by max(1, ||m||_F).
  T tol = T(1e-8);
  EigenOptions<T> eigen;
  // Exact eigenvalues known from the construction; a cluster mean within
  // cluster_tol of one of these is replaced by it.
  std::vector<Complex<T>> known_eigenvalues;
  std::vector<RadiusKind> kinds = {RadiusKind::half(), RadiusKind::median(), RadiusKind::corollary2(),
                                   RadiusKind::third(), RadiusKind::full()};
};

/// Index of the first component of largest magnitude.
template <typename T>
Index peak_index(const CVector<T>& v) {
  Index i = 0;
  for (Index j = 1; j < v.size(); ++j)
    if (std::abs(v(j)) > std::abs(v(i))) i = j;
  return i;
}

/// Turns an eigenspace basis (columns, at least two) into a zero-sum
/// eigenvector scaled so its first largest-magnitude component is exactly 1.
///
/// With u, w the first two basis columns: v = u when sum(u) is negligible,
/// otherwise v = sum(w) u - sum(u) w.
template <typename T>
CVector<T> zero_sum_from_basis(const CMatrix<T>& basis, T tol) {
  if (basis.cols() < 2)
    throw PreconditionError("zero_sum_eigenvector: eigenspace has dimension " + std::to_string(basis.cols()) +
                            " < 2");
  const CVector<T> u = basis.col(0);
  const CVector<T> w = basis.col(1);
  const Complex<T> su = u.sum(), sw = w.sum();
  CVector<T> v;
  if (std::abs(su) <= tol * u.cwiseAbs().maxCoeff())
    v = u;
  else
    v = sw * u - su * w;

  const T peak = v.cwiseAbs().maxCoeff();
  if (!(peak > T(0)) || v.norm() <= tol * std::max(u.norm(), w.norm()))
    throw DegenerateBasisError(
        "zero_sum_eigenvector: combination vanished numerically; try a tighter rank_tol");
  Index i = peak_index(v);
  v /= v(i);
  // Rounding can leave other components a few ulps above 1; pull them back
  // to the unit circle and re-pivot on the first unit-modulus entry so that
  // peak_index(v) is exactly the component equal to 1.
  for (Index j = 0; j < v.size(); ++j)
    if (std::abs(v(j)) > T(1)) v(j) /= std::abs(v(j));
  v(i) = Complex<T>(1, 0);
  const Index first = peak_index(v);
  if (first != i) {
    v /= v(first);
    for (Index j = 0; j < v.size(); ++j)
      if (std::abs(v(j)) > T(1)) v(j) /= std::abs(v(j));
    i = first;
  }
  v(i) = Complex<T>(1, 0);
  return v;
}

/// Zero-sum eigenvector for an eigenvalue of geometric multiplicity >= 2.
/// Postconditions (checked): ||(m - lambda I) v|| <= tol max(1,||m||_F) ||v||,
/// |sum v| <= tol max|v_j|, and v_i = 1 at the first peak component.
template <typename T>
CVector<T> zero_sum_eigenvector(const CMatrix<T>& m, Complex<T> lambda, T tol, T rank_tol = T(1e-9)) {
  require_square(m, "zero_sum_eigenvector");
  if (!(tol > T(0))) throw ParameterError("zero_sum_eigenvector: tol must be positive");
  const Index n = m.rows();
  const CMatrix<T> shifted = m - lambda * CMatrix<T>::Identity(n, n);
  const CMatrix<T> basis = null_space<T>(shifted, rank_tol);
  CVector<T> v = zero_sum_from_basis<T>(basis, tol);
  const T scale = frobenius_scale(m);
  if ((shifted * v).norm() > tol * scale * v.norm() || std::abs(v.sum()) > tol * v.cwiseAbs().maxCoeff())
    throw DegenerateBasisError("zero_sum_eigenvector: result fails the eigen/zero-sum check; try a tighter rank_tol");
  return v;
}

template <typename T>
struct KindContainment {
  RadiusKind kind;
  std::vector<ContainmentEntry> rows;
  bool contained = false;  // inside or on the boundary for at least one row
  Containment at_witness = Containment::Outside;
};

template <typename T>
struct MultipleEigenvalue {
  std::size_t cluster = 0;
  Complex<T> value;
  Index algebraic_count = 0;
  Index geometric_multiplicity = 0;
  CVector<T> witness;      // zero-sum eigenvector, witness(witness_row) == 1
  Index witness_row = 0;
  T eigen_residual = 0;    // ||(m - value I) witness|| / ||witness||
  T zero_sum_residual = 0; // |sum witness|
  T row_residual = 0;      // |(value - a_ii) v_i - sum_{j != i} a_ij v_j| at the witness row
  std::vector<KindContainment<T>> kinds;
  std::optional<std::string> error;  // witness construction failure, if any

  const KindContainment<T>* find(RadiusKind k) const {
    for (const auto& kc : kinds)
      if (kc.kind == k) return &kc;
    return nullptr;
  }
};

template <typename T>
struct LocalizationReport {
  std::string matrix_id;
  Index order = 0;
  bool nonnegative = false;
  EigenReport<T> eigen;
  std::vector<std::pair<RadiusKind, std::vector<Disk<T>>>> disks;
  std::vector<MultipleEigenvalue<T>> multiple;
  std::vector<std::size_t> defective;  // clusters with algebraic >= 2 but geometric 1
  T tol = 0;

  /// Every multiple eigenvalue lies in some disk of the given kind.
  bool holds(RadiusKind k) const {
    for (const auto& me : multiple) {
      const auto* kc = me.find(k);
      if (kc && !kc->contained) return false;
    }
    return true;
  }

  const std::vector<Disk<T>>* disks_of(RadiusKind k) const {
    for (const auto& [kind, ds] : disks)
      if (kind == k) return &ds;
    return nullptr;
  }
};

namespace detail {

template <typename T>
LocalizationReport<T> evaluate_localization(const CMatrix<T>& m, const std::string& id,
                                            const LocalizationOptions<T>& opt) {
  require_square(m, "localization");
  require_finite(m, "localization");
  if (!(opt.tol > T(0))) throw ParameterError("localization: tol must be positive");
  const Index n = m.rows();

  LocalizationReport<T> rep;
  rep.matrix_id = id;
  rep.order = n;
  rep.tol = opt.tol;
  rep.nonnegative = is_nonneg_real(m);
  rep.eigen = eigen_report<T>(m, opt.eigen);

  for (const auto& kind : opt.kinds) {
    if (kind.tag == RadiusKind::Tag::Median && !rep.nonnegative) continue;
    rep.disks.emplace_back(kind, disk_set<T>(m, kind));
  }

  for (std::size_t c = 0; c < rep.eigen.clusters.size(); ++c) {
    auto& cl = rep.eigen.clusters[c];
    for (const auto& known : opt.known_eigenvalues)
      if (std::abs(known - cl.value) <= rep.eigen.cluster_tol) cl.value = known;
    if (cl.geometric_multiplicity < 2) {
      if (cl.algebraic_count >= 2) rep.defective.push_back(c);
      continue;
    }

    MultipleEigenvalue<T> me;
    me.cluster = c;
    me.value = cl.value;
    me.algebraic_count = cl.algebraic_count;
    me.geometric_multiplicity = cl.geometric_multiplicity;
    try {
      me.witness = zero_sum_from_basis<T>(cl.basis, opt.tol);
      me.witness_row = peak_index(me.witness);
      const CMatrix<T> shifted = m - cl.value * CMatrix<T>::Identity(n, n);
      me.eigen_residual = (shifted * me.witness).norm() / me.witness.norm();
      me.zero_sum_residual = std::abs(me.witness.sum());
      const Index i = me.witness_row;
      Complex<T> rhs(0);
      for (Index j = 0; j < n; ++j)
        if (j != i) rhs += m(i, j) * me.witness(j);
      me.row_residual = std::abs((cl.value - m(i, i)) * me.witness(i) - rhs);
    } catch (const DegenerateBasisError& e) {
      me.error = e.what();
    }

    for (const auto& [kind, ds] : rep.disks) {
      KindContainment<T> kc;
      kc.kind = kind;
      for (const auto& d : ds) {
        const T btol = opt.tol * std::max(T(1), std::abs(d.center) + d.radius);
        const Containment st = classify(cl.value, d, btol);
        kc.rows.push_back({d.row, st});
        kc.contained = kc.contained || contains(st);
        if (!me.error && d.row == me.witness_row) kc.at_witness = st;
      }
      me.kinds.push_back(std::move(kc));
    }
    rep.multiple.push_back(std::move(me));
  }
  return rep;
}

}  // namespace detail

/// Checks the half-disk localization claim on a non-negative real matrix:
/// every eigenvalue of geometric multiplicity >= 2 is evaluated against each
/// requested disk kind, with a zero-sum witness eigenvector and the row
/// identity residual at its peak component. Violations are reported through
/// LocalizationReport::holds, not thrown.
template <typename T>
LocalizationReport<T> verify_half_disk_theorem(const CMatrix<T>& m, const LocalizationOptions<T>& opt = {},
                                               const std::string& id = {}) {
  require_square(m, "verify_half_disk_theorem");
  detail::require_nonneg_real(m, "verify_half_disk_theorem");
  return detail::evaluate_localization<T>(m, id, opt);
}

/// Same evaluation for arbitrary complex matrices (median disks only when the
/// matrix happens to be non-negative real). Asserts nothing.
template <typename T>
LocalizationReport<T> counterexample_check(const CMatrix<T>& m, const LocalizationOptions<T>& opt = {},
                                           const std::string& id = {}) {
  return detail::evaluate_localization<T>(m, id, opt);
}

/// Multiple eigenvalues lying outside every disk of the given kind.
template <typename T>
std::vector<const MultipleEigenvalue<T>*> outside_all(const LocalizationReport<T>& rep, RadiusKind k) {
  std::vector<const MultipleEigenvalue<T>*> out;
  for (const auto& me : rep.multiple) {
    const auto* kc = me.find(k);
    if (kc && !kc->contained) out.push_back(&me);
  }
  return out;
}

}  // namespace gershdisk
