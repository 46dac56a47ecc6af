#pragma once

// Small dense complex eigen-analysis: Hessenberg reduction, shifted QR,
// numerical rank, null spaces, and clustered eigen reports carrying
// geometric multiplicities.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include <Eigen/SVD>

#include "gershdisk/core.hpp"

namespace gershdisk {

/// Unitarily similar upper Hessenberg form via Householder reflections.
template <typename T>
CMatrix<T> hessenberg_form(CMatrix<T> h) {
  using C = Complex<T>;
  const Index n = h.rows();
  CVector<T> work(n);
  for (Index k = 0; k + 2 < n; ++k) {
    const Index rem = n - k - 1;
    CVector<T> tail = h.col(k).tail(rem);
    C tau;
    T beta;
    tail.makeHouseholderInPlace(tau, beta);
    const CVector<T> essential = tail.tail(rem - 1);
    h(k + 1, k) = C(beta, 0);
    h.col(k).tail(rem - 1).setZero();
    h.bottomRightCorner(rem, rem).applyHouseholderOnTheLeft(essential, tau, work.data());
    h.rightCols(rem).applyHouseholderOnTheRight(essential, std::conj(tau), work.data());
  }
  return h;
}

namespace detail {

// Unitary rotation G = [c s; -conj(s) c] with G * (a, b)^T = (r, 0)^T.
template <typename T>
struct Givens {
  T c;
  Complex<T> s;

  static Givens make(Complex<T> a, Complex<T> b) {
    const T nb = std::abs(b);
    if (nb == T(0)) return {T(1), Complex<T>(0)};
    const T na = std::abs(a);
    if (na == T(0)) return {T(0), Complex<T>(1)};
    const T nrm = std::hypot(na, nb);
    return {na / nrm, (a / na) * std::conj(b) / nrm};
  }
};

// Eigenvalue of the 2x2 block [a b; c d] closest to d.
template <typename T>
Complex<T> wilkinson_shift(Complex<T> a, Complex<T> b, Complex<T> c, Complex<T> d) {
  const Complex<T> half_tr = (a + d) / T(2);
  const Complex<T> disc = std::sqrt((a - d) * (a - d) / T(4) + b * c);
  const Complex<T> mu1 = half_tr + disc;
  const Complex<T> mu2 = half_tr - disc;
  return std::abs(mu1 - d) <= std::abs(mu2 - d) ? mu1 : mu2;
}

}  // namespace detail

/// Eigenvalues (with repetition) of a square complex matrix.
///
/// Hessenberg reduction followed by single-shift QR sweeps using Wilkinson
/// shifts. A subdiagonal entry is treated as zero once it drops below
/// 1e-14 * (|h(k,k)| + |h(k+1,k+1)|). The total sweep budget is
/// sweeps_per_order * n; exhausting it throws ConvergenceError with the
/// partially reduced matrix.
template <typename T>
CVector<T> eigenvalues(const CMatrix<T>& m, Index sweeps_per_order = 100) {
  using C = Complex<T>;
  require_square(m, "eigenvalues");
  require_finite(m, "eigenvalues");
  const Index n = m.rows();
  CMatrix<T> h = hessenberg_form<T>(m);
  const T deflate_rel = T(1e-14);
  const T scale_floor = deflate_rel * std::max(T(1), h.norm()) * std::numeric_limits<T>::epsilon();
  const Index budget = sweeps_per_order * n;
  Index sweeps = 0;
  Index since_deflation = 0;
  std::vector<detail::Givens<T>> rot(static_cast<std::size_t>(n));

  Index hi = n - 1;
  while (hi > 0) {
    Index lo = hi;
    for (; lo > 0; --lo) {
      const T ref = std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo));
      if (std::abs(h(lo, lo - 1)) <= std::max(deflate_rel * ref, scale_floor)) {
        h(lo, lo - 1) = C(0);
        break;
      }
    }
    if (lo == hi) {
      --hi;
      since_deflation = 0;
      continue;
    }
    if (sweeps >= budget) {
      CMatrixd partial = h.template cast<std::complex<double>>();
      throw ConvergenceError("eigenvalues: QR iteration exceeded " + std::to_string(budget) +
                                 " sweeps",
                             std::move(partial));
    }
    ++sweeps;
    ++since_deflation;

    C mu;
    if (since_deflation % 11 == 10) {
      // Exceptional shift to break cycles.
      mu = h(hi, hi) + C(std::abs(std::real(h(hi, hi - 1))) +
                             (hi - 1 > lo ? std::abs(std::real(h(hi - 1, hi - 2))) : T(0)),
                         0);
    } else {
      mu = detail::wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
    }

    // Explicit shifted QR step on the active window h[lo..hi, lo..hi].
    for (Index k = lo; k <= hi; ++k) h(k, k) -= mu;
    for (Index k = lo; k < hi; ++k) {
      const auto g = detail::Givens<T>::make(h(k, k), h(k + 1, k));
      rot[static_cast<std::size_t>(k)] = g;
      for (Index j = k; j <= hi; ++j) {
        const C x = h(k, j), y = h(k + 1, j);
        h(k, j) = g.c * x + g.s * y;
        h(k + 1, j) = -std::conj(g.s) * x + g.c * y;
      }
      h(k + 1, k) = C(0);
    }
    for (Index k = lo; k < hi; ++k) {
      const auto& g = rot[static_cast<std::size_t>(k)];
      for (Index i = lo; i <= std::min(k + 2, hi); ++i) {
        const C x = h(i, k), y = h(i, k + 1);
        h(i, k) = x * g.c + y * std::conj(g.s);
        h(i, k + 1) = -x * g.s + y * g.c;
      }
    }
    for (Index k = lo; k <= hi; ++k) h(k, k) += mu;
  }
  return h.diagonal();
}

/// Numerical rank: singular values above tol * sigma_max.
template <typename T>
Index numerical_rank(const CMatrix<T>& m, T tol) {
  if (!(tol > T(0))) throw ParameterError("numerical_rank: tol must be positive");
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<CMatrix<T>> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == T(0)) return 0;
  const T cut = tol * sv(0);
  return static_cast<Index>((sv.array() > cut).count());
}

/// Orthonormal basis (as columns) of the numerical null space at the same
/// threshold numerical_rank uses, so rank + nullity == cols.
template <typename T>
CMatrix<T> null_space(const CMatrix<T>& m, T tol) {
  if (!(tol > T(0))) throw ParameterError("null_space: tol must be positive");
  const Index n = m.cols();
  Eigen::JacobiSVD<CMatrix<T>> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Index rank = 0;
  if (sv.size() > 0 && sv(0) > T(0)) rank = static_cast<Index>((sv.array() > tol * sv(0)).count());
  return svd.matrixV().rightCols(n - rank);
}

template <typename T>
struct EigenCluster {
  Complex<T> value;              // cluster mean
  Index algebraic_count = 0;     // computed eigenvalues in the cluster
  Index geometric_multiplicity = 0;
  CMatrix<T> basis;              // eigenspace basis, one vector per column
  T residual = 0;                // max ||(m - value I) b|| / ||b|| over basis columns
};

template <typename T>
struct EigenReport {
  std::vector<EigenCluster<T>> clusters;
  T cluster_tol = 0;
  T rank_tol = 0;
  // Set when every eigenvalue collapsed into one cluster although
  // ||m - value I||_F > 1e-6 * max(1, ||m||_F).
  bool merged_warning = false;
};

template <typename T>
struct EigenOptions {
  std::optional<T> cluster_tol;  // default 1e-6 * max(1, ||m||_F)
  T rank_tol = T(1e-9);
};

template <typename T>
T frobenius_scale(const CMatrix<T>& m) {
  return std::max(T(1), m.norm());
}

/// Single-linkage clusters of values within tol; each cluster lists member
/// indices. Clusters are ordered by (real, imag) of their mean.
template <typename T>
std::vector<std::vector<Index>> cluster_values(const CVector<T>& values, T tol) {
  const Index n = values.size();
  std::vector<Index> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), Index(0));
  auto find = [&](Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (std::abs(values(i) - values(j)) <= tol) parent[find(i)] = find(j);

  std::vector<std::vector<Index>> groups;
  std::vector<Index> slot(static_cast<std::size_t>(n), -1);
  for (Index i = 0; i < n; ++i) {
    const Index r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<Index>(groups.size());
      groups.emplace_back();
    }
    groups[slot[r]].push_back(i);
  }
  auto mean = [&](const std::vector<Index>& g) {
    Complex<T> s(0);
    for (Index i : g) s += values(i);
    return s / T(g.size());
  };
  std::stable_sort(groups.begin(), groups.end(), [&](const auto& a, const auto& b) {
    const auto ma = mean(a), mb = mean(b);
    if (ma.real() != mb.real()) return ma.real() < mb.real();
    return ma.imag() < mb.imag();
  });
  return groups;
}

/// Eigenvalues grouped into clusters, each with its geometric multiplicity
/// n - rank(m - value I) and an orthonormal eigenspace basis.
template <typename T>
EigenReport<T> eigen_report(const CMatrix<T>& m, const EigenOptions<T>& opt = {}) {
  require_square(m, "eigen_report");
  const Index n = m.rows();
  const T scale = frobenius_scale(m);
  EigenReport<T> rep;
  rep.cluster_tol = opt.cluster_tol.value_or(T(1e-6) * scale);
  rep.rank_tol = opt.rank_tol;
  if (!(rep.cluster_tol > T(0)) || !(rep.rank_tol > T(0)))
    throw ParameterError("eigen_report: tolerances must be positive");

  const CVector<T> values = eigenvalues<T>(m);
  for (const auto& group : cluster_values<T>(values, rep.cluster_tol)) {
    EigenCluster<T> c;
    for (Index i : group) c.value += values(i);
    c.value /= T(group.size());
    c.algebraic_count = static_cast<Index>(group.size());

    const CMatrix<T> shifted = m - c.value * CMatrix<T>::Identity(n, n);
    Eigen::JacobiSVD<CMatrix<T>> svd(shifted, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    Index rank = 0;
    if (sv(0) > T(0)) rank = static_cast<Index>((sv.array() > rep.rank_tol * sv(0)).count());
    // Geometric multiplicity comes from the rank test alone; it is clamped
    // into [1, algebraic_count] only to absorb rank-threshold noise.
    c.geometric_multiplicity = std::clamp<Index>(n - rank, 1, c.algebraic_count);
    c.basis = svd.matrixV().rightCols(c.geometric_multiplicity);
    for (Index k = 0; k < c.basis.cols(); ++k)
      c.residual = std::max(c.residual, (shifted * c.basis.col(k)).norm() / c.basis.col(k).norm());
    rep.clusters.push_back(std::move(c));
  }
  if (rep.clusters.size() == 1 && n > 1) {
    const CMatrix<T> dev = m - rep.clusters[0].value * CMatrix<T>::Identity(n, n);
    rep.merged_warning = dev.norm() > T(1e-6) * scale;
  }
  return rep;
}

}  // namespace gershdisk
