#pragma once

// Row disk radii: full Gershgorin, partial sums of the largest off-diagonal
// magnitudes (half, third, ceil-half, any count), and the median-shifted
// radius for non-negative real matrices. Plus a containment classifier.

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gershdisk/core.hpp"

namespace gershdisk {

struct RadiusKind {
  enum class Tag { Full, Half, Fraction, Median, Corollary2, Third };

  Tag tag = Tag::Full;
  Index count = 0;  // number of terms, Fraction only

  static RadiusKind full() { return {Tag::Full, 0}; }
  static RadiusKind half() { return {Tag::Half, 0}; }
  static RadiusKind fraction(Index m) { return {Tag::Fraction, m}; }
  static RadiusKind median() { return {Tag::Median, 0}; }
  static RadiusKind corollary2() { return {Tag::Corollary2, 0}; }
  static RadiusKind third() { return {Tag::Third, 0}; }

  /// Number of largest off-diagonal magnitudes summed for an n x n matrix;
  /// Median has no term count and returns -1.
  Index terms(Index n) const {
    switch (tag) {
      case Tag::Full: return n - 1;
      case Tag::Half: return n / 2;
      case Tag::Fraction: return count;
      // Both round up, so a 1x1 matrix would ask for one term of none.
      case Tag::Corollary2: return std::min((n + 1) / 2, n - 1);
      case Tag::Third: return std::min((n + 2) / 3, n - 1);
      case Tag::Median: return -1;
    }
    return -1;
  }

  std::string name() const {
    switch (tag) {
      case Tag::Full: return "full";
      case Tag::Half: return "half";
      case Tag::Fraction: return "fraction";
      case Tag::Median: return "median";
      case Tag::Corollary2: return "corollary2";
      case Tag::Third: return "third";
    }
    return "?";
  }

  bool operator==(const RadiusKind&) const = default;
};

template <typename T>
struct Disk {
  Complex<T> center;
  T radius = 0;
  RadiusKind kind;
  Index row = 0;
  // Median disks only: the shift b* and the radius without the |b*| term
  // from the zeroed diagonal position.
  T b_star = 0;
  T literal_radius = 0;
};

namespace detail {

template <typename T>
void require_row(const CMatrix<T>& m, Index i, const char* op) {
  require_square(m, op);
  if (i < 0 || i >= m.rows())
    throw DimensionError(std::string(op) + ": row index " + std::to_string(i) + " out of range [0, " +
                         std::to_string(m.rows()) + ")");
}

// Off-diagonal magnitudes of row i, largest first.
template <typename T>
std::vector<T> offdiag_magnitudes(const CMatrix<T>& m, Index i) {
  std::vector<T> mags;
  mags.reserve(static_cast<std::size_t>(m.cols()));
  for (Index j = 0; j < m.cols(); ++j)
    if (j != i) mags.push_back(std::abs(m(i, j)));
  std::sort(mags.begin(), mags.end(), std::greater<T>());
  return mags;
}

template <typename T>
void require_nonneg_real(const CMatrix<T>& m, const char* op) {
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) {
      const auto z = m(r, c);
      if (z.imag() != T(0) || z.real() < T(0)) {
        std::ostringstream os;
        os << op << ": entry (" << r << ", " << c << ") = " << z.real()
           << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag())
           << "i is not a non-negative real number";
        throw DomainError(os.str());
      }
    }
}

}  // namespace detail

template <typename T>
T full_radius(const CMatrix<T>& m, Index i) {
  detail::require_row(m, i, "full_radius");
  T s = 0;
  for (Index j = 0; j < m.cols(); ++j)
    if (j != i) s += std::abs(m(i, j));
  return s;
}

/// Sum of the `count` largest off-diagonal magnitudes of row i.
template <typename T>
T fraction_radius(const CMatrix<T>& m, Index i, Index count) {
  detail::require_row(m, i, "fraction_radius");
  if (count < 0 || count > m.rows() - 1)
    throw ParameterError("fraction_radius: count " + std::to_string(count) + " outside [0, " +
                         std::to_string(m.rows() - 1) + "]");
  const auto mags = detail::offdiag_magnitudes(m, i);
  T s = 0;
  for (Index k = 0; k < count; ++k) s += mags[static_cast<std::size_t>(k)];
  return s;
}

template <typename T>
T half_radius(const CMatrix<T>& m, Index i) {
  detail::require_row(m, i, "half_radius");
  return fraction_radius(m, i, m.rows() / 2);
}

// ceil(n/3) terms; coincides with n/3 when 3 divides n.
template <typename T>
T third_radius(const CMatrix<T>& m, Index i) {
  detail::require_row(m, i, "third_radius");
  return fraction_radius(m, i, RadiusKind::third().terms(m.rows()));
}

template <typename T>
T corollary2_radius(const CMatrix<T>& m, Index i) {
  detail::require_row(m, i, "corollary2_radius");
  return fraction_radius(m, i, RadiusKind::corollary2().terms(m.rows()));
}

template <typename T>
struct MedianRadius {
  T radius;          // sum over all j of |b_ij - b*|
  T b_star;          // lower median of the row with a_ii replaced by 0
  T literal_radius;  // same sum with the j = i term left out
};

/// Median-shifted radius of row i of a non-negative real matrix.
///
/// The row is copied with its diagonal entry replaced by 0; b* is the entry
/// at 1-indexed position floor(n/2)+1 of that row sorted non-increasingly.
/// The radius sums |b_ij - b*| over every j, including j = i, which
/// contributes |b*|. Dropping that term gives literal_radius, which is not
/// a valid enclosure in general (it is 0 for the 3x3 all-ones-off-diagonal
/// matrix whose double eigenvalue is -1).
template <typename T>
MedianRadius<T> median_radius(const CMatrix<T>& m, Index i) {
  detail::require_row(m, i, "median_radius");
  detail::require_nonneg_real(m, "median_radius");
  const Index n = m.rows();
  std::vector<T> b(static_cast<std::size_t>(n));
  for (Index j = 0; j < n; ++j) b[static_cast<std::size_t>(j)] = j == i ? T(0) : m(i, j).real();
  std::vector<T> sorted = b;
  std::sort(sorted.begin(), sorted.end(), std::greater<T>());
  const T b_star = sorted[static_cast<std::size_t>(n / 2)];
  MedianRadius<T> out{0, b_star, 0};
  for (Index j = 0; j < n; ++j) {
    const T dev = std::abs(b[static_cast<std::size_t>(j)] - b_star);
    out.radius += dev;
    if (j != i) out.literal_radius += dev;
  }
  return out;
}

/// One disk per row, centred at the diagonal entry.
template <typename T>
std::vector<Disk<T>> disk_set(const CMatrix<T>& m, RadiusKind kind) {
  require_square(m, "disk_set");
  require_finite(m, "disk_set");
  const Index n = m.rows();
  if (kind.tag == RadiusKind::Tag::Median) detail::require_nonneg_real(m, "disk_set(median)");
  if (kind.tag == RadiusKind::Tag::Fraction && (kind.count < 0 || kind.count > n - 1))
    throw ParameterError("disk_set: fraction count " + std::to_string(kind.count) + " outside [0, " +
                         std::to_string(n - 1) + "]");
  std::vector<Disk<T>> out;
  out.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    Disk<T> d{m(i, i), 0, kind, i};
    if (kind.tag == RadiusKind::Tag::Median) {
      const auto med = median_radius(m, i);
      d.radius = med.radius;
      d.b_star = med.b_star;
      d.literal_radius = med.literal_radius;
    } else {
      d.radius = fraction_radius(m, i, kind.terms(n));
    }
    out.push_back(d);
  }
  return out;
}

enum class Containment { Inside, OnBoundary, Outside };

inline const char* to_string(Containment c) {
  switch (c) {
    case Containment::Inside: return "inside";
    case Containment::OnBoundary: return "on_boundary";
    case Containment::Outside: return "outside";
  }
  return "?";
}

inline bool contains(Containment c) { return c != Containment::Outside; }

template <typename T>
Containment classify(Complex<T> lambda, const Disk<T>& d, T boundary_tol) {
  const T dist = std::abs(lambda - d.center);
  if (std::abs(dist - d.radius) <= boundary_tol) return Containment::OnBoundary;
  if (dist < d.radius - boundary_tol) return Containment::Inside;
  return Containment::Outside;
}

struct ContainmentEntry {
  Index row;
  Containment status;
};

template <typename T>
std::vector<ContainmentEntry> containment(Complex<T> lambda, const std::vector<Disk<T>>& disks,
                                          T boundary_tol) {
  if (!(boundary_tol >= T(0))) throw ParameterError("containment: boundary_tol must be >= 0");
  std::vector<ContainmentEntry> out;
  out.reserve(disks.size());
  for (const auto& d : disks) out.push_back({d.row, classify(lambda, d, boundary_tol)});
  return out;
}

/// 1e-8 * max(1, |center| + radius)
template <typename T>
T default_boundary_tol(const Disk<T>& d) {
  return T(1e-8) * std::max(T(1), std::abs(d.center) + d.radius);
}

}  // namespace gershdisk
