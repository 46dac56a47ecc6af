#pragma once

// Named example matrices, circulants with their closed-form spectra, and
// seeded random families with geometrically multiple eigenvalues.

#include <algorithm>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "gershdisk/core.hpp"

namespace gershdisk {

template <typename T>
struct CirculantSpec {
  std::vector<Complex<T>> first_row;
};

/// Entry (i, j) = c[(j - i) mod n]: each row is the previous one shifted
/// right by one place.
template <typename T>
CMatrix<T> circulant(const CirculantSpec<T>& spec) {
  const Index n = static_cast<Index>(spec.first_row.size());
  if (n < 1) throw DimensionError("circulant: empty first row");
  CMatrix<T> m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = spec.first_row[static_cast<std::size_t>((j - i + n) % n)];
  return m;
}

/// lambda_k = sum_j c_j w^{jk}, w = exp(2 pi i / n), in k order. The powers
/// of w are formed from the reduced exponent (j k mod n) for accuracy.
template <typename T>
CVector<T> circulant_spectrum(const CirculantSpec<T>& spec) {
  const Index n = static_cast<Index>(spec.first_row.size());
  if (n < 1) throw DimensionError("circulant_spectrum: empty first row");
  CVector<T> out(n);
  for (Index k = 0; k < n; ++k) {
    Complex<T> s(0);
    for (Index j = 0; j < n; ++j) {
      const T angle = T(2) * std::numbers::pi_v<T> * T((j * k) % n) / T(n);
      s += spec.first_row[static_cast<std::size_t>(j)] * std::polar(T(1), angle);
    }
    out(k) = s;
  }
  return out;
}

template <typename T = double>
CirculantSpec<T> spec_b5() {
  return {{0, 1, -1, -1, 1}};
}

template <typename T = double>
CirculantSpec<T> spec_c7() {
  return {{0, 1, -1, 1, 1, -1, 1}};
}

/// 3x3, zero diagonal, ones elsewhere.
template <typename T = double>
CMatrix<T> matrix_a3() {
  CMatrix<T> m = CMatrix<T>::Ones(3, 3);
  m.diagonal().setZero();
  return m;
}

template <typename T = double>
CMatrix<T> matrix_b5() {
  return circulant(spec_b5<T>());
}

template <typename T = double>
CMatrix<T> matrix_c7() {
  return circulant(spec_c7<T>());
}

/// Primitive cube root of unity (-1 + i sqrt 3) / 2.
template <typename T = double>
Complex<T> omega() {
  return {T(-0.5), std::sqrt(T(3)) / T(2)};
}

/// The nine points of the Hesse configuration in CP^2, one per row.
template <typename T = double>
CMatrix<T> hesse_points() {
  const Complex<T> w = omega<T>(), w2 = w * w;
  CMatrix<T> p(9, 3);
  p << 0, 1, -1,  //
      0, 1, -w,   //
      0, 1, -w2,  //
      1, 0, -1,   //
      1, 0, -w2,  //
      1, 0, -w,   //
      1, -1, 0,   //
      1, -w, 0,   //
      1, -w2, 0;
  return p;
}

/// 12 x 9 matrix of collinearity relations: each row holds the three
/// coefficients of a vanishing combination of the points on one line.
template <typename T = double>
CMatrix<T> hesse_dependency() {
  const Complex<T> w = omega<T>(), w2 = w * w;
  CMatrix<T> a(12, 9);
  a << 1, 0, 0, -1, 0, 0, 1, 0, 0,      //
      0, 0, 1, 0, -1, 0, 1, 0, 0,       //
      0, 1, 0, 0, 0, -1, 1, 0, 0,       //
      0, 0, 0, 0, 0, 0, -w2, -1, -w,    //
      0, 0, 0, -w2, -w, -1, 0, 0, 0,    //
      -w2, -1, -w, 0, 0, 0, 0, 0, 0,    //
      0, w, 0, 0, -1, 0, 0, 1, 0,       //
      0, 0, -w2, 0, 0, 1, 0, 0, -1,     //
      -w2, 0, 0, 0, 1, 0, 0, 0, -1,     //
      w, 0, 0, 0, 0, -1, 0, 1, 0,       //
      0, 1, 0, -w, 0, 0, 0, 0, w,       //
      0, 0, w, -1, 0, 0, 0, 1, 0;
  return a;
}

/// Gram matrix A^H A of the dependency matrix; Hermitian PSD, diagonal 4,
/// unit-modulus off-diagonal entries, spectrum {0 x3, 6 x6}.
template <typename T = double>
CMatrix<T> hesse_gram() {
  const CMatrix<T> a = hesse_dependency<T>();
  CMatrix<T> h = a.adjoint() * a;
  // Exact Hermitian symmetry; the product is symmetric only up to rounding.
  h = ((h + h.adjoint()) / T(2)).eval();
  return h;
}

/// Block-diagonal matrix of `blocks` random k x k doubly stochastic blocks.
///
/// Each block is a convex combination of k permutation matrices: the cyclic
/// shift (which keeps the block irreducible, so 1 is a simple eigenvalue of
/// each block) and k - 1 uniformly random permutations, with positive random
/// weights normalised to sum to 1.
template <typename T = double>
CMatrix<T> block_doubly_stochastic(Index k, Index blocks, std::uint64_t seed) {
  if (k < 1 || blocks < 1) throw ParameterError("block_doubly_stochastic: need k >= 1 and blocks >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<T> weight(T(0.1), T(1));
  const Index n = k * blocks;
  CMatrix<T> m = CMatrix<T>::Zero(n, n);
  std::vector<Index> perm(static_cast<std::size_t>(k));
  for (Index b = 0; b < blocks; ++b) {
    std::vector<T> w(static_cast<std::size_t>(k));
    for (auto& x : w) x = weight(rng);
    T total = 0;
    for (T x : w) total += x;
    for (Index p = 0; p < k; ++p) {
      if (p == 0) {
        for (Index i = 0; i < k; ++i) perm[static_cast<std::size_t>(i)] = (i + 1) % k;
      } else {
        std::iota(perm.begin(), perm.end(), Index(0));
        std::shuffle(perm.begin(), perm.end(), rng);
      }
      const T wp = w[static_cast<std::size_t>(p)] / total;
      for (Index i = 0; i < k; ++i) m(b * k + i, b * k + perm[static_cast<std::size_t>(i)]) += wp;
    }
  }
  return m;
}

/// diag(B, B) for a random non-negative k x k block B with entries uniform
/// in [0, 1), optionally conjugated by a random permutation matrix. Every
/// eigenvalue of B has geometric multiplicity >= 2 in the result.
template <typename T = double>
CMatrix<T> random_multiple_eigenvalue_matrix(Index k, std::uint64_t seed, bool scramble = true) {
  if (k < 1) throw ParameterError("random_multiple_eigenvalue_matrix: need k >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<T> entry(T(0), T(1));
  RMatrix<T> block(k, k);
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j) block(i, j) = entry(rng);
  const Index n = 2 * k;
  CMatrix<T> m = CMatrix<T>::Zero(n, n);
  m.topLeftCorner(k, k) = block.template cast<Complex<T>>();
  m.bottomRightCorner(k, k) = block.template cast<Complex<T>>();
  if (!scramble) return m;
  std::vector<Index> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), Index(0));
  std::shuffle(p.begin(), p.end(), rng);
  CMatrix<T> out(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) out(i, j) = m(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
  return out;
}

}  // namespace gershdisk
