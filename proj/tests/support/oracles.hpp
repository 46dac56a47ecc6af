#pragma once

// Test-only reference computations, kept independent of the code under test.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

#include "gershdisk/core.hpp"

namespace oracle {

using gershdisk::CMatrixd;
using gershdisk::CVectord;
using gershdisk::Index;

// Eigen's own complex Schur-based solver.
inline CVectord reference_eigenvalues(const CMatrixd& m) {
  Eigen::ComplexEigenSolver<CMatrixd> es(m, false);
  return es.eigenvalues();
}

// Largest distance between paired elements after greedily pairing each
// value of `a` with its nearest unused value of `b`.
inline double multiset_distance(const CVectord& a, const CVectord& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<char> used(static_cast<std::size_t>(b.size()), 0);
  double worst = 0;
  for (Index i = 0; i < a.size(); ++i) {
    Index best = -1;
    double bd = std::numeric_limits<double>::infinity();
    for (Index j = 0; j < b.size(); ++j)
      if (!used[j] && std::abs(a(i) - b(j)) < bd) bd = std::abs(a(i) - b(j)), best = j;
    used[best] = 1;
    worst = std::max(worst, bd);
  }
  return worst;
}

inline CMatrixd random_complex(Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  CMatrixd m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = {g(rng), g(rng)};
  return m;
}

inline CMatrixd random_hermitian(Index n, std::uint64_t seed) {
  const CMatrixd a = random_complex(n, seed);
  return (a + a.adjoint()) / 2.0;
}

inline CMatrixd random_nonneg(Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  CMatrixd m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = u(rng) < 0.2 ? 0.0 : u(rng);
  return m;
}

// Plain bitmask enumeration of every subset sum.
inline double subset_sum_max_norm(const Eigen::MatrixXd& cols) {
  const Index n = cols.cols();
  double best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Eigen::VectorXd s = Eigen::VectorXd::Zero(cols.rows());
    for (Index i = 0; i < n; ++i)
      if (mask & (1u << i)) s += cols.col(i);
    best = std::max(best, s.norm());
  }
  return best;
}

}  // namespace oracle
