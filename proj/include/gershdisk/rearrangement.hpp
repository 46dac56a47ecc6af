#pragma once

// Norm bounds for sums sum_i alpha_i v_{sigma(i)} over zero-sum vector
// families and non-increasing non-negative coefficients, together with the
// exhaustive oracles (all permutations, all subset sums) that check them.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "gershdisk/core.hpp"

namespace gershdisk {

/// A bijection on {0, ..., n-1}; map[i] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Index> map) : map_(std::move(map)) {
    std::vector<char> seen(map_.size(), 0);
    for (Index x : map_) {
      if (x < 0 || x >= size() || seen[static_cast<std::size_t>(x)])
        throw ParameterError("Permutation: not a bijection");
      seen[static_cast<std::size_t>(x)] = 1;
    }
  }
  static Permutation identity(Index n) {
    std::vector<Index> m(static_cast<std::size_t>(n));
    std::iota(m.begin(), m.end(), Index(0));
    return Permutation(std::move(m));
  }

  Index size() const { return static_cast<Index>(map_.size()); }
  Index operator()(Index i) const { return map_[static_cast<std::size_t>(i)]; }
  const std::vector<Index>& map() const { return map_; }
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Index> map_;
};

/// n vectors in R^d (stored as the columns of a d x n matrix) whose sum is
/// zero up to a relative tolerance of 1e-12.
template <typename T>
class VectorConfig {
 public:
  static constexpr double zero_sum_tol = 1e-12;

  explicit VectorConfig(RMatrix<T> columns) : v_(std::move(columns)) {
    if (v_.rows() < 1 || v_.cols() < 1)
      throw DimensionError("VectorConfig: need d >= 1 and n >= 1");
    if (!v_.allFinite()) throw DomainError("VectorConfig: non-finite component");
    const T lim = T(zero_sum_tol) * std::max(T(1), max_norm());
    if (v_.rowwise().sum().norm() > lim)
      throw ParameterError("VectorConfig: vectors do not sum to zero");
  }

  Index dim() const { return v_.rows(); }
  Index size() const { return v_.cols(); }
  auto vector(Index i) const { return v_.col(i); }
  const RMatrix<T>& columns() const { return v_; }

  RVector<T> norms() const { return v_.colwise().norm().transpose(); }
  T max_norm() const { return v_.colwise().norm().maxCoeff(); }
  T norm_sum() const { return v_.colwise().norm().sum(); }

  bool sorted_by_norm() const {
    const RVector<T> nr = norms();
    for (Index i = 0; i + 1 < nr.size(); ++i)
      if (nr(i) < nr(i + 1)) return false;
    return true;
  }

 private:
  RMatrix<T> v_;
};

/// Non-increasing, non-negative coefficients alpha_1 >= ... >= alpha_n >= 0.
template <typename T>
class CoeffSeq {
 public:
  explicit CoeffSeq(std::vector<T> alphas) : a_(std::move(alphas)), order_(Permutation::identity(static_cast<Index>(a_.size()))) {
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (!(a_[i] >= T(0)) || !std::isfinite(a_[i]))
        throw ParameterError("CoeffSeq: coefficients must be finite and non-negative");
      if (i > 0 && a_[i] > a_[i - 1]) throw OrderingError("CoeffSeq: coefficients must be non-increasing");
    }
  }

  /// Accepts any order; sorts non-increasingly and records in order()(i)
  /// the original position of the i-th largest coefficient.
  static CoeffSeq sorted(const std::vector<T>& values) {
    std::vector<Index> idx(values.size());
    std::iota(idx.begin(), idx.end(), Index(0));
    std::stable_sort(idx.begin(), idx.end(), [&](Index x, Index y) { return values[x] > values[y]; });
    std::vector<T> a;
    a.reserve(values.size());
    for (Index i : idx) a.push_back(values[static_cast<std::size_t>(i)]);
    CoeffSeq out(std::move(a));
    out.order_ = Permutation(std::move(idx));
    return out;
  }

  Index size() const { return static_cast<Index>(a_.size()); }
  T operator[](Index i) const { return a_[static_cast<std::size_t>(i)]; }
  const std::vector<T>& values() const { return a_; }
  const Permutation& order() const { return order_; }

 private:
  std::vector<T> a_;
  Permutation order_;
};

namespace detail {
template <typename T>
void require_same_length(const VectorConfig<T>& v, const CoeffSeq<T>& a, const char* op) {
  if (v.size() != a.size())
    throw DimensionError(std::string(op) + ": " + std::to_string(v.size()) + " vectors but " +
                         std::to_string(a.size()) + " coefficients");
}
}  // namespace detail

/// || sum_i alpha_i v_{sigma(i)} ||_2
template <typename T>
T rearranged_sum_norm(const VectorConfig<T>& v, const CoeffSeq<T>& a, const Permutation& sigma) {
  detail::require_same_length(v, a, "rearranged_sum_norm");
  if (sigma.size() != v.size()) throw DimensionError("rearranged_sum_norm: permutation length mismatch");
  RVector<T> s = RVector<T>::Zero(v.dim());
  for (Index i = 0; i < v.size(); ++i) s.noalias() += a[i] * v.vector(sigma(i));
  return s.norm();
}

/// sum_i |alpha_i - gamma|
template <typename T>
T weighted_abs_deviation(const CoeffSeq<T>& a, T gamma) {
  T s = 0;
  for (T x : a.values()) s += std::abs(x - gamma);
  return s;
}

/// max_i ||v_i|| * sum_i |alpha_i - beta| with beta the coefficient at
/// 1-indexed position floor(n/2) + 1.
template <typename T>
T bound_theorem_first(const VectorConfig<T>& v, const CoeffSeq<T>& a) {
  detail::require_same_length(v, a, "bound_theorem_first");
  const T beta = a[a.size() / 2];
  return v.max_norm() * weighted_abs_deviation(a, beta);
}

/// max_i ||v_i|| times the sum of the floor(n/2) largest coefficients.
template <typename T>
T bound_corollary_first(const VectorConfig<T>& v, const CoeffSeq<T>& a) {
  detail::require_same_length(v, a, "bound_corollary_first");
  T s = 0;
  for (Index i = 0; i < a.size() / 2; ++i) s += a[i];
  return v.max_norm() * s;
}

/// The two-parameter bound for length-sorted configurations:
///   sum_{i<=j} alpha_i ||v_i|| - gamma/2 [ sum_{i<=j} ||v_i|| - sum_{i>j} ||v_i|| ]
/// where j counts leading terms (1 <= j <= n-1) and gamma lies in
/// [alpha_{j+1}, alpha_j].
template <typename T>
T bound_theorem_second(const VectorConfig<T>& v, const CoeffSeq<T>& a, Index j, T gamma) {
  detail::require_same_length(v, a, "bound_theorem_second");
  const Index n = v.size();
  if (!v.sorted_by_norm()) throw OrderingError("bound_theorem_second: vectors must be sorted by non-increasing norm");
  if (j < 1 || j > n - 1) throw ParameterError("bound_theorem_second: j must lie in [1, n-1]");
  if (gamma < a[j] || gamma > a[j - 1])
    throw ParameterError("bound_theorem_second: gamma outside [alpha_{j+1}, alpha_j]");
  const RVector<T> nr = v.norms();
  T lead = 0, head = 0, rest = 0;
  for (Index i = 0; i < j; ++i) {
    lead += a[i] * nr(i);
    head += nr(i);
  }
  for (Index i = j; i < n; ++i) rest += nr(i);
  return lead - gamma / T(2) * (head - rest);
}

template <typename T>
struct SecondBound {
  T bound;
  Index j;  // leading-term count
  T gamma;
};

/// Smallest second bound over all j and both interval endpoints of gamma.
/// The bound is affine in gamma, so endpoints attain the minimum. Ties keep
/// the first candidate in (j ascending, gamma = alpha_{j+1} first) order.
template <typename T>
SecondBound<T> bound_theorem_second_best(const VectorConfig<T>& v, const CoeffSeq<T>& a) {
  detail::require_same_length(v, a, "bound_theorem_second_best");
  const Index n = v.size();
  if (n < 2) throw ParameterError("bound_theorem_second_best: need n >= 2");
  SecondBound<T> best{std::numeric_limits<T>::infinity(), 0, T(0)};
  for (Index j = 1; j < n; ++j)
    for (T gamma : {a[j], a[j - 1]}) {
      const T b = bound_theorem_second(v, a, j, gamma);
      if (b < best.bound) best = {b, j, gamma};
    }
  return best;
}

/// sum of alpha_i ||v_i|| over the first ceil(n/2) terms (sorted config).
template <typename T>
T bound_corollary_second(const VectorConfig<T>& v, const CoeffSeq<T>& a) {
  detail::require_same_length(v, a, "bound_corollary_second");
  if (!v.sorted_by_norm()) throw OrderingError("bound_corollary_second: vectors must be sorted by non-increasing norm");
  const RVector<T> nr = v.norms();
  T s = 0;
  for (Index i = 0; i < (a.size() + 1) / 2; ++i) s += a[i] * nr(i);
  return s;
}

/// Reorders vectors by non-increasing norm, ties by original index. The
/// returned permutation maps new position -> original index.
template <typename T>
std::pair<VectorConfig<T>, Permutation> sort_by_norm(const VectorConfig<T>& v) {
  const RVector<T> nr = v.norms();
  std::vector<Index> idx(static_cast<std::size_t>(v.size()));
  std::iota(idx.begin(), idx.end(), Index(0));
  std::stable_sort(idx.begin(), idx.end(), [&](Index x, Index y) { return nr(x) > nr(y); });
  RMatrix<T> cols(v.dim(), v.size());
  for (Index i = 0; i < v.size(); ++i) cols.col(i) = v.vector(idx[static_cast<std::size_t>(i)]);
  return {VectorConfig<T>(std::move(cols)), Permutation(std::move(idx))};
}

template <typename T>
struct PermutationMax {
  T max_norm;
  Permutation argmax;
};

inline constexpr Index kMaxExhaustivePermutation = 9;
inline constexpr Index kMaxExhaustiveSubset = 20;

/// Exact maximum of rearranged_sum_norm over all n! permutations (n <= 9).
template <typename T>
PermutationMax<T> max_norm_over_permutations(const VectorConfig<T>& v, const CoeffSeq<T>& a) {
  detail::require_same_length(v, a, "max_norm_over_permutations");
  const Index n = v.size();
  if (n > kMaxExhaustivePermutation)
    throw BudgetError("max_norm_over_permutations: n = " + std::to_string(n) +
                      " exceeds the exhaustive budget of 9; use sampled_max_norm");
  std::vector<Index> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), Index(0));
  const RMatrix<T>& cols = v.columns();
  PermutationMax<T> best{T(-1), Permutation::identity(n)};
  RVector<T> s(v.dim());
  do {
    s.setZero();
    for (Index i = 0; i < n; ++i) s.noalias() += a[i] * cols.col(p[static_cast<std::size_t>(i)]);
    const T nrm = s.norm();
    if (nrm > best.max_norm) {
      best.max_norm = nrm;
      best.argmax = Permutation(p);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

/// Lower estimate of the permutation maximum from `samples` uniformly random
/// permutations (plus the identity); used when n is beyond the exhaustive budget.
template <typename T>
PermutationMax<T> sampled_max_norm(const VectorConfig<T>& v, const CoeffSeq<T>& a, Index samples,
                                   std::uint64_t seed) {
  detail::require_same_length(v, a, "sampled_max_norm");
  std::mt19937_64 rng(seed);
  std::vector<Index> p(static_cast<std::size_t>(v.size()));
  std::iota(p.begin(), p.end(), Index(0));
  PermutationMax<T> best{rearranged_sum_norm(v, a, Permutation(p)), Permutation(p)};
  for (Index s = 0; s < samples; ++s) {
    std::shuffle(p.begin(), p.end(), rng);
    Permutation sigma(p);
    const T nrm = rearranged_sum_norm(v, a, sigma);
    if (nrm > best.max_norm) best = {nrm, std::move(sigma)};
  }
  return best;
}

/// max over all subsets W of ||sum_{w in W} w||_2, i.e. the largest norm
/// attained on the zonotope spanned by v (n <= 20). Gray-code walk.
template <typename T>
T zonotope_max_norm(const VectorConfig<T>& v) {
  const Index n = v.size();
  if (n > kMaxExhaustiveSubset)
    throw BudgetError("zonotope_max_norm: n = " + std::to_string(n) + " exceeds the subset budget of 20");
  const RMatrix<T>& cols = v.columns();
  RVector<T> s = RVector<T>::Zero(v.dim());
  T best = 0;
  std::uint32_t prev_gray = 0;
  for (std::uint32_t k = 1; k < (std::uint32_t(1) << n); ++k) {
    const std::uint32_t gray = k ^ (k >> 1);
    const std::uint32_t flip = gray ^ prev_gray;
    const int bit = std::countr_zero(flip);
    if (gray & flip)
      s += cols.col(bit);
    else
      s -= cols.col(bit);
    prev_gray = gray;
    best = std::max(best, s.norm());
  }
  return best;
}

/// n i.i.d. standard normal vectors in R^d, recentered to sum to zero.
template <typename T = double>
VectorConfig<T> random_zero_sum_config(Index n, Index d, std::uint64_t seed) {
  if (n < 2) throw ParameterError("random_zero_sum_config: need n >= 2");
  if (d < 1) throw ParameterError("random_zero_sum_config: need d >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<T> dist(T(0), T(1));
  RMatrix<T> cols(d, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < d; ++i) cols(i, j) = dist(rng);
  const RVector<T> mean = cols.rowwise().mean();
  cols.colwise() -= mean;
  if (n == 2) cols.col(1) = -cols.col(0);
  return VectorConfig<T>(std::move(cols));
}

/// n coefficients drawn uniformly from [0, scale), returned non-increasing.
template <typename T = double>
CoeffSeq<T> random_coeff_seq(Index n, std::uint64_t seed, T scale = T(1)) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<T> dist(T(0), scale);
  std::vector<T> a(static_cast<std::size_t>(n));
  for (auto& x : a) x = dist(rng);
  std::sort(a.begin(), a.end(), std::greater<T>());
  return CoeffSeq<T>(std::move(a));
}

}  // namespace gershdisk
