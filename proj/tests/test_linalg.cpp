#include <doctest.h>

#include <cmath>

#include "gershdisk/generators.hpp"
#include "gershdisk/linalg.hpp"
#include "support/oracles.hpp"

using namespace gershdisk;

TEST_CASE("eigenvalues: identity") {
  const CVectord ev = eigenvalues<double>(CMatrixd::Identity(3, 3));
  for (Index i = 0; i < 3; ++i) CHECK(std::abs(ev(i) - 1.0) < 1e-15);
}

TEST_CASE("eigenvalues: 5x5 signed circulant has +-sqrt5 twice and 0") {
  const CMatrixd b = matrix_b5<double>();
  CVectord expected(5);
  const double r5 = std::sqrt(5.0);
  expected << r5, r5, -r5, -r5, 0.0;
  CHECK(oracle::multiset_distance(eigenvalues<double>(b), expected) < 1e-9 * frobenius_scale(b));
}

TEST_CASE("eigenvalues: circulants agree with the DFT closed form") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 40; ++trial) {
    const Index n = 1 + trial % 12;
    CirculantSpec<double> spec;
    for (Index j = 0; j < n; ++j) spec.first_row.emplace_back(g(rng), trial % 2 ? g(rng) : 0.0);
    const CMatrixd c = circulant(spec);
    // Circulants are normal, so the eigenvalues are well conditioned.
    CHECK(oracle::multiset_distance(eigenvalues<double>(c), circulant_spectrum(spec)) <
          1e-9 * frobenius_scale(c));
  }
}

TEST_CASE("eigenvalues: random complex matrices match an independent solver") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Index n = 1 + static_cast<Index>(seed % 16);
    const CMatrixd m = oracle::random_complex(n, seed);
    const CVectord ev = eigenvalues<double>(m);
    const double scale = frobenius_scale(m);
    CHECK(oracle::multiset_distance(ev, oracle::reference_eigenvalues(m)) < 1e-8 * scale);
    CHECK(std::abs(ev.sum() - m.trace()) <= 1e-8 * scale * n);
  }
}

TEST_CASE("eigenvalues: Hermitian spectra are real") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const Index n = 2 + static_cast<Index>(seed % 15);
    const CMatrixd h = oracle::random_hermitian(n, seed);
    const CVectord ev = eigenvalues<double>(h);
    CHECK(ev.imag().cwiseAbs().maxCoeff() <= 1e-9 * frobenius_scale(h));
    CHECK(oracle::multiset_distance(ev, oracle::reference_eigenvalues(h)) < 1e-9 * frobenius_scale(h));
  }
}

TEST_CASE("eigenvalues: errors") {
  CHECK_THROWS_AS(eigenvalues<double>(CMatrixd::Zero(2, 3)), DimensionError);
  CMatrixd bad = CMatrixd::Identity(2, 2);
  bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(eigenvalues<double>(bad), DomainError);

  // Zero sweep budget on an unreduced matrix.
  try {
    eigenvalues<double>(matrix_a3<double>(), 0);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.partial.rows() == 3);
    CHECK(std::abs(e.partial(2, 0)) == 0.0);  // Hessenberg form
  }
}

TEST_CASE("hessenberg_form is a unitary similarity") {
  const CMatrixd m = oracle::random_complex(9, 3);
  const CMatrixd h = hessenberg_form<double>(m);
  for (Index i = 2; i < 9; ++i)
    for (Index j = 0; j + 1 < i; ++j) CHECK(h(i, j) == std::complex<double>(0));
  CHECK(std::abs(h.trace() - m.trace()) < 1e-12 * m.norm());
  CHECK(std::abs(h.norm() - m.norm()) < 1e-12 * m.norm());
}

TEST_CASE("numerical_rank") {
  CHECK(numerical_rank<double>(CMatrixd::Zero(4, 4), 1e-12) == 0);
  CHECK(numerical_rank<double>(hesse_gram<double>(), 1e-9) == 6);
  CHECK(numerical_rank<double>(hesse_dependency<double>(), 1e-9) == 6);
  CHECK_THROWS_AS(numerical_rank<double>(CMatrixd::Identity(2, 2), 0.0), ParameterError);

  // k independent rows repeated out to n rows.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Index k = 1 + static_cast<Index>(seed % 6), n = k + 3;
    const CMatrixd base = oracle::random_complex(n, seed).topRows(k);
    CMatrixd m(n, n);
    for (Index r = 0; r < n; ++r) m.row(r) = base.row(r % k) * double(1 + r / k);
    CHECK(numerical_rank<double>(m, 1e-9) == k);
  }
}

TEST_CASE("rank plus nullity is the column count") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Index n = 2 + static_cast<Index>(seed % 8);
    CMatrixd m = oracle::random_complex(n, seed);
    m.col(0) = m.col(1);  // rank deficient
    for (double tol : {1e-12, 1e-9, 1e-3}) CHECK(numerical_rank<double>(m, tol) + null_space<double>(m, tol).cols() == n);
  }
}

TEST_CASE("eigen_report: paper example spectra") {
  SUBCASE("3x3 ones off the diagonal: -1 twice (geometric 2), 2 once") {
    const auto rep = eigen_report<double>(matrix_a3<double>());
    REQUIRE(rep.clusters.size() == 2);
    CHECK(std::abs(rep.clusters[0].value - (-1.0)) < 1e-12);
    CHECK(rep.clusters[0].algebraic_count == 2);
    CHECK(rep.clusters[0].geometric_multiplicity == 2);
    CHECK(std::abs(rep.clusters[1].value - 2.0) < 1e-12);
    CHECK(rep.clusters[1].geometric_multiplicity == 1);
  }
  SUBCASE("Hesse Gram: 0 x3 and 6 x6") {
    const auto rep = eigen_report<double>(hesse_gram<double>());
    REQUIRE(rep.clusters.size() == 2);
    CHECK(std::abs(rep.clusters[0].value) < 1e-9);
    CHECK(rep.clusters[0].algebraic_count == 3);
    CHECK(rep.clusters[0].geometric_multiplicity == 3);
    CHECK(std::abs(rep.clusters[1].value - 6.0) < 1e-9);
    CHECK(rep.clusters[1].geometric_multiplicity == 6);
  }
  SUBCASE("diagonal") {
    CMatrixd d = CMatrixd::Zero(3, 3);
    d.diagonal() << 1.0, 2.0, 3.0;
    const auto rep = eigen_report<double>(d);
    REQUIRE(rep.clusters.size() == 3);
    for (const auto& c : rep.clusters) CHECK(c.geometric_multiplicity == 1);
  }
}

TEST_CASE("eigen_report: a Jordan block is defective") {
  CMatrixd j(2, 2);
  j << 1.0, 1.0, 0.0, 1.0;
  const auto rep = eigen_report<double>(j);
  REQUIRE(rep.clusters.size() == 1);
  CHECK(rep.clusters[0].algebraic_count == 2);
  CHECK(rep.clusters[0].geometric_multiplicity == 1);
  // A single eigenvalue on a non-scalar matrix is reported as merged.
  CHECK(rep.merged_warning);
  CHECK_FALSE(eigen_report<double>(CMatrixd::Identity(3, 3) * 2.0).merged_warning);
}

TEST_CASE("eigen_report: merged-cluster warning") {
  CMatrixd d = CMatrixd::Zero(2, 2);
  d.diagonal() << 1.0, 1.5;
  EigenOptions<double> opt;
  opt.cluster_tol = 1.0;
  CHECK(eigen_report<double>(d, opt).merged_warning);
}

TEST_CASE("eigen_report: invariants on a mixed corpus") {
  std::vector<CMatrixd> corpus = {matrix_a3<double>(), matrix_b5<double>(), matrix_c7<double>(), hesse_gram<double>()};
  for (std::uint64_t s = 0; s < 12; ++s) {
    corpus.push_back(oracle::random_complex(2 + static_cast<Index>(s % 14), s));
    corpus.push_back(random_multiple_eigenvalue_matrix<double>(1 + static_cast<Index>(s % 8), s));
    corpus.push_back(block_doubly_stochastic<double>(1 + static_cast<Index>(s % 4), 2 + static_cast<Index>(s % 3), s));
  }
  for (const auto& m : corpus) {
    const auto rep = eigen_report<double>(m);
    const double scale = frobenius_scale(m);
    Index total = 0;
    for (std::size_t a = 0; a < rep.clusters.size(); ++a) {
      const auto& c = rep.clusters[a];
      total += c.algebraic_count;
      CHECK(c.geometric_multiplicity >= 1);
      CHECK(c.geometric_multiplicity <= c.algebraic_count);
      CHECK(c.residual <= 1e-6 * scale);
      for (std::size_t b = a + 1; b < rep.clusters.size(); ++b)
        CHECK(std::abs(c.value - rep.clusters[b].value) > rep.cluster_tol);
    }
    CHECK(total == m.rows());
  }
}
