#include <doctest.h>

#include <cmath>

#include "gershdisk/disks.hpp"
#include "gershdisk/generators.hpp"
#include "gershdisk/linalg.hpp"
#include "support/oracles.hpp"

using namespace gershdisk;

namespace {

// Off-diagonal magnitudes of row i, largest first, computed directly.
std::vector<double> row_terms(const CMatrixd& m, Index i) {
  std::vector<double> t;
  for (Index j = 0; j < m.cols(); ++j)
    if (j != i) t.push_back(std::abs(m(i, j)));
  std::sort(t.rbegin(), t.rend());
  return t;
}

double top_sum(const CMatrixd& m, Index i, Index k) {
  const auto t = row_terms(m, i);
  double s = 0;
  for (Index j = 0; j < k; ++j) s += t[j];
  return s;
}

}  // namespace

TEST_CASE("full_radius") {
  CHECK(full_radius<double>(CMatrixd::Identity(4, 4), 2) == 0.0);
  const CMatrixd a = matrix_a3<double>();
  for (Index i = 0; i < 3; ++i) CHECK(full_radius(a, i) == 2.0);
  const CMatrixd h = hesse_gram<double>();
  for (Index i = 0; i < 9; ++i) CHECK(full_radius(h, i) == doctest::Approx(8.0));
  CHECK_THROWS_AS(full_radius(a, 3), DimensionError);
  CHECK_THROWS_AS(full_radius(a, -1), DimensionError);
}

TEST_CASE("fraction_radius") {
  const CMatrixd m = oracle::random_complex(6, 4);
  CHECK(fraction_radius(m, 1, 0) == 0.0);
  CHECK(fraction_radius(m, 1, 5) == doctest::Approx(full_radius(m, 1)));
  CHECK_THROWS_AS(fraction_radius(m, 1, 6), ParameterError);
  CHECK_THROWS_AS(fraction_radius(m, 1, -1), ParameterError);
  const CMatrixd c = matrix_c7<double>();
  for (Index i = 0; i < 7; ++i) CHECK(fraction_radius(c, i, 3) == 3.0);
}

TEST_CASE("half, third and corollary2 radii") {
  const CMatrixd a = matrix_a3<double>(), b = matrix_b5<double>(), h = hesse_gram<double>();
  for (Index i = 0; i < 3; ++i) {
    CHECK(half_radius(a, i) == 1.0);
    CHECK(corollary2_radius(a, i) == 2.0);
    CHECK(third_radius(a, i) == 1.0);
  }
  for (Index i = 0; i < 5; ++i) CHECK(half_radius(b, i) == 2.0);
  for (Index i = 0; i < 9; ++i) {
    CHECK(half_radius(h, i) == doctest::Approx(4.0));
    CHECK(third_radius(h, i) == doctest::Approx(3.0));
    CHECK(corollary2_radius(h, i) == doctest::Approx(5.0));
  }
  // Non-divisible orders round the term count up.
  CHECK(RadiusKind::third().terms(7) == 3);
  CHECK(RadiusKind::third().terms(9) == 3);
  CHECK(RadiusKind::third().terms(10) == 4);
  for (Index n = 2; n <= 12; n += 2) CHECK(RadiusKind::corollary2().terms(n) == RadiusKind::half().terms(n));
}

TEST_CASE("third radius on block doubly stochastic matrices is 1 - a_ii") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Index k = 1 + static_cast<Index>(s % 4);
    const CMatrixd m = block_doubly_stochastic<double>(k, 3, s);
    for (Index i = 0; i < m.rows(); ++i) CHECK(third_radius(m, i) == doctest::Approx(1.0 - m(i, i).real()).epsilon(1e-12));
  }
}

TEST_CASE("median_radius") {
  const CMatrixd a = matrix_a3<double>();
  const auto r = median_radius(a, 0);
  CHECK(r.b_star == 1.0);
  CHECK(r.radius == 1.0);
  CHECK(r.literal_radius == 0.0);

  CHECK(median_radius<double>(CMatrixd::Zero(4, 4), 2).radius == 0.0);

  CMatrixd m = CMatrixd::Zero(4, 4);
  m(0, 1) = 5;
  const auto r5 = median_radius(m, 0);
  CHECK(r5.b_star == 0.0);
  CHECK(r5.radius == 5.0);

  CMatrixd neg = a;
  neg(1, 2) = -1.0;
  CHECK_THROWS_AS(median_radius(neg, 0), DomainError);
  try {
    disk_set(neg, RadiusKind::median());
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("(1, 2)") != std::string::npos);
  }
  CMatrixd cplx = a;
  cplx(0, 1) = {1.0, 0.5};
  CHECK_THROWS_AS(median_radius(cplx, 0), DomainError);
}

TEST_CASE("median radius is value-neutral across the middle interval for even n") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const Index n = 2 + 2 * static_cast<Index>(s % 6);
    const CMatrixd m = oracle::random_nonneg(n, s);
    for (Index i = 0; i < n; ++i) {
      std::vector<double> b;
      for (Index j = 0; j < n; ++j) b.push_back(j == i ? 0.0 : m(i, j).real());
      std::sort(b.rbegin(), b.rend());
      const double lo = b[n / 2], hi = b[n / 2 - 1];
      const double radius = median_radius(m, i).radius;
      for (int g = 0; g <= 8; ++g) {
        const double gamma = lo + (hi - lo) * g / 8.0;
        double s2 = 0;
        for (double x : b) s2 += std::abs(x - gamma);
        CHECK(s2 == doctest::Approx(radius).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("radius properties on random matrices") {
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const Index n = 1 + static_cast<Index>(s % 12);
    const CMatrixd m = oracle::random_nonneg(n, s);
    for (Index i = 0; i < n; ++i) {
      // Independent top-k sums.
      for (Index k = 0; k < n; ++k) CHECK(fraction_radius(m, i, k) == doctest::Approx(top_sum(m, i, k)).epsilon(1e-12));
      for (Index k = 0; k + 1 < n; ++k) CHECK(fraction_radius(m, i, k) <= fraction_radius(m, i, k + 1));
      const double half = half_radius(m, i), c2 = corollary2_radius(m, i), full = full_radius(m, i);
      CHECK(half <= c2);
      CHECK(c2 <= full + 1e-12);
      const auto med = median_radius(m, i);
      CHECK(med.radius <= c2 + 1e-12);
      CHECK(med.radius <= half + std::abs(med.b_star) + 1e-12);
    }
  }
}

TEST_CASE("scale equivariance") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Index n = 2 + static_cast<Index>(s % 9);
    const CMatrixd m = oracle::random_nonneg(n, s);
    const double t = 0.1 + 0.37 * double(s);
    for (auto kind : {RadiusKind::full(), RadiusKind::half(), RadiusKind::fraction(1), RadiusKind::median(),
                      RadiusKind::corollary2(), RadiusKind::third()}) {
      const auto d1 = disk_set(m, kind);
      const auto dt = disk_set<double>(t * m, kind);
      for (Index i = 0; i < n; ++i) {
        CHECK(std::abs(dt[i].center - t * d1[i].center) <= 1e-12 * t * (1 + std::abs(d1[i].center)));
        CHECK(std::abs(dt[i].radius - t * d1[i].radius) <= 1e-12 * t * (1 + d1[i].radius));
      }
    }
  }
}

TEST_CASE("classic Gershgorin: every eigenvalue lies in some full disk") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Index n = 1 + static_cast<Index>(s % 12);
    const CMatrixd m = s % 2 ? oracle::random_complex(n, s) : oracle::random_nonneg(n, s);
    const auto disks = disk_set(m, RadiusKind::full());
    const CVectord ev = oracle::reference_eigenvalues(m);
    for (Index k = 0; k < n; ++k) {
      bool hit = false;
      for (const auto& d : disks) hit = hit || contains(classify(ev(k), d, 1e-8 * std::max(1.0, std::abs(d.center) + d.radius)));
      CHECK(hit);
    }
  }
}

TEST_CASE("disk_set") {
  const auto ha = disk_set(matrix_a3<double>(), RadiusKind::half());
  REQUIRE(ha.size() == 3);
  for (Index i = 0; i < 3; ++i) {
    CHECK(ha[i].center == std::complex<double>(0));
    CHECK(ha[i].radius == 1.0);
    CHECK(ha[i].row == i);
  }
  for (const auto& d : disk_set(hesse_gram<double>(), RadiusKind::half())) {
    CHECK(std::abs(d.center - 4.0) < 1e-12);
    CHECK(d.radius == doctest::Approx(4.0));
  }
  for (const auto& d : disk_set<double>(CMatrixd::Identity(4, 4), RadiusKind::full())) {
    CHECK(d.center == std::complex<double>(1));
    CHECK(d.radius == 0.0);
  }
  CHECK_THROWS_AS(disk_set<double>(CMatrixd::Zero(2, 3), RadiusKind::full()), DimensionError);
}

TEST_CASE("containment") {
  Disk<double> d44{4.0, 4.0, RadiusKind::half(), 0};
  Disk<double> d42{4.0, 2.0, RadiusKind::fraction(2), 0};
  Disk<double> d02{0.0, 2.0, RadiusKind::half(), 0};
  CHECK(classify<double>(0.0, d44, 1e-9) == Containment::OnBoundary);
  CHECK(classify<double>(6.0, d42, 1e-9) == Containment::OnBoundary);
  CHECK(classify<double>(std::sqrt(5.0), d02, 1e-9) == Containment::Outside);
  CHECK(classify<double>(-std::sqrt(5.0), d02, 1e-9) == Containment::Outside);
  CHECK(classify<double>({1.0, 1.0}, d02, 1e-9) == Containment::Inside);

  const auto entries = containment<double>(0.0, {d44, d42, d02}, 1e-9);
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].status == Containment::OnBoundary);
  CHECK(entries[1].status == Containment::Outside);
  CHECK(entries[2].status == Containment::Inside);
  CHECK(std::string(to_string(Containment::OnBoundary)) == "on_boundary");
}
