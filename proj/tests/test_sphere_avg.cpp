#include <doctest.h>

#include <cmath>

#include "qcorr/mutual_info.hpp"
#include "qcorr/sphere_avg.hpp"

using namespace qcorr;

TEST_CASE("gauss-legendre rule integrates polynomials exactly") {
  const auto [x, w] = gauss_legendre(8);
  double s0 = 0.0, s2 = 0.0, s14 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s0 += w[i];
    s2 += w[i] * x[i] * x[i];
    s14 += w[i] * std::pow(x[i], 14);
  }
  CHECK(s0 == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(s2 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(s14 == doctest::Approx(2.0 / 15.0).epsilon(1e-13));  // degree 14 < 2*8
}

TEST_CASE("sphere averages of known moments") {
  CHECK(average_s2([](const Vec3&) { return 1.0; }) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(average_s2([](const Vec3& n) { return n[2] * n[2]; }) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  // Fourth moment already converges at small orders.
  CHECK(average_s2([](const Vec3& n) { return std::pow(n[2], 4); }, QuadratureSpec{16, 32}) ==
        doctest::Approx(0.2).epsilon(1e-10));
  CHECK(average_s2([](const Vec3& n) { return n[0] * n[1]; }) == doctest::Approx(0.0));
}

TEST_CASE("double-sphere averages") {
  QuadratureSpec small{24, 48};
  CHECK(average_s2x_s2([](const Vec3&, const Vec3&) { return 1.0; }, small) ==
        doctest::Approx(1.0).epsilon(1e-13));
  CHECK(average_s2x_s2([](const Vec3& n, const Vec3& m) { return dot(n, m) * dot(n, m); },
                       small) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  // x^2 for the unit single-axis state factorizes into (1/3)(1/3).
  CHECK(average_s2x_s2([](const Vec3& n, const Vec3& m) {
          const double x = n[2] * m[2];
          return x * x;
        },
        small) == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("rotation invariance of the sphere average") {
  // Rotation by 0.7 rad about a skew axis.
  const Vec3 axis = normalized({1.0, 2.0, -0.5});
  const double ang = 0.7;
  auto rotate = [&](const Vec3& v) {
    const Vec3 par = axis * dot(axis, v);
    const Vec3 perp = v - par;
    const Vec3 orth = cross(axis, v);
    return par + perp * std::cos(ang) + orth * std::sin(ang);
  };
  auto f = [](const Vec3& n) { return std::exp(n[2]) + n[0] * n[0] * n[1]; };
  const double direct = average_s2(f);
  const double rotated = average_s2([&](const Vec3& n) { return f(rotate(n)); });
  CHECK(direct == doctest::Approx(rotated).epsilon(1e-9));
}

TEST_CASE("quadrature order convergence") {
  // Representative smooth integrand used by the averages.
  auto f = [](const Vec3& n, const Vec3& m) { return binary_mmms_mi(0.9 * n[2] * m[2]); };
  const double base = average_s2x_s2(f, QuadratureSpec{32, 64});
  const double fine = average_s2x_s2(f, QuadratureSpec{64, 128});
  CHECK(std::abs(base - fine) < 1e-8);
}

TEST_CASE("monte-carlo engine") {
  SUBCASE("constant integrand has zero error") {
    const auto r = mc_average_s2([](const Vec3&) { return 1.0; }, McSpec{10000, 42});
    CHECK(r.mean == doctest::Approx(1.0));
    CHECK(r.std_err == doctest::Approx(0.0));
  }
  SUBCASE("second moment lands within three standard errors") {
    const auto r = mc_average_s2([](const Vec3& n) { return n[2] * n[2]; }, McSpec{1000000, 7});
    CHECK(std::abs(r.mean - 1.0 / 3.0) < 3.0 * r.std_err);
    CHECK(r.std_err < 1e-3);
  }
  SUBCASE("matches the closed-form isotropic average") {
    const double closed = avg_mi_isotropic(1.0);
    const auto r = mc_average_s2x_s2(
        [](const Vec3& n, const Vec3& m) {
          const double e = -1.0 / std::sqrt(3.0);
          return binary_mmms_mi(e * (n[0] * m[0] + n[1] * m[1] + n[2] * m[2]));
        },
        McSpec{400000, 99});
    CHECK(std::abs(r.mean - closed) < 3.0 * r.std_err);
  }
  SUBCASE("deterministic for a fixed seed and independent of thread count") {
    auto f = [](const Vec3& n) { return n[0] * n[0] + 0.1 * n[2]; };
    const auto a = mc_average_s2(f, McSpec{50000, 1234});
    detail::set_max_threads(4);
    const auto b = mc_average_s2(f, McSpec{50000, 1234});
    detail::set_max_threads(1);
    const auto c = mc_average_s2(f, McSpec{50000, 1234});
    CHECK(a.mean == b.mean);
    CHECK(a.mean == c.mean);
    CHECK(a.std_err == b.std_err);
  }
}

TEST_CASE("quadrature results do not depend on the thread count") {
  auto f = [](const Vec3& n, const Vec3& m) { return binary_mmms_mi(0.7 * dot(n, m)); };
  const QuadratureSpec spec{24, 48};
  const double seq = average_s2x_s2(f, spec);
  detail::set_max_threads(3);
  const double par = average_s2x_s2(f, spec);
  detail::set_max_threads(1);
  CHECK(seq == par);  // chunk partials are combined in a fixed order
}

TEST_CASE("counter-based stream is reproducible and Haar-uniform") {
  const Vec3 v1 = rng::unit_vector(5, 17);
  const Vec3 v2 = rng::unit_vector(5, 17);
  CHECK(v1[0] == v2[0]);
  CHECK(norm(v1) == doctest::Approx(1.0).epsilon(1e-12));
  // First-moment check: the mean vector of many draws is near zero.
  Vec3 mean{0, 0, 0};
  const int n = 200000;
  for (int i = 0; i < n; ++i) mean = mean + rng::unit_vector(5, static_cast<std::uint64_t>(i));
  mean = mean / n;
  CHECK(norm(mean) < 5.0 / std::sqrt(static_cast<double>(n)));
}
