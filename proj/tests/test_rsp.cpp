#include <doctest.h>

#include <cmath>

#include "qcorr/density_matrix.hpp"
#include "qcorr/mutual_info.hpp"
#include "qcorr/rsp.hpp"
#include "qcorr/symmetry.hpp"

using namespace qcorr;

namespace {
const double kSqrt3 = std::sqrt(3.0);
const Vec3 kVertex = Vec3{-1, -1, -1} / kSqrt3;

RspTask task_for(const Vec3& n) { return {Observable(n), default_beta_for(n)}; }
}  // namespace

TEST_CASE("post-measurement states") {
  SUBCASE("maximally mixed marginals: even branches, opposite conditionals") {
    const auto state = make_mmms(0.9, kVertex);
    const Observable m(normalized({1, 2, -1}));
    const auto out = post_measurement(state, m, task_for(kXAxis));
    CHECK(out.p[0] == doctest::Approx(0.5));
    CHECK(out.p[1] == doctest::Approx(0.5));
    const Vec3 me = state.correlation().apply(m.axis());
    for (int k = 0; k < 3; ++k) {
      CHECK(out.r[0][k] == doctest::Approx(me[k]).epsilon(1e-12));
      CHECK(out.r[1][k] == doctest::Approx(-me[k]).epsilon(1e-12));
    }
  }
  SUBCASE("no correlations leave nothing behind") {
    const auto out =
        post_measurement(make_mmms(0.0, kZAxis), Observable(kXAxis), task_for(kYAxis));
    CHECK(norm(out.r_final) == doctest::Approx(0.0));
  }
  SUBCASE("pure state against the matrix-level oracle") {
    const auto state = TwoQubitState::pure_schmidt(0.7);
    const RspTask task{Observable(kXAxis), Observable(kZAxis)};
    const auto out = post_measurement(state, Observable(kXAxis), task);
    const Vec3 oracle = rsp_output_oracle(state, kXAxis, kZAxis);
    for (int k = 0; k < 3; ++k)
      CHECK(out.r_final[k] == doctest::Approx(oracle[k]).epsilon(1e-12));
    // Mixture identity: p+ r+ + p- R(r-) equals the closed form.
    const Vec3 mixed =
        out.r[0] * out.p[0] + pi_rotation(out.r[1], kZAxis) * out.p[1];
    for (int k = 0; k < 3; ++k)
      CHECK(out.r_final[k] == doctest::Approx(mixed[k]).epsilon(1e-12));
  }
  SUBCASE("polarized marginal biases the branches") {
    const auto state = TwoQubitState::pure_schmidt(0.9);  // a = (0,0,0.62)
    const auto out = post_measurement(state, Observable(kZAxis), task_for(kXAxis));
    CHECK(out.p[0] == doctest::Approx(0.5 * (1.0 + state.a()[2])));
    CHECK(out.p[0] + out.p[1] == doctest::Approx(1.0));
  }
  SUBCASE("a vanishing branch is recorded, not fatal") {
    const auto product = TwoQubitState::pure_schmidt(1.0);  // a = z exactly
    const auto out = post_measurement(product, Observable(kZAxis), task_for(kXAxis));
    CHECK(out.degenerate);
    CHECK(out.defined[0]);
    CHECK_FALSE(out.defined[1]);
    CHECK(out.p[1] == doctest::Approx(0.0));
  }
}

TEST_CASE("task and observable validation") {
  CHECK_THROWS_AS(Observable({0, 0, 0}), InvalidInput);
  CHECK_THROWS_AS(RspTask(Observable(kXAxis), Observable(normalized({1, 0, 1}))), InvalidInput);
  const Observable beta = default_beta_for(kZAxis);  // fallback branch
  CHECK(std::abs(dot(beta.axis(), kZAxis)) < 1e-12);
}

TEST_CASE("optimal measurement") {
  SUBCASE("isotropic correlations align with the target") {
    const auto iso_plus = make_mmms(0.5, normalized({1, 1, 1}));
    const Vec3 n = normalized({0.3, -0.8, 0.5});
    const Vec3 m = optimal_measurement(iso_plus, Observable(n)).axis();
    for (int k = 0; k < 3; ++k) CHECK(m[k] == doctest::Approx(n[k]).epsilon(1e-12));
    // Vertex signs flip the axis but not the payoff.
    const auto iso_vertex = make_mmms(0.5, kVertex);
    const Vec3 mv = optimal_measurement(iso_vertex, Observable(n)).axis();
    for (int k = 0; k < 3; ++k) CHECK(mv[k] == doctest::Approx(-n[k]).epsilon(1e-12));
  }
  SUBCASE("vanishing correlations have no preferred axis") {
    CHECK_THROWS_AS(optimal_measurement(make_mmms(1.0, kZAxis), Observable(kXAxis)),
                    ZeroCorrelation);
  }
  SUBCASE("planar correlations") {
    const auto state = make_mmms(0.5, normalized({1, 1, 0}));
    const Vec3 m = optimal_measurement(state, Observable(kXAxis)).axis();
    CHECK(m[0] == doctest::Approx(1.0));
    CHECK(std::abs(m[1]) < 1e-12);
  }
}

TEST_CASE("figure of merit") {
  const auto state = make_mmms(1.0, kZAxis);
  SUBCASE("uncorrelated pair costs one bit") {
    CHECK(figure_of_merit(state, {Observable(kXAxis), Observable(kXAxis)}) ==
          doctest::Approx(1.0));
  }
  SUBCASE("perfect correlation costs nothing") {
    const auto bell = make_mmms(kSqrt3, kVertex);
    const Observable n(normalized({0.3, 0.4, -0.5}));
    const Observable m = optimal_measurement(bell, n);
    CHECK(figure_of_merit(bell, {n, m}) == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("isotropic value at kappa = 1, frozen") {
    const auto iso = make_mmms(1.0, kVertex);
    const Observable n(normalized({1, 1, 2}));
    const Observable m = optimal_measurement(iso, n);
    CHECK(figure_of_merit(iso, {n, m}) ==
          doctest::Approx(0.34249693688408224).epsilon(1e-12));  // 1 - log2(1 + 1/sqrt3)
  }
  SUBCASE("anti-aligned output diverges") {
    CHECK(std::isinf(figure_of_merit(state, {Observable(kZAxis), Observable({0, 0, -1})})));
  }
}

TEST_CASE("task evaluation") {
  SUBCASE("Bell-class state: perfect and useful for every target") {
    const auto bell = make_mmms(kSqrt3, kVertex);
    const auto eval = evaluate(bell, task_for(normalized({2, -1, 1})));
    CHECK(eval.f_u == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(eval.gain == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eval.useful);
  }
  SUBCASE("nothing to work with") {
    const auto eval = evaluate(make_mmms(0.0, kZAxis), task_for(kXAxis));
    CHECK(eval.f_u == doctest::Approx(1.0));
    CHECK(eval.f_un == doctest::Approx(1.0));
    CHECK(eval.f_opt == doctest::Approx(1.0));
    CHECK(eval.gain == doctest::Approx(0.0));
    CHECK(eval.zero_correlation);
  }
  SUBCASE("pure states keep every relevant observable useful") {
    const auto state = TwoQubitState::pure_schmidt(0.8);
    const std::uint64_t stream = rng::substream(61, 0);
    for (std::uint64_t i = 0; i < 100; ++i) {
      const auto eval = evaluate(state, task_for(rng::unit_vector(stream, i)));
      CHECK(eval.useful);
      CHECK(eval.gain >= -1e-15);
      CHECK(eval.f_opt == doctest::Approx(eval.f_u));
    }
  }
  SUBCASE("dominance of the per-target best branch") {
    const auto state = TwoQubitState::isotropic_with_b(0.4, 0.5);
    const std::uint64_t stream = rng::substream(61, 1);
    for (std::uint64_t i = 0; i < 200; ++i) {
      const auto eval = evaluate(state, task_for(rng::unit_vector(stream, i)));
      CHECK(eval.f_opt <= eval.f_u + 1e-12);
      CHECK(eval.f_opt <= eval.f_un + 1e-12);
      if (eval.useful) CHECK(eval.gain >= -1e-12);
    }
  }
}

TEST_CASE("usefulness sign test") {
  SUBCASE("maximally mixed marginals are always useful") {
    const auto state = make_mmms(0.8, kVertex);
    CHECK(usefulness_condition_check(state, task_for(normalized({1, 0, 1}))));
  }
  SUBCASE("strong polarization beats weak correlations near its axis") {
    const auto state = TwoQubitState::isotropic_with_b(0.3, 0.7);
    REQUIRE(state.is_physical());
    // In-plane target well aligned with b.
    const Vec3 n = normalized({0.15, 0.0, 0.99});
    const RspTask task{Observable(n), Observable(normalized(cross(n, kYAxis)))};
    const double x = norm(state.correlation().apply(n));
    const double b = std::abs(dot(n, state.b()));
    REQUIRE(x < b);
    CHECK_FALSE(usefulness_condition_check(state, task));
    CHECK_FALSE(evaluate(state, task).useful);
  }
  SUBCASE("pure states pass the sign test everywhere") {
    const auto state = TwoQubitState::pure_schmidt(0.6);
    const std::uint64_t stream = rng::substream(67, 0);
    for (std::uint64_t i = 0; i < 100; ++i)
      CHECK(usefulness_condition_check(state, task_for(rng::unit_vector(stream, i))));
  }
  SUBCASE("agrees with the |nE| vs |n.b| comparison away from the boundary") {
    const std::uint64_t sv = rng::substream(67, 1);
    const auto state = TwoQubitState::isotropic_with_b(0.5, 0.6);
    REQUIRE(state.is_physical());
    int checked = 0;
    std::uint64_t i = 0;
    while (checked < 300) {
      const Vec3 n = rng::unit_vector(sv, i++);
      const double x = norm(state.correlation().apply(n));
      const double b = std::abs(dot(n, state.b()));
      if (std::abs(x - b) <= 1e-10) continue;
      ++checked;
      CHECK(usefulness_condition_check(state, task_for(n)) == (x > b));
    }
  }
}

TEST_CASE("target-sphere averages against the closed forms") {
  SUBCASE("isotropic family") {
    for (double kappa : {0.4, 1.0, 1.5}) {
      const auto avg = average_over_relevant(make_mmms(kappa, kVertex));
      CHECK(avg.f_u == doctest::Approx(avg_f_isotropic(kappa)).epsilon(1e-9));
      CHECK(avg.gain == doctest::Approx(avg_gain_isotropic(kappa)).epsilon(1e-9));
      CHECK(avg.f_opt == doctest::Approx(avg.f_u));  // b = 0: always useful
    }
  }
  SUBCASE("single-axis family") {
    for (double kappa : {0.4, 0.9}) {
      const auto avg = average_over_relevant(make_mmms(kappa, kZAxis));
      CHECK(avg.f_u == doctest::Approx(avg_f_classical(kappa)).epsilon(1e-7));
      CHECK(avg.gain == doctest::Approx(avg_gain_classical(kappa)).epsilon(1e-7));
    }
  }
  SUBCASE("frozen endpoint of the single-axis figure of merit") {
    // (1-ln2)/ln2 at kappa = 1.
    CHECK(avg_f_classical(1.0) == doctest::Approx(0.44269504088896340).epsilon(1e-12));
  }
}

TEST_CASE("isotropic family dominates the gain-payoff trade-off") {
  // Match one family's average gain (or figure of merit) by bisection on the
  // other's kappa, then compare the remaining quantity.
  auto bisect = [](auto f, double target, double lo, double hi) {
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (f(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };
  for (double kappa_cl : {0.2, 0.5, 0.8, 0.95}) {
    const double g = avg_gain_classical(kappa_cl);
    const double k_iso_g = bisect(avg_gain_isotropic, g, 0.0, std::sqrt(3.0));
    CHECK(avg_f_isotropic(k_iso_g) < avg_f_classical(kappa_cl));

    const double f = avg_f_classical(kappa_cl);
    // avg_f_isotropic decreases with kappa, so bisect on its negation.
    const double k_iso_f =
        bisect([](double k) { return -avg_f_isotropic(k); }, -f, 0.0, std::sqrt(3.0));
    CHECK(avg_gain_isotropic(k_iso_f) < avg_gain_classical(kappa_cl));
  }
}

TEST_CASE("extremal classes of the protocol averages at fixed kappa") {
  const double kappa = 0.8;
  const double f_lo = avg_f_isotropic(kappa), f_hi = avg_f_classical(kappa);
  const double g_lo = avg_gain_isotropic(kappa), g_hi = avg_gain_classical(kappa);
  const std::uint64_t stream = rng::substream(71, 0);
  std::uint64_t idx = 0;
  int done = 0;
  while (done < 500) {
    const Vec3 c_hat = rng::unit_vector(stream, idx++);
    if (!is_in_tetrahedron(c_hat * kappa)) continue;
    ++done;
    const auto avg = average_over_relevant(make_mmms(kappa, c_hat), QuadratureSpec{32, 64});
    CHECK(avg.f_u >= f_lo - 1e-7);
    CHECK(avg.f_u <= f_hi + 1e-7);
    CHECK(avg.gain >= g_lo - 1e-7);
    CHECK(avg.gain <= g_hi + 1e-7);
  }
}

TEST_CASE("averages are orbit invariants with co-rotated polarization") {
  // The min/indicator integrands have a kink along the protocol-switch curve,
  // which sits differently on the grid for every orbit member; these orders
  // push the quadrature error below the 1e-8 invariance tolerance.
  const QuadratureSpec quad{768, 1536};
  const double kappa = 0.45;
  const Vec3 c_hat = normalized({0.2, -0.6, 0.45});
  const Vec3 b{0.1, 0.25, -0.2};
  const auto base = TwoQubitState::general({0, 0, 0}, b, c_hat * kappa);
  const auto ref = average_over_relevant(base, quad);
  for (const auto& g : orbit_group()) {
    const auto [o_a, o_b] = equivalence_rotations(g);
    Vec3 b_rot{0, 0, 0};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) b_rot[i] += o_b[i][j] * b[j];
    const auto state =
        TwoQubitState::general({0, 0, 0}, b_rot, g.apply(c_hat) * kappa, /*force=*/true);
    if (!state.is_physical()) continue;
    const auto avg = average_over_relevant(state, quad);
    CHECK(avg.f_u == doctest::Approx(ref.f_u).epsilon(1e-8));
    CHECK(std::abs(avg.f_opt - ref.f_opt) < 1e-8);
    CHECK(std::abs(avg.gain - ref.gain) < 1e-8);
  }
}

TEST_CASE("optimized protocol averages on the polarized isotropic family") {
  SUBCASE("closed form matches quadrature when every target is useful") {
    const double kappa = 0.9, b = 0.3;
    REQUIRE(kappa / kSqrt3 > b);
    const auto state = TwoQubitState::isotropic_with_b(kappa, b);
    const auto avg = average_over_relevant(state);
    CHECK(avg_gain_isotropic_nonmmms(kappa, b) == doctest::Approx(avg.gain).epsilon(1e-7));
    CHECK(avg.f_opt == doctest::Approx(avg_f_isotropic(kappa)).epsilon(1e-9));
  }
  SUBCASE("domain guard") {
    CHECK_THROWS_AS(avg_gain_isotropic_nonmmms(0.5, 0.4), DomainError);
  }
  SUBCASE("small-b limit") {
    for (double kappa : {0.3, 0.6, 0.9})
      CHECK(avg_gain_isotropic_nonmmms(kappa, 1e-8) ==
            doctest::Approx(avg_gain_isotropic(kappa)).epsilon(1e-6));
  }
  SUBCASE("gain decreases with b") {
    double prev = 1e300;
    for (double b : {0.0, 0.1, 0.2, 0.3, 0.4}) {
      const double g = b == 0.0 ? avg_gain_isotropic(0.9) : avg_gain_isotropic_nonmmms(0.9, b);
      CHECK(g < prev + 1e-15);
      prev = g;
    }
  }
  SUBCASE("standard and optimized coincide iff kappa/sqrt3 exceeds b") {
    const auto inside = average_over_relevant(TwoQubitState::isotropic_with_b(1.2, 0.2));
    CHECK(inside.f_u - inside.f_opt == doctest::Approx(0.0).epsilon(1e-9));
    const auto outside = average_over_relevant(TwoQubitState::isotropic_with_b(0.35, 0.6));
    CHECK(outside.f_u - outside.f_opt > 1e-4);
  }
  SUBCASE("average figure of merit never increases with kappa at fixed b") {
    double prev = 1e300;
    for (double kappa : {0.2, 0.4, 0.6, 0.8, 1.0}) {
      const auto state = TwoQubitState::isotropic_with_b(kappa, 0.35, /*force=*/true);
      REQUIRE(state.is_physical());
      const auto avg = average_over_relevant(state, QuadratureSpec{32, 64});
      CHECK(avg.f_opt <= prev + 1e-10);
      prev = avg.f_opt;
    }
  }
}

TEST_CASE("monte-carlo cross-check of the protocol averages") {
  const auto state =
      TwoQubitState::general({0, 0, 0}, {0.1, 0.25, -0.2}, normalized({0.2, -0.6, 0.45}) * 0.45);
  const auto quad = average_over_relevant(state);
  const McSpec mc{400000, 711};
  const auto f_mc = mc_average_s2(
      [&](const Vec3& n) { return 1.0 - std::log2(1.0 + norm(state.correlation().apply(n))); },
      mc);
  const auto g_mc = mc_average_s2(
      [&](const Vec3& n) {
        const double x = norm(state.correlation().apply(n));
        const double b = std::abs(dot(n, state.b()));
        return x >= b ? rsp_gain(x, b) : 0.0;
      },
      mc);
  CHECK(std::abs(f_mc.mean - quad.f_u) < 4.0 * f_mc.std_err);
  CHECK(std::abs(g_mc.mean - quad.gain) < 4.0 * g_mc.std_err);
}

TEST_CASE("gain equals the mutual information of the relevant pair") {
  const std::uint64_t sc = rng::substream(73, 0);
  const std::uint64_t sn = rng::substream(73, 1);
  std::uint64_t k = 0;
  int done = 0;
  while (done < 50) {
    const Vec3 c{2.0 * rng::uniform01(sc, 3 * k) - 1.0, 2.0 * rng::uniform01(sc, 3 * k + 1) - 1.0,
                 2.0 * rng::uniform01(sc, 3 * k + 2) - 1.0};
    ++k;
    if (!is_in_tetrahedron(c)) continue;
    const auto state = TwoQubitState::general({0, 0, 0}, {0, 0, 0}, c);
    const Vec3 n = rng::unit_vector(sn, k);
    if (norm(state.correlation().apply(n)) < 1e-6) continue;
    ++done;
    const auto eval = evaluate(state, task_for(n));
    const double mi = mutual_information(state, ObservablePair{eval.m_opt, Observable(n)});
    CHECK(eval.gain == doctest::Approx(mi).epsilon(1e-10));
  }
}

TEST_CASE("minimal axis-averaged payoff") {
  CHECK(min_beta_avg_payoff(make_mmms(1.0, kZAxis)) == doctest::Approx(0.0));
  CHECK(min_beta_avg_payoff(make_mmms(1.0, kVertex)) == doctest::Approx(1.0 / 3.0));
  // Planar correlations: the two smallest squared singular values are
  // (0.7*0.6)^2 and 0. The direction only admits kappa <= 1/1.4.
  CHECK(min_beta_avg_payoff(make_mmms(0.7, {0.6, -0.8, 0.0})) ==
        doctest::Approx(0.5 * 0.42 * 0.42));
}

TEST_CASE("stochastic trials") {
  SUBCASE("deterministic branch of a Bell-class state") {
    const auto bell = make_mmms(kSqrt3, kVertex);
    const auto stats = simulate_trials(bell, task_for(kXAxis), 20000, 7);
    CHECK(stats.freq_plus == doctest::Approx(1.0));
    CHECK(stats.std_err == doctest::Approx(0.0));
  }
  SUBCASE("fair coin without correlations") {
    const auto stats = simulate_trials(make_mmms(0.0, kZAxis), task_for(kXAxis), 100000, 11);
    CHECK(std::abs(stats.freq_plus - 0.5) < 3.0 * stats.std_err);
  }
  SUBCASE("isotropic state at kappa = 1") {
    const auto stats = simulate_trials(make_mmms(1.0, kVertex), task_for(kYAxis), 100000, 13);
    CHECK(stats.expected_freq_plus == doctest::Approx(0.5 * (1.0 + 1.0 / kSqrt3)).epsilon(1e-12));
    CHECK(std::abs(stats.freq_plus - stats.expected_freq_plus) < 3.0 * stats.std_err);
  }
  SUBCASE("reproducible for a fixed seed") {
    const auto state = TwoQubitState::pure_schmidt(0.8);
    const auto a = simulate_trials(state, task_for(kXAxis), 50000, 99);
    const auto b = simulate_trials(state, task_for(kXAxis), 50000, 99);
    CHECK(a.n_plus == b.n_plus);
  }
}

TEST_CASE("aligned classical protocol") {
  CHECK(adapted_classical_rsp({Observable(kXAxis), Observable(kZAxis)}) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(adapted_classical_rsp({Observable(normalized({1, 1, 0})), Observable(kZAxis)}) ==
        doctest::Approx(0.0).epsilon(1e-12));
  // Without the alignment step the single-axis classical state is useless for
  // an equatorial target.
  const auto classical = make_mmms(1.0, kZAxis);
  CHECK(evaluate(classical, {Observable(kXAxis), Observable(kZAxis)}).f_u ==
        doctest::Approx(1.0));
}

TEST_CASE("protocol figures do not depend on the rotation axis") {
  const auto state = TwoQubitState::pure_schmidt(0.75);
  const Vec3 n = normalized({0.3, 0.7, -0.2});
  const Observable target(n);
  // Any orthogonal beta produces the same projection of the output on n.
  const Vec3 beta1 = normalized(cross(n, kZAxis));
  const Vec3 beta2 = normalized(cross(n, beta1));
  const double x = norm(state.correlation().apply(n));
  for (const Vec3& beta : {beta1, beta2}) {
    const RspTask task{target, Observable(beta)};
    const auto out = post_measurement(state, optimal_measurement(state, target), task);
    CHECK(dot(n, out.r_final) == doctest::Approx(x).epsilon(1e-12));
  }
}
