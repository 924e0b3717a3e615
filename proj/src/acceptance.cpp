#include "qcorr/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "qcorr/bloch.hpp"
#include "qcorr/coherence.hpp"
#include "qcorr/mutual_info.hpp"
#include "qcorr/rsp.hpp"
#include "qcorr/sphere_avg.hpp"
#include "qcorr/symmetry.hpp"

namespace qcorr::accept {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;
constexpr double kPi = 3.14159265358979323846;
const Vec3 kIsoVertex = Vec3{-1.0, -1.0, -1.0} / kSqrt3;

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(12);
  s << v;
  return s.str();
}

/// Uniform draw from the admissible tetrahedron by rejection from the cube.
Vec3 random_admissible_c(std::uint64_t stream, std::uint64_t& attempt) {
  for (;;) {
    const std::uint64_t base = 3 * attempt++;
    const Vec3 c{2.0 * rng::uniform01(stream, base) - 1.0,
                 2.0 * rng::uniform01(stream, base + 1) - 1.0,
                 2.0 * rng::uniform01(stream, base + 2) - 1.0};
    if (is_in_tetrahedron(c)) return c;
  }
}

TwoQubitState random_mmms(std::uint64_t stream, std::uint64_t& attempt) {
  const Vec3 c = random_admissible_c(stream, attempt);
  return TwoQubitState::general({0, 0, 0}, {0, 0, 0}, c, /*force=*/true);
}

/// Physical state with nonzero marginals by rejection on the eigenvalue test.
/// Each attempt consumes a fixed window of both streams.
TwoQubitState random_non_mmms(std::uint64_t stream_c, std::uint64_t stream_ab,
                              std::uint64_t& attempt) {
  for (;;) {
    const std::uint64_t k = attempt++;
    Vec3 c{2.0 * rng::uniform01(stream_c, 3 * k) - 1.0,
           2.0 * rng::uniform01(stream_c, 3 * k + 1) - 1.0,
           2.0 * rng::uniform01(stream_c, 3 * k + 2) - 1.0};
    if (!is_in_tetrahedron(c)) continue;
    c = c * 0.9;
    Vec3 a, b;
    for (std::uint64_t j = 0; j < 3; ++j) {
      a[static_cast<int>(j)] = 0.55 * (2.0 * rng::uniform01(stream_ab, 6 * k + j) - 1.0);
      b[static_cast<int>(j)] = 0.55 * (2.0 * rng::uniform01(stream_ab, 6 * k + 3 + j) - 1.0);
    }
    const auto state = TwoQubitState::general(a, b, c, /*force=*/true);
    if (state.is_physical() && norm(b) > 1e-3) return state;
  }
}

RspTask task_for(const Vec3& n) { return {Observable(n), default_beta_for(n)}; }

std::vector<Vec3> fibonacci_sphere(int n) {
  std::vector<Vec3> out;
  out.reserve(static_cast<std::size_t>(n));
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / n;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    out.push_back({r * std::cos(golden * i), r * std::sin(golden * i), z});
  }
  return out;
}

/// Average of |En|^2 over the unit circle orthogonal to beta, by an explicit
/// 32-point rule (exact for this trigonometric polynomial).
double circle_avg_payoff(const Vec3& e_diag, const Vec3& beta) {
  Vec3 u = cross(kZAxis, beta);
  if (norm(u) < 1e-9) u = cross(kXAxis, beta);
  u = normalized(u);
  const Vec3 v = cross(beta, u);
  double acc = 0.0;
  constexpr int kPoints = 32;
  for (int k = 0; k < kPoints; ++k) {
    const double t = 2.0 * kPi * k / kPoints;
    const Vec3 n = u * std::cos(t) + v * std::sin(t);
    acc += squared_norm(hadamard(e_diag, n));
  }
  return acc / kPoints;
}

using CheckFn = std::function<void(std::uint64_t seed, CheckResult&)>;

// ---------------------------------------------------------------------------
// 1. Closed-form averages vs independent quadrature of the defining integrand
// ---------------------------------------------------------------------------
void check_closed_forms(std::uint64_t, CheckResult& res) {
  const QuadratureSpec quad{};  // default orders
  double worst = 0.0;
  std::string worst_tag;
  auto track = [&](const char* tag, double kappa, double closed, double oracle) {
    const double d = std::abs(closed - oracle);
    if (d > worst) {
      worst = d;
      worst_tag = std::string(tag) + "@k=" + fmt(kappa);
    }
  };

  const Vec3 generic_dir = Vec3{1.0, -2.0, 2.0} / 3.0;
  const Vec3 m_axis = Vec3{2.0, 1.0, 2.0} / 3.0;

  for (double kappa : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    // Single-observable average: closed form vs sphere average over n.
    {
      const auto state = TwoQubitState::mmms(kappa, generic_dir);
      const Vec3 v = state.correlation().apply(m_axis);
      const double closed = avg_mi_single(state, Observable(m_axis));
      const double oracle =
          average_s2([&](const Vec3& n) { return binary_mmms_mi(dot(n, v)); }, quad);
      track("single", kappa, closed, oracle);
    }
    // Double-sphere averages for the two special families.
    {
      const auto classical = TwoQubitState::mmms(kappa, kZAxis);
      track("classical", kappa, avg_mi_classical(kappa),
            avg_mi_tensor_quadrature(classical, quad));
      const auto iso = TwoQubitState::mmms(kappa, kIsoVertex);
      track("isotropic", kappa, avg_mi_isotropic(kappa), avg_mi_tensor_quadrature(iso, quad));
    }
    // Protocol averages over the target sphere.
    {
      const Vec3 e_iso = kIsoVertex * kappa;
      track("f_iso", kappa, avg_f_isotropic(kappa),
            average_s2([&](const Vec3& n) { return 1.0 - std::log2(1.0 + norm(hadamard(e_iso, n))); },
                       quad));
      track("g_iso", kappa, avg_gain_isotropic(kappa),
            average_s2([&](const Vec3& n) { return binary_mmms_mi(norm(hadamard(e_iso, n))); },
                       quad));
      const Vec3 e_cl = kZAxis * kappa;
      track("f_classical", kappa, avg_f_classical(kappa),
            average_s2([&](const Vec3& n) { return 1.0 - std::log2(1.0 + norm(hadamard(e_cl, n))); },
                       quad));
      track("g_classical", kappa, avg_gain_classical(kappa),
            average_s2([&](const Vec3& n) { return binary_mmms_mi(norm(hadamard(e_cl, n))); },
                       quad));
    }
  }
  res.pass = worst < 1e-7;
  res.detail = "max |closed - quadrature| = " + fmt(worst) + " (" + worst_tag + "), bound 1e-7";
}

// ---------------------------------------------------------------------------
// 2. Upper bound of the single-observable average
// ---------------------------------------------------------------------------
void check_single_observable_bound(std::uint64_t, CheckResult& res) {
  const double at_one = mi_sphere_avg_radial(1.0);
  bool monotone = true;
  double prev = -1.0;
  for (int i = 0; i <= 20; ++i) {
    const double val = mi_sphere_avg_radial(i / 20.0);
    if (val <= prev) monotone = false;
    prev = val;
  }
  const double err = std::abs(at_one - 0.27865);
  res.pass = monotone && err < 1e-5;
  res.detail = "value at R=1: " + fmt(at_one) + ", |diff to 0.27865| = " + fmt(err) +
               (monotone ? ", monotone on grid" : ", NOT monotone");
}

// ---------------------------------------------------------------------------
// 3. Extremal directions of the double-sphere average at fixed kappa
// ---------------------------------------------------------------------------
void check_extremal_directions(std::uint64_t seed, CheckResult& res) {
  constexpr double kKappa = 0.8;
  const double lo = avg_mi_isotropic(kKappa);
  const double hi = avg_mi_classical(kKappa);
  const std::uint64_t stream = rng::substream(seed, 3);
  double min_slack = 1e300;
  int done = 0;
  std::uint64_t idx = 0;
  while (done < 500) {
    const Vec3 c_hat = rng::unit_vector(stream, idx++);
    if (!is_in_tetrahedron(c_hat * kKappa)) continue;
    const double val = avg_mi_general(TwoQubitState::mmms(kKappa, c_hat));
    min_slack = std::min({min_slack, val - lo, hi - val});
    ++done;
  }
  res.pass = min_slack > -1e-7;
  res.detail = "500 directions at kappa=0.8; min slack of lower/upper bound = " + fmt(min_slack) +
               ", bound -1e-7";
}

// ---------------------------------------------------------------------------
// 4. Coherence complementarity identity
// ---------------------------------------------------------------------------
void check_coherence_identity(std::uint64_t seed, CheckResult& res) {
  const std::uint64_t sc = rng::substream(seed, 40);
  const std::uint64_t sp = rng::substream(seed, 41);
  std::uint64_t attempt = 0;
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto state = random_mmms(sc, attempt);
    const ObservablePair pair{Observable(rng::unit_vector(sp, 2 * static_cast<std::uint64_t>(i))),
                              Observable(rng::unit_vector(sp, 2 * static_cast<std::uint64_t>(i) + 1))};
    const auto coh = coherence_of_basis(state, pair);
    const double rhs = 2.0 - mutual_information(state, pair) - coh.entropy;
    worst = std::max(worst, std::abs(coh.coherence - rhs));
  }
  res.pass = worst < 1e-10;
  res.detail = "1000 draws; max |Coh - (2 - I - S)| = " + fmt(worst) + ", bound 1e-10";
}

// ---------------------------------------------------------------------------
// 5. Gain equals the mutual information of the relevant pair
// ---------------------------------------------------------------------------
void check_gain_identity(std::uint64_t seed, CheckResult& res) {
  const std::uint64_t sc = rng::substream(seed, 50);
  const std::uint64_t sn = rng::substream(seed, 51);
  std::uint64_t attempt = 0;
  double worst = 0.0;
  int done = 0;
  std::uint64_t idx = 0;
  while (done < 1000) {
    const auto state = random_mmms(sc, attempt);
    const Vec3 n = rng::unit_vector(sn, idx++);
    if (norm(state.correlation().apply(n)) < 1e-6) continue;
    const auto task = task_for(n);
    const Observable m_opt = optimal_measurement(state, task.target());
    const auto outcome = post_measurement(state, m_opt, task);
    const double p_plus = std::clamp(0.5 * (1.0 + dot(n, outcome.r_final)), 0.0, 1.0);
    // Relative entropy of the protocol distribution against the coin flip,
    // straight from the probability table.
    double d_raw = 0.0;
    for (double p : {p_plus, 1.0 - p_plus})
      if (p > 0.0) d_raw += p * std::log2(2.0 * p);
    const double mi = mutual_information(state, ObservablePair{m_opt, task.target()});
    worst = std::max(worst, std::abs(d_raw - mi));
    ++done;
  }
  res.pass = worst < 1e-10;
  res.detail = "1000 tasks; max |D(p||uniform) - I| = " + fmt(worst) + ", bound 1e-10";
}

// ---------------------------------------------------------------------------
// 6. Orbit cardinalities
// ---------------------------------------------------------------------------
void check_orbit_cardinalities(std::uint64_t, CheckResult& res) {
  const double e = 0.4;
  const std::size_t n_iso = orbit(normalized({1, 1, 1})).size();
  const std::size_t n_eps = orbit({e, e, std::sqrt(1.0 - 2.0 * e * e)}).size();
  const std::size_t n_half = orbit({1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 0.0}).size();
  const std::size_t n_axis = orbit(kZAxis).size();
  res.pass = n_iso == 8 && n_eps == 24 && n_half == 12 && n_axis == 6;
  res.detail = "orbit sizes = " + std::to_string(n_iso) + "/" + std::to_string(n_eps) + "/" +
               std::to_string(n_half) + "/" + std::to_string(n_axis) + ", expected 8/24/12/6";
}

// ---------------------------------------------------------------------------
// 7. Dimension of the maximally correlated set
// ---------------------------------------------------------------------------
void check_omega_max_dims(std::uint64_t, CheckResult& res) {
  const int d_iso = omega_max_dim(TwoQubitState::mmms(1.0, kIsoVertex));
  const int d_eps =
      omega_max_dim(TwoQubitState::mmms(0.5, {1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 0.0}));
  const int d_axis = omega_max_dim(TwoQubitState::mmms(0.5, kZAxis));
  res.pass = d_iso == 2 && d_eps == 1 && d_axis == 0;
  res.detail = "dims = " + std::to_string(d_iso) + "/" + std::to_string(d_eps) + "/" +
               std::to_string(d_axis) + ", expected 2/1/0";
}

// ---------------------------------------------------------------------------
// 8. Optimality of the aligned measurement under grid search
// ---------------------------------------------------------------------------
void check_optimal_measurement(std::uint64_t seed, CheckResult& res) {
  const auto grid = fibonacci_sphere(10000);
  const std::uint64_t sc = rng::substream(seed, 80);
  const std::uint64_t sn = rng::substream(seed, 81);
  std::uint64_t attempt = 0;
  double worst_margin = 1e300;
  int done = 0;
  std::uint64_t idx = 0;
  while (done < 200) {
    const auto state = random_mmms(sc, attempt);
    const Vec3 n = rng::unit_vector(sn, idx++);
    const Vec3 en = state.correlation().apply(n);
    if (norm(en) < 1e-9) continue;
    const double f_opt = 1.0 - std::log1p(norm(en)) / std::log(2.0);
    double best_grid = 1e300;
    for (const Vec3& m : grid) {
      const double x = dot(en, m);
      const double f = 1.0 - std::log1p(std::max(x, -1.0 + 1e-15)) / std::log(2.0);
      best_grid = std::min(best_grid, f);
    }
    worst_margin = std::min(worst_margin, best_grid - f_opt);
    ++done;
  }
  res.pass = worst_margin > -1e-9;
  res.detail = "200 tasks x 10^4 grid; min (grid F - aligned F) = " + fmt(worst_margin) +
               ", bound -1e-9";
}

// ---------------------------------------------------------------------------
// 9. Sign test on conditional outputs vs the |nE| > |n.b| criterion
// ---------------------------------------------------------------------------
void check_sign_test(std::uint64_t seed, CheckResult& res) {
  const std::uint64_t sc = rng::substream(seed, 90);
  const std::uint64_t sab = rng::substream(seed, 91);
  const std::uint64_t sn = rng::substream(seed, 92);
  std::uint64_t attempt = 0;
  int mismatches = 0, done = 0;
  std::uint64_t idx = 0;
  while (done < 10000) {
    const auto state = random_non_mmms(sc, sab, attempt);
    const Vec3 n = rng::unit_vector(sn, idx++);
    const double x = norm(state.correlation().apply(n));
    const double b = std::abs(dot(n, state.b()));
    if (std::abs(x - b) <= 1e-10) continue;  // boundary band excluded
    const bool by_sign = usefulness_condition_check(state, task_for(n));
    if (by_sign != (x > b)) ++mismatches;
    ++done;
  }
  res.pass = mismatches == 0;
  res.detail = "10^4 draws outside the boundary band; mismatches = " + std::to_string(mismatches);
}

// ---------------------------------------------------------------------------
// 10. Relative class gaps of the target averages
// ---------------------------------------------------------------------------
void check_class_gaps(std::uint64_t, CheckResult& res) {
  double max_dg = 0.0, max_df = 0.0;
  for (int i = 1; i <= 39; ++i) {
    const double k = 0.025 * i;
    max_dg = std::max(max_dg,
                      (avg_gain_classical(k) - avg_gain_isotropic(k)) / avg_gain_isotropic(k));
    max_df = std::max(max_df, (avg_f_classical(k) - avg_f_isotropic(k)) / avg_f_isotropic(k));
  }
  res.pass = max_dg >= 0.07 && max_dg <= 0.09 && max_df >= 0.22 && max_df <= 0.28;
  res.detail = "max delta_gain = " + fmt(max_dg) + " (band [0.07, 0.09]), max delta_F = " +
               fmt(max_df) + " (band [0.22, 0.28])";
}

// ---------------------------------------------------------------------------
// 11. Region where the optimized protocol coincides with the standard one
// ---------------------------------------------------------------------------
void check_protocol_switch_region(std::uint64_t, CheckResult& res) {
  constexpr int kN = 20;
  double worst_zero = 0.0, best_positive = 0.0;
  int physical_cells = 0, complement_cells = 0;
  for (int i = 0; i < kN; ++i) {
    const double kappa = (i + 0.5) * kSqrt3 / kN;
    for (int j = 0; j < kN; ++j) {
      const double b = (j + 0.5) / kN;
      const auto state = TwoQubitState::isotropic_with_b(kappa, b, /*force=*/true);
      if (!state.is_physical()) continue;
      ++physical_cells;
      const auto avg = average_over_relevant(state);
      const double delta = avg.f_u - avg.f_opt;
      if (kappa / kSqrt3 > b) {
        worst_zero = std::max(worst_zero, std::abs(delta));
      } else {
        ++complement_cells;
        best_positive = std::max(best_positive, delta);
      }
    }
  }
  res.pass = worst_zero < 1e-8 && complement_cells > 0 && best_positive > 1e-8;
  res.detail = "physical cells: " + std::to_string(physical_cells) +
               "; max |delta F| where kappa/sqrt3 > b: " + fmt(worst_zero) +
               " (bound 1e-8); max delta F elsewhere: " + fmt(best_positive) + " (> 0 required)";
}

// ---------------------------------------------------------------------------
// 12. Pure states: usefulness of every relevant observable, Bell extremes
// ---------------------------------------------------------------------------
void check_pure_states(std::uint64_t seed, CheckResult& res) {
  const std::uint64_t sn = rng::substream(seed, 120);
  bool all_useful = true;
  std::uint64_t idx = 0;
  for (double lambda : {0.55, 0.7, 0.9}) {
    const auto state = TwoQubitState::pure_schmidt(lambda);
    for (int i = 0; i < 1000; ++i) {
      const Vec3 n = rng::unit_vector(sn, idx++);
      if (!evaluate(state, task_for(n)).useful) all_useful = false;
    }
  }
  const auto bell = average_over_relevant(TwoQubitState::pure_schmidt(1.0 / std::sqrt(2.0)));
  const bool bell_ok = std::abs(bell.f_u) <= 1e-9 && std::abs(bell.gain - 1.0) <= 1e-9;
  res.pass = all_useful && bell_ok;
  res.detail = std::string("usefulness on 3x1000 targets: ") +
               (all_useful ? "all useful" : "FOUND NON-USEFUL") +
               "; Bell averages F = " + fmt(bell.f_u) + ", gain = " + fmt(bell.gain) +
               " (bounds 1e-9)";
}

// ---------------------------------------------------------------------------
// 13. Closed-form minimum of the axis-averaged payoff
// ---------------------------------------------------------------------------
void check_beta_payoff_minimum(std::uint64_t seed, CheckResult& res) {
  auto candidates = fibonacci_sphere(10000);
  candidates.push_back(kXAxis);
  candidates.push_back(kYAxis);
  candidates.push_back(kZAxis);
  const std::uint64_t sc = rng::substream(seed, 130);
  std::uint64_t attempt = 0;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto state = random_mmms(sc, attempt);
    const double closed = min_beta_avg_payoff(state);
    double grid_min = 1e300;
    for (const Vec3& beta : candidates)
      grid_min = std::min(grid_min, circle_avg_payoff(state.correlation().diag(), beta));
    worst = std::max(worst, std::abs(closed - grid_min));
  }
  res.pass = worst < 1e-6;
  res.detail = "100 states; max |closed - grid minimum| = " + fmt(worst) + ", bound 1e-6";
}

// ---------------------------------------------------------------------------
// 14. Stochastic trials against the analytic output state
// ---------------------------------------------------------------------------
void check_trial_frequencies(std::uint64_t seed, CheckResult& res) {
  const std::uint64_t sc = rng::substream(seed, 140);
  const std::uint64_t sab = rng::substream(seed, 141);
  const std::uint64_t sn = rng::substream(seed, 142);
  std::uint64_t attempt = 0;
  int ok = 0;
  constexpr int kConfigs = 20;
  for (int i = 0; i < kConfigs; ++i) {
    const auto state = (i % 2 == 0) ? random_mmms(sc, attempt)
                                    : random_non_mmms(sc, sab, attempt);
    const Vec3 n = rng::unit_vector(sn, static_cast<std::uint64_t>(i));
    const auto stats =
        simulate_trials(state, task_for(n), 100000, seed + static_cast<std::uint64_t>(i));
    const double dev = std::abs(stats.freq_plus - stats.expected_freq_plus);
    if (dev <= 3.0 * stats.std_err || (stats.std_err == 0.0 && dev == 0.0)) ++ok;
  }
  res.pass = ok >= 19;
  res.detail = std::to_string(ok) + "/20 configurations within 3 binomial standard errors";
}

// ---------------------------------------------------------------------------
// 15. Aligned classical-state protocol reaches perfect figure of merit
// ---------------------------------------------------------------------------
void check_aligned_classical(std::uint64_t seed, CheckResult& res) {
  const std::uint64_t sn = rng::substream(seed, 150);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Vec3 n = rng::unit_vector(sn, static_cast<std::uint64_t>(i));
    worst = std::max(worst, std::abs(adapted_classical_rsp(task_for(n))));
  }
  res.pass = worst < 1e-10;
  res.detail = "100 tasks; max |F| = " + fmt(worst) + ", bound 1e-10";
}

// ---------------------------------------------------------------------------
// 16. Small-b limit of the polarized isotropic gain
// ---------------------------------------------------------------------------
void check_small_b_gain_limit(std::uint64_t, CheckResult& res) {
  double worst = 0.0;
  for (double kappa : {0.3, 0.6, 0.9})
    worst = std::max(worst, std::abs(avg_gain_isotropic_nonmmms(kappa, 1e-8) -
                                     avg_gain_isotropic(kappa)));
  res.pass = worst < 1e-6;
  res.detail = "max |gain(b=1e-8) - gain(b=0)| = " + fmt(worst) + ", bound 1e-6";
}

struct Check {
  const char* name;
  Suite suite;  // smallest suite containing the check (All = only in All)
  CheckFn fn;
  double time_budget;  // seconds, 0 = untimed
};

const std::vector<Check>& checks() {
  static const std::vector<Check> list = {
      {"closed-form averages vs quadrature", Suite::ClosedForms, check_closed_forms, 30.0},
      {"single-observable average bound", Suite::ClosedForms, check_single_observable_bound, 0.0},
      {"extremal directions of the average", Suite::Props, check_extremal_directions, 300.0},
      {"coherence complementarity identity", Suite::Props, check_coherence_identity, 0.0},
      {"gain equals relevant mutual information", Suite::Props, check_gain_identity, 0.0},
      {"orbit cardinalities", Suite::All, check_orbit_cardinalities, 0.0},
      {"maximally correlated set dimensions", Suite::All, check_omega_max_dims, 0.0},
      {"aligned measurement beats grid search", Suite::Props, check_optimal_measurement, 0.0},
      {"sign test matches usefulness criterion", Suite::Props, check_sign_test, 0.0},
      {"class gaps of target averages", Suite::ClosedForms, check_class_gaps, 0.0},
      {"optimized-protocol switch region", Suite::Props, check_protocol_switch_region, 0.0},
      {"pure-state usefulness and Bell extremes", Suite::Props, check_pure_states, 0.0},
      {"axis-averaged payoff minimum", Suite::Props, check_beta_payoff_minimum, 0.0},
      {"trial frequencies vs analytic output", Suite::All, check_trial_frequencies, 0.0},
      {"aligned classical protocol", Suite::Props, check_aligned_classical, 0.0},
      {"small-b limit of the polarized gain", Suite::ClosedForms, check_small_b_gain_limit, 0.0},
  };
  return list;
}

}  // namespace

std::vector<CheckResult> run_acceptance(Suite suite, std::uint64_t seed) {
  std::vector<CheckResult> out;
  for (const auto& check : checks()) {
    if (suite != Suite::All && check.suite != suite) continue;
    CheckResult res;
    res.name = check.name;
    const auto start = std::chrono::steady_clock::now();
    try {
      check.fn(seed, res);
    } catch (const std::exception& ex) {
      res.pass = false;
      res.detail = std::string("exception: ") + ex.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (check.time_budget > 0.0 && res.seconds >= check.time_budget) {
      res.pass = false;
      res.detail += "; runtime " + fmt(res.seconds) + " s exceeded budget " +
                    fmt(check.time_budget) + " s";
    }
    out.push_back(std::move(res));
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace qcorr::accept
