#include "qcorr/rsp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qcorr/density_matrix.hpp"
#include "qcorr/mutual_info.hpp"

namespace qcorr {

namespace {

constexpr double kLn2 = 0.6931471805599453;
constexpr double kSqrt3 = 1.7320508075688772;
constexpr double kOrthoTol = 1e-10;
constexpr double kZeroCorrTol = 1e-12;

double log2_1p(double v) { return std::log1p(v) / kLn2; }

struct TargetFigures {
  double x = 0.0;       // |nE|
  double b_proj = 0.0;  // |n.b|
  double f_u = 1.0;
  double f_un = 1.0;
  bool useful = false;
};

TargetFigures target_figures(const TwoQubitState& state, const Vec3& n) {
  TargetFigures t;
  t.x = norm(state.correlation().apply(n));
  t.b_proj = std::abs(dot(n, state.b()));
  t.f_u = 1.0 - log2_1p(t.x);
  t.f_un = 1.0 - log2_1p(t.b_proj);
  t.useful = t.x >= t.b_proj;  // the boundary counts as useful
  return t;
}

}  // namespace

RspTask::RspTask(const Observable& target, const Observable& axis)
    : target_(target), axis_(axis) {
  if (std::abs(dot(target.axis(), axis.axis())) > kOrthoTol)
    throw InvalidInput("RspTask: target must be orthogonal to the rotation axis");
}

Observable default_beta_for(const Vec3& target) {
  Vec3 beta = cross(kZAxis, target);
  if (norm(beta) < 1e-9) beta = cross(kXAxis, target);
  return Observable(beta);
}

RspOutcome post_measurement(const TwoQubitState& state, const Observable& m,
                            const RspTask& task) {
  detail::require_physical(state);
  const Vec3& beta = task.axis().axis();
  const Vec3 me = state.correlation().apply(m.axis());
  const double ma = dot(m.axis(), state.a());

  RspOutcome out;
  for (int i = 0; i < 2; ++i) {
    const double si = i == 0 ? 1.0 : -1.0;
    out.p[i] = 0.5 * (1.0 + si * ma);
    out.defined[i] = out.p[i] > 1e-15;
    if (out.defined[i])
      out.r[i] = (state.b() + me * si) / (2.0 * out.p[i]);
    else
      out.degenerate = true;
  }
  // p+ r+ + p- R_pi(beta) r- collapses to this closed form.
  out.r_final = me + beta * dot(state.b() - me, beta);
  return out;
}

Observable optimal_measurement(const TwoQubitState& state, const Observable& target) {
  const Vec3 ne = state.correlation().apply(target.axis());
  if (norm(ne) <= kZeroCorrTol)
    throw ZeroCorrelation("optimal_measurement: correlations vanish along the target");
  return Observable(ne);
}

double figure_of_merit(const TwoQubitState& state, const ObservablePair& pair) {
  detail::require_physical(state);
  const double x = dot(pair.n.axis(), state.correlation().apply(pair.m.axis()));
  if (x <= -1.0 + 1e-15) return std::numeric_limits<double>::infinity();
  return 1.0 - log2_1p(x);
}

double rsp_gain(double x_corr, double b_proj) {
  if (b_proj <= 0.0) return binary_mmms_mi(x_corr);
  return binary_mmms_mi(x_corr) - 0.5 * ((1.0 + x_corr) * log2_1p(b_proj) +
                                         (1.0 - x_corr) * log2_1p(-b_proj));
}

RspEvaluation evaluate(const TwoQubitState& state, const RspTask& task) {
  detail::require_physical(state);
  const Vec3& n = task.target().axis();
  const TargetFigures t = target_figures(state, n);

  RspEvaluation out{Observable(n)};
  out.zero_correlation = t.x <= kZeroCorrTol;
  if (!out.zero_correlation) out.m_opt = Observable(state.correlation().apply(n));
  out.f_u = t.f_u;
  out.f_un = t.f_un;
  out.f_opt = std::min(t.f_u, t.f_un);
  out.useful = t.useful;
  out.stripped_nonphysical = !is_in_tetrahedron(state.correlation().diag());
  if (t.useful) {
    out.gain = rsp_gain(t.x, t.b_proj);
    out.negative_gain = out.gain < 0.0;
  }
  return out;
}

bool usefulness_condition_check(const TwoQubitState& state, const RspTask& task) {
  detail::require_physical(state);
  const Vec3& n = task.target().axis();
  Observable m = task.target();
  try {
    m = optimal_measurement(state, task.target());
  } catch (const ZeroCorrelation&) {
    // Any measurement axis works: nE = 0 makes the conditional outputs
    // project onto n with equal signs unless n.b = 0 too.
  }
  const RspOutcome o = post_measurement(state, m, task);
  if (o.degenerate) return target_figures(state, n).useful;
  const double prod = dot(n, o.r[0]) * dot(n, o.r[1]);
  return prod <= kOrthoTol;
}

RspAverages average_over_relevant(const TwoQubitState& state, const QuadratureSpec& quad,
                                  const BetaPolicy& beta_policy) {
  detail::require_physical(state);
  const BetaPolicy policy =
      beta_policy ? beta_policy : [](const Vec3& n) { return default_beta_for(n).axis(); };

  const SphereGrid grid(quad);
  RspAverages avg{0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Vec3& n = grid.nodes()[i];
    const double w = grid.weights()[i];
    const TargetFigures t = target_figures(state, n);

    // The averaged quantities depend on the target only through |nE| and
    // |n.b|; check that against the actual protocol output for this target.
    if (t.x > kZeroCorrTol) {
      const RspTask task{Observable(n), Observable(policy(n))};
      const RspOutcome o =
          post_measurement(state, Observable(state.correlation().apply(n)), task);
      if (std::abs(dot(n, o.r_final) - t.x) > 1e-9)
        throw std::logic_error("average_over_relevant: protocol output disagrees with |nE|");
    }

    avg.f_u += w * t.f_u;
    avg.f_opt += w * std::min(t.f_u, t.f_un);
    if (t.useful) avg.gain += w * rsp_gain(t.x, t.b_proj);
  }
  return avg;
}

double avg_f_isotropic(double kappa) {
  if (kappa < 0.0 || kappa > kSqrt3 + 1e-12)
    throw DomainError("avg_f_isotropic: kappa must be in [0, sqrt(3)]");
  return 1.0 - log2_1p(kappa / kSqrt3);
}

double avg_gain_isotropic(double kappa) {
  if (kappa < 0.0 || kappa > kSqrt3 + 1e-12)
    throw DomainError("avg_gain_isotropic: kappa must be in [0, sqrt(3)]");
  return binary_mmms_mi(kappa / kSqrt3);
}

double avg_f_classical(double kappa) {
  if (kappa < 0.0 || kappa > 1.0 + 1e-12)
    throw DomainError("avg_f_classical: kappa must be in [0, 1]");
  if (kappa < 1e-6) return 1.0 - (0.5 * kappa - kappa * kappa / 6.0) / kLn2;
  return 1.0 - ((1.0 + kappa) * std::log1p(kappa) - kappa) / (kappa * kLn2);
}

double avg_gain_classical(double kappa) {
  if (kappa < 0.0 || kappa > 1.0 + 1e-12)
    throw DomainError("avg_gain_classical: kappa must be in [0, 1]");
  // [(1+k)^2 ln(1+k) - (1-k)^2 ln(1-k) - 2k] / (4k ln2): the radial average
  // profile at R = kappa^2.
  return mi_sphere_avg_radial(std::min(1.0, kappa * kappa));
}

double avg_gain_isotropic_nonmmms(double kappa, double b) {
  if (kappa < 0.0 || b < 0.0)
    throw DomainError("avg_gain_isotropic_nonmmms: parameters must be >= 0");
  const double x = kappa / kSqrt3;
  if (x <= b)
    throw DomainError(
        "avg_gain_isotropic_nonmmms: needs kappa/sqrt(3) > b; use average_over_relevant for "
        "the restricted domain");
  if (b < 1e-8) return avg_gain_isotropic(kappa);
  const double f_plus = (1.0 + b) * (3.0 + kappa * kSqrt3) * std::log1p(b);
  const double f_minus = (1.0 - b) * (3.0 - kappa * kSqrt3) * std::log1p(-b);
  return avg_gain_isotropic(kappa) + (1.0 - (f_plus - f_minus) / (6.0 * b)) / kLn2;
}

double min_beta_avg_payoff(const TwoQubitState& state) {
  detail::require_physical(state);
  if (!state.is_mmms())
    throw InvalidInput("min_beta_avg_payoff: state must have maximally mixed marginals");
  const Vec3 e = state.correlation().diag();
  std::array<double, 3> sq{e[0] * e[0], e[1] * e[1], e[2] * e[2]};
  std::sort(sq.begin(), sq.end());
  return 0.5 * (sq[0] + sq[1]);
}

TrialStats simulate_trials(const TwoQubitState& state, const RspTask& task,
                           std::int64_t n_trials, std::uint64_t seed) {
  detail::require_physical(state);
  if (n_trials < 1) throw InvalidInput("simulate_trials: n_trials must be >= 1");

  Observable m = task.target();
  try {
    m = optimal_measurement(state, task.target());
  } catch (const ZeroCorrelation&) {
    // No preferred axis; the outcome statistics do not depend on it.
  }
  const RspOutcome o = post_measurement(state, m, task);
  const Vec3& n = task.target().axis();
  const Vec3& beta = task.axis().axis();

  std::array<double, 2> p_plus_given{0.5, 0.5};
  for (int i = 0; i < 2; ++i) {
    if (!o.defined[i]) continue;
    const Vec3 v = i == 0 ? o.r[0] : pi_rotation(o.r[1], beta);
    p_plus_given[i] = std::clamp(0.5 * (1.0 + dot(n, v)), 0.0, 1.0);
  }

  const std::uint64_t stream = rng::substream(seed, 0x747269616c73ULL);
  std::int64_t plus = 0;
  for (std::int64_t t = 0; t < n_trials; ++t) {
    const auto ctr = static_cast<std::uint64_t>(2 * t);
    const int i = rng::uniform01(stream, ctr) < o.p[0] ? 0 : 1;
    if (rng::uniform01(stream, ctr + 1) < p_plus_given[i]) ++plus;
  }

  TrialStats stats;
  stats.n_trials = n_trials;
  stats.n_plus = plus;
  stats.freq_plus = static_cast<double>(plus) / static_cast<double>(n_trials);
  stats.expected_freq_plus = std::clamp(0.5 * (1.0 + dot(n, o.r_final)), 0.0, 1.0);
  stats.std_err = std::sqrt(stats.expected_freq_plus * (1.0 - stats.expected_freq_plus) /
                            static_cast<double>(n_trials));
  return stats;
}

double adapted_classical_rsp(const RspTask& task) {
  const Vec3& n = task.target().axis();
  const Vec3& beta = task.axis().axis();
  const Mat4c rho = aligned_classical_state(n);

  // Matrix-level protocol run: measure z on A, conditionally rotate B.
  Vec3 r_final{0, 0, 0};
  for (int sign : {1, -1}) {
    double p = 0.0;
    Vec3 r = conditional_bloch_oracle(rho, kZAxis, sign, p);
    if (sign < 0) r = pi_rotation(r, beta);
    r_final = r_final + r * p;
  }
  return 1.0 - log2_1p(dot(n, r_final));
}

}  // namespace qcorr
