#pragma once

#include <cstdint>
#include <functional>

#include "qcorr/bloch.hpp"
#include "qcorr/sphere_avg.hpp"

namespace qcorr {

/// Preparation task: target state +n on side B, rotation axis beta with
/// n . beta = 0 (within 1e-10).
class RspTask {
 public:
  RspTask(const Observable& target, const Observable& axis);

  const Observable& target() const { return target_; }
  const Observable& axis() const { return axis_; }

 private:
  Observable target_;
  Observable axis_;
};

/// Deterministic choice of a rotation axis orthogonal to the target:
/// normalize(z x n), falling back to normalize(x x n) when n is parallel
/// to z.
Observable default_beta_for(const Vec3& target);

using BetaPolicy = std::function<Vec3(const Vec3&)>;

/// Conditional states of side B after A measures along m, before and after
/// the conditional pi rotation about the task axis.
struct RspOutcome {
  std::array<double, 2> p{};        // outcome probabilities, index 0 = +
  std::array<Vec3, 2> r{};          // conditional Bloch vectors (unrotated)
  std::array<bool, 2> defined{};    // false for a zero-probability branch
  Vec3 r_final;                     // after conditional rotation and mixing
  bool degenerate = false;          // some branch had zero probability
};

RspOutcome post_measurement(const TwoQubitState& state, const Observable& m, const RspTask& task);

/// m = nE / |nE|. Throws ZeroCorrelation when |nE| <= 1e-12; the caller
/// falls back to the no-correlation branch with figure of merit 1.
Observable optimal_measurement(const TwoQubitState& state, const Observable& target);

/// Relative entropy between the ideal +/-n distribution and the protocol
/// output: 1 - log2(1 + nEm^T). Returns +infinity once the correlation
/// scalar reaches -1 (within 1e-15).
double figure_of_merit(const TwoQubitState& state, const ObservablePair& pair);

/// Relative entropy between the optimal-protocol distribution
/// (1 +/- X)/2 and the polarization-only distribution (1 +/- B)/2:
///   I(X) - (1+X)/2 log2(1+B) - (1-X)/2 log2(1-B).
/// With B = 0 this is the correlations-vs-nothing gain I(X).
double rsp_gain(double x_corr, double b_proj);

struct RspEvaluation {
  Observable m_opt;          // measurement used by the correlation branch
  double f_u = 1.0;          // figure of merit using correlations
  double f_un = 1.0;         // figure of merit using polarization only
  double f_opt = 1.0;        // min of the two, branch chosen per target
  double gain = 0.0;         // 0 for non-useful targets
  bool useful = false;       // |nE| >= |n.b| (the boundary counts as useful)
  bool zero_correlation = false;
  bool negative_gain = false;       // reported as computed, flagged
  bool stripped_nonphysical = false;  // runtime recheck of diag(E)
};

/// Full per-target record. The gain evaluates the correlations of the
/// stripped state (a = b = 0), whose admissibility is rechecked at runtime.
RspEvaluation evaluate(const TwoQubitState& state, const RspTask& task);

/// Sign test (n . r_+)(n . r_-) <= 0 on the conditional outputs with the
/// optimal measurement; equivalent to |nE| >= |n . b| up to a 1e-10 band.
bool usefulness_condition_check(const TwoQubitState& state, const RspTask& task);

struct RspAverages {
  double f_u = 1.0;    // always-use-correlations protocol
  double f_opt = 1.0;  // per-target best branch
  double gain = 0.0;   // gain restricted to useful targets
};

/// Sphere averages over the target n of f_u, f_opt and gain * chi_useful.
/// All three depend only on |nE| and |n.b|; this is asserted against the
/// explicit post-measurement output under the beta policy.
RspAverages average_over_relevant(const TwoQubitState& state, const QuadratureSpec& quad = {},
                                  const BetaPolicy& beta_policy = nullptr);

/// Closed-form target averages for the isotropic family (kappa in [0, sqrt3])
/// and the single-axis family (kappa in [0, 1]).
double avg_f_isotropic(double kappa);     // 1 - log2(1 + kappa/sqrt3)
double avg_gain_isotropic(double kappa);  // I at x = kappa/sqrt3
double avg_f_classical(double kappa);     // 1 - ((1+k)ln(1+k) - k)/(k ln2)
double avg_gain_classical(double kappa);  // radial profile at R = kappa^2

/// Average useful gain for isotropic correlations with marginal polarization
/// b when every target is useful (kappa/sqrt3 > b):
///   avg_gain_isotropic(kappa) + (1 - (f(1) - f(-1))/(6b)) / ln2,
///   f(s) = (1 + s b)(3 + s kappa sqrt3) ln(1 + s b).
/// Throws DomainError when kappa/sqrt3 <= b (restricted-domain case; use
/// average_over_relevant instead).
double avg_gain_isotropic_nonmmms(double kappa, double b);

/// min over beta of the circle average of |En|^2 over targets orthogonal to
/// beta: (sum of the two smallest squared singular values of E)/2.
double min_beta_avg_payoff(const TwoQubitState& state);

struct TrialStats {
  std::int64_t n_trials = 0;
  std::int64_t n_plus = 0;
  double freq_plus = 0.0;
  double expected_freq_plus = 0.0;  // (1 + n . r_final)/2
  double std_err = 0.0;             // binomial, from the expected frequency
};

/// Stochastic run of the protocol with the optimal measurement: sample A's
/// outcome, apply B's conditional rotation, sample B's +/-n measurement.
/// Deterministic for a fixed seed (counter-based stream).
TrialStats simulate_trials(const TwoQubitState& state, const RspTask& task,
                           std::int64_t n_trials, std::uint64_t seed);

/// Protocol variant for the maximally correlated two-outcome classical state
/// whose correlation axis is aligned with the target before the channel is
/// set up: A measures z, B applies the conditional rotation. Returns the
/// figure of merit of the produced state, which is 0 for every task.
double adapted_classical_rsp(const RspTask& task);

}  // namespace qcorr
