#include "qcorr/bloch.hpp"

#include <algorithm>
#include <cmath>

#include "qcorr/density_matrix.hpp"

namespace qcorr {

namespace {

constexpr double kLn2 = 0.6931471805599453;

double clamp01(double p) { return std::clamp(p, 0.0, 1.0); }

double entropy_term(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

}  // namespace

Observable::Observable(const Vec3& axis) {
  const double n = norm(axis);
  if (n < 1e-9) throw InvalidInput("Observable: axis must be a unit vector");
  axis_ = axis / n;
}

CorrelationMatrix CorrelationMatrix::from_axis(double kappa, const Vec3& c_hat) {
  if (kappa < 0.0) throw InvalidInput("CorrelationMatrix: kappa must be >= 0");
  if (kappa == 0.0) return CorrelationMatrix{};
  const double n = norm(c_hat);
  if (n < 1e-12) throw InvalidInput("CorrelationMatrix: zero direction with kappa > 0");
  return CorrelationMatrix(c_hat * (kappa / n));
}

Vec3 CorrelationMatrix::direction() const {
  const double k = kappa();
  if (k < 1e-15) return kZAxis;
  return diag_ / k;
}

double JointDistribution::joint_entropy() const {
  return entropy_term(p[0][0]) + entropy_term(p[0][1]) + entropy_term(p[1][0]) +
         entropy_term(p[1][1]);
}

double JointDistribution::entropy_a() const { return entropy_term(pa[0]) + entropy_term(pa[1]); }

double JointDistribution::entropy_b() const { return entropy_term(pb[0]) + entropy_term(pb[1]); }

bool is_in_tetrahedron(const Vec3& c, double tol) {
  // Faces 1 + sum_i eps_i c_i >= 0 over the sign patterns with product -1;
  // these are the four eigenvalues of the marginal-free state, times 4.
  return 1.0 - c[0] - c[1] - c[2] >= -tol && 1.0 - c[0] + c[1] + c[2] >= -tol &&
         1.0 + c[0] - c[1] + c[2] >= -tol && 1.0 + c[0] + c[1] - c[2] >= -tol;
}

TwoQubitState TwoQubitState::mmms(double kappa, const Vec3& c_hat, bool force) {
  const CorrelationMatrix e = CorrelationMatrix::from_axis(kappa, c_hat);
  const bool physical = is_in_tetrahedron(e.diag());
  if (!physical && !force)
    throw NonPhysical("mmms: correlation vector outside the admissible tetrahedron");
  return TwoQubitState({0, 0, 0}, {0, 0, 0}, e, physical);
}

TwoQubitState TwoQubitState::general(const Vec3& a, const Vec3& b, const Vec3& e_diag,
                                     bool force) {
  if (norm(a) > 1.0 + 1e-9 || norm(b) > 1.0 + 1e-9)
    throw InvalidInput("general: marginal Bloch vectors must have norm <= 1");
  const bool physical = min_density_eigenvalue(a, b, e_diag) >= -kPositivityTol;
  if (!physical && !force)
    throw NonPhysical("general: reconstructed density operator has a negative eigenvalue");
  return TwoQubitState(a, b, CorrelationMatrix(e_diag), physical);
}

TwoQubitState TwoQubitState::pure_schmidt(double lambda) {
  if (lambda < 0.0 || lambda > 1.0) throw InvalidInput("pure_schmidt: lambda must be in [0, 1]");
  const double mu = std::sqrt(1.0 - lambda * lambda);
  const double t = 2.0 * lambda * mu;
  const Vec3 ab{0.0, 0.0, 2.0 * lambda * lambda - 1.0};
  return TwoQubitState(ab, ab, CorrelationMatrix({t, -t, 1.0}), true);
}

TwoQubitState TwoQubitState::isotropic_with_b(double kappa, double b, bool force) {
  if (kappa < 0.0 || b < 0.0) throw InvalidInput("isotropic_with_b: parameters must be >= 0");
  const double e = kappa / std::sqrt(3.0);
  return general({0, 0, 0}, {0, 0, b}, {-e, -e, -e}, force);
}

bool TwoQubitState::is_mmms() const { return norm(a_) < 1e-12 && norm(b_) < 1e-12; }

TwoQubitState TwoQubitState::stripped() const {
  const bool physical = is_in_tetrahedron(e_.diag());
  return TwoQubitState({0, 0, 0}, {0, 0, 0}, e_, physical);
}

JointDistribution joint_distribution(const TwoQubitState& state, const ObservablePair& pair) {
  detail::require_physical(state);
  const Vec3& n = pair.n.axis();
  const Vec3& m = pair.m.axis();
  const double na = dot(n, state.a());
  const double mb = dot(m, state.b());
  const double x = dot(n, state.correlation().apply(m));

  JointDistribution jd;
  jd.x = x;
  for (int i = 0; i < 2; ++i) {
    const double si = i == 0 ? 1.0 : -1.0;
    jd.pa[i] = clamp01(0.5 * (1.0 + si * na));
    jd.pb[i] = clamp01(0.5 * (1.0 + si * mb));
    for (int j = 0; j < 2; ++j) {
      const double sj = j == 0 ? 1.0 : -1.0;
      jd.p[i][j] = clamp01(0.25 * (1.0 + si * na + sj * mb + si * sj * x));
    }
  }
  return jd;
}

double purity(const TwoQubitState& state) { return purity_of(density_matrix(state)); }

namespace detail {

void require_physical(const TwoQubitState& state) {
  if (!state.is_physical()) throw NonPhysical("operation requires a physical state");
}

}  // namespace detail

}  // namespace qcorr
