#include "qcorr/mutual_info.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qcorr {

namespace {

constexpr double kLn2 = 0.6931471805599453;
constexpr double kLn4 = 2.0 * kLn2;
constexpr double kSqrt3 = 1.7320508075688772;
constexpr double kPiSqHalf = 4.9348022005446793;  // Lerch value at z = 1 is pi^2/2 - 4

void require_mmms(const TwoQubitState& state, const char* what) {
  detail::require_physical(state);
  if (!state.is_mmms()) throw InvalidInput(std::string(what) + ": state must have a = b = 0");
}

}  // namespace

double binary_mmms_mi(double x) {
  const double ax = std::abs(x);
  if (ax >= 1.0 - kCorrelationClampTol) return 1.0;
  return 0.5 * ((1.0 + x) * std::log1p(x) + (1.0 - x) * std::log1p(-x)) / kLn2;
}

double mutual_information(const TwoQubitState& state, const ObservablePair& pair) {
  const JointDistribution jd = joint_distribution(state, pair);
  double mi = jd.entropy_a() + jd.entropy_b() - jd.joint_entropy();
  if (mi < 0.0 && mi > -1e-12) mi = 0.0;
  return mi;
}

double mi_sphere_avg_radial(double R) {
  if (R < 0.0) {
    if (R < -1e-12) throw DomainError("mi_sphere_avg_radial: R must be in [0, 1]");
    R = 0.0;
  }
  if (R >= 1.0 - 1e-12) {
    if (R > 1.0 + 1e-12) throw DomainError("mi_sphere_avg_radial: R must be in [0, 1]");
    return kMiSphereAvgMax;
  }
  if (R < 1e-4) {
    // sum_h R^h / (h (2h-1)(2h+1) ln4)
    double sum = 0.0, rp = R;
    for (int h = 1; h < 12; ++h) {
      const double term = rp / (h * (2.0 * h - 1.0) * (2.0 * h + 1.0));
      sum += term;
      if (term < 1e-20 * sum) break;
      rp *= R;
    }
    return sum / kLn4;
  }
  // Cancellation-free regrouping of
  //   (1+R) atanh(sqrt R) - sqrt(R) (1 - ln(1-R)).
  const double s = std::sqrt(R);
  const double num = 0.5 * ((1.0 + s) * (1.0 + s) * std::log1p(s) -
                            (1.0 - s) * (1.0 - s) * std::log1p(-s)) -
                     s;
  return num / (s * kLn4);
}

double avg_mi_single(const TwoQubitState& state, const Observable& m) {
  require_mmms(state, "avg_mi_single");
  const Vec3 v = state.correlation().apply(m.axis());
  double R = squared_norm(v);
  if (R > 1.0 && R < 1.0 + 1e-12) R = 1.0;
  return mi_sphere_avg_radial(R);
}

double lerch_phi_2_3half(double z) {
  if (z < 0.0 || z >= 1.0) throw DomainError("lerch_phi_2_3half: z must be in [0, 1)");
  constexpr long kCap = 1000000;
  constexpr long kSnapshotStride = 1000;
  double sum = 0.0, zp = 1.0;
  double snap[3] = {0.0, 0.0, 0.0};
  for (long k = 0; k < kCap; ++k) {
    const double d = static_cast<double>(k) + 1.5;
    const double term = zp / (d * d);
    sum += term;
    if (term < 1e-15 * sum) return sum;
    zp *= z;
    if (k % kSnapshotStride == 0) {
      snap[0] = snap[1];
      snap[1] = snap[2];
      snap[2] = sum;
    }
  }
  // Extremely slow convergence (z within ~1e-5 of 1): Aitken extrapolation of
  // the geometrically converging partial sums.
  const double d1 = snap[2] - snap[1];
  const double d0 = snap[1] - snap[0];
  if (d1 - d0 != 0.0) return snap[2] - d1 * d1 / (d1 - d0);
  return sum;
}

double avg_mi_classical(double kappa) {
  if (kappa < 0.0 || kappa > 1.0 + 1e-12)
    throw DomainError("avg_mi_classical: kappa must be in [0, 1]");
  if (kappa >= 1.0 - 1e-12) {
    // Algebraic limit: the log(1-k) parts of atanh and log(1-k^2) cancel.
    return (8.0 * kLn2 - 10.0 + kPiSqHalf) / (8.0 * kLn2);
  }
  if (kappa < 1e-3) {
    const double k2 = kappa * kappa;
    return (k2 / 9.0 + k2 * k2 / 150.0 + k2 * k2 * k2 / 735.0) / kLn4;
  }
  const double k2 = kappa * kappa;
  const double num = -6.0 * kappa + (6.0 + 2.0 * k2) * std::atanh(kappa) +
                     kappa * k2 * lerch_phi_2_3half(k2) + 4.0 * kappa * std::log1p(-k2);
  return num / (8.0 * kappa * kLn2);
}

double avg_mi_isotropic(double kappa) {
  if (kappa < 0.0 || kappa > kSqrt3 + 1e-12)
    throw DomainError("avg_mi_isotropic: kappa must be in [0, sqrt(3)]");
  // Identical to the single-observable radial profile at R = kappa^2/3, which
  // is constant over the m sphere for isotropic correlations.
  const double R = std::min(1.0, kappa * kappa / 3.0);
  return mi_sphere_avg_radial(R);
}

double avg_mi_general(const TwoQubitState& state, const QuadratureSpec& quad) {
  require_mmms(state, "avg_mi_general");
  const Vec3 e = state.correlation().diag();
  const Vec3 e2 = hadamard(e, e);
  // Near-pure states put the logarithmic endpoint of the radial profile on
  // the grid; doubled orders recover the accuracy.
  const double top = std::max({e2[0], e2[1], e2[2]});
  const QuadratureSpec effective = top > 1.0 - 1e-6 ? quad.doubled() : quad;
  return average_s2(
      [&](const Vec3& m) {
        const double R = e2[0] * m[0] * m[0] + e2[1] * m[1] * m[1] + e2[2] * m[2] * m[2];
        return mi_sphere_avg_radial(std::min(R, 1.0));
      },
      effective);
}

double avg_mi_tensor_quadrature(const TwoQubitState& state, const QuadratureSpec& quad) {
  require_mmms(state, "avg_mi_tensor_quadrature");
  const Vec3 e = state.correlation().diag();
  return average_s2x_s2(
      [&](const Vec3& n, const Vec3& m) {
        return binary_mmms_mi(e[0] * n[0] * m[0] + e[1] * n[1] * m[1] + e[2] * n[2] * m[2]);
      },
      quad);
}

int omega_max_dim(const TwoQubitState& state, double tol) {
  require_mmms(state, "omega_max_dim");
  const Vec3 e = state.correlation().diag();
  std::array<double, 3> a{std::abs(e[0]), std::abs(e[1]), std::abs(e[2])};
  std::sort(a.begin(), a.end());
  if (a[2] <= tol) throw DegenerateInput("omega_max_dim: undefined for kappa = 0");
  if (a[2] - a[0] <= tol) return 2;
  if (a[2] - a[1] <= tol) return 1;
  return 0;
}

}  // namespace qcorr
