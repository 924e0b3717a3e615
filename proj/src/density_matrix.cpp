#include "qcorr/density_matrix.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace qcorr {

namespace {

using Cx = std::complex<double>;

Eigen::Matrix4cd to_eigen(const Mat4c& m) {
  Eigen::Matrix4cd out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = m[static_cast<std::size_t>(4 * r + c)];
  return out;
}

Mat4c from_eigen(const Eigen::Matrix4cd& m) {
  Mat4c out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out[static_cast<std::size_t>(4 * r + c)] = m(r, c);
  return out;
}

Eigen::Matrix2cd pauli(int k) {
  Eigen::Matrix2cd s;
  switch (k) {
    case 0:
      s << Cx(0, 0), Cx(1, 0), Cx(1, 0), Cx(0, 0);
      break;
    case 1:
      s << Cx(0, 0), Cx(0, -1), Cx(0, 1), Cx(0, 0);
      break;
    default:
      s << Cx(1, 0), Cx(0, 0), Cx(0, 0), Cx(-1, 0);
      break;
  }
  return s;
}

Eigen::Matrix2cd axis_dot_sigma(const Vec3& v) {
  return v[0] * pauli(0) + v[1] * pauli(1) + v[2] * pauli(2);
}

Eigen::Matrix4cd kron_e(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

Eigen::Matrix4cd build_rho(const Vec3& a, const Vec3& b, const Vec3& e_diag) {
  const Eigen::Matrix2cd id2 = Eigen::Matrix2cd::Identity();
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Identity();
  rho += kron_e(axis_dot_sigma(a), id2);
  rho += kron_e(id2, axis_dot_sigma(b));
  for (int k = 0; k < 3; ++k) rho += e_diag[k] * kron_e(pauli(k), pauli(k));
  return 0.25 * rho;
}

Vec3 bloch_of(const Eigen::Matrix2cd& rho) {
  Vec3 v;
  for (int k = 0; k < 3; ++k) v[k] = (rho * pauli(k)).trace().real();
  return v;
}

Eigen::Matrix2cd partial_trace_a(const Eigen::Matrix4cd& rho) {
  Eigen::Matrix2cd out = rho.block<2, 2>(0, 0) + rho.block<2, 2>(2, 2);
  return out;
}

}  // namespace

Mat4c density_matrix(const Vec3& a, const Vec3& b, const Vec3& e_diag) {
  return from_eigen(build_rho(a, b, e_diag));
}

Mat4c density_matrix(const TwoQubitState& state) {
  return density_matrix(state.a(), state.b(), state.correlation().diag());
}

std::array<double, 4> density_eigenvalues(const Mat4c& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(to_eigen(rho),
                                                         Eigen::EigenvaluesOnly);
  std::array<double, 4> out;
  for (int i = 0; i < 4; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  return out;
}

double min_density_eigenvalue(const Vec3& a, const Vec3& b, const Vec3& e_diag) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(build_rho(a, b, e_diag),
                                                         Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

double purity_of(const Mat4c& rho) {
  const Eigen::Matrix4cd r = to_eigen(rho);
  return (r * r).trace().real();
}

double von_neumann_entropy_of(const Mat4c& rho) {
  double s = 0.0;
  for (double lam : density_eigenvalues(rho))
    if (lam > 1e-15) s -= lam * std::log2(lam);
  return s;
}

Mat2c qubit_projector(const Vec3& axis, int sign) {
  const Eigen::Matrix2cd p =
      0.5 * (Eigen::Matrix2cd::Identity() + static_cast<double>(sign) * axis_dot_sigma(axis));
  return {p(0, 0), p(0, 1), p(1, 0), p(1, 1)};
}

Mat4c kron(const Mat2c& a, const Mat2c& b) {
  Eigen::Matrix2cd ea, eb;
  ea << a[0], a[1], a[2], a[3];
  eb << b[0], b[1], b[2], b[3];
  return from_eigen(kron_e(ea, eb));
}

JointDistribution joint_distribution_oracle(const TwoQubitState& state,
                                            const ObservablePair& pair) {
  const Eigen::Matrix4cd rho =
      build_rho(state.a(), state.b(), state.correlation().diag());
  JointDistribution jd;
  const Eigen::Matrix2cd id2 = Eigen::Matrix2cd::Identity();
  for (int i = 0; i < 2; ++i) {
    const int si = i == 0 ? 1 : -1;
    const Eigen::Matrix2cd pn =
        0.5 * (id2 + static_cast<double>(si) * axis_dot_sigma(pair.n.axis()));
    jd.pa[i] = (rho * kron_e(pn, id2)).trace().real();
    for (int j = 0; j < 2; ++j) {
      const int sj = j == 0 ? 1 : -1;
      const Eigen::Matrix2cd pm =
          0.5 * (id2 + static_cast<double>(sj) * axis_dot_sigma(pair.m.axis()));
      jd.p[i][j] = (rho * kron_e(pn, pm)).trace().real();
      if (i == 0) jd.pb[j] = (rho * kron_e(id2, pm)).trace().real();
    }
  }
  const Eigen::Matrix4cd obs =
      kron_e(axis_dot_sigma(pair.n.axis()), axis_dot_sigma(pair.m.axis()));
  jd.x = (rho * obs).trace().real();
  return jd;
}

Vec3 conditional_bloch_oracle(const Mat4c& rho, const Vec3& m_axis, int sign, double& prob) {
  const Eigen::Matrix4cd r = to_eigen(rho);
  const Eigen::Matrix2cd id2 = Eigen::Matrix2cd::Identity();
  const Eigen::Matrix2cd pm =
      0.5 * (id2 + static_cast<double>(sign) * axis_dot_sigma(m_axis));
  const Eigen::Matrix4cd projected = kron_e(pm, id2) * r * kron_e(pm, id2);
  prob = projected.trace().real();
  if (prob <= 0.0) return {0, 0, 0};
  const Eigen::Matrix2cd rho_b = partial_trace_a(projected) / prob;
  return bloch_of(rho_b);
}

Vec3 rsp_output_oracle(const TwoQubitState& state, const Vec3& m_axis, const Vec3& beta_axis) {
  const Eigen::Matrix4cd rho = build_rho(state.a(), state.b(), state.correlation().diag());
  const Eigen::Matrix2cd id2 = Eigen::Matrix2cd::Identity();
  // exp(-i pi/2 beta.sigma) = -i beta.sigma
  const Eigen::Matrix2cd u = Cx(0, -1) * axis_dot_sigma(beta_axis);
  Eigen::Matrix2cd mixed = Eigen::Matrix2cd::Zero();
  for (int i = 0; i < 2; ++i) {
    const int si = i == 0 ? 1 : -1;
    const Eigen::Matrix2cd pm =
        0.5 * (id2 + static_cast<double>(si) * axis_dot_sigma(m_axis));
    const Eigen::Matrix4cd projected = kron_e(pm, id2) * rho * kron_e(pm, id2);
    Eigen::Matrix2cd branch = partial_trace_a(projected);  // unnormalized, weight included
    if (si < 0) branch = u * branch * u.adjoint();
    mixed += branch;
  }
  return bloch_of(mixed);
}

Mat4c aligned_classical_state(const Vec3& n_axis) {
  const Eigen::Matrix2cd id2 = Eigen::Matrix2cd::Identity();
  const Eigen::Matrix2cd p0 = 0.5 * (id2 + axis_dot_sigma(kZAxis));
  const Eigen::Matrix2cd p1 = 0.5 * (id2 - axis_dot_sigma(kZAxis));
  const Eigen::Matrix2cd pn = 0.5 * (id2 + axis_dot_sigma(n_axis));
  const Eigen::Matrix2cd pmn = 0.5 * (id2 - axis_dot_sigma(n_axis));
  return from_eigen(0.5 * (kron_e(p0, pn) + kron_e(p1, pmn)));
}

}  // namespace qcorr
