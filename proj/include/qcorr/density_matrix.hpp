#pragma once

#include <array>
#include <complex>

#include "qcorr/bloch.hpp"
#include "qcorr/vec3.hpp"

namespace qcorr {

/// Row-major 4x4 complex matrix. The density-operator reconstruction lives
/// here so that every closed form in the library can be tested against an
/// explicit matrix computation.
using Mat4c = std::array<std::complex<double>, 16>;
using Mat2c = std::array<std::complex<double>, 4>;

Mat4c density_matrix(const Vec3& a, const Vec3& b, const Vec3& e_diag);
Mat4c density_matrix(const TwoQubitState& state);

/// Eigenvalues in ascending order (Hermitian input assumed).
std::array<double, 4> density_eigenvalues(const Mat4c& rho);

double min_density_eigenvalue(const Vec3& a, const Vec3& b, const Vec3& e_diag);

double purity_of(const Mat4c& rho);

/// -sum lambda log2 lambda over the spectrum, 0 log 0 := 0.
double von_neumann_entropy_of(const Mat4c& rho);

/// (I +/- axis.sigma)/2 on one qubit.
Mat2c qubit_projector(const Vec3& axis, int sign);

Mat4c kron(const Mat2c& a, const Mat2c& b);

/// Joint measurement probabilities computed as Tr[rho Pi_i x Pi_j]; the
/// matrix-trace route, independent of the closed form in joint_distribution.
JointDistribution joint_distribution_oracle(const TwoQubitState& state,
                                            const ObservablePair& pair);

/// Full matrix-level run of the preparation protocol: project side A onto
/// +/- m, normalize side B's conditional state, apply the conditional pi
/// rotation about beta as a unitary, mix, and read off B's Bloch vector.
Vec3 rsp_output_oracle(const TwoQubitState& state, const Vec3& m_axis, const Vec3& beta_axis);

/// Bloch vector of side B after A's outcome `sign` on axis m (unnormalized
/// branch probability returned through prob). Matrix route.
Vec3 conditional_bloch_oracle(const Mat4c& rho, const Vec3& m_axis, int sign, double& prob);

/// (|0><0| x |+n><+n| + |1><1| x |-n><-n|)/2: classically correlated state
/// whose A-side z measurement is perfectly correlated with +/-n on B.
Mat4c aligned_classical_state(const Vec3& n_axis);

}  // namespace qcorr
