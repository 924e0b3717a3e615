#pragma once

#include "qcorr/bloch.hpp"
#include "qcorr/sphere_avg.hpp"

namespace qcorr {

/// |x| within this distance of 1 is treated as the x -> +/-1 limit (I = 1) to
/// avoid NaN from log(0).
inline constexpr double kCorrelationClampTol = 1e-12;

/// Mutual information of a pair of +/-1 outcomes with unpolarized marginals
/// and correlation scalar x: ((1-x)log2(1-x) + (1+x)log2(1+x))/2, in bits.
double binary_mmms_mi(double x);

/// Shannon mutual information (bits) of the joint outcome distribution:
/// H(pA) + H(pB) - H(p). Works for any physical state; reduces to
/// binary_mmms_mi(x) when the marginals are maximally mixed.
double mutual_information(const TwoQubitState& state, const ObservablePair& pair);

/// Sphere average of binary_mmms_mi(n.v) over n as a function of R = |v|^2:
///   [(1+R) atanh(sqrt R) - sqrt(R) (1 - ln(1-R))] / (sqrt(R) ln 4).
/// Monotonically increasing on [0, 1]; the R -> 0 limit is 0 (series branch
/// below R = 1e-4) and the R -> 1 limit is (2 ln2 - 1)/(2 ln2) = 0.27865...
/// Throws DomainError outside [0, 1] beyond a 1e-12 tolerance band.
double mi_sphere_avg_radial(double R);

/// Value attained at R = 1: 1 - 1/(2 ln 2).
inline constexpr double kMiSphereAvgMax = 1.0 - 0.5 / 0.6931471805599453;

/// Average over side A's sphere of I(n, m) for a fixed m on a state with
/// maximally mixed marginals; R = m E E^T m^T.
double avg_mi_single(const TwoQubitState& state, const Observable& m);

/// Lerch transcendent Phi(z, 2, 3/2) = sum_{k>=0} z^k / (k + 3/2)^2 for
/// z in [0, 1). Direct summation with a 1e-15 relative stop; near z = 1 a
/// capped sum with Aitken extrapolation takes over.
double lerch_phi_2_3half(double z);

/// Double-sphere average of I for the single-axis ("classical") family
/// c_hat = z, kappa in [0, 1]:
///   [-6k + (6+2k^2) atanh k + k^3 Phi(k^2, 2, 3/2) + 4k ln(1-k^2)] / (8k ln2).
/// kappa = 1 is handled by the algebraic limit.
double avg_mi_classical(double kappa);

/// Double-sphere average of I for the isotropic family, kappa in [0, sqrt 3]:
///   (3+k^2) atanh(k/sqrt3) / (sqrt3 k ln4) - (1 - ln(1 - k^2/3)) / ln4,
/// identical to the radial profile at R = k^2/3.
double avg_mi_isotropic(double kappa);

/// Double-sphere average of I for an arbitrary direction: the inner sphere
/// average is done in closed form (mi_sphere_avg_radial), the outer one by
/// quadrature. Requires a physical state with maximally mixed marginals.
/// States within 1e-6 of the purity boundary are evaluated at doubled orders.
double avg_mi_general(const TwoQubitState& state, const QuadratureSpec& quad = {});

/// Fully numerical tensor-product quadrature of the I integrand over
/// S^2 x S^2; the independent oracle for every closed-form average above.
double avg_mi_tensor_quadrature(const TwoQubitState& state, const QuadratureSpec& quad = {});

/// Dimension of the manifold of maximally correlated observable pairs:
/// 2 when all three |c_i| coincide, 1 when exactly the top two coincide,
/// 0 when the top singular value is simple. The classification is
/// discontinuous, so the degeneracy tolerance is exposed.
int omega_max_dim(const TwoQubitState& state, double tol = 1e-9);

}  // namespace qcorr
