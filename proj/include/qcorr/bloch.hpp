#pragma once

#include <array>

#include "qcorr/errors.hpp"
#include "qcorr/vec3.hpp"

namespace qcorr {

/// Eigenvalues of the reconstructed density operator are accepted down to
/// -kPositivityTol; quadrature nodes near the tetrahedron boundary otherwise
/// produce spurious tiny negatives.
inline constexpr double kPositivityTol = 1e-10;
inline constexpr double kTetrahedronTol = 1e-10;
inline constexpr double kUnitAxisTol = 1e-12;

/// Measurement direction on a single qubit Bloch sphere. Always unit length.
class Observable {
 public:
  explicit Observable(const Vec3& axis);

  const Vec3& axis() const { return axis_; }

 private:
  Vec3 axis_;
};

struct ObservablePair {
  Observable n;  // side A
  Observable m;  // side B
};

/// Diagonal correlation matrix E = diag(c1, c2, c3) with c = kappa * c_hat.
/// kappa = |c| holds by construction.
class CorrelationMatrix {
 public:
  CorrelationMatrix() = default;
  explicit CorrelationMatrix(const Vec3& diag) : diag_(diag) {}
  static CorrelationMatrix from_axis(double kappa, const Vec3& c_hat);

  const Vec3& diag() const { return diag_; }
  double kappa() const { return norm(diag_); }
  /// Unit direction; z for the zero matrix.
  Vec3 direction() const;

  /// E applied to a vector (diagonal contraction).
  Vec3 apply(const Vec3& v) const { return hadamard(diag_, v); }

 private:
  Vec3 diag_{0.0, 0.0, 0.0};
};

/// Outcome probabilities of a joint von Neumann measurement, with marginals
/// and the correlation scalar x = n E m^T. Index 0 = outcome +, 1 = outcome -.
struct JointDistribution {
  std::array<std::array<double, 2>, 2> p{};  // p[i][j]
  std::array<double, 2> pa{};
  std::array<double, 2> pb{};
  double x = 0.0;

  double joint_entropy() const;  // bits
  double entropy_a() const;
  double entropy_b() const;
};

/// Two-qubit state in Bloch-Fano form: marginal Bloch vectors a, b and the
/// correlation matrix in its diagonal form. Immutable after construction.
class TwoQubitState {
 public:
  static TwoQubitState mmms(double kappa, const Vec3& c_hat, bool force = false);
  static TwoQubitState general(const Vec3& a, const Vec3& b, const Vec3& e_diag,
                               bool force = false);
  /// Schmidt-form pure state: E = diag(2l*sqrt(1-l^2), -2l*sqrt(1-l^2), 1),
  /// a = b = (0, 0, 2l^2 - 1).
  static TwoQubitState pure_schmidt(double lambda);
  /// Isotropic correlations at a tetrahedron vertex direction plus a marginal
  /// polarization b along z on side B (a = 0).
  static TwoQubitState isotropic_with_b(double kappa, double b, bool force = false);

  const Vec3& a() const { return a_; }
  const Vec3& b() const { return b_; }
  const CorrelationMatrix& correlation() const { return e_; }
  double kappa() const { return e_.kappa(); }
  Vec3 c_hat() const { return e_.direction(); }

  bool is_physical() const { return physical_; }
  bool is_mmms() const;

  /// The same state with a = b = 0; carries only the correlations.
  TwoQubitState stripped() const;

 private:
  TwoQubitState(const Vec3& a, const Vec3& b, const CorrelationMatrix& e, bool physical)
      : a_(a), b_(b), e_(e), physical_(physical) {}

  Vec3 a_{0.0, 0.0, 0.0};
  Vec3 b_{0.0, 0.0, 0.0};
  CorrelationMatrix e_;
  bool physical_ = false;
};

/// Half-space test against the tetrahedron of admissible correlation vectors,
/// vertices (-1,-1,-1), (-1,1,1), (1,-1,1), (1,1,-1). For states with
/// maximally mixed marginals this is equivalent to density-operator
/// positivity.
bool is_in_tetrahedron(const Vec3& c_vec, double tol = kTetrahedronTol);

/// p_ij = (1 + i n.a + j m.b + ij nEm^T)/4 with marginals (1 +/- n.a)/2,
/// (1 +/- m.b)/2. Probabilities are clamped to [0, 1] after computation.
JointDistribution joint_distribution(const TwoQubitState& state, const ObservablePair& pair);

/// Tr[rho^2] of the reconstructed density operator.
double purity(const TwoQubitState& state);

/// Convenience wrappers matching the operation names used elsewhere.
inline TwoQubitState make_mmms(double kappa, const Vec3& c_hat, bool force = false) {
  return TwoQubitState::mmms(kappa, c_hat, force);
}

namespace detail {
void require_physical(const TwoQubitState& state);
}

}  // namespace qcorr
