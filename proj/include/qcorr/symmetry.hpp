#pragma once

#include <array>
#include <optional>
#include <vector>

#include "qcorr/vec3.hpp"

namespace qcorr {

/// Signed permutation acting on correlation directions:
///   (g c)_i = signs[i] * c[perm[i]].
/// The 48 elements form the direct product of the sign-flip group and the
/// permutations of three indices. Group arithmetic is exact (integers), so
/// orbits carry no float drift.
struct OrbitElement {
  std::array<int, 3> signs{1, 1, 1};
  std::array<int, 3> perm{0, 1, 2};

  static OrbitElement identity() { return {}; }

  Vec3 apply(const Vec3& c) const {
    return {signs[0] * c[perm[0]], signs[1] * c[perm[1]], signs[2] * c[perm[2]]};
  }

  /// (a.compose(b)).apply(c) == a.apply(b.apply(c)).
  OrbitElement compose(const OrbitElement& other) const;
  OrbitElement inverse() const;

  int sign_product() const { return signs[0] * signs[1] * signs[2]; }

  /// Elements with sign product +1 preserve det(E) and can be realized by
  /// local unitary rotations alone; they form the tetrahedron symmetry
  /// subgroup (order 24). The others additionally require the spin flip.
  bool lu_implementable() const { return sign_product() == 1; }

  /// 3x3 matrix M with M c = apply(c), row-major.
  std::array<std::array<double, 3>, 3> matrix() const;

  bool operator==(const OrbitElement&) const = default;
};

/// All 48 group elements, fixed order.
const std::vector<OrbitElement>& orbit_group();

inline Vec3 apply_orbit(const OrbitElement& el, const Vec3& c_hat) { return el.apply(c_hat); }

/// Deduplicated orbit of a direction; cardinality divides 48.
std::vector<Vec3> orbit(const Vec3& c_hat, double tol = 1e-9);

enum class SymmetryTag { Iso3, Iso2, Iso2Zero, Generic };

struct SymmetryClass {
  SymmetryTag tag = SymmetryTag::Generic;
  /// Repeated |c_i| value for the two-fold isotropic class.
  std::optional<double> epsilon;
  /// Set when a classification margin sits within 100x of the tolerance;
  /// the class reported is that of the rounded pattern.
  bool boundary_warning = false;
};

const char* to_string(SymmetryTag tag);

/// Taxonomy by the multiset of |c_i|: all equal -> Iso3; exactly one nonzero
/// -> Iso2Zero; exactly two equal (nonzero) -> Iso2 with epsilon; otherwise
/// Generic.
SymmetryClass classify(const Vec3& c_hat, double tol = 1e-9);

/// True iff -c_vec is also admissible; throws InvalidInput when c_vec itself
/// is not in the tetrahedron.
bool spin_flip_admissible(const Vec3& c_vec);

/// Members d of the orbit of c_hat whose scaled vectors kappa*d stay in the
/// tetrahedron. The images under the det-preserving subgroup always survive
/// when kappa*c_hat itself is admissible.
std::vector<Vec3> orbit_physical_subset(double kappa, const Vec3& c_hat, double tol = 1e-9);

/// Orthogonal pair (O_A, O_B) with O_A diag(c) O_B^T = diag(g c) for every c.
/// When the element is LU-implementable both factors are special orthogonal.
struct RotationPair {
  std::array<std::array<double, 3>, 3> o_a{};
  std::array<std::array<double, 3>, 3> o_b{};
};

RotationPair equivalence_rotations(const OrbitElement& el);

}  // namespace qcorr
