#include "qcorr/symmetry.hpp"

#include <algorithm>
#include <cmath>

#include "qcorr/bloch.hpp"
#include "qcorr/errors.hpp"

namespace qcorr {

OrbitElement OrbitElement::compose(const OrbitElement& other) const {
  // (this o other) c: first other, then this.
  OrbitElement out;
  for (int i = 0; i < 3; ++i) {
    out.signs[static_cast<std::size_t>(i)] =
        signs[static_cast<std::size_t>(i)] *
        other.signs[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    out.perm[static_cast<std::size_t>(i)] =
        other.perm[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
  }
  return out;
}

OrbitElement OrbitElement::inverse() const {
  OrbitElement out;
  for (int i = 0; i < 3; ++i) {
    const auto pi = static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]);
    out.perm[pi] = i;
    out.signs[pi] = signs[static_cast<std::size_t>(i)];
  }
  return out;
}

std::array<std::array<double, 3>, 3> OrbitElement::matrix() const {
  std::array<std::array<double, 3>, 3> m{};
  for (int i = 0; i < 3; ++i)
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
        signs[static_cast<std::size_t>(i)];
  return m;
}

const std::vector<OrbitElement>& orbit_group() {
  static const std::vector<OrbitElement> group = [] {
    std::vector<OrbitElement> g;
    g.reserve(48);
    constexpr std::array<std::array<int, 3>, 6> perms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& p : perms)
      for (int bits = 0; bits < 8; ++bits)
        g.push_back(OrbitElement{{(bits & 1) ? -1 : 1, (bits & 2) ? -1 : 1, (bits & 4) ? -1 : 1},
                                 p});
    return g;
  }();
  return group;
}

std::vector<Vec3> orbit(const Vec3& c_hat, double tol) {
  std::vector<Vec3> out;
  out.reserve(48);
  for (const auto& el : orbit_group()) {
    const Vec3 d = el.apply(c_hat);
    bool dup = false;
    for (const auto& seen : out) {
      if (std::abs(seen[0] - d[0]) <= tol && std::abs(seen[1] - d[1]) <= tol &&
          std::abs(seen[2] - d[2]) <= tol) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(d);
  }
  return out;
}

const char* to_string(SymmetryTag tag) {
  switch (tag) {
    case SymmetryTag::Iso3:
      return "Iso3";
    case SymmetryTag::Iso2:
      return "Iso2";
    case SymmetryTag::Iso2Zero:
      return "Iso2_0";
    default:
      return "Generic";
  }
}

SymmetryClass classify(const Vec3& c_hat, double tol) {
  std::array<double, 3> a{std::abs(c_hat[0]), std::abs(c_hat[1]), std::abs(c_hat[2])};
  std::sort(a.begin(), a.end());

  SymmetryClass out;
  // Any margin that barely clears (or barely misses) the tolerance makes the
  // classification fragile; report the rounded class but flag it.
  for (double margin : {a[1] - a[0], a[2] - a[1], a[0], a[1]}) {
    if (margin > tol && margin <= 100.0 * tol) out.boundary_warning = true;
  }

  const bool eq01 = a[1] - a[0] <= tol;
  const bool eq12 = a[2] - a[1] <= tol;
  const int nonzero = (a[0] > tol) + (a[1] > tol) + (a[2] > tol);

  if (eq01 && eq12) {
    out.tag = SymmetryTag::Iso3;
  } else if (nonzero <= 1) {
    out.tag = SymmetryTag::Iso2Zero;
  } else if (eq01 || eq12) {
    out.tag = SymmetryTag::Iso2;
    out.epsilon = eq01 ? 0.5 * (a[0] + a[1]) : 0.5 * (a[1] + a[2]);
  } else {
    out.tag = SymmetryTag::Generic;
  }
  return out;
}

bool spin_flip_admissible(const Vec3& c_vec) {
  if (!is_in_tetrahedron(c_vec))
    throw InvalidInput("spin_flip_admissible: c_vec is not admissible");
  return is_in_tetrahedron(-c_vec);
}

std::vector<Vec3> orbit_physical_subset(double kappa, const Vec3& c_hat, double tol) {
  std::vector<Vec3> out;
  for (const Vec3& d : orbit(c_hat, tol))
    if (is_in_tetrahedron(d * kappa)) out.push_back(d);
  return out;
}

RotationPair equivalence_rotations(const OrbitElement& el) {
  // O_A = diag(s*t) P, O_B = diag(t) P satisfy O_A diag(c) O_B^T = diag(d)
  // for any sign vector t. When the element preserves det(E) we pick t so
  // that both factors land in SO(3).
  const int perm_sign = [&] {
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (el.perm[static_cast<std::size_t>(i)] > el.perm[static_cast<std::size_t>(j)])
          ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
  }();
  std::array<int, 3> t{1, 1, 1};
  if (el.lu_implementable()) t[2] = perm_sign;

  RotationPair out;
  for (int i = 0; i < 3; ++i) {
    const auto si = static_cast<std::size_t>(i);
    const auto pi = static_cast<std::size_t>(el.perm[si]);
    out.o_a[si][pi] = static_cast<double>(el.signs[si] * t[si]);
    out.o_b[si][pi] = static_cast<double>(t[si]);
  }
  return out;
}

}  // namespace qcorr
