#ifndef LATTICE2D_DESIGN_HPP
#define LATTICE2D_DESIGN_HPP

#include "lattice2d/error.hpp"
#include "lattice2d/invariants.hpp"
#include "lattice2d/types.hpp"

#include <algorithm>
#include <cmath>

namespace lat2d {

template <typename Scalar>
void check_projected_invariant(const ProjectedInvariant<Scalar>& pi) {
  if (!in_quotient_triangle(pi)) throw Error(Errc::InvalidPI, "projected invariant outside the quotient triangle");
}

template <typename Scalar>
RootInvariant<Scalar> ri_from_pi(const ProjectedInvariant<Scalar>& pi, Scalar sigma) {
  check_projected_invariant(pi);
  using std::isfinite;
  if (!(sigma > 0) || !isfinite(sigma))
    throw Error(Errc::InvalidParams, "size must be positive and finite");
  const Scalar x = std::max(pi.x(), Scalar(0));
  const Scalar y = std::max(pi.y(), Scalar(0));
  const Scalar r12 = sigma * y / 3;
  const Scalar r01 = std::max(sigma * (3 - 3 * x - y) / 6, r12);
  const Scalar r02 = sigma * (3 + 3 * x - y) / 6;
  return RootInvariant<Scalar>(r12, r01, r02);
}

template <typename Scalar>
Superbase<Scalar> superbase_from_ri(const RootInvariant<Scalar>& ri, Sign sgn) {
  using std::sqrt;
  check_root_invariant(ri);
  const bool mirror = is_mirror_symmetric(ri);
  if (mirror != (sgn == Sign::zero))
    throw Error(Errc::InconsistentSign, mirror ? "mirror-symmetric invariant requires sign 0"
                                               : "chiral invariant requires sign +1 or -1");
  const Vec3<Scalar> p = ri.cwiseAbs2();
  const Scalar n1 = sqrt(p(0) + p(1));
  // v2 = (-p12/|v1|, +-area/|v1|), area^2 = |v1|^2 |v2|^2 - p12^2
  const Scalar area = sqrt(p(0) * p(1) + p(0) * p(2) + p(1) * p(2));
  const Scalar h = (sgn == Sign::negative ? -area : area) / n1;
  Superbase<Scalar> s;
  s.v1 = Vec2<Scalar>(n1, 0);
  s.v2 = Vec2<Scalar>(-p(0) / n1, h);
  s.v0 = -s.v1 - s.v2;
  return s;
}

template <typename Scalar>
Scalar cell_area(const RootInvariant<Scalar>& ri) {
  using std::sqrt;
  const Vec3<Scalar> p = ri.cwiseAbs2();
  return sqrt(p(0) * p(1) + p(0) * p(2) + p(1) * p(2));
}

// Angle between v1 and v2 of the superbase reconstructed from pi, in radians.
template <typename Scalar>
Scalar reconstruction_angle_from_pi(const ProjectedInvariant<Scalar>& pi) {
  using std::acos;
  using std::sqrt;
  check_projected_invariant(pi);
  const Scalar x = pi.x();
  const Scalar y = pi.y();
  const Scalar a = 9 * x * x + 5 * y * y - 6 * y + 9;
  const Scalar b = 6 * x * (3 - y);
  const Scalar den2 = a * a - b * b;
  if (!(den2 > 0)) throw Error(Errc::InvalidPI, "reconstruction angle undefined at this point");
  const Scalar c = std::clamp(-4 * y * y / sqrt(den2), Scalar(-1), Scalar(1));
  return acos(c);
}

template <typename Scalar>
RootInvariant<Scalar> lattice_mix(const RootInvariant<Scalar>& a, const RootInvariant<Scalar>& b, Scalar t) {
  if (!(t >= 0 && t <= 1)) throw Error(Errc::InvalidParams, "mixing weight must lie in [0,1]");
  return t * a + (1 - t) * b;
}

template <typename Scalar>
Scalar ri_dot(const RootInvariant<Scalar>& a, const RootInvariant<Scalar>& b) {
  return a.dot(b);
}

}  // namespace lat2d

#endif  // LATTICE2D_DESIGN_HPP
