#ifndef LATTICE2D_INVARIANTS_HPP
#define LATTICE2D_INVARIANTS_HPP

#include "lattice2d/error.hpp"
#include "lattice2d/geometry.hpp"
#include "lattice2d/types.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace lat2d {

enum class ReductionMode { isometry, rigid };

template <typename Scalar>
void check_root_invariant(const RootInvariant<Scalar>& ri) {
  if (!ri.allFinite() || !(ri(0) >= 0) || !(ri(0) <= ri(1)) || !(ri(1) <= ri(2)) || !(ri(1) > 0))
    throw Error(Errc::InvalidInvariant, "root invariant must satisfy 0 <= r12 <= r01 <= r02, r01 > 0");
}

// Conorms with values inside [-eps_zero, eps_zero] snapped to 0.
template <typename Scalar>
Conorms<Scalar> obtuse_conorms(const Superbase<Scalar>& s) {
  using std::abs;
  Conorms<Scalar> p = conorms(s);
  const Scalar eps = zero_tolerance(s);
  for (int k = 0; k < 3; ++k) {
    if (p(k) < -eps) throw Error(Errc::NotObtuse, "superbase has a negative conorm");
    if (abs(p(k)) <= eps) p(k) = 0;
  }
  return p;
}

// Conorms at rounding-noise level become 0, negative ones inside the tolerance too; other small values are kept.
template <typename Scalar>
RootInvariant<Scalar> root_invariant(const Superbase<Scalar>& s) {
  using std::abs;
  Conorms<Scalar> p = conorms(s);
  if (p.minCoeff() < -zero_tolerance(s)) throw Error(Errc::NotObtuse, "superbase has a negative conorm");
  const Scalar noise = 64 * std::numeric_limits<Scalar>::epsilon() * vonorms(s).maxCoeff();
  for (int k = 0; k < 3; ++k)
    if (abs(p(k)) <= noise) p(k) = 0;
  RootInvariant<Scalar> ri = p.cwiseMax(Scalar(0)).cwiseSqrt();
  std::sort(ri.data(), ri.data() + 3);
  return ri;
}

// r12 is tested on the conorm scale (r12^2 against eps_zero * max vonorm), the equalities on r02.
template <typename Scalar>
bool is_mirror_symmetric(const RootInvariant<Scalar>& ri) {
  using std::abs;
  const Scalar eps = Scalar(tol::equal) * ri(2);
  const Scalar max_vonorm = ri(1) * ri(1) + ri(2) * ri(2);
  return ri(0) * ri(0) <= Scalar(tol::zero) * max_vonorm || abs(ri(1) - ri(0)) <= eps || abs(ri(2) - ri(1)) <= eps;
}

template <typename Scalar>
Sign sign_of(const Superbase<Scalar>& s) {
  if (is_mirror_symmetric(root_invariant(s))) return Sign::zero;
  const Vonorms<Scalar> vn = vonorms(s);
  std::array<int, 3> idx{0, 1, 2};
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return vn(a) < vn(b); });
  const Scalar d = det(s[idx[0]], s[idx[1]]);
  return d > 0 ? Sign::positive : Sign::negative;
}

// Sign of the lattice with superbase v1 = (1,0), v2 = (x,y), v0 = -v1-v2.
template <typename Scalar>
Sign sign_via_region(const Vec2<Scalar>& v2) {
  using std::abs;
  const Scalar x = v2.x();
  const Scalar y = v2.y();
  const Scalar tb = Scalar(tol::boundary);
  const Scalar r2 = x * x + y * y;
  const Scalar eps = Scalar(tol::zero) * std::max({Scalar(1), r2, (1 + x) * (1 + x) + y * y});
  if (!v2.allFinite() || x < -1 - tb || x > tb || !(y > 0) || r2 + x < -eps)
    throw Error(Errc::OutsideObt, "(x,y) is outside the obtuse region");

  const Scalar f_half = x + Scalar(0.5);
  const Scalar f_unit = r2 - 1;          // x^2 + y^2 - 1
  const Scalar f_left = r2 + 2 * x;      // x^2 + 2x + y^2
  const Scalar f_obt = r2 + x;           // x^2 + x + y^2
  for (Scalar f : {f_half, f_unit, f_left, f_obt, x, x + 1})
    if (abs(f) <= tb) return Sign::zero;

  if (f_half > 0) {
    if (f_unit > 0) return Sign::positive;   // p12 < p01 < p02
    if (f_left < 0) return Sign::positive;   // p02 < p12 < p01
    return Sign::negative;                   // p12 < p02 < p01
  }
  if (f_left > 0) return Sign::negative;     // p01 < p12 < p02
  if (f_unit > 0) return Sign::positive;     // p01 < p02 < p12
  return Sign::negative;                     // p02 < p01 < p12
}

// v2 / v1 in the frame where v1 = (1,0); rotation picks which cyclic relabeling acts as v1.
template <typename Scalar>
Vec2<Scalar> normalized_v2(const Superbase<Scalar>& s, int rotation = 0) {
  Vec2<Scalar> a = s[rotation % 3];
  Vec2<Scalar> b = s[(rotation + 1) % 3];
  if (det(a, b) < 0) b = s[(rotation + 2) % 3];
  const Scalar n = a.squaredNorm();
  return Vec2<Scalar>(a.dot(b) / n, det(a, b) / n);
}

template <typename Scalar>
OrientedRootInvariant<Scalar> oriented_root_invariant(const Superbase<Scalar>& s) {
  return {root_invariant(s), sign_of(s)};
}

template <typename Scalar>
Scalar size(const RootInvariant<Scalar>& ri) {
  return ri.sum();
}

template <typename Scalar>
ProjectedInvariant<Scalar> projected_invariant(const RootInvariant<Scalar>& ri) {
  check_root_invariant(ri);
  const Scalar sigma = size(ri);
  return ProjectedInvariant<Scalar>((ri(2) - ri(1)) / sigma, 3 * ri(0) / sigma);
}

template <typename Scalar>
OrientedProjectedInvariant<Scalar> oriented_projected_invariant(const Superbase<Scalar>& s) {
  return {projected_invariant(root_invariant(s)), sign_of(s)};
}

template <typename Scalar>
bool in_quotient_triangle(const ProjectedInvariant<Scalar>& pi, Scalar slack = Scalar(tol::boundary)) {
  return pi.allFinite() && pi.x() >= -slack && pi.y() >= -slack && pi.x() < 1 &&
         pi.x() + pi.y() <= 1 + slack;
}

// Same test as is_mirror_symmetric on the unit-size root invariant of pi, plus eps_boundary on the edges.
template <typename Scalar>
bool on_quotient_boundary(const ProjectedInvariant<Scalar>& pi) {
  const Scalar tb = Scalar(tol::boundary);
  const Scalar x = pi.x(), y = pi.y();
  if (x <= tb || y <= tb || 1 - x - y <= tb) return true;
  return is_mirror_symmetric(RootInvariant<Scalar>(y / 3, (3 - 3 * x - y) / 6, (3 + 3 * x - y) / 6));
}

// (q11, q12, q22) of the reconstructed basis.
template <typename Scalar>
Vec3<Scalar> metric_tensor(const RootInvariant<Scalar>& ri) {
  const Vec3<Scalar> p = ri.cwiseAbs2();
  return Vec3<Scalar>(p(0) + p(1), -p(0), p(0) + p(2));
}

namespace detail {

template <typename Scalar>
bool is_rigid_reduced(const Vec2<Scalar>& a, const Vec2<Scalar>& b) {
  using std::abs;
  const Scalar a2 = a.squaredNorm();
  const Scalar b2 = b.squaredNorm();
  const Scalar t = Scalar(tol::equal) * a2;
  const Scalar d = a.dot(b);
  if (b2 < a2 - t) return false;
  if (d <= -a2 / 2 + t) return false;
  if (d > a2 / 2 + t) return false;
  if (det(a, b) <= Scalar(tol::degenerate) * a.norm() * b.norm()) return false;
  if (abs(a2 - b2) <= t && d < -t) return false;
  return true;
}

}  // namespace detail

template <typename Scalar>
Basis<Scalar> reduced_basis(const Superbase<Scalar>& s, ReductionMode mode) {
  obtuse_conorms(s);
  if (mode == ReductionMode::isometry) {
    const Vonorms<Scalar> vn = vonorms(s);
    std::array<int, 3> idx{0, 1, 2};
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return vn(a) < vn(b); });
    return {s[idx[0]], s[idx[1]]};
  }
  const std::array<Vec2<Scalar>, 6> cand{s.v1, s.v2, s.v0, Vec2<Scalar>(-s.v1), Vec2<Scalar>(-s.v2),
                                         Vec2<Scalar>(-s.v0)};
  // the lattice is symmetric under -I, so pick the representative whose first vector is lexicographically largest
  int bi = -1, bj = -1;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      if (i % 3 == j % 3 || !detail::is_rigid_reduced(cand[i], cand[j])) continue;
      if (bi < 0 || cand[i].x() > cand[bi].x() || (cand[i].x() == cand[bi].x() && cand[i].y() > cand[bi].y())) {
        bi = i;
        bj = j;
      }
    }
  if (bi < 0) throw Error(Errc::NotObtuse, "no reduced basis among the superbase vectors");
  return {cand[bi], cand[bj]};
}

}  // namespace lat2d

#endif  // LATTICE2D_INVARIANTS_HPP
