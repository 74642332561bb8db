#ifndef LATTICE2D_CHIRALITY_HPP
#define LATTICE2D_CHIRALITY_HPP

#include "lattice2d/error.hpp"
#include "lattice2d/invariants.hpp"
#include "lattice2d/metrics.hpp"
#include "lattice2d/minimize.hpp"
#include "lattice2d/types.hpp"

#include <algorithm>
#include <cmath>

namespace lat2d {

// Distance from ri to the nearest root invariant whose lattice has point group >= g.
template <typename Scalar>
Scalar root_chirality(const RootInvariant<Scalar>& ri, PointGroup g, double q, bool allow_numeric = true) {
  using std::sqrt;
  check_closed_form_q(q, allow_numeric);
  check_root_invariant(ri);
  const Scalar r12 = ri(0), r01 = ri(1), r02 = ri(2);
  if (q == 2) {
    switch (g) {
      case PointGroup::D2: return std::min({r12, (r01 - r12) / sqrt(Scalar(2)), (r02 - r01) / sqrt(Scalar(2))});
      case PointGroup::D4: return sqrt(r12 * r12 + (r02 - r01) * (r02 - r01) / 2);
      case PointGroup::D6: {
        const Scalar v = ri.squaredNorm() - r12 * r01 - r12 * r02 - r01 * r02;
        return sqrt(std::max(Scalar(0), 2 * v / 3));
      }
    }
  }
  if (is_inf_q(q)) {
    switch (g) {
      case PointGroup::D2: return std::min({r12, (r01 - r12) / 2, (r02 - r01) / 2});
      case PointGroup::D4: return std::max(r12, (r02 - r01) / 2);
      case PointGroup::D6: return (r02 - r12) / 2;
    }
  }
  const Scalar tol = Scalar(detail::kSearchTol) * r02;
  switch (g) {
    case PointGroup::D2:
      return detail::tc_boundary_min([&](const RootInvariant<Scalar>& z) { return minkowski_norm(ri - z, q); }, r02);
    case PointGroup::D4:
      return golden_section(
                 [&](Scalar t) { return minkowski_norm(ri - RootInvariant<Scalar>(0, t, t), q); }, Scalar(0), r02, tol)
          .value;
    case PointGroup::D6:
      return golden_section(
                 [&](Scalar t) { return minkowski_norm(ri - RootInvariant<Scalar>(t, t, t), q); }, r12, r02, tol)
          .value;
  }
  return Scalar(0);
}

// Distance from pi to the projected invariants of lattices with point group >= g.
template <typename Scalar>
Scalar projected_chirality(const ProjectedInvariant<Scalar>& pi, PointGroup g, double q, bool allow_numeric = true) {
  using std::sqrt;
  check_q(q);
  if (!in_quotient_triangle(pi)) throw Error(Errc::InvalidPI, "projected invariant outside the quotient triangle");
  const Scalar x = pi.x(), y = pi.y();
  switch (g) {
    case PointGroup::D4: return minkowski_norm(pi, q);
    case PointGroup::D6: return minkowski_norm(ProjectedInvariant<Scalar>(x, 1 - y), q);
    case PointGroup::D2: break;
  }
  check_closed_form_q(q, allow_numeric);
  if (q == 2) return std::min({x, y, (1 - x - y) / sqrt(Scalar(2))});
  if (is_inf_q(q)) return std::min({x, y, (1 - x - y) / 2});
  return detail::qt_boundary_min<Scalar>([&](const ProjectedInvariant<Scalar>& z) { return minkowski_norm(pi - z, q); });
}

template <typename Scalar>
Scalar signed_chirality(const OrientedRootInvariant<Scalar>& ori, PointGroup g, double q) {
  return Scalar(to_int(ori.sign)) * root_chirality(ori.ri, g, q);
}

template <typename Scalar>
Scalar signed_chirality(const OrientedProjectedInvariant<Scalar>& opi, PointGroup g, double q) {
  return Scalar(to_int(opi.sign)) * projected_chirality(opi.pi, g, q);
}

}  // namespace lat2d

#endif  // LATTICE2D_CHIRALITY_HPP
