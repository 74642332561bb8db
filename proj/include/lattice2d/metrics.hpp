#ifndef LATTICE2D_METRICS_HPP
#define LATTICE2D_METRICS_HPP

#include "lattice2d/error.hpp"
#include "lattice2d/geometry.hpp"
#include "lattice2d/invariants.hpp"
#include "lattice2d/minimize.hpp"
#include "lattice2d/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lat2d {

inline bool is_inf_q(double q) { return std::isinf(q) && q > 0; }

inline void check_q(double q) {
  if (!(q >= 1)) throw Error(Errc::InvalidParams, "Minkowski parameter q must be >= 1");
}

inline void check_closed_form_q(double q, bool allow_numeric) {
  check_q(q);
  if (!allow_numeric && q != 2 && !is_inf_q(q))
    throw Error(Errc::UnsupportedQ, "closed forms exist only for q = 2 and q = inf");
}

template <typename Derived>
typename Derived::Scalar minkowski_norm(const Eigen::MatrixBase<Derived>& v, double q) {
  using Scalar = typename Derived::Scalar;
  using std::pow;
  if (is_inf_q(q)) return v.cwiseAbs().maxCoeff();
  if (q == 1) return v.cwiseAbs().sum();
  if (q == 2) return v.norm();
  const Scalar m = v.cwiseAbs().maxCoeff();
  if (m == 0) return Scalar(0);
  Scalar acc = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) acc += pow(std::abs(v(i)) / m, Scalar(q));
  return m * pow(acc, Scalar(1 / q));
}

// min over x of max{|a-x|+|x-b|, |c-x|+|x-d|}
template <typename Scalar>
Scalar max_sum_moduli(Scalar a, Scalar b, Scalar c, Scalar d) {
  using std::abs;
  return std::max({abs(a - b), abs(c - d), abs(a + b - c - d) / 2});
}

template <typename Scalar>
Scalar root_metric(const RootInvariant<Scalar>& r, const RootInvariant<Scalar>& s, double q) {
  check_q(q);
  return minkowski_norm(r - s, q);
}

template <typename Scalar>
Scalar projected_metric(const ProjectedInvariant<Scalar>& p, const ProjectedInvariant<Scalar>& r, double q) {
  check_q(q);
  return minkowski_norm(p - r, q);
}

// Points of the three boundary faces of the triangular cone, 0 <= u <= w:
// face 0 {r12 = 0}, face 1 {r12 = r01}, face 2 {r01 = r02}.
template <typename Scalar>
RootInvariant<Scalar> tc_face_point(int face, Scalar u, Scalar w) {
  switch (face) {
    case 0: return RootInvariant<Scalar>(0, u, w);
    case 1: return RootInvariant<Scalar>(u, u, w);
    default: return RootInvariant<Scalar>(u, w, w);
  }
}

// Points of the three edges of the quotient triangle, t in [0, 1].
template <typename Scalar>
ProjectedInvariant<Scalar> qt_edge_point(int edge, Scalar t) {
  switch (edge) {
    case 0: return ProjectedInvariant<Scalar>(0, t);
    case 1: return ProjectedInvariant<Scalar>(t, 0);
    default: return ProjectedInvariant<Scalar>(t, 1 - t);
  }
}

namespace detail {

inline constexpr double kSearchTol = 1e-8;

// min over the boundary of TC of ||r - z||_inf + ||s - z||_inf, solved exactly as an LP in (u, w, A, B).
template <typename Scalar>
Scalar tc_boundary_sum_inf(const RootInvariant<Scalar>& r, const RootInvariant<Scalar>& s) {
  static const int kFaceMap[3][3][2] = {{{0, 0}, {1, 0}, {0, 1}}, {{1, 0}, {1, 0}, {0, 1}}, {{1, 0}, {0, 1}, {0, 1}}};
  const Scalar scale = std::max({r(2), s(2), Scalar(1e-300)});
  Scalar best = std::numeric_limits<Scalar>::infinity();
  for (int face = 0; face < 3; ++face) {
    Eigen::Matrix<Scalar, 14, 4> G = Eigen::Matrix<Scalar, 14, 4>::Zero();
    Eigen::Matrix<Scalar, 14, 1> h;
    int row = 0;
    for (int which = 0; which < 2; ++which) {
      const RootInvariant<Scalar>& t = which == 0 ? r : s;
      for (int i = 0; i < 3; ++i) {
        for (int sgn : {1, -1}) {
          // sgn * (z_i - t_i) <= radius
          G(row, 0) = Scalar(sgn * kFaceMap[face][i][0]);
          G(row, 1) = Scalar(sgn * kFaceMap[face][i][1]);
          G(row, 2 + which) = -1;
          h(row) = sgn * t(i);
          ++row;
        }
      }
    }
    G(row, 0) = -1;  // u >= 0
    h(row++) = 0;
    G(row, 0) = 1;   // u <= w
    G(row, 1) = -1;
    h(row++) = 0;
    const Eigen::Matrix<Scalar, 4, 1> c(0, 0, 1, 1);
    best = std::min(best, lp_vertex_min<Scalar, 4, 14>(c, G, h, Scalar(1e-12) * scale));
  }
  return best;
}

template <typename Scalar, typename F>
Scalar tc_boundary_min(F&& f, Scalar w_max) {
  Scalar best = std::numeric_limits<Scalar>::infinity();
  const Scalar tol = Scalar(kSearchTol) * std::max(w_max, Scalar(1e-300));
  for (int face = 0; face < 3; ++face) {
    auto g = [&](Scalar u, Scalar w) { return f(tc_face_point(face, u, w)); };
    best = std::min(best, golden_section_wedge(g, w_max, tol).value);
  }
  return best;
}

template <typename Scalar, typename F>
Scalar qt_boundary_min(F&& f) {
  Scalar best = std::numeric_limits<Scalar>::infinity();
  for (int edge = 0; edge < 3; ++edge) {
    auto g = [&](Scalar t) { return f(qt_edge_point(edge, t)); };
    best = std::min(best, golden_section(g, Scalar(0), Scalar(1), Scalar(kSearchTol)).value);
  }
  return best;
}

}  // namespace detail

template <typename Scalar>
Scalar oriented_root_metric(const OrientedRootInvariant<Scalar>& a, const OrientedRootInvariant<Scalar>& b, double q,
                            bool allow_numeric = true) {
  check_closed_form_q(q, allow_numeric);
  if (to_int(a.sign) * to_int(b.sign) >= 0) return root_metric(a.ri, b.ri, q);
  const RootInvariant<Scalar>& r = a.ri;
  const RootInvariant<Scalar>& s = b.ri;
  if (q == 2) {
    const RootInvariant<Scalar> m0(-s(0), s(1), s(2));
    const RootInvariant<Scalar> m1(s(1), s(0), s(2));
    const RootInvariant<Scalar> m2(s(0), s(2), s(1));
    return std::min({(r - m0).norm(), (r - m1).norm(), (r - m2).norm()});
  }
  if (is_inf_q(q)) return detail::tc_boundary_sum_inf(r, s);
  return detail::tc_boundary_min(
      [&](const RootInvariant<Scalar>& z) { return minkowski_norm(r - z, q) + minkowski_norm(s - z, q); },
      std::max(r(2), s(2)));
}

template <typename Scalar>
Scalar oriented_projected_metric(const OrientedProjectedInvariant<Scalar>& a,
                                 const OrientedProjectedInvariant<Scalar>& b, double q, bool allow_numeric = true) {
  using std::abs;
  check_closed_form_q(q, allow_numeric);
  if (to_int(a.sign) * to_int(b.sign) >= 0) return projected_metric(a.pi, b.pi, q);
  const Scalar x1 = a.pi.x(), y1 = a.pi.y(), x2 = b.pi.x(), y2 = b.pi.y();
  if (q == 2) {
    const ProjectedInvariant<Scalar> p(x1, y1);
    const ProjectedInvariant<Scalar> m0(-x2, y2);
    const ProjectedInvariant<Scalar> m1(x2, -y2);
    const ProjectedInvariant<Scalar> m2(1 - y2, 1 - x2);
    return std::min({(p - m0).norm(), (p - m1).norm(), (p - m2).norm()});
  }
  if (is_inf_q(q)) {
    const Scalar via_x0 = std::max(x1 + x2, abs(y1 - y2));
    const Scalar via_y0 = std::max(y1 + y2, abs(x1 - x2));
    const Scalar via_hyp = abs((x1 - y1) - (x2 - y2)) / 2 + 1 - (x1 + y1 + x2 + y2) / 2;
    return std::min({via_x0, via_y0, via_hyp});
  }
  return detail::qt_boundary_min<Scalar>([&](const ProjectedInvariant<Scalar>& z) {
    return minkowski_norm(a.pi - z, q) + minkowski_norm(b.pi - z, q);
  });
}

// min over cyclic relabelings of max |p_ij - p'_zeta(i)zeta(j)|
template <typename Scalar>
Scalar coform_cyclic_metric(const Superbase<Scalar>& s1, const Superbase<Scalar>& s2) {
  const Conorms<Scalar> p = obtuse_conorms(s1);
  const Conorms<Scalar> t = obtuse_conorms(s2);
  // shifting indices 0->1->2->0 sends (p12, p01, p02) to (p02, p12, p01)
  const Conorms<Scalar> t1(t(2), t(0), t(1));
  const Conorms<Scalar> t2(t(1), t(2), t(0));
  return std::min({(p - t).cwiseAbs().maxCoeff(), (p - t1).cwiseAbs().maxCoeff(), (p - t2).cwiseAbs().maxCoeff()});
}

template <typename Scalar>
Scalar max_vector_length(const Superbase<Scalar>& s) {
  using std::sqrt;
  return sqrt(vonorms(s).maxCoeff());
}

struct SimOptions {
  int grid = 720;
  int refine_iterations = 60;
  double tol_angle = 1e-10;
};

// min over rotations (and reflections unless oriented) and cyclic relabelings of max_i |f(u_i) - v_i|.
double superbase_isometry_metric(const Superbase<double>& s1, const Superbase<double>& s2, bool oriented,
                                 const SimOptions& opt = {});

}  // namespace lat2d

#endif  // LATTICE2D_METRICS_HPP
