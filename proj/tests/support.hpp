// Random generators and brute-force oracles shared by the unit, property and acceptance tests.
// Oracles only use plain vector arithmetic, never the library's closed forms.
#ifndef LATTICE2D_TESTS_SUPPORT_HPP
#define LATTICE2D_TESTS_SUPPORT_HPP

#include "lattice2d/lattice2d.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

namespace testkit {

using lat2d::Basis;
using lat2d::ProjectedInvariant;
using lat2d::RootInvariant;
using lat2d::Superbase;
using V2 = lat2d::Vec2<double>;
using Rng = std::mt19937_64;

inline constexpr double kPi = std::numbers::pi;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline bool close(double a, double b, double rel, double abs_floor = 0) {
  return std::abs(a - b) <= rel * std::max({std::abs(a), std::abs(b), 1e-300}) + abs_floor;
}

inline V2 rotate(const V2& v, double theta) { return Eigen::Rotation2D<double>(theta) * v; }

inline V2 reflect_x(const V2& v) { return V2(v.x(), -v.y()); }

inline Basis<double> rotate(const Basis<double>& b, double theta) { return {rotate(b.v1, theta), rotate(b.v2, theta)}; }

inline Basis<double> reflect_x(const Basis<double>& b) { return {reflect_x(b.v1), reflect_x(b.v2)}; }

// A basis with random orientation, scale and shape; roughly reduced, not necessarily obtuse.
inline Basis<double> random_basis(Rng& rng) {
  const double theta = uniform(rng, 0, 2 * kPi);
  const double len1 = std::exp(uniform(rng, -1.5, 1.5));
  const double ratio = std::exp(uniform(rng, 0, 1.2));
  const double angle = uniform(rng, 0.2 * kPi, 0.8 * kPi);
  const V2 a = rotate(V2(len1, 0), theta);
  const V2 b = rotate(V2(len1 * ratio * std::cos(angle), len1 * ratio * std::sin(angle)), theta);
  return {a, b};
}

struct Unimodular {
  long a = 1, b = 0, c = 0, d = 1;  // new v1 = a v1 + b v2, new v2 = c v1 + d v2
};

inline Unimodular random_unimodular(Rng& rng, int steps) {
  Unimodular m;
  for (int i = 0; i < steps; ++i) {
    const int k = uniform_int(rng, 0, 1) ? 1 : -1;
    switch (uniform_int(rng, 0, 3)) {
      case 0: m = {m.a + k * m.c, m.b + k * m.d, m.c, m.d}; break;  // v1 += k v2
      case 1: m = {m.a, m.b, m.c + k * m.a, m.d + k * m.b}; break;  // v2 += k v1
      case 2: m = {m.c, m.d, m.a, m.b}; break;                        // swap
      default: m = {-m.a, -m.b, m.c, m.d}; break;                     // negate v1
    }
  }
  return m;
}

inline Basis<double> apply(const Unimodular& m, const Basis<double>& b) {
  return {double(m.a) * b.v1 + double(m.b) * b.v2, double(m.c) * b.v1 + double(m.d) * b.v2};
}

inline RootInvariant<double> random_ri(Rng& rng) {
  std::array<double, 3> r{uniform(rng, 0, 3), uniform(rng, 0.05, 3), uniform(rng, 0.05, 3)};
  std::sort(r.begin(), r.end());
  if (r[1] <= 0) r[1] = 0.1;
  return RootInvariant<double>(r[0], r[1], r[2]);
}

// Uniform in the quotient triangle 0 <= x, 0 <= y, x + y <= 1.
inline ProjectedInvariant<double> random_pi(Rng& rng) {
  double x = uniform(rng, 0, 1), y = uniform(rng, 0, 1);
  if (x + y > 1) {
    x = 1 - x;
    y = 1 - y;
  }
  return ProjectedInvariant<double>(std::min(x, 0.999), y);
}

// Root invariant at least `margin` (relative) away from every mirror-symmetric one.
inline RootInvariant<double> random_chiral_ri(Rng& rng, double margin = 1e-3) {
  for (;;) {
    const RootInvariant<double> r = random_ri(rng);
    if (r(0) > margin * r(2) && r(1) - r(0) > margin * r(2) && r(2) - r(1) > margin * r(2)) return r;
  }
}

// ---------------------------------------------------------------- oracles

// Lattice vectors c1 v1 + c2 v2 with |c_i| <= n, origin excluded.
inline std::vector<V2> lattice_points(const Basis<double>& b, int n) {
  std::vector<V2> out;
  for (int c1 = -n; c1 <= n; ++c1)
    for (int c2 = -n; c2 <= n; ++c2)
      if (c1 || c2) out.push_back(double(c1) * b.v1 + double(c2) * b.v2);
  return out;
}

// Any obtuse superbase found by trying all integer bases with |c_ij| <= n and determinant +-1.
inline std::optional<Superbase<double>> brute_obtuse_superbase(const Basis<double>& b, int n = 3) {
  for (int a = -n; a <= n; ++a)
    for (int c = -n; c <= n; ++c)
      for (int d = -n; d <= n; ++d)
        for (int e = -n; e <= n; ++e) {
          if (std::abs(a * e - c * d) != 1) continue;
          const V2 u1 = double(a) * b.v1 + double(c) * b.v2;
          const V2 u2 = double(d) * b.v1 + double(e) * b.v2;
          const V2 u0 = -u1 - u2;
          const double scale = std::max({u0.squaredNorm(), u1.squaredNorm(), u2.squaredNorm()});
          if (-u1.dot(u2) >= -1e-12 * scale && -u0.dot(u1) >= -1e-12 * scale && -u0.dot(u2) >= -1e-12 * scale)
            return Superbase<double>{u0, u1, u2};
        }
  return std::nullopt;
}

inline RootInvariant<double> oracle_root_invariant(const Basis<double>& b, int n = 3) {
  const auto s = brute_obtuse_superbase(b, n);
  if (!s) return RootInvariant<double>::Constant(std::numeric_limits<double>::quiet_NaN());
  std::array<double, 3> r{std::sqrt(std::max(0.0, -s->v1.dot(s->v2))), std::sqrt(std::max(0.0, -s->v0.dot(s->v1))),
                          std::sqrt(std::max(0.0, -s->v0.dot(s->v2)))};
  std::sort(r.begin(), r.end());
  return RootInvariant<double>(r[0], r[1], r[2]);
}

// Sign from the two shortest non-parallel lattice vectors u, w with u.w <= 0; 0 when the choice is not unique.
inline int oracle_sign(const Basis<double>& b, int n = 6, double rel = 1e-7) {
  std::vector<V2> pts = lattice_points(b, n);
  std::sort(pts.begin(), pts.end(), [](const V2& p, const V2& q) { return p.squaredNorm() < q.squaredNorm(); });
  const V2 u = pts[0];
  const double area = std::abs(lat2d::det(b.v1, b.v2));
  V2 w = V2::Zero();
  for (const V2& p : pts)
    if (std::abs(lat2d::det(u, p)) > 1e-9 * area) {
      w = p;
      break;
    }
  const double lw = w.squaredNorm();
  // mirror symmetry: equal lengths among the three superbase vectors, or u orthogonal to w
  V2 w2 = w.dot(u) > 0 ? V2(-w) : w;
  const V2 third = -u - w2;
  if (std::abs(u.squaredNorm() - lw) <= rel * lw || std::abs(third.squaredNorm() - lw) <= rel * lw ||
      std::abs(u.dot(w2)) <= rel * std::sqrt(u.squaredNorm() * lw))
    return 0;
  return lat2d::det(u, w2) > 0 ? 1 : -1;
}

// min over x >= 0 of max{|a-x|+|x-b|, |c-x|+|x-d|} on a grid.
inline double oracle_max_sum_moduli(double a, double b, double c, double d, double step = 1e-4) {
  const double hi = std::max({a, b, c, d}) + 1;
  double best = std::numeric_limits<double>::infinity();
  for (double x = 0; x <= hi; x += step)
    best = std::min(best, std::max(std::abs(a - x) + std::abs(x - b), std::abs(c - x) + std::abs(x - d)));
  return best;
}

inline double mnorm(const Eigen::VectorXd& v, double q) {
  if (std::isinf(q)) return v.cwiseAbs().maxCoeff();
  double acc = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) acc += std::pow(std::abs(v(i)), q);
  return std::pow(acc, 1 / q);
}

// Boundary point of the triangular cone on one of its three faces, 0 <= u <= w.
inline RootInvariant<double> tc_point(int face, double u, double w) {
  if (face == 0) return RootInvariant<double>(0, u, w);
  if (face == 1) return RootInvariant<double>(u, u, w);
  return RootInvariant<double>(u, w, w);
}

// min over z on the boundary of TC of f(z): coarse grid per face, then a pattern search with a randomly rotated
// fine x fine stencil that re-centres on the best point and halves after a few rounds without progress.
template <typename F>
double oracle_tc_boundary_min(F&& f, double w_max, int coarse = 60, int fine = 11, int max_rounds = 600) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
  double best = std::numeric_limits<double>::infinity();
  for (int face = 0; face < 3; ++face) {
    double bu = 0, bw = 0, fb = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= coarse; ++i)
      for (int j = 0; j <= i; ++j) {
        const double w = w_max * i / coarse, u = w_max * j / coarse;
        const double v = f(tc_point(face, u, w));
        if (v < fb) fb = v, bu = u, bw = w;
      }
    double h = w_max / coarse;
    int stale = 0;
    for (int r = 0; r < max_rounds && h > 1e-10 * w_max; ++r) {
      const double cu = bu, cw = bw, a = angle(rng), c = std::cos(a), sn = std::sin(a);
      bool moved = false;
      for (int i = 0; i < fine; ++i)
        for (int j = 0; j < fine; ++j) {
          const double x = h * (2.0 * i / (fine - 1) - 1), y = h * (2.0 * j / (fine - 1) - 1);
          const double w = std::clamp(cw + c * x - sn * y, 0.0, w_max);
          const double u = std::clamp(cu + sn * x + c * y, 0.0, w);
          const double v = f(tc_point(face, u, w));
          if (v < fb) fb = v, bu = u, bw = w, moved = true;
        }
      if (moved) stale = 0;
      else if (++stale >= 4) h *= 0.5, stale = 0;
    }
    best = std::min(best, fb);
  }
  return best;
}

// min over `samples` equally spaced points of the QT boundary (perimeter 2 + sqrt2).
template <typename F>
double oracle_qt_boundary_min(F&& f, int samples = 10000) {
  const double legs[3] = {1.0, 1.0, std::sqrt(2.0)};
  const double perimeter = legs[0] + legs[1] + legs[2];
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= samples; ++k) {
    double s = perimeter * k / samples;
    ProjectedInvariant<double> p;
    if (s <= 1) {
      p = {0, s};
    } else if (s <= 2) {
      p = {s - 1, 0};
    } else {
      const double t = (s - 2) / legs[2];
      p = {t, 1 - t};
    }
    best = std::min(best, f(p));
  }
  return best;
}

// min over t in [lo, hi] of f(t) on a grid followed by zoom rounds.
template <typename F>
double oracle_ray_min(F&& f, double lo, double hi, int samples = 2000, int rounds = 6) {
  double bt = lo, fb = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= samples; ++i) {
    const double t = lo + (hi - lo) * i / samples;
    const double v = f(t);
    if (v < fb) fb = v, bt = t;
  }
  double h = (hi - lo) / samples;
  for (int r = 0; r < rounds; ++r) {
    const double c = bt;
    for (int i = -50; i <= 50; ++i) {
      const double t = std::clamp(c + h * i / 50, lo, hi);
      const double v = f(t);
      if (v < fb) fb = v, bt = t;
    }
    h /= 20;
  }
  return fb;
}

// Distances of all +- pairs of lattice vectors with |c_i| <= n, ascending.
inline std::vector<double> brute_pair_distances(const Basis<double>& b, int n) {
  std::vector<double> d;
  for (int c1 = 0; c1 <= n; ++c1)
    for (int c2 = -n; c2 <= n; ++c2) {
      if (c1 == 0 && c2 <= 0) continue;
      d.push_back((double(c1) * b.v1 + double(c2) * b.v2).norm());
    }
  std::sort(d.begin(), d.end());
  return d;
}

// True when v is a shortest vector of its class v + 2*Lambda, over |c_i| <= n; strict when no other vector ties.
struct ClassCheck {
  bool shortest;
  bool unique;
};

inline ClassCheck class_shortest(const Basis<double>& b, const V2& v, int n = 5) {
  const double lv = v.squaredNorm();
  bool shortest = true;
  int ties = 0;
  for (int c1 = -n; c1 <= n; ++c1)
    for (int c2 = -n; c2 <= n; ++c2) {
      const V2 w = v + 2.0 * (double(c1) * b.v1 + double(c2) * b.v2);
      const double lw = w.squaredNorm();
      if (lw < lv * (1 - 1e-9)) shortest = false;
      if (std::abs(lw - lv) <= 1e-9 * lv) ++ties;
    }
  // v and -v are always in the same class and tie with each other
  return {shortest, ties <= 2};
}

}  // namespace testkit

#endif  // LATTICE2D_TESTS_SUPPORT_HPP
