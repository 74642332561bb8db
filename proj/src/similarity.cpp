#include "lattice2d/metrics.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace lat2d {

namespace {

using V = Vec2<double>;

double spread(const std::array<V, 3>& u, const std::array<V, 3>& v, double theta) {
  const Eigen::Rotation2D<double> rot(theta);
  double m = 0;
  for (int i = 0; i < 3; ++i) m = std::max(m, (rot * u[i] - v[i]).norm());
  return m;
}

double best_rotation(const std::array<V, 3>& u, const std::array<V, 3>& v, const SimOptions& opt) {
  const double step = 2 * std::numbers::pi / opt.grid;
  std::vector<double> g(static_cast<size_t>(opt.grid));
  for (int k = 0; k < opt.grid; ++k) g[k] = spread(u, v, k * step);
  double best = *std::min_element(g.begin(), g.end());
  for (int k = 0; k < opt.grid; ++k) {
    const double prev = g[(k + opt.grid - 1) % opt.grid];
    const double next = g[(k + 1) % opt.grid];
    if (g[k] > prev || g[k] > next) continue;
    const Minimum<double> m = golden_section([&](double t) { return spread(u, v, t); }, (k - 1) * step,
                                             (k + 1) * step, opt.tol_angle, opt.refine_iterations);
    best = std::min(best, m.value);
  }
  return best;
}

}  // namespace

double superbase_isometry_metric(const Superbase<double>& s1, const Superbase<double>& s2, bool oriented,
                                 const SimOptions& opt) {
  obtuse_conorms(s1);
  obtuse_conorms(s2);
  const std::array<V, 3> v{s2.v0, s2.v1, s2.v2};
  double best = std::numeric_limits<double>::infinity();
  for (int reflect = 0; reflect < (oriented ? 1 : 2); ++reflect) {
    for (int shift = 0; shift < 3; ++shift) {
      std::array<V, 3> u;
      for (int i = 0; i < 3; ++i) {
        u[i] = s1[(i + shift) % 3];
        if (reflect) u[i].y() = -u[i].y();
      }
      best = std::min(best, best_rotation(u, v, opt));
    }
  }
  return best;
}

}  // namespace lat2d
