#include "lattice2d/neighbors.hpp"

#include "lattice2d/error.hpp"
#include "lattice2d/geometry.hpp"
#include "lattice2d/invariants.hpp"

#include <algorithm>
#include <cmath>

namespace lat2d {

std::vector<VoronoiVector> voronoi_vectors(const Superbase<double>& s) {
  obtuse_conorms(s);
  const Conorms<double> p = conorms(s);
  const double eps = zero_tolerance(s);
  // v_i is tied in its class exactly when the conorm p_jk of the other two vanishes
  const bool strict0 = p(0) > eps;
  const bool strict2 = p(1) > eps;
  const bool strict1 = p(2) > eps;
  return {{s.v1, strict1}, {s.v2, strict2}, {s.v0, strict0},
          {-s.v1, strict1}, {-s.v2, strict2}, {-s.v0, strict0}};
}

namespace {

std::vector<double> pair_norms_in_box(const Vec2<double>& v1, const Vec2<double>& v2, long R) {
  std::vector<double> out;
  out.reserve(static_cast<size_t>((R + 1) * (2 * R + 1)));
  for (long c1 = 0; c1 <= R; ++c1)
    for (long c2 = -R; c2 <= R; ++c2) {
      if (c1 == 0 && c2 <= 0) continue;
      out.push_back((double(c1) * v1 + double(c2) * v2).squaredNorm());
    }
  return out;
}

}  // namespace

std::vector<double> rsd_squared(const Superbase<double>& s, int k) {
  if (k < 1) throw Error(Errc::InvalidParams, "k must be positive");
  const Superbase<double> r = reduce_to_obtuse(Basis<double>{s.v1, s.v2});
  const double height = std::abs(det(r.v1, r.v2)) / std::max(r.v1.norm(), r.v2.norm());
  long R = std::max(2L, static_cast<long>(std::ceil(std::sqrt(double(k)))) + 1);
  for (;;) {
    std::vector<double> d = pair_norms_in_box(r.v1, r.v2, R);
    if (static_cast<long>(d.size()) >= k) {
      std::partial_sort(d.begin(), d.begin() + k, d.end());
      const double bound = double(R + 1) * height;
      if (d[k - 1] <= bound * bound) {
        d.resize(static_cast<size_t>(k));
        return d;
      }
    }
    R *= 2;
  }
}

std::vector<double> rsd(const Superbase<double>& s, int k) {
  std::vector<double> d = rsd_squared(s, k);
  for (double& x : d) x = std::sqrt(x);
  return d;
}

namespace {

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

bool is_multiple(double v, double base, double tol) {
  const double k = std::round(v / base);
  return k >= 2 && near(v, k * base, tol);
}

void remove_multiples(std::vector<double>& rest, double base, double top, double tol) {
  for (long k = 2; double(k) * base < top - tol; ++k) {
    const double target = double(k) * base;
    auto it = std::find_if(rest.begin(), rest.end(), [&](double x) { return near(x, target, tol); });
    if (it == rest.end()) throw Error(Errc::InconsistentRSD, "a multiple of a Voronoi length is missing");
    rest.erase(it);
  }
}

double take_next(std::vector<double>& rest, double top, double tol, double d1, double d2) {
  if (rest.empty()) throw Error(Errc::InsufficientLength, "sequence too short to extract vonorms");
  const double v = rest.front();
  if (v >= top - tol && (is_multiple(v, d1, tol) || (d2 > 0 && is_multiple(v, d2, tol))))
    throw Error(Errc::InsufficientLength, "sequence ends where a multiple could hide");
  rest.erase(rest.begin());
  return v;
}

}  // namespace

VonormExtraction extract_vonorms_from_rsd(const std::vector<double>& d) {
  if (d.size() < 3) throw Error(Errc::InsufficientLength, "need at least three distances");
  std::vector<double> rest(d);
  std::sort(rest.begin(), rest.end());
  if (!(rest.front() > 0)) throw Error(Errc::InconsistentRSD, "distances must be positive");
  const double top = rest.back();
  const double d1 = rest.front();
  const double tol = 1e-9 * d1;
  rest.erase(rest.begin());

  VonormExtraction out;
  remove_multiples(rest, d1, top, tol);
  const double d2 = take_next(rest, top, tol, d1, 0);
  out.ambiguous = near(d2, d1, tol) || is_multiple(d2, d1, tol);
  remove_multiples(rest, d2, top, tol);
  const double d3 = take_next(rest, top, tol, d1, d2);
  out.ambiguous = out.ambiguous || is_multiple(d3, d1, tol) || is_multiple(d3, d2, tol);
  out.vonorms = Vonorms<double>(d3 * d3, d1 * d1, d2 * d2);
  return out;
}

double kth_distance_oracle(const Basis<double>& b, int k) {
  if (k < 1) throw Error(Errc::InvalidParams, "k must be positive");
  check_nondegenerate(b.v1, b.v2);
  auto kth = [&](long R) {
    std::vector<double> d = pair_norms_in_box(b.v1, b.v2, R);
    std::sort(d.begin(), d.end());
    return std::sqrt(d[static_cast<size_t>(k - 1)]);
  };
  long R = std::max(2L, static_cast<long>(k));
  double prev = kth(R);
  for (;;) {
    R *= 2;
    const double cur = kth(R);
    if (cur == prev) return cur;
    prev = cur;
  }
}

}  // namespace lat2d
