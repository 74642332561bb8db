#ifndef LATTICE2D_MINIMIZE_HPP
#define LATTICE2D_MINIMIZE_HPP

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <limits>

namespace lat2d {

template <typename Scalar>
struct Minimum {
  Scalar arg;
  Scalar value;
};

// Golden-section search for a unimodal f on [lo, hi].
template <typename Scalar, typename F>
Minimum<Scalar> golden_section(F&& f, Scalar lo, Scalar hi, Scalar tol, int max_iter = 200) {
  using std::sqrt;
  const Scalar invphi = (sqrt(Scalar(5)) - 1) / 2;
  Scalar a = lo, b = hi;
  Scalar c = b - invphi * (b - a);
  Scalar d = a + invphi * (b - a);
  Scalar fc = f(c), fd = f(d);
  for (int it = 0; it < max_iter && b - a > tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  Minimum<Scalar> best{c, fc};
  if (fd < best.value) best = {d, fd};
  for (Scalar e : {lo, hi}) {
    const Scalar fe = f(e);
    if (fe < best.value) best = {e, fe};
  }
  return best;
}

// min f(u, w) over 0 <= u <= w <= w_max for jointly convex f.
template <typename Scalar, typename F>
Minimum<Scalar> golden_section_wedge(F&& f, Scalar w_max, Scalar tol) {
  auto inner = [&](Scalar w) {
    return golden_section([&](Scalar u) { return f(u, w); }, Scalar(0), w, tol).value;
  };
  return golden_section(inner, Scalar(0), w_max, tol);
}

// Minimizes c.x subject to G x <= h by enumerating vertices; the problem must be bounded with a vertex optimum.
template <typename Scalar, int N, int M>
Scalar lp_vertex_min(const Eigen::Matrix<Scalar, N, 1>& c, const Eigen::Matrix<Scalar, M, N>& G,
                     const Eigen::Matrix<Scalar, M, 1>& h, Scalar feas_tol) {
  using std::abs;
  Scalar best = std::numeric_limits<Scalar>::infinity();
  std::array<int, N> pick{};
  for (int k = 0; k < N; ++k) pick[k] = k;
  for (;;) {
    Eigen::Matrix<Scalar, N, N> A;
    Eigen::Matrix<Scalar, N, 1> b;
    for (int k = 0; k < N; ++k) {
      A.row(k) = G.row(pick[k]);
      b(k) = h(pick[k]);
    }
    Eigen::FullPivLU<Eigen::Matrix<Scalar, N, N>> lu(A);
    if (lu.isInvertible()) {
      const Eigen::Matrix<Scalar, N, 1> x = lu.solve(b);
      if (((G * x - h).array() <= feas_tol).all()) {
        const Scalar v = c.dot(x);
        if (v < best) best = v;
      }
    }
    int k = N - 1;
    while (k >= 0 && pick[k] == M - N + k) --k;
    if (k < 0) break;
    ++pick[k];
    for (int j = k + 1; j < N; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

}  // namespace lat2d

#endif  // LATTICE2D_MINIMIZE_HPP
