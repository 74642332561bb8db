#ifndef LATTICE2D_GEOMETRY_HPP
#define LATTICE2D_GEOMETRY_HPP

#include "lattice2d/error.hpp"
#include "lattice2d/types.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace lat2d {

template <typename Scalar>
void check_nondegenerate(const Vec2<Scalar>& v1, const Vec2<Scalar>& v2) {
  using std::abs;
  if (!v1.allFinite() || !v2.allFinite())
    throw Error(Errc::DegenerateBasis, "non-finite coordinates");
  const Scalar n1 = v1.norm();
  const Scalar n2 = v2.norm();
  if (!(n1 > 0) || !(n2 > 0) || abs(det(v1, v2)) <= Scalar(tol::degenerate) * n1 * n2)
    throw Error(Errc::DegenerateBasis, "basis vectors are (nearly) collinear");
}

template <typename Scalar>
Superbase<Scalar> make_superbase(const Basis<Scalar>& b) {
  check_nondegenerate(b.v1, b.v2);
  return {Vec2<Scalar>(-b.v1 - b.v2), b.v1, b.v2};
}

template <typename Scalar>
Conorms<Scalar> conorms(const Superbase<Scalar>& s) {
  return Conorms<Scalar>(-s.v1.dot(s.v2), -s.v0.dot(s.v1), -s.v0.dot(s.v2));
}

template <typename Scalar>
Vonorms<Scalar> vonorms(const Superbase<Scalar>& s) {
  return Vonorms<Scalar>(s.v0.squaredNorm(), s.v1.squaredNorm(), s.v2.squaredNorm());
}

// |c1 v1 + c2 v2|^2 from the conorms of (-(v1+v2), v1, v2).
template <typename Scalar>
Scalar norm_from_coefficients(long c1, long c2, const Conorms<Scalar>& p) {
  const Scalar a = Scalar(c1);
  const Scalar b = Scalar(c2);
  return a * a * p(1) + b * b * p(2) + (a - b) * (a - b) * p(0);
}

template <typename Scalar>
Scalar zero_tolerance(const Superbase<Scalar>& s) {
  return Scalar(tol::zero) * vonorms(s).maxCoeff();
}

template <typename Scalar>
bool is_obtuse(const Superbase<Scalar>& s) {
  return conorms(s).minCoeff() >= -zero_tolerance(s);
}

namespace detail {

// superbase indices (i, j) of the vectors meeting at conorm k, and the third index
inline void conorm_pair(int k, int& i, int& j, int& m) {
  switch (k) {
    case 0: i = 1; j = 2; m = 0; return;
    case 1: i = 0; j = 1; m = 2; return;
    default: i = 0; j = 2; m = 1; return;
  }
}

}  // namespace detail

template <typename Scalar>
int reduction_iteration_cap(const Superbase<Scalar>& s) {
  using std::ceil;
  using std::log2;
  const Vonorms<Scalar> vn = vonorms(s);
  return 64 + static_cast<int>(ceil(10 * log2(vn.maxCoeff() / vn.minCoeff())));
}

// Flips the most negative conorm until all conorms are >= -eps_zero.
// Runs of m >= 2 identical flips against the same shorter vector are applied at once.
template <typename Scalar>
Superbase<Scalar> reduce_to_obtuse(const Basis<Scalar>& b, int* iterations = nullptr) {
  using std::floor;
  Superbase<Scalar> s = make_superbase(b);
  const int cap = reduction_iteration_cap(s);
  for (int it = 0;; ++it) {
    const Conorms<Scalar> p = conorms(s);
    int k = 0;
    const Scalar pmin = p.minCoeff(&k);
    if (pmin >= -zero_tolerance(s)) {
      if (iterations) *iterations = it;
      return s;
    }
    if (it >= cap) throw Error(Errc::NonTermination, "reduction exceeded its iteration cap");

    int i, j, m;
    detail::conorm_pair(k, i, j, m);
    if (s[i].squaredNorm() > s[j].squaredNorm()) std::swap(i, j);
    const Vec2<Scalar> a = s[i];
    const Vec2<Scalar> c = s[j];
    const Scalar mult = floor(a.dot(c) / a.squaredNorm() + Scalar(0.5));
    if (mult >= 2) {
      const Vec2<Scalar> cr = c - mult * a;
      s[i] = a;
      s[j] = cr;
      s[m] = -a - cr;
    } else {
      s[i] = -a;
      s[j] = c;
      s[m] = a - c;
    }
    check_nondegenerate(s.v1, s.v2);
  }
}

}  // namespace lat2d

#endif  // LATTICE2D_GEOMETRY_HPP
