#ifndef LATTICE2D_TYPES_HPP
#define LATTICE2D_TYPES_HPP

#include <Eigen/Core>

#include <cmath>
#include <limits>

namespace lat2d {

template <typename Scalar>
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;

template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;

// (p12, p01, p02), p_ij = -v_i . v_j
template <typename Scalar>
using Conorms = Vec3<Scalar>;

// (v0^2, v1^2, v2^2)
template <typename Scalar>
using Vonorms = Vec3<Scalar>;

// nondecreasing root products (r12, r01, r02)
template <typename Scalar>
using RootInvariant = Vec3<Scalar>;

// (x, y) inside the quotient triangle 0 <= x < 1, 0 <= y, x + y <= 1
template <typename Scalar>
using ProjectedInvariant = Vec2<Scalar>;

template <typename Scalar>
struct Basis {
  Vec2<Scalar> v1;
  Vec2<Scalar> v2;
};

template <typename Scalar>
struct Superbase {
  Vec2<Scalar> v0;
  Vec2<Scalar> v1;
  Vec2<Scalar> v2;

  const Vec2<Scalar>& operator[](int i) const { return i == 0 ? v0 : (i == 1 ? v1 : v2); }
  Vec2<Scalar>& operator[](int i) { return i == 0 ? v0 : (i == 1 ? v1 : v2); }
};

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }

inline Sign sign_from_int(int s) { return s > 0 ? Sign::positive : (s < 0 ? Sign::negative : Sign::zero); }

inline Sign flipped(Sign s) { return sign_from_int(-to_int(s)); }

template <typename Scalar>
struct OrientedRootInvariant {
  RootInvariant<Scalar> ri;
  Sign sign = Sign::zero;
};

template <typename Scalar>
struct OrientedProjectedInvariant {
  ProjectedInvariant<Scalar> pi;
  Sign sign = Sign::zero;
};

enum class PointGroup { D2, D4, D6 };

// Minkowski parameter q; +infinity selects the max-norm.
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

namespace tol {
// conorms within zero * max(vonorm) of 0 count as 0
inline constexpr double zero = 1e-9;
// |det(v1,v2)| / (|v1||v2|) below this is a degenerate basis
inline constexpr double degenerate = 1e-12;
// root products within equal * r02 count as equal
inline constexpr double equal = 1e-9;
// distance to the boundary of the quotient triangle
inline constexpr double boundary = 1e-9;
}  // namespace tol

template <typename Scalar>
Scalar det(const Vec2<Scalar>& a, const Vec2<Scalar>& b) {
  return a.x() * b.y() - a.y() * b.x();
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  return m.allFinite();
}

}  // namespace lat2d

#endif  // LATTICE2D_TYPES_HPP
