#include "support.hpp"

#include <doctest.h>

using namespace lat2d;
using namespace testkit;

namespace {

bool near_ri(const RootInvariant<double>& a, const RootInvariant<double>& b, double rel) {
  return (a - b).cwiseAbs().maxCoeff() <= rel * std::max(a(2), b(2));
}

double angle(const V2& a, const V2& b) { return std::atan2(std::abs(det(a, b)), a.dot(b)); }

}  // namespace

TEST_SUITE("design") {

TEST_CASE("ri_from_pi examples") {
  CHECK(near_ri(ri_from_pi(ProjectedInvariant<double>(0.5, 0.5), 6.0), RootInvariant<double>(1, 1, 4), 1e-15));
  CHECK(near_ri(ri_from_pi(ProjectedInvariant<double>(0, 1), 3.0), RootInvariant<double>(1, 1, 1), 1e-15));
  CHECK(near_ri(ri_from_pi(ProjectedInvariant<double>(0, 0), 2.0), RootInvariant<double>(0, 1, 1), 1e-15));
  CHECK(near_ri(ri_from_pi(ProjectedInvariant<double>(0.25, 0.25), 12.0), RootInvariant<double>(1, 4, 7), 1e-15));
  CHECK_THROWS_AS(ri_from_pi(ProjectedInvariant<double>(0.7, 0.7), 1.0), Error);
  CHECK_THROWS_AS(ri_from_pi(ProjectedInvariant<double>(0.2, 0.2), 0.0), Error);
}

TEST_CASE("superbase_from_ri examples") {
  const Superbase<double> l0 = superbase_from_ri(RootInvariant<double>(1, 1, 4), Sign::zero);
  CHECK(l0.v1.x() == doctest::Approx(std::sqrt(2.0)));
  CHECK(l0.v1.y() == 0);
  CHECK(l0.v2.x() == doctest::Approx(-1 / std::sqrt(2.0)));
  CHECK(l0.v2.y() == doctest::Approx(std::sqrt(33.0) / std::sqrt(2.0)));
  CHECK(l0.v0.x() == doctest::Approx(-1 / std::sqrt(2.0)));
  CHECK(l0.v0.y() == doctest::Approx(-std::sqrt(33.0) / std::sqrt(2.0)));

  const Superbase<double> hex = superbase_from_ri(RootInvariant<double>(1, 1, 1), Sign::zero);
  for (int i = 0; i < 3; ++i) CHECK(hex[i].norm() == doctest::Approx(std::sqrt(2.0)));
  CHECK(angle(hex.v1, hex.v2) == doctest::Approx(2 * kPi / 3));

  for (int sg : {1, -1}) {
    const Superbase<double> s = superbase_from_ri(RootInvariant<double>(1, 4, 7), sign_from_int(sg));
    CHECK(s.v1.x() == doctest::Approx(std::sqrt(17.0)));
    CHECK(s.v2.x() == doctest::Approx(-0.24).epsilon(0.02));
    CHECK(s.v2.y() == doctest::Approx(sg * 7.1).epsilon(0.01));
    CHECK(sign_of(s) == sign_from_int(sg));
  }
  CHECK_THROWS_AS(superbase_from_ri(RootInvariant<double>(1, 4, 7), Sign::zero), Error);
  CHECK_THROWS_AS(superbase_from_ri(RootInvariant<double>(1, 1, 4), Sign::positive), Error);
}

TEST_CASE("cell_area and reconstruction angle examples") {
  CHECK(cell_area(RootInvariant<double>(0, 1, 1)) == 1);
  CHECK(cell_area(RootInvariant<double>(1, 1, 1)) == doctest::Approx(std::sqrt(3.0)));
  CHECK(cell_area(RootInvariant<double>(1, 1, 1)) ==
        doctest::Approx(std::abs(det(V2(std::sqrt(2.0), 0), V2(-std::sqrt(2.0) / 2, std::sqrt(6.0) / 2)))));
  CHECK(cell_area(RootInvariant<double>(1, 4, 7)) == doctest::Approx(std::sqrt(849.0)));

  CHECK(reconstruction_angle_from_pi(ProjectedInvariant<double>(0.5, 0.5)) ==
        doctest::Approx(std::acos(-1 / std::sqrt(34.0))));
  CHECK(reconstruction_angle_from_pi(ProjectedInvariant<double>(0.5, 0.5)) * 180 / kPi == doctest::Approx(99.9).epsilon(1e-3));
  CHECK(reconstruction_angle_from_pi(ProjectedInvariant<double>(0.25, 0.25)) ==
        doctest::Approx(std::acos(-1 / std::sqrt(850.0))));
  CHECK(reconstruction_angle_from_pi(ProjectedInvariant<double>(0, 0)) == doctest::Approx(kPi / 2));
  CHECK_THROWS_AS(reconstruction_angle_from_pi(ProjectedInvariant<double>(-0.1, 0.5)), Error);
}

TEST_CASE("lattice_mix and ri_dot") {
  const RootInvariant<double> sq(0, 1, 1), hex(1, 1, 1), l0(1, 1, 4);
  CHECK(lattice_mix(sq, hex, 0.5) == RootInvariant<double>(0.5, 1, 1));
  CHECK(lattice_mix(l0, l0, 0.3) == l0);
  CHECK(lattice_mix(sq, hex, 0.0) == hex);
  CHECK_THROWS_AS(lattice_mix(sq, hex, 1.5), Error);
  CHECK(ri_dot(sq, hex) == 2);
  CHECK(ri_dot(l0, l0) == l0.squaredNorm());
  CHECK(ri_dot(l0, sq) == 5);
}

TEST_CASE("mix of square and hexagonal lattices") {
  const RootInvariant<double> mix = lattice_mix(RootInvariant<double>(0, 1, 1), RootInvariant<double>(1, 1, 1), 0.5);
  const Superbase<double> s = superbase_from_ri(mix, Sign::zero);
  CHECK(s.v1.norm() == doctest::Approx(std::sqrt(5.0) / 2));
  CHECK(s.v2.norm() == doctest::Approx(std::sqrt(5.0) / 2));
  CHECK(s.v1.dot(s.v2) == doctest::Approx(-0.25));
  CHECK(cell_area(mix) == doctest::Approx(std::sqrt(1.5)));
  CHECK(near_ri(oracle_root_invariant(Basis<double>{s.v1, s.v2}), mix, 1e-12));
  // the basis printed alongside this example belongs to a different lattice
  const Basis<double> printed{V2(std::sqrt(1.5), 0), V2(-std::sqrt(1.5) / 9, 4 * std::sqrt(7.5) / 9)};
  const RootInvariant<double> rp = oracle_root_invariant(printed);
  CHECK(near_ri(rp, RootInvariant<double>(std::sqrt(1.0 / 6), std::sqrt(4.0 / 3), std::sqrt(4.0 / 3)), 1e-12));
  CHECK_FALSE(near_ri(rp, mix, 1e-3));
}

TEST_CASE("property: round trips") {
  Rng rng(51);
  for (int i = 0; i < 5000; ++i) {
    const ProjectedInvariant<double> p = random_pi(rng);
    const double sigma = std::exp(uniform(rng, -3, 3));
    const RootInvariant<double> r = ri_from_pi(p, sigma);
    CHECK(size(r) == doctest::Approx(sigma).epsilon(1e-12));
    CHECK((projected_invariant(r) - p).cwiseAbs().maxCoeff() <= 1e-12);

    const RootInvariant<double> ri = random_ri(rng);
    const Sign sg = is_mirror_symmetric(ri) ? Sign::zero : sign_from_int(uniform_int(rng, 0, 1) ? 1 : -1);
    const Superbase<double> s = superbase_from_ri(ri, sg);
    CHECK(near_ri(root_invariant(s), ri, 1e-9));
    CHECK(is_obtuse(s));
    CHECK(sign_of(s) == sg);
    CHECK(s.v0 == V2(-(s.v1 + s.v2)));
    CHECK(cell_area(ri) == doctest::Approx(std::abs(det(s.v1, s.v2))).epsilon(1e-9));
  }
}

TEST_CASE("property: reconstruction angle matches the reconstructed superbase") {
  Rng rng(52);
  for (int i = 0; i < 5000; ++i) {
    const ProjectedInvariant<double> p = random_pi(rng);
    if (p.y() < 1e-6) continue;
    const double sigma = std::exp(uniform(rng, -2, 2));
    const RootInvariant<double> r = ri_from_pi(p, sigma);
    const double n1 = std::sqrt(r(0) * r(0) + r(1) * r(1)), n2 = std::sqrt(r(0) * r(0) + r(2) * r(2));
    const double expect = std::acos(-r(0) * r(0) / (n1 * n2));
    const double got = reconstruction_angle_from_pi(p);
    CHECK(got == doctest::Approx(expect).epsilon(1e-9));
    CHECK(got >= kPi / 2 - 1e-12);
    CHECK(got < kPi);
  }
}

TEST_CASE("property: convex mixtures stay in the cone") {
  Rng rng(53);
  for (int i = 0; i < 2000; ++i) {
    const RootInvariant<double> a = random_ri(rng), b = random_ri(rng);
    const RootInvariant<double> m = lattice_mix(a, b, uniform(rng, 0, 1));
    CHECK_NOTHROW(check_root_invariant(m));
    CHECK(m(0) <= m(1));
    CHECK(m(1) <= m(2));
    CHECK(ri_dot(a, b) >= 0);
  }
}

}  // TEST_SUITE
