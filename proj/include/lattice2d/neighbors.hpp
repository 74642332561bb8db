#ifndef LATTICE2D_NEIGHBORS_HPP
#define LATTICE2D_NEIGHBORS_HPP

#include "lattice2d/types.hpp"

#include <vector>

namespace lat2d {

struct VoronoiVector {
  Vec2<double> v;
  bool strict;
};

// +v1, +v2, +v0, -v1, -v2, -v0
std::vector<VoronoiVector> voronoi_vectors(const Superbase<double>& s);

// First k distances from the origin to its neighbours, one per +- pair.
std::vector<double> rsd(const Superbase<double>& s, int k);

// Same as rsd but squared, without the final square roots.
std::vector<double> rsd_squared(const Superbase<double>& s, int k);

struct VonormExtraction {
  Vonorms<double> vonorms;  // (|v0|^2, |v1|^2, |v2|^2) with |v1| <= |v2| <= |v0|
  bool ambiguous = false;   // d2 or d3 coincided with a removed multiple
};

VonormExtraction extract_vonorms_from_rsd(const std::vector<double>& d);

// Brute force: k-th smallest +- pair distance, box radius doubled until the value is stable.
double kth_distance_oracle(const Basis<double>& b, int k);

}  // namespace lat2d

#endif  // LATTICE2D_NEIGHBORS_HPP
