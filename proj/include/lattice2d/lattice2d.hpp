#ifndef LATTICE2D_LATTICE2D_HPP
#define LATTICE2D_LATTICE2D_HPP

#include "lattice2d/chirality.hpp"
#include "lattice2d/design.hpp"
#include "lattice2d/error.hpp"
#include "lattice2d/geometry.hpp"
#include "lattice2d/invariants.hpp"
#include "lattice2d/metrics.hpp"
#include "lattice2d/minimize.hpp"
#include "lattice2d/neighbors.hpp"
#include "lattice2d/types.hpp"

#endif  // LATTICE2D_LATTICE2D_HPP
