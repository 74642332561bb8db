#ifndef LATTICE2D_CLI_COMMANDS_HPP
#define LATTICE2D_CLI_COMMANDS_HPP

#include "lattice2d/cli/io.hpp"
#include "lattice2d/types.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace lat2d::cli {

enum class EquivalenceMode { isometry, rigid, similarity, similarity_oriented };

EquivalenceMode parse_mode(const std::string& s);
const char* mode_name(EquivalenceMode m);

// "inf", "infinity" or a number >= 1.
double parse_q(const std::string& s);

// Exit codes: 0 ok, 1 input error, 2 numeric failure.
int exit_code_for(const Error& e);

// RM, RM-oriented, PM or PM-oriented between two lattices, computed from their reduced superbases.
double lattice_distance(const Basis<double>& a, const Basis<double>& b, EquivalenceMode mode, double q);

int cmd_invariant(std::istream& in, std::ostream& out, std::ostream& err);
int cmd_reduce(std::istream& in, std::ostream& out, std::ostream& err);
int cmd_dist(std::istream& in, std::ostream& out, std::ostream& err, EquivalenceMode mode, double q);
int cmd_matrix(std::istream& in, std::ostream& out, std::ostream& err, EquivalenceMode mode, double q,
               unsigned threads = 0);
std::vector<std::vector<double>> distance_matrix(const std::vector<LatticeRecord>& recs, EquivalenceMode mode,
                                                 double q, unsigned threads = 0);

struct PathSpec {
  Basis<double> start;
  Basis<double> end;
};

PathSpec deformation_preset();
int cmd_path(const PathSpec& spec, int samples, std::ostream& out, std::ostream& err);

struct DiscontinuityRow {
  double delta;
  double rm_inf;           // up to isometry, 0 for mirror images
  double rm_inf_oriented;  // up to rigid motion
  double linear_bound;     // 2 delta a
  double sqrt_bound;       // 2 sqrt(delta a)
  double cm_inf;
  double sim_inf_oriented;
  double sim_lower_bound;  // CM / (2 l)
  double uniform_bound;    // min{a^2/3, b^2-a^2} / (2 sqrt(a^2+b^2))
};

Superbase<double> discontinuity_superbase(double a, double b, double delta, bool plus);
DiscontinuityRow discontinuity_row(double a, double b, double delta);
int cmd_discontinuity(double a, double b, const std::vector<double>& deltas, std::ostream& out, std::ostream& err);

int cmd_design(double x, double y, double sigma, int sign, std::ostream& out, std::ostream& err);
int cmd_rsd(std::istream& in, std::ostream& out, std::ostream& err, int k);

}  // namespace lat2d::cli

#endif  // LATTICE2D_CLI_COMMANDS_HPP
