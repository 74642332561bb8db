#include "lattice2d/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

namespace {

using namespace lat2d;
using namespace lat2d::cli;

struct Streams {
  std::string in_path;
  std::string out_path;
  std::ifstream in_file;
  std::ofstream out_file;

  std::istream& in() {
    if (in_path.empty() || in_path == "-") return std::cin;
    in_file.open(in_path);
    if (!in_file) throw Error(Errc::ParseError, "cannot open " + in_path);
    return in_file;
  }

  std::ostream& out() {
    if (out_path.empty() || out_path == "-") return std::cout;
    out_file.open(out_path);
    if (!out_file) throw Error(Errc::ParseError, "cannot write " + out_path);
    return out_file;
  }
};

void add_io(CLI::App* sub, Streams& io, bool with_input = true) {
  if (with_input) sub->add_option("--in", io.in_path, "input file (JSONL or CSV), default stdin");
  sub->add_option("--out", io.out_path, "output file, default stdout");
}

Basis<double> basis_from_json(const std::string& text) {
  return parse_record("{\"basis\":" + text + "}").basis;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isometry and rigid-motion invariants of 2D lattices"};
  app.require_subcommand(1);
  Streams io;

  std::string mode = "isometry";
  std::string q = "inf";
  unsigned threads = 0;
  int samples = 101;
  std::string preset, start, end;
  double a = 1, b = 2;
  std::vector<double> deltas;
  double x = 0, y = 0, sigma = 1;
  int sign = 0;
  int k = 10;

  auto* inv = app.add_subcommand("invariant", "reduced superbase, RI, sign, PI and more per record");
  add_io(inv, io);

  auto* red = app.add_subcommand("reduce", "obtuse superbase and reduced bases per record");
  add_io(red, io);

  auto* dist = app.add_subcommand("dist", "distance between the two input lattices");
  add_io(dist, io);
  dist->add_option("--mode", mode)->check(CLI::IsMember({"isometry", "rigid", "similarity", "similarity-oriented"}));
  dist->add_option("--q", q, "Minkowski parameter, number >= 1 or inf");

  auto* mat = app.add_subcommand("matrix", "pairwise distance matrix as CSV");
  add_io(mat, io);
  mat->add_option("--mode", mode)->check(CLI::IsMember({"isometry", "rigid", "similarity", "similarity-oriented"}));
  mat->add_option("--q", q, "Minkowski parameter, number >= 1 or inf");
  mat->add_option("--threads", threads, "worker threads, 0 = hardware concurrency");

  auto* path = app.add_subcommand("path", "invariants along a linear deformation of a basis");
  add_io(path, io, false);
  auto* preset_opt = path->add_option("--preset", preset)->check(CLI::IsMember({"deformation"}));
  auto* start_opt = path->add_option("--start", start, "start basis [[a,b],[c,d]]");
  auto* end_opt = path->add_option("--end", end, "end basis [[a,b],[c,d]]");
  start_opt->excludes(preset_opt)->needs(end_opt);
  end_opt->excludes(preset_opt)->needs(start_opt);
  path->add_option("--samples", samples)->check(CLI::Range(2, 100000000));

  auto* disc = app.add_subcommand("discontinuity", "mirror pair near a rectangular lattice");
  add_io(disc, io, false);
  disc->add_option("--a", a);
  disc->add_option("--b", b);
  disc->add_option("--delta", deltas)->required();

  auto* des = app.add_subcommand("design", "lattice from a projected invariant, size and sign");
  add_io(des, io, false);
  des->add_option("--x", x)->required();
  des->add_option("--y", y)->required();
  des->add_option("--sigma", sigma)->required();
  des->add_option("--sign", sign)->required();

  auto* rs = app.add_subcommand("rsd", "first k neighbour distances per record");
  add_io(rs, io);
  rs->add_option("--k", k);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    std::ostream& out = io.out();
    if (*inv) return cmd_invariant(io.in(), out, std::cerr);
    if (*red) return cmd_reduce(io.in(), out, std::cerr);
    if (*dist) return cmd_dist(io.in(), out, std::cerr, parse_mode(mode), parse_q(q));
    if (*mat) return cmd_matrix(io.in(), out, std::cerr, parse_mode(mode), parse_q(q), threads);
    if (*path) {
      if (start.empty() && preset.empty()) throw Error(Errc::InvalidParams, "give --preset or --start/--end");
      const PathSpec spec = start.empty() ? deformation_preset() : PathSpec{basis_from_json(start), basis_from_json(end)};
      return cmd_path(spec, samples, out, std::cerr);
    }
    if (*disc) return cmd_discontinuity(a, b, deltas, out, std::cerr);
    if (*des) return cmd_design(x, y, sigma, sign, out, std::cerr);
    if (*rs) return cmd_rsd(io.in(), out, std::cerr, k);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return exit_code_for(e);
  }
  return 0;
}
