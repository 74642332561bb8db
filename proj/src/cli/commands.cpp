#include "lattice2d/cli/commands.hpp"

#include "lattice2d/chirality.hpp"
#include "lattice2d/design.hpp"
#include "lattice2d/geometry.hpp"
#include "lattice2d/invariants.hpp"
#include "lattice2d/metrics.hpp"
#include "lattice2d/neighbors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <thread>

namespace lat2d::cli {

EquivalenceMode parse_mode(const std::string& s) {
  if (s == "isometry") return EquivalenceMode::isometry;
  if (s == "rigid") return EquivalenceMode::rigid;
  if (s == "similarity") return EquivalenceMode::similarity;
  if (s == "similarity-oriented") return EquivalenceMode::similarity_oriented;
  throw Error(Errc::InvalidParams, "unknown mode '" + s + "'");
}

const char* mode_name(EquivalenceMode m) {
  switch (m) {
    case EquivalenceMode::isometry: return "isometry";
    case EquivalenceMode::rigid: return "rigid";
    case EquivalenceMode::similarity: return "similarity";
    case EquivalenceMode::similarity_oriented: return "similarity-oriented";
  }
  return "?";
}

double parse_q(const std::string& s) {
  if (s == "inf" || s == "infinity" || s == "+inf") return kInfinity;
  double q = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), q);
  if (ec != std::errc() || p != s.data() + s.size()) throw Error(Errc::InvalidParams, "bad value for q: '" + s + "'");
  check_q(q);
  return q;
}

int exit_code_for(const Error& e) { return is_numeric_failure(e.code()) ? 2 : 1; }

namespace {

struct LatticeInvariants {
  OrientedRootInvariant<double> ori;
  OrientedProjectedInvariant<double> opi;
};

LatticeInvariants invariants_of(const Basis<double>& b) {
  const Superbase<double> s = reduce_to_obtuse(b);
  const OrientedRootInvariant<double> ori = oriented_root_invariant(s);
  return {ori, {projected_invariant(ori.ri), ori.sign}};
}

double distance(const LatticeInvariants& a, const LatticeInvariants& b, EquivalenceMode mode, double q) {
  switch (mode) {
    case EquivalenceMode::isometry: return root_metric(a.ori.ri, b.ori.ri, q);
    case EquivalenceMode::rigid: return oriented_root_metric(a.ori, b.ori, q);
    case EquivalenceMode::similarity: return projected_metric(a.opi.pi, b.opi.pi, q);
    case EquivalenceMode::similarity_oriented: return oriented_projected_metric(a.opi, b.opi, q);
  }
  return 0;
}

std::string superbase_json(const Superbase<double>& s) {
  return "[" + json_vec(s.v0) + "," + json_vec(s.v1) + "," + json_vec(s.v2) + "]";
}

void report(std::ostream& err, std::string_view id, std::size_t line_no, const Error& e) {
  err << fmt::format("line {}{}: {}\n", line_no, id.empty() ? "" : fmt::format(" ({})", id), e.what());
}

// Runs f on every parsed record; errors become error records and the worst exit code is returned.
template <typename F>
int for_each_record(std::istream& in, std::ostream& out, std::ostream& err, F&& f) {
  int code = 0;
  for (const InputLine& il : read_records(in)) {
    try {
      if (il.error) throw *il.error;
      out << f(*il.record) << '\n';
    } catch (const Error& e) {
      out << emit_error(il.id, e) << '\n';
      report(err, il.id, il.line_no, e);
      code = std::max(code, exit_code_for(e));
    }
  }
  return code;
}

std::vector<LatticeRecord> valid_records(std::istream& in) {
  std::vector<LatticeRecord> recs;
  for (InputLine& il : read_records(in)) {
    if (il.error)
      throw Error(il.error->code(), fmt::format("line {} ({}): {}", il.line_no, il.id, il.error->what()));
    recs.push_back(std::move(*il.record));
  }
  return recs;
}

}  // namespace

double lattice_distance(const Basis<double>& a, const Basis<double>& b, EquivalenceMode mode, double q) {
  check_q(q);
  return distance(invariants_of(a), invariants_of(b), mode, q);
}

int cmd_invariant(std::istream& in, std::ostream& out, std::ostream& err) {
  return for_each_record(in, out, err, [](const LatticeRecord& r) {
    const Superbase<double> s = reduce_to_obtuse(r.basis);
    const RootInvariant<double> ri = root_invariant(s);
    const Sign sg = sign_of(s);
    const ProjectedInvariant<double> pi = projected_invariant(ri);
    return fmt::format(
        "{{\"id\":{},\"superbase\":{},\"ri\":{},\"sign\":{},\"sigma\":{},\"pi\":{},\"pi_oriented\":{{\"pi\":{},"
        "\"sign\":{}}},\"metric_tensor\":{},\"area\":{},\"vonorms\":{}}}",
        json_string(r.id), superbase_json(s), json_vec(ri), to_int(sg), format_real(size(ri)), json_vec(pi),
        json_vec(pi), to_int(sg), json_vec(metric_tensor(ri)), format_real(std::abs(det(s.v1, s.v2))),
        json_vec(vonorms(s)));
  });
}

int cmd_reduce(std::istream& in, std::ostream& out, std::ostream& err) {
  return for_each_record(in, out, err, [](const LatticeRecord& r) {
    int iterations = 0;
    const Superbase<double> s = reduce_to_obtuse(r.basis, &iterations);
    const Basis<double> iso = reduced_basis(s, ReductionMode::isometry);
    const Basis<double> rig = reduced_basis(s, ReductionMode::rigid);
    return fmt::format(
        "{{\"id\":{},\"superbase\":{},\"conorms\":{},\"vonorms\":{},\"iterations\":{},\"reduced_isometry\":{},"
        "\"reduced_rigid\":{}}}",
        json_string(r.id), superbase_json(s), json_vec(obtuse_conorms(s)), json_vec(vonorms(s)), iterations,
        json_basis(iso.v1, iso.v2), json_basis(rig.v1, rig.v2));
  });
}

int cmd_dist(std::istream& in, std::ostream& out, std::ostream& err, EquivalenceMode mode, double q) {
  try {
    const std::vector<LatticeRecord> recs = valid_records(in);
    if (recs.size() != 2) throw Error(Errc::InvalidParams, fmt::format("dist needs 2 records, got {}", recs.size()));
    out << format_real(lattice_distance(recs[0].basis, recs[1].basis, mode, q)) << '\n';
    return 0;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code_for(e);
  }
}

std::vector<std::vector<double>> distance_matrix(const std::vector<LatticeRecord>& recs, EquivalenceMode mode,
                                                 double q, unsigned threads) {
  check_q(q);
  const std::size_t n = recs.size();
  std::vector<LatticeInvariants> inv;
  inv.reserve(n);
  for (const LatticeRecord& r : recs) {
    try {
      inv.push_back(invariants_of(r.basis));
    } catch (const Error& e) {
      throw Error(e.code(), fmt::format("record {}: {}", r.id, e.what()));
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) cells.emplace_back(i, j);

  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, cells.size())));
  std::vector<std::exception_ptr> failures(threads);
  auto work = [&](unsigned t) {
    try {
      for (std::size_t c = t; c < cells.size(); c += threads) {
        const auto [i, j] = cells[c];
        m[i][j] = m[j][i] = distance(inv[i], inv[j], mode, q);
      }
    } catch (...) {
      failures[t] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
  work(0);
  for (std::thread& th : pool) th.join();
  for (const std::exception_ptr& f : failures)
    if (f) std::rethrow_exception(f);
  return m;
}

int cmd_matrix(std::istream& in, std::ostream& out, std::ostream& err, EquivalenceMode mode, double q,
               unsigned threads) {
  try {
    const std::vector<LatticeRecord> recs = valid_records(in);
    if (recs.size() < 2) throw Error(Errc::InvalidParams, "matrix needs at least 2 records");
    const auto m = distance_matrix(recs, mode, q, threads);
    out << "id";
    for (const LatticeRecord& r : recs) out << ',' << csv_field(r.id);
    out << "\r\n";
    for (std::size_t i = 0; i < recs.size(); ++i) {
      out << csv_field(recs[i].id);
      for (double v : m[i]) out << ',' << format_real(v);
      out << "\r\n";
    }
    return 0;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code_for(e);
  }
}

PathSpec deformation_preset() {
  return {{Vec2<double>(1, 0), Vec2<double>(0, 1)}, {Vec2<double>(1, 0), Vec2<double>(1, 1)}};
}

int cmd_path(const PathSpec& spec, int samples, std::ostream& out, std::ostream& err) {
  try {
    if (samples < 2) throw Error(Errc::InvalidParams, "samples must be >= 2");
    std::vector<std::string> rows;
    rows.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
      const double t = double(i) / (samples - 1);
      const Basis<double> b{(1 - t) * spec.start.v1 + t * spec.end.v1, (1 - t) * spec.start.v2 + t * spec.end.v2};
      try {
        check_nondegenerate(b.v1, b.v2);
      } catch (const Error&) {
        throw Error(Errc::DegeneratePath, fmt::format("degenerate basis at t={}", format_real(t)));
      }
      const Superbase<double> s = reduce_to_obtuse(b);
      const RootInvariant<double> ri = root_invariant(s);
      const ProjectedInvariant<double> pi = projected_invariant(ri);
      const Basis<double> rb = reduced_basis(s, ReductionMode::rigid);
      rows.push_back(fmt::format("{},{},{},{},{},{},{},{},{},{},{}", format_real(t), format_real(ri(0)),
                                 format_real(ri(1)), format_real(ri(2)), format_real(pi.x()), format_real(pi.y()),
                                 to_int(sign_of(s)), format_real(rb.v1.x()), format_real(rb.v1.y()),
                                 format_real(rb.v2.x()), format_real(rb.v2.y())));
    }
    out << "t,r12,r01,r02,x,y,sign,b1x,b1y,b2x,b2y\r\n";
    for (const std::string& r : rows) out << r << "\r\n";
    return 0;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code_for(e);
  }
}

Superbase<double> discontinuity_superbase(double a, double b, double delta, bool plus) {
  if (!(delta >= 0 && 3 * delta < a && a < b) || !std::isfinite(b))
    throw Error(Errc::InvalidParams, "need 0 <= 3 delta < a < b");
  Superbase<double> s;
  s.v1 = Vec2<double>(a, 0);
  s.v2 = plus ? Vec2<double>(-delta, b) : Vec2<double>(delta - a, b);
  s.v0 = -s.v1 - s.v2;
  return s;
}

DiscontinuityRow discontinuity_row(double a, double b, double delta) {
  const Superbase<double> sp = discontinuity_superbase(a, b, delta, true);
  const Superbase<double> sm = discontinuity_superbase(a, b, delta, false);
  const OrientedRootInvariant<double> rp = oriented_root_invariant(sp);
  const OrientedRootInvariant<double> rm = oriented_root_invariant(sm);
  DiscontinuityRow row;
  row.delta = delta;
  row.rm_inf = root_metric(rp.ri, rm.ri, kInfinity);
  row.rm_inf_oriented = oriented_root_metric(rp, rm, kInfinity);
  row.linear_bound = 2 * delta * a;
  row.sqrt_bound = 2 * std::sqrt(delta * a);
  row.cm_inf = coform_cyclic_metric(sp, sm);
  row.sim_inf_oriented = superbase_isometry_metric(sp, sm, true);
  const double l = std::max(max_vector_length(sp), max_vector_length(sm));
  row.sim_lower_bound = row.cm_inf / (2 * l);
  row.uniform_bound = std::min(a * a / 3, b * b - a * a) / (2 * std::sqrt(a * a + b * b));
  return row;
}

int cmd_discontinuity(double a, double b, const std::vector<double>& deltas, std::ostream& out, std::ostream& err) {
  try {
    if (deltas.empty()) throw Error(Errc::InvalidParams, "no delta values given");
    std::vector<DiscontinuityRow> rows;
    for (double d : deltas) rows.push_back(discontinuity_row(a, b, d));
    out << "delta,rm_inf,rm_inf_oriented,bound_2_delta_a,bound_2_sqrt_delta_a,cm_inf,sim_inf_oriented,"
           "sim_lower_bound,uniform_lower_bound\r\n";
    for (const DiscontinuityRow& r : rows)
      out << fmt::format("{},{},{},{},{},{},{},{},{}\r\n", format_real(r.delta), format_real(r.rm_inf),
                         format_real(r.rm_inf_oriented), format_real(r.linear_bound), format_real(r.sqrt_bound),
                         format_real(r.cm_inf), format_real(r.sim_inf_oriented), format_real(r.sim_lower_bound),
                         format_real(r.uniform_bound));
    return 0;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code_for(e);
  }
}

int cmd_design(double x, double y, double sigma, int sign, std::ostream& out, std::ostream& err) {
  try {
    if (sign < -1 || sign > 1) throw Error(Errc::InvalidParams, "sign must be -1, 0 or 1");
    const RootInvariant<double> ri = ri_from_pi(ProjectedInvariant<double>(x, y), sigma);
    const Superbase<double> s = superbase_from_ri(ri, sign_from_int(sign));
    out << fmt::format("{{\"pi\":{},\"sigma\":{},\"sign\":{},\"ri\":{},\"superbase\":{},\"basis\":{},\"area\":{}}}\n",
                       json_vec(ProjectedInvariant<double>(x, y)), format_real(sigma), sign, json_vec(ri),
                       superbase_json(s), json_basis(s.v1, s.v2), format_real(cell_area(ri)));
    return 0;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code_for(e);
  }
}

int cmd_rsd(std::istream& in, std::ostream& out, std::ostream& err, int k) {
  if (k < 1) {
    const Error e(Errc::InvalidParams, "k must be positive");
    err << e.what() << '\n';
    return exit_code_for(e);
  }
  return for_each_record(in, out, err, [k](const LatticeRecord& r) {
    const std::vector<double> d2 = rsd_squared(make_superbase(r.basis), k);
    std::vector<double> d(d2.size());
    std::transform(d2.begin(), d2.end(), d.begin(), [](double v) { return std::sqrt(v); });
    return fmt::format("{{\"id\":{},\"rsd\":{},\"rsd_squared\":{}}}", json_string(r.id),
                       json_vec(d.data(), static_cast<int>(d.size())),
                       json_vec(d2.data(), static_cast<int>(d2.size())));
  });
}

}  // namespace lat2d::cli
