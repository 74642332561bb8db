#ifndef LATTICE2D_CLI_IO_HPP
#define LATTICE2D_CLI_IO_HPP

#include "lattice2d/error.hpp"
#include "lattice2d/types.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lat2d::cli {

struct LatticeRecord {
  std::string id;
  Basis<double> basis;
};

// One input line: either a record or the error it produced.
struct InputLine {
  std::size_t line_no = 0;
  std::string id;  // best effort, may be empty when the line is unparseable
  std::optional<LatticeRecord> record;
  std::optional<Error> error;
};

// JSONL {"id": ..., "basis": [[a,b],[c,d]]} or CSV id,v1x,v1y,v2x,v2y, picked per line by a leading '{'.
// A CSV header line starting with "id," is skipped.
LatticeRecord parse_record(std::string_view line);
std::vector<InputLine> read_records(std::istream& in);

std::string format_real(double v);
std::string json_string(std::string_view s);
std::string csv_field(std::string_view s);

std::string json_vec(const double* v, int n);
template <typename Derived>
std::string json_vec(const Eigen::MatrixBase<Derived>& v) {
  const typename Derived::PlainObject p = v;
  return json_vec(p.data(), static_cast<int>(p.size()));
}
std::string json_basis(const Vec2<double>& a, const Vec2<double>& b);

std::string emit_record(const LatticeRecord& r);
std::string emit_error(std::string_view id, const Error& e);

}  // namespace lat2d::cli

#endif  // LATTICE2D_CLI_IO_HPP
