#include "lattice2d/cli/io.hpp"

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include <charconv>
#include <istream>

namespace lat2d::cli {

namespace {

using nlohmann::json;

double number_from_json(const json& j) {
  if (!j.is_number()) throw Error(Errc::ParseError, "basis entries must be numbers");
  return j.get<double>();
}

LatticeRecord parse_json_record(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, e.what());
  }
  if (!j.is_object()) throw Error(Errc::ParseError, "record must be a JSON object");
  LatticeRecord r;
  if (auto it = j.find("id"); it != j.end()) {
    if (!it->is_string()) throw Error(Errc::ParseError, "id must be a string");
    r.id = it->get<std::string>();
  }
  auto b = j.find("basis");
  if (b == j.end() || !b->is_array() || b->size() != 2 || !(*b)[0].is_array() || !(*b)[1].is_array() ||
      (*b)[0].size() != 2 || (*b)[1].size() != 2)
    throw Error(Errc::ParseError, "basis must be [[a,b],[c,d]]");
  r.basis.v1 = Vec2<double>(number_from_json((*b)[0][0]), number_from_json((*b)[0][1]));
  r.basis.v2 = Vec2<double>(number_from_json((*b)[1][0]), number_from_json((*b)[1][1]));
  return r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// RFC 4180 fields, quotes doubled inside quoted fields.
std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  if (quoted) throw Error(Errc::ParseError, "unterminated quoted field");
  return out;
}

double parse_double(std::string_view s) {
  s = trim(s);
  double v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw Error(Errc::ParseError, fmt::format("not a number: '{}'", s));
  return v;
}

LatticeRecord parse_csv_record(std::string_view line) {
  const std::vector<std::string> f = split_csv(line);
  if (f.size() != 5) throw Error(Errc::ParseError, "CSV record needs id,v1x,v1y,v2x,v2y");
  LatticeRecord r;
  r.id = std::string(trim(f[0]));
  r.basis.v1 = Vec2<double>(parse_double(f[1]), parse_double(f[2]));
  r.basis.v2 = Vec2<double>(parse_double(f[3]), parse_double(f[4]));
  return r;
}

std::string guess_id(std::string_view line) {
  if (!line.empty() && line.front() == '{') {
    try {
      const json j = json::parse(line);
      if (j.is_object() && j.contains("id") && j["id"].is_string()) return j["id"].get<std::string>();
    } catch (const json::exception&) {
    }
    return {};
  }
  return std::string(trim(line.substr(0, line.find(','))));
}

}  // namespace

LatticeRecord parse_record(std::string_view line) {
  line = trim(line);
  if (line.empty()) throw Error(Errc::ParseError, "empty record");
  return line.front() == '{' ? parse_json_record(line) : parse_csv_record(line);
}

std::vector<InputLine> read_records(std::istream& in) {
  std::vector<InputLine> out;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    const std::string_view t = trim(line);
    if (t.empty() || t.rfind("id,", 0) == 0) continue;
    InputLine il;
    il.line_no = no;
    try {
      il.record = parse_record(t);
      il.id = il.record->id;
    } catch (const Error& e) {
      il.error = e;
      il.id = guess_id(t);
    }
    out.push_back(std::move(il));
  }
  return out;
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", v);
}

std::string json_string(std::string_view s) { return json(std::string(s)).dump(); }

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string json_vec(const double* v, int n) {
  std::string out = "[";
  for (int i = 0; i < n; ++i) {
    if (i) out += ',';
    out += format_real(v[i]);
  }
  return out + "]";
}

std::string json_basis(const Vec2<double>& a, const Vec2<double>& b) {
  return "[" + json_vec(a) + "," + json_vec(b) + "]";
}

std::string emit_record(const LatticeRecord& r) {
  return fmt::format("{{\"id\":{},\"basis\":{}}}", json_string(r.id), json_basis(r.basis.v1, r.basis.v2));
}

std::string emit_error(std::string_view id, const Error& e) {
  return fmt::format("{{\"id\":{},\"error\":{},\"message\":{}}}", json_string(id), json_string(errc_name(e.code())),
                     json_string(e.what()));
}

}  // namespace lat2d::cli
