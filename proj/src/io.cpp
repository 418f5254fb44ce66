#include "entlab/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace entlab::io {

namespace {

std::string trim_copy(const std::string& s) {
  std::size_t begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  std::size_t end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

// Meaningful CSV lines: blank lines and '#' comments dropped.
std::vector<std::string> csv_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim_copy(line);
    if (t.empty() || t.front() == '#') continue;
    lines.push_back(std::move(t));
  }
  return lines;
}

Rational cell_from_json(const json& v, const std::string& where) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(BigInt(v.get<std::int64_t>()));
  if (v.is_number_unsigned()) return Rational(BigInt(v.get<std::uint64_t>()));
  if (v.is_number_float()) {
    // Interpreted through the shortest decimal that round-trips the double,
    // so a literal 0.2 in the file still means exactly 1/5.
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v.get<double>());
    if (ec != std::errc{}) throw ParseError(where + ": unrepresentable number");
    return parse_rational(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
  }
  throw ParseError(where + ": expected a number or a \"p/q\"/decimal string, got " +
                   std::string(v.type_name()));
}

std::vector<Rational> rationals_from_json_array(const json& arr, const std::string& where) {
  if (!arr.is_array()) throw ParseError(where + ": expected an array");
  std::vector<Rational> out;
  out.reserve(arr.size());
  for (std::size_t k = 0; k < arr.size(); ++k) {
    out.push_back(cell_from_json(arr[k], where + "[" + std::to_string(k) + "]"));
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path.string() + "'");
  return buffer.str();
}

bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
    return c == '{' || c == '[';
  }
  return false;
}

}  // namespace

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(what + ": " + e.what());
  }
}

JointDist read_joint_csv(std::istream& in) {
  std::vector<std::vector<Rational>> grid;
  for (const std::string& line : csv_lines(in)) {
    std::vector<Rational> row;
    for (const std::string& field : split(line, ',')) row.push_back(parse_rational(field));
    grid.push_back(std::move(row));
  }
  return validate_joint(grid);
}

JointDist read_joint_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("cells")) {
    throw ParseError("joint document must be an object with a \"cells\" grid");
  }
  const json& cells = doc["cells"];
  if (!cells.is_array() || cells.empty()) throw ParseError("\"cells\" must be a nonempty array of rows");
  std::vector<std::vector<Rational>> grid;
  grid.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    grid.push_back(rationals_from_json_array(cells[i], "cells[" + std::to_string(i) + "]"));
  }
  if (doc.contains("rows") && doc["rows"].get<std::size_t>() != grid.size()) {
    throw ParseError("\"rows\" disagrees with the cell grid");
  }
  if (doc.contains("cols") && doc["cols"].get<std::size_t>() != grid.front().size()) {
    throw ParseError("\"cols\" disagrees with the cell grid");
  }
  return validate_joint(grid);
}

Dist read_dist_csv(std::istream& in) {
  std::vector<Rational> weights;
  for (const std::string& line : csv_lines(in)) {
    for (const std::string& field : split(line, ',')) weights.push_back(parse_rational(field));
  }
  return Dist(std::move(weights));
}

Dist read_dist_json(const json& doc) {
  if (doc.is_array()) return Dist(rationals_from_json_array(doc, "weights"));
  if (doc.is_object() && doc.contains("weights")) {
    return Dist(rationals_from_json_array(doc["weights"], "weights"));
  }
  throw ParseError("distribution document must be an array or {\"weights\": [...]}");
}

otp::CipherModel read_model_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("prior") || !doc.contains("key")) {
    throw ParseError("model document must be an object with \"prior\" and \"key\" arrays");
  }
  Dist prior(rationals_from_json_array(doc["prior"], "prior"));
  Dist key(rationals_from_json_array(doc["key"], "key"));
  return otp::build_model(std::move(prior), std::move(key));
}

std::string write_joint_csv(const JointDist& joint) {
  std::ostringstream out;
  for (std::size_t i = 0; i < joint.rows(); ++i) {
    for (std::size_t j = 0; j < joint.cols(); ++j) {
      if (j) out << ',';
      out << to_fraction_string(joint.cell(i, j).value());
    }
    out << '\n';
  }
  return out.str();
}

json joint_to_json(const JointDist& joint) {
  json rows = json::array();
  for (std::size_t i = 0; i < joint.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < joint.cols(); ++j) {
      row.push_back(to_fraction_string(joint.cell(i, j).value()));
    }
    rows.push_back(std::move(row));
  }
  return json{{"rows", joint.rows()}, {"cols", joint.cols()}, {"cells", std::move(rows)}};
}

json dist_to_json(const Dist& d) {
  json out = json::array();
  for (const Prob& p : d.probs()) out.push_back(to_fraction_string(p.value()));
  return out;
}

json model_to_json(const otp::CipherModel& model) {
  return json{{"prior", dist_to_json(model.plaintext_prior)}, {"key", dist_to_json(model.key_dist)}};
}

JointDist load_joint(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  if (looks_like_json(text)) return read_joint_json(parse_json_text(text, path.string()));
  std::istringstream in(text);
  return read_joint_csv(in);
}

Dist load_dist(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  if (looks_like_json(text)) return read_dist_json(parse_json_text(text, path.string()));
  std::istringstream in(text);
  return read_dist_csv(in);
}

otp::CipherModel load_model(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  if (!looks_like_json(text)) {
    throw ParseError("model file '" + path.string() + "' must be a JSON document");
  }
  return read_model_json(parse_json_text(text, path.string()));
}

}  // namespace entlab::io
