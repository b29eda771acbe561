#pragma once

// Text interchange formats: configuration matrices, edge lists and circuit
// lists.
//
// Matrix file:
//   field 5            (a prime modulus, or `field Q`)
//   dims 3 7
//   <3 lines of 7 whitespace-separated entries>
// Entries are integers, or a/b over Q. Lines starting with '#' are ignored.

#include <cstdint>
#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mcl/error.hpp"
#include "mcl/exact.hpp"
#include "mcl/graph.hpp"
#include "mcl/linalg.hpp"
#include "mcl/matroid.hpp"

namespace mcl {

namespace detail {

inline std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  return lines;
}

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

inline int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(text, &used);
    if (used != text.size() || v < INT32_MIN || v > INT32_MAX) throw std::invalid_argument(text);
    return static_cast<int>(v);
  } catch (const std::exception&) {
    fail(ErrorCode::kParseError, "bad " + what + " '" + text + "'");
  }
}

template <typename Field>
Matrix<Field> parse_entries(Field field, int rows, int cols, const std::vector<std::string>& lines) {
  std::vector<typename Field::value_type> entries;
  entries.reserve(static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r) {
    auto row = tokens(lines[2 + r]);
    if (static_cast<int>(row.size()) != cols) {
      fail(ErrorCode::kParseError, "row " + std::to_string(r + 1) + " has " + std::to_string(row.size()) +
                                       " entries, expected " + std::to_string(cols));
    }
    for (const auto& t : row) entries.push_back(field.from_ratio(Ratio::parse(t)));
  }
  return Matrix<Field>(std::move(field), rows, cols, std::move(entries));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

inline FieldMatrix parse_matrix(std::istream& in) {
  auto lines = detail::content_lines(in);
  if (lines.size() < 2) fail(ErrorCode::kParseError, "matrix needs a field line and a dims line");
  auto head = detail::tokens(lines[0]);
  if (head.size() != 2 || head[0] != "field") fail(ErrorCode::kParseError, "expected 'field <p|Q>'");
  auto dims = detail::tokens(lines[1]);
  if (dims.size() != 3 || dims[0] != "dims") fail(ErrorCode::kParseError, "expected 'dims <r> <n>'");
  const int rows = detail::parse_int(dims[1], "row count");
  const int cols = detail::parse_int(dims[2], "column count");
  if (rows <= 0 || cols <= 0) fail(ErrorCode::kParseError, "dimensions must be positive");
  if (static_cast<int>(lines.size()) != 2 + rows) {
    fail(ErrorCode::kParseError, "expected " + std::to_string(rows) + " matrix rows, found " +
                                     std::to_string(lines.size() - 2));
  }
  if (head[1] == "Q") return detail::parse_entries(RationalField{}, rows, cols, lines);
  const int p = detail::parse_int(head[1], "field modulus");
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    fail(ErrorCode::kParseError, "field modulus " + head[1] + " is not prime");
  }
  return detail::parse_entries(PrimeField(static_cast<std::uint32_t>(p)), rows, cols, lines);
}

inline FieldMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

inline FieldMatrix load_matrix(const std::string& path) { return parse_matrix(detail::read_file(path)); }

template <typename Field>
std::string format_matrix(const Matrix<Field>& m) {
  std::ostringstream out;
  out << "field " << m.field().tag() << "\n";
  out << "dims " << m.rows() << " " << m.cols() << "\n";
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << m.field().format(m.at(r, c));
    }
    out << "\n";
  }
  return out.str();
}

inline std::string format_matrix(const FieldMatrix& m) {
  return std::visit([](const auto& mat) { return format_matrix(mat); }, m);
}

/// One `u v` pair per line.
inline Graph parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  for (const auto& line : detail::content_lines(in)) {
    auto t = detail::tokens(line);
    if (t.size() != 2) fail(ErrorCode::kParseError, "edge line must be 'u v': '" + line + "'");
    const int u = detail::parse_int(t[0], "vertex");
    const int v = detail::parse_int(t[1], "vertex");
    if (u < 0 || v < 0) fail(ErrorCode::kParseError, "vertex labels must be nonnegative");
    edges.push_back({u, v});
  }
  if (edges.empty()) fail(ErrorCode::kParseError, "edge list is empty");
  return Graph::from_edges(std::move(edges));
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

inline Graph load_edge_list(const std::string& path) { return parse_edge_list(detail::read_file(path)); }

inline std::string format_edge_list(const Graph& g) {
  std::string out;
  for (const Edge& e : g.edges) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

/// Either {"n": .., "r": .., "circuits": [[..], ..]} or a bare array of
/// circuits, in which case n and r must be supplied.
inline CircuitListMatroid parse_circuits(const std::string& text, std::optional<int> n = std::nullopt,
                                         std::optional<int> r = std::nullopt) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParseError, std::string("circuit list is not valid JSON: ") + e.what());
  }
  nlohmann::json list;
  try {
    if (doc.is_object()) {
      if (doc.contains("n")) n = doc.at("n").get<int>();
      if (doc.contains("r")) r = doc.at("r").get<int>();
      list = doc.at("circuits");
    } else {
      list = doc;
    }
    if (!list.is_array()) fail(ErrorCode::kParseError, "circuits must be a JSON array");
    if (!n || !r) fail(ErrorCode::kParseError, "circuit list needs n and r");
    if (*n < 0 || *n > Subset::kMaxElements) fail(ErrorCode::kParseError, "n must lie in [0, 64]");
    std::vector<Subset> circuits;
    for (const auto& c : list) {
      Subset s;
      for (const auto& e : c) {
        const int x = e.get<int>();
        if (x < 0 || x >= *n) fail(ErrorCode::kParseError, "circuit element " + std::to_string(x) + " out of range");
        if (s.contains(x)) fail(ErrorCode::kParseError, "repeated element in circuit");
        s = s.with(x);
      }
      circuits.push_back(s);
    }
    return CircuitListMatroid(*n, *r, std::move(circuits));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParseError, std::string("malformed circuit list: ") + e.what());
  }
}

inline CircuitListMatroid load_circuits(const std::string& path, std::optional<int> n = std::nullopt,
                                        std::optional<int> r = std::nullopt) {
  return parse_circuits(detail::read_file(path), n, r);
}

inline nlohmann::ordered_json circuits_to_json(const CircuitListMatroid& m) {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (Subset c : m.circuits()) list.push_back(c.elements());
  return {{"n", m.size()}, {"r", m.rank()}, {"circuits", list}};
}

}  // namespace mcl
