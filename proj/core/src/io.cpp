// Copyright 2026 The Anchor Energy Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "anchor/io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

#include "anchor/error.hpp"
#include "anchor/rank.hpp"

namespace anchor {
namespace {

static_assert(std::endian::native == std::endian::little,
              "binary matrix I/O assumes a little-endian host");

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view token, double& out) {
  token = trim(token);
  if (token.empty()) return false;
  if (token.front() == '+') token.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    ++line_no;
    fn(line_no, line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

}  // namespace

Matrix parse_matrix_csv(std::string_view text) {
  std::vector<double> values;
  std::size_t rows = 0, cols = 0;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    line = trim(line);
    if (line.empty()) return;
    std::size_t count = 0;
    while (true) {
      const auto comma = line.find(',');
      double v = 0.0;
      if (!parse_double(line.substr(0, comma), v)) {
        parse_error(line_no, "invalid number '" + std::string(trim(line.substr(0, comma))) + "'");
      }
      values.push_back(v);
      ++count;
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    if (rows == 0) {
      cols = count;
    } else if (count != cols) {
      parse_error(line_no, "row has " + std::to_string(count) + " values, expected " +
                               std::to_string(cols));
    }
    ++rows;
  });
  if (rows == 0) throw Error(ErrorCode::ParseError, "empty matrix file");
  return Matrix(rows, cols, std::move(values));
}

Matrix parse_matrix_binary(std::string_view bytes) {
  if (bytes.size() < 20 || bytes.substr(0, 4) != kBinaryMagic) {
    throw Error(ErrorCode::ParseError, "byte 0: missing AEM1 header");
  }
  std::uint64_t rows = 0, cols = 0;
  std::memcpy(&rows, bytes.data() + 4, 8);
  std::memcpy(&cols, bytes.data() + 12, 8);
  // 4 magic bytes + 16 header bytes precede the payload.
  const std::uint64_t header = 20;
  if (cols != 0 && rows > (UINT64_MAX - header) / 8 / cols) {
    throw Error(ErrorCode::ParseError, "byte 4: dimensions overflow");
  }
  const std::uint64_t expected = header + 8 * rows * cols;
  if (bytes.size() != expected) {
    throw Error(ErrorCode::ParseError, "byte " + std::to_string(std::min<std::uint64_t>(bytes.size(), expected)) +
                                           ": payload is " + std::to_string(bytes.size()) +
                                           " bytes, expected " + std::to_string(expected));
  }
  std::vector<double> values(rows * cols);
  std::memcpy(values.data(), bytes.data() + header, 8 * values.size());
  return Matrix(rows, cols, std::move(values));
}

Matrix parse_matrix(std::string_view bytes) {
  if (bytes.substr(0, 4) == kBinaryMagic) return parse_matrix_binary(bytes);
  return parse_matrix_csv(bytes);
}

std::string format_matrix_csv(const Matrix& m) {
  std::string out;
  char buf[32];
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out.push_back(',');
      const auto res = std::to_chars(buf, buf + sizeof buf, m(i, j));
      out.append(buf, res.ptr);
    }
    out.push_back('\n');
  }
  return out;
}

std::string format_matrix_binary(const Matrix& m) {
  std::string out(kBinaryMagic);
  const std::uint64_t rows = m.rows(), cols = m.cols();
  out.append(reinterpret_cast<const char*>(&rows), 8);
  out.append(reinterpret_cast<const char*>(&cols), 8);
  out.append(reinterpret_cast<const char*>(m.data().data()), 8 * m.size());
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::IoError, "short write to " + path.string());
}

Matrix read_matrix(const std::filesystem::path& path) { return parse_matrix(read_file(path)); }

void write_matrix(const std::filesystem::path& path, const Matrix& m, MatrixFormat format) {
  write_file(path, format == MatrixFormat::Csv ? format_matrix_csv(m) : format_matrix_binary(m));
}

std::vector<double> parse_weights(std::string_view text) {
  std::vector<double> out;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    std::size_t pos = 0;
    while (pos < line.size()) {
      const auto start = line.find_first_not_of(" \t\r,", pos);
      if (start == std::string_view::npos) break;
      auto end = line.find_first_of(" \t\r,", start);
      if (end == std::string_view::npos) end = line.size();
      double v = 0.0;
      if (!parse_double(line.substr(start, end - start), v)) {
        parse_error(line_no, "invalid weight '" + std::string(line.substr(start, end - start)) + "'");
      }
      out.push_back(v);
      pos = end;
    }
  });
  if (out.empty()) throw Error(ErrorCode::ParseError, "empty weights file");
  return out;
}

std::vector<double> read_weights(const std::filesystem::path& path) {
  return parse_weights(read_file(path));
}

Graph parse_edge_list(std::string_view text, std::optional<std::size_t> node_count) {
  std::vector<Edge> edges;
  std::size_t max_node = 0;
  bool any = false;
  std::optional<std::size_t> declared;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    line = trim(line);
    if (line.empty()) return;
    if (line.front() == '#') {
      // "# nodes N" records isolated trailing nodes.
      constexpr std::string_view tag = "# nodes ";
      if (line.substr(0, tag.size()) == tag) {
        std::size_t count = 0;
        const auto rest = trim(line.substr(tag.size()));
        const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), count);
        if (ec != std::errc() || ptr != rest.data() + rest.size()) {
          parse_error(line_no, "invalid node count '" + std::string(rest) + "'");
        }
        declared = count;
      }
      return;
    }
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
      const auto start = line.find_first_not_of(" \t", pos);
      if (start == std::string_view::npos) break;
      auto end = line.find_first_of(" \t", start);
      if (end == std::string_view::npos) end = line.size();
      tokens.push_back(line.substr(start, end - start));
      pos = end;
    }
    if (tokens.size() != 2 && tokens.size() != 3) {
      parse_error(line_no, "expected 'u v [w]'");
    }
    std::size_t uv[2];
    for (int k = 0; k < 2; ++k) {
      const auto t = tokens[k];
      const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), uv[k]);
      if (ec != std::errc() || ptr != t.data() + t.size()) {
        parse_error(line_no, "invalid node index '" + std::string(t) + "'");
      }
    }
    double w = 1.0;
    if (tokens.size() == 3 && !parse_double(tokens[2], w)) {
      parse_error(line_no, "invalid weight '" + std::string(tokens[2]) + "'");
    }
    edges.push_back({uv[0], uv[1], w});
    max_node = std::max({max_node, uv[0], uv[1]});
    any = true;
  });
  if (!node_count) node_count = declared;
  const std::size_t n = node_count.value_or(any ? max_node + 1 : 0);
  if (any && max_node >= n) {
    throw Error(ErrorCode::ParseError, "node " + std::to_string(max_node) +
                                           " exceeds the declared count " + std::to_string(n));
  }
  Graph g(n);
  for (const auto& e : edges) g.add_edge(e.u, e.v, e.weight);
  return g;
}

Graph read_edge_list(const std::filesystem::path& path) {
  return parse_edge_list(read_file(path));
}

std::string format_edge_list(const Graph& graph) {
  std::ostringstream out;
  out << "# nodes " << graph.node_count() << '\n';
  for (const auto& e : graph.edges()) {
    out << e.u << ' ' << e.v;
    if (e.weight != 1.0) {
      char buf[32];
      const auto res = std::to_chars(buf, buf + sizeof buf, e.weight);
      out << ' ' << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf));
    }
    out << '\n';
  }
  return out.str();
}

void write_edge_list(const std::filesystem::path& path, const Graph& graph) {
  write_file(path, format_edge_list(graph));
}

MMSet load_mmset(const std::filesystem::path& cost_path,
                 const std::optional<std::filesystem::path>& weights_path, bool rank,
                 CostSource source) {
  Matrix costs =
      source == CostSource::EdgeList ? geodesic_cost(read_edge_list(cost_path)) : read_matrix(cost_path);
  if (!costs.square()) {
    throw Error(ErrorCode::NonSquare, cost_path.string() + " is " + std::to_string(costs.rows()) +
                                          "x" + std::to_string(costs.cols()));
  }
  std::optional<std::vector<double>> weights;
  if (weights_path) weights = read_weights(*weights_path);
  if (rank) costs = rank_transform(costs);
  return validate_mmset(std::move(weights), std::move(costs));
}

std::vector<std::filesystem::path> list_family(const std::filesystem::path& dir_or_manifest) {
  namespace fs = std::filesystem;
  std::vector<fs::path> out;
  if (fs::is_directory(dir_or_manifest)) {
    for (const auto& entry : fs::directory_iterator(dir_or_manifest)) {
      if (entry.is_regular_file()) out.push_back(entry.path());
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  const std::string text = read_file(dir_or_manifest);
  const fs::path base = dir_or_manifest.parent_path();
  for_each_line(text, [&](std::size_t, std::string_view line) {
    line = trim(line);
    if (line.empty() || line.front() == '#') return;
    fs::path p{std::string(line)};
    out.push_back(p.is_absolute() ? p : base / p);
  });
  return out;
}

}  // namespace anchor
