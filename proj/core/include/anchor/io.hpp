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

#pragma once

// File formats:
//
//  * Matrix, CSV: one row per line, comma-separated decimal reals, no header.
//    All rows must have the same length.
//  * Matrix, binary: the magic bytes "AEM1", rows and cols as 64-bit
//    little-endian unsigned integers, then rows * cols IEEE-754 doubles,
//    little-endian, row-major. After the magic, exactly 16 + 8 * rows * cols
//    bytes follow.
//  * Weights: decimal reals separated by whitespace or commas.
//  * Edge list: one edge "u v [w]" per line, whitespace-separated, zero-based
//    node indices, optional positive weight (default 1). Lines starting
//    with '#' and blank lines are skipped.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anchor/graph.hpp"
#include "anchor/matrix.hpp"
#include "anchor/mmset.hpp"

namespace anchor {

inline constexpr std::string_view kBinaryMagic = "AEM1";

enum class MatrixFormat { Csv, Binary };

Matrix parse_matrix_csv(std::string_view text);
Matrix parse_matrix_binary(std::string_view bytes);
/// Detects the format from the magic bytes.
Matrix parse_matrix(std::string_view bytes);

std::string format_matrix_csv(const Matrix& m);
std::string format_matrix_binary(const Matrix& m);

Matrix read_matrix(const std::filesystem::path& path);
void write_matrix(const std::filesystem::path& path, const Matrix& m, MatrixFormat format);

std::vector<double> parse_weights(std::string_view text);
std::vector<double> read_weights(const std::filesystem::path& path);

/// Node count comes from `node_count`, else a "# nodes N" comment line, else
/// one past the largest index seen.
Graph parse_edge_list(std::string_view text, std::optional<std::size_t> node_count = {});
Graph read_edge_list(const std::filesystem::path& path);
std::string format_edge_list(const Graph& graph);
void write_edge_list(const std::filesystem::path& path, const Graph& graph);

enum class CostSource { Matrix, EdgeList };

/// Reads costs (a matrix file, or an edge list turned into geodesic
/// distances), optional weights, and optionally replaces the costs by their
/// normalized ranks.
MMSet load_mmset(const std::filesystem::path& cost_path,
                 const std::optional<std::filesystem::path>& weights_path, bool rank,
                 CostSource source = CostSource::Matrix);

/// Files making up a family: every regular file of a directory in name
/// order, or the paths listed one per line in a manifest file (relative
/// entries resolve against the manifest's directory).
std::vector<std::filesystem::path> list_family(const std::filesystem::path& dir_or_manifest);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace anchor
