#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropbasis/config.hpp"
#include "tropbasis/matroid.hpp"

namespace trop {

// Undirected multigraph. Edge i (1-based position in `edges`) is ground
// element i of the cycle matroid.
struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // 1-based endpoints

  // Throws InvalidInput("out-of-range") on a bad endpoint.
  void check() const;
  bool is_simple() const;  // no self-loops, no parallel edges
  bool is_connected() const;
};

// Matrix over GF(2); column j (1-based) is ground element j. Columns are
// stored as row bitmasks: bit r-1 of columns[j-1] is the entry in row r.
struct Gf2Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint64_t> columns;

  static Gf2Matrix from_row_strings(const std::vector<std::string>& row_strings);
};

enum class CatalogName { kFano, kNonFano, kP7, kR6, kR10, kU24, kK4Graphic };

std::optional<CatalogName> catalog_name_from_string(const std::string& s);
const char* to_string(CatalogName name);
std::vector<CatalogName> all_catalog_names();

// U_{d,n}: circuits are all (d+1)-subsets of [n]; empty for d = n.
CircuitMatroid uniform_matroid(int d, int n);

// Circuits are the edge sets of the cycles of g (a self-loop is a
// 1-circuit, a parallel pair a 2-circuit).
CircuitMatroid cycle_matroid(const Graph& g, const ExecConfig& cfg = {});

// Edge sets of the chordless cycles of a simple graph.
std::vector<ElementSet> induced_cycles(const Graph& g, const ExecConfig& cfg = {});

// Minimal edge cuts of a connected simple graph whose removal leaves two
// components that are each 2-edge-connected (a single vertex counts).
std::vector<ElementSet> splitting_edge_cuts(const Graph& g,
                                            const ExecConfig& cfg = {});

// Circuits are the inclusion-minimal linearly dependent column subsets.
CircuitMatroid gf2_matroid(const Gf2Matrix& m, const ExecConfig& cfg = {});

// Rank-3 geometric rule: circuits are the 3-point lines plus every
// 4-subset containing no line.
CircuitMatroid rank3_from_lines(int n, const std::vector<ElementSet>& lines);

// The fixed worked examples.
CircuitMatroid catalog(CatalogName name);

}  // namespace trop
