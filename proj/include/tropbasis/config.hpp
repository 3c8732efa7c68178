#pragma once

namespace trop {

// Resource guards and worker count for the exhaustive searches. The caps
// exist because every decision procedure here enumerates an exponential
// space (2^n supports, 3^n minors); the defaults cover all the shipped
// catalog matroids with a wide margin.
struct ExecConfig {
  int jobs = 0;            // 0 = all hardware threads, 1 = serial
  int max_support_n = 24;  // 2^n support enumeration
  int max_minor_n = 16;    // U_{2,4} minor search
  int max_subset_n = 22;   // rank / dual / GF(2) subset enumeration
  int max_graph_edges = 20;
  long max_hitting_families = 1L << 22;
  long max_minimal_bases = 200000;
  long max_search_nodes = 1L << 26;
  bool force = false;  // lift the four caps above (hard ceilings remain)

  // Hard ceilings even under force; past these the bitmask encodings or
  // the address space give out long before the search finishes.
  static constexpr int kHardSupportN = 30;
  static constexpr int kHardMinorN = 24;
  static constexpr int kHardSubsetN = 28;
  static constexpr int kHardGraphEdges = 26;

  int resolve_jobs() const;  // >= 1; queries the hardware when jobs == 0
};

}  // namespace trop
