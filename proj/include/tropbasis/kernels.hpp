#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace trop::kernels {

// The exhaustive inner loops, each in a serial reference version and an
// OpenMP version. The two must return identical results for every input;
// the dispatching wrapper picks by worker count. All witnesses are chosen
// by a total order (dictionary order on ascending member lists), so the
// results do not depend on how the scan is partitioned.

struct ViolationScan {
  bool found = false;
  std::uint64_t witness = 0;  // lex-least violating support
};

// Scans all 2^n supports S for one that some circuit in `others`
// separates (|C & S| == 1) while no circuit in `basis` does.
ViolationScan find_violating_support_serial(int n,
                                            std::span<const std::uint64_t> basis,
                                            std::span<const std::uint64_t> others);
ViolationScan find_violating_support_omp(int n,
                                         std::span<const std::uint64_t> basis,
                                         std::span<const std::uint64_t> others,
                                         int jobs);
ViolationScan find_violating_support(int n,
                                     std::span<const std::uint64_t> basis,
                                     std::span<const std::uint64_t> others,
                                     int jobs);

// For each circuit index i: the lex-least support separated by circuit i
// and by no other circuit, if one exists.
std::vector<std::optional<std::uint64_t>> unique_separator_witnesses_serial(
    int n, std::span<const std::uint64_t> circuits);
std::vector<std::optional<std::uint64_t>> unique_separator_witnesses_omp(
    int n, std::span<const std::uint64_t> circuits, int jobs);
std::vector<std::optional<std::uint64_t>> unique_separator_witnesses(
    int n, std::span<const std::uint64_t> circuits, int jobs);

// All distinct nonempty families {i : |C_i & S| == 1} over the 2^n
// supports, sorted by (size, lexicographic index list) and deduplicated.
// Throws LimitExceeded past max_families.
std::vector<std::vector<std::uint32_t>> separating_families_serial(
    int n, std::span<const std::uint64_t> circuits, long max_families);
std::vector<std::vector<std::uint32_t>> separating_families_omp(
    int n, std::span<const std::uint64_t> circuits, long max_families, int jobs);
std::vector<std::vector<std::uint32_t>> separating_families(
    int n, std::span<const std::uint64_t> circuits, long max_families, int jobs);

struct MinorScan {
  bool found = false;
  std::uint64_t delete_mask = 0;
  std::uint64_t contract_mask = 0;
};

// First (delete, contract) pair of disjoint sets, in dictionary order of
// the pair, whose minor on the remaining 4 elements is U_{2,4}.
MinorScan find_u24_minor_serial(int n, std::span<const std::uint64_t> circuits);
MinorScan find_u24_minor_omp(int n, std::span<const std::uint64_t> circuits,
                             int jobs);
MinorScan find_u24_minor(int n, std::span<const std::uint64_t> circuits,
                         int jobs);

struct RankScan {
  int rank = 0;
  std::vector<std::uint64_t> bases;  // lex order
};

// Maximum circuit-free subsets over all 2^n subsets.
RankScan rank_scan_serial(int n, std::span<const std::uint64_t> circuits);
RankScan rank_scan_omp(int n, std::span<const std::uint64_t> circuits, int jobs);
RankScan rank_scan(int n, std::span<const std::uint64_t> circuits, int jobs);

// Minimal nonempty subsets of [n] intersecting every member of `family`,
// sorted canonically (size, then lex).
std::vector<std::uint64_t> minimal_transversals_serial(
    int n, std::span<const std::uint64_t> family);
std::vector<std::uint64_t> minimal_transversals_omp(
    int n, std::span<const std::uint64_t> family, int jobs);
std::vector<std::uint64_t> minimal_transversals(
    int n, std::span<const std::uint64_t> family, int jobs);

}  // namespace trop::kernels
