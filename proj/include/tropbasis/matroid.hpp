#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tropbasis/config.hpp"
#include "tropbasis/element_set.hpp"

namespace trop {

// A matroid given by its ground-set size and its circuit family, stored
// deduplicated in canonical order (ascending cardinality, then dictionary
// order of the ascending member lists).
class CircuitMatroid {
 public:
  // Checks all three circuit axioms exhaustively and canonicalizes.
  // Throws AxiomViolation / InvalidInput.
  static CircuitMatroid validate(int n, std::vector<ElementSet> circuits);

  // Canonicalizes without the axiom check. For families that are circuits
  // of a matroid by construction (minors, duals, enumerated cycles, ...).
  static CircuitMatroid from_circuits_unchecked(int n,
                                                std::vector<ElementSet> circuits);

  int ground_size() const { return n_; }
  const std::vector<ElementSet>& circuits() const { return circuits_; }
  std::size_t circuit_count() const { return circuits_.size(); }
  // Raw masks, index-aligned with circuits().
  std::vector<std::uint64_t> circuit_masks() const;

  bool has_circuit(ElementSet c) const;
  // Position in the canonical order, if c is a circuit.
  std::optional<std::size_t> circuit_index(ElementSet c) const;

  friend bool operator==(const CircuitMatroid& a, const CircuitMatroid& b) {
    return a.n_ == b.n_ && a.circuits_ == b.circuits_;
  }

 private:
  CircuitMatroid(int n, std::vector<ElementSet> canonical)
      : n_(n), circuits_(std::move(canonical)) {}

  int n_ = 0;
  std::vector<ElementSet> circuits_;
};

struct SimplifyResult {
  CircuitMatroid matroid;
  // kept_elements[i] is the old label of new element i+1 (ascending).
  std::vector<int> kept_elements;
};

struct MinorReport {
  ElementSet delete_set;
  ElementSet contract_set;
  CircuitMatroid result;
};

enum class BinaryMethod { kSymdiff, kMinor, kCrossCheck };

struct RankResult {
  int rank = 0;
  std::vector<ElementSet> bases;  // canonical order
};

// True iff every circuit has at least 3 elements.
bool is_simple(const CircuitMatroid& m);

// Deletes loops and all but the smallest member of each parallel class.
SimplifyResult simplify(const CircuitMatroid& m);

// Deletion M \ t: circuits avoiding t, ground set relabeled to 1..n-|t|
// preserving relative order.
CircuitMatroid delete_elements(const CircuitMatroid& m, ElementSet t);

// Contraction M / t: inclusion-minimal nonempty sets among {C \ t},
// relabeled as in deletion.
CircuitMatroid contract_elements(const CircuitMatroid& m, ElementSet t);

// Old labels that survive removing `removed` from [n], ascending; position
// i holds the old label of new element i+1.
std::vector<int> relabel_map(int n, ElementSet removed);

// (d, n) iff the circuit set is exactly all (d+1)-subsets of [n]; an empty
// circuit set reports (n, n).
std::optional<std::pair<int, int>> uniform_parameters(const CircuitMatroid& m);

// Partitions c1 ^ c2 into pairwise-disjoint circuits if possible. The
// backtracking always branches on a circuit containing the smallest
// uncovered element, so the first solution found is canonical.
std::optional<std::vector<ElementSet>> symdiff_decompose(const CircuitMatroid& m,
                                                         ElementSet c1,
                                                         ElementSet c2);

// Binarity. kSymdiff decomposes every circuit pair, kMinor excludes a
// U_{2,4} minor, kCrossCheck runs both and throws MethodDisagreement if
// they differ (they never should).
bool is_binary(const CircuitMatroid& m, BinaryMethod method,
               const ExecConfig& cfg = {});

// First (in dictionary order of the (delete,contract) pair) pair of
// disjoint sets whose minor is U_{2,4}, or nullopt.
std::optional<MinorReport> has_u24_minor(const CircuitMatroid& m,
                                         const ExecConfig& cfg = {});

// Rank and all maximum-size circuit-free subsets, by exhaustive scan.
RankResult rank_and_bases(const CircuitMatroid& m, const ExecConfig& cfg = {});

// Dual matroid: cocircuits are the minimal nonempty transversals of the
// basis family.
CircuitMatroid dual(const CircuitMatroid& m, const ExecConfig& cfg = {});

}  // namespace trop
