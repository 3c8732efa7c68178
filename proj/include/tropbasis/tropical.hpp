#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tropbasis/config.hpp"
#include "tropbasis/matroid.hpp"

namespace trop {

// Exact rational, normalized, denominator positive.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long value) : num_(value) {}  // NOLINT: implicit by design
  Rational(long long num, long long den);     // throws on den == 0

  long long num() const { return num_; }
  long long den() const { return den_; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  long long num_ = 0;
  long long den_ = 1;
};

// Point of the tropical projective space TP^{n-1}: one coordinate per
// ground element, each a rational or bottom (-infinity, stored nullopt).
class TropicalPoint {
 public:
  // Throws unless nonempty with at least one non-bottom coordinate.
  explicit TropicalPoint(std::vector<std::optional<Rational>> coords);

  // 0/1 indicator point of a support.
  static TropicalPoint indicator(int n, ElementSet support);

  int dimension() const { return static_cast<int>(coords_.size()); }
  const std::optional<Rational>& coord(int e) const {  // e is 1-based
    return coords_[e - 1];
  }

 private:
  std::vector<std::optional<Rational>> coords_;
};

// 0/1 point identified by its set of 1-coordinates.
struct Support {
  ElementSet ones;
  friend bool operator==(Support a, Support b) = default;
};

struct BasisCheck {
  bool is_basis = false;
  std::optional<Support> witness;  // lex-least violating support
};

struct BmEntry {
  ElementSet circuit;
  Support witness;
};

// The intersection of all tropical bases, with one separating witness per
// member. Members follow the canonical circuit order.
struct BmResult {
  std::vector<BmEntry> members;
  std::vector<ElementSet> circuits_only() const;
};

struct GreedyTrace {
  std::vector<ElementSet> order;    // the removal order tried
  std::vector<ElementSet> kept;     // the resulting minimal basis, canonical
  std::vector<ElementSet> removed;  // in removal order
};

struct UniquenessReport {
  bool unique = false;
  BmResult bm;
  GreedyTrace greedy;
};

// Each family lists the circuits (as canonical indices) any tropical basis
// must intersect; deduplicated and pruned to the inclusion-minimal ones.
struct HittingInstance {
  std::vector<std::vector<std::uint32_t>> families;
};

// True iff the maximum of x over the coordinates in c is attained at
// least twice (a bottom maximum counts when attained twice).
bool point_in_hyperplane(const TropicalPoint& x, ElementSet c);

// True iff |c & s.ones| == 1, i.e. the indicator point of s lies outside
// V(c). Requires |c| >= 2.
bool support_separates(Support s, ElementSet c);

// Decides V(basis) == V(circuits) by scanning all 0/1 points. Requires a
// simple matroid and basis a subset of its circuits.
BasisCheck is_tropical_basis(const CircuitMatroid& m,
                             const std::vector<ElementSet>& basis,
                             const ExecConfig& cfg = {});

BmResult compute_bm(const CircuitMatroid& m, const ExecConfig& cfg = {});

// All unordered circuit pairs meeting in one element whose symmetric
// difference equals c; empty means c is not a pasting.
std::vector<std::pair<ElementSet, ElementSet>> pasting_pairs(
    const CircuitMatroid& m, ElementSet c);

// Circuits that are not pastings. Always a tropical basis of a simple
// matroid, not necessarily minimal.
std::vector<ElementSet> nonpasting_set(const CircuitMatroid& m);

// Least fixed point of adding c1 ^ c2 whenever both are present, meet in
// one element, and the symmetric difference is again a circuit. Closure
// equal to the full circuit set certifies a tropical basis (sufficient
// condition only).
std::vector<ElementSet> pasting_closure(const CircuitMatroid& m,
                                        const std::vector<ElementSet>& seed);

// Walks `order`, dropping each circuit whose removal keeps the set a
// tropical basis. The survivors form a minimal tropical basis.
GreedyTrace greedy_minimal_basis(const CircuitMatroid& m,
                                 const std::vector<ElementSet>& order,
                                 const ExecConfig& cfg = {});

// Compares the canonical-order greedy basis with B_M.
UniquenessReport has_unique_minimal_basis(const CircuitMatroid& m,
                                          const ExecConfig& cfg = {});

HittingInstance hitting_instance(const CircuitMatroid& m,
                                 const ExecConfig& cfg = {});

// Every inclusion-minimal tropical basis, canonical order. Tropical bases
// are exactly the hitting sets of hitting_instance().
std::vector<std::vector<ElementSet>> enumerate_minimal_bases(
    const CircuitMatroid& m, const ExecConfig& cfg = {});

}  // namespace trop
