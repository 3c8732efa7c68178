#include "tropbasis/matroid.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

#include "tropbasis/errors.hpp"

namespace trop {

namespace {

void canonicalize(std::vector<ElementSet>& circuits) {
  std::sort(circuits.begin(), circuits.end(), ElementSet::canonical_less);
  circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());
}

void check_ground_size(int n) {
  if (n > ElementSet::kMaxGroundSize) {
    throw LimitExceeded("ground-set size " + std::to_string(n) +
                        " exceeds the bitmask limit of 64");
  }
}

void check_within_ground(const CircuitMatroid& m, ElementSet s,
                         const char* what) {
  if (!s.subset_of(ElementSet::from_mask(full_mask(m.ground_size())))) {
    throw InvalidInput("out-of-range", std::string(what) + " " + s.to_string() +
                                           " leaves the ground set [" +
                                           std::to_string(m.ground_size()) + "]");
  }
}

// C(n, k), clamped so it never overflows; only ever compared against an
// in-memory circuit count.
std::uint64_t binom_clamped(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned __int128 r = 1;
  const unsigned __int128 cap = static_cast<std::uint64_t>(1) << 62;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > cap) return static_cast<std::uint64_t>(cap);
  }
  return static_cast<std::uint64_t>(r);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

CircuitMatroid CircuitMatroid::validate(int n, std::vector<ElementSet> circuits) {
  if (n < 1) {
    throw InvalidInput("invalid-params", "ground-set size must be at least 1");
  }
  check_ground_size(n);
  const ElementSet ground = ElementSet::from_mask(full_mask(n));
  for (const ElementSet& c : circuits) {
    if (c.empty()) {
      throw AxiomViolation(1, "the empty set is not a circuit");
    }
    if (!c.subset_of(ground)) {
      throw InvalidInput("out-of-range", "circuit " + c.to_string() +
                                             " leaves the ground set [" +
                                             std::to_string(n) + "]");
    }
  }
  canonicalize(circuits);
  const std::size_t k = circuits.size();
  // Axiom (2): no circuit properly inside another. Circuits are sorted by
  // cardinality, so only i < j can nest.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (circuits[i].subset_of(circuits[j])) {
        throw AxiomViolation(2, "circuit " + circuits[i].to_string() +
                                    " is a proper subset of " +
                                    circuits[j].to_string());
      }
    }
  }
  // Axiom (3): elimination over every pair and every shared element.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const ElementSet common = circuits[i] & circuits[j];
      if (common.empty()) continue;
      const ElementSet both = circuits[i] | circuits[j];
      for (int e : common.elements()) {
        const ElementSet target = both - ElementSet::of({e});
        bool eliminated = false;
        for (const ElementSet& c : circuits) {
          if (c.subset_of(target)) {
            eliminated = true;
            break;
          }
        }
        if (!eliminated) {
          throw AxiomViolation(
              3, "no circuit inside " + circuits[i].to_string() + " union " +
                     circuits[j].to_string() + " minus element " +
                     std::to_string(e));
        }
      }
    }
  }
  return CircuitMatroid(n, std::move(circuits));
}

CircuitMatroid CircuitMatroid::from_circuits_unchecked(
    int n, std::vector<ElementSet> circuits) {
  if (n < 0) {
    throw InvalidInput("invalid-params", "negative ground-set size");
  }
  check_ground_size(n);
  const ElementSet ground = ElementSet::from_mask(full_mask(n));
  for (const ElementSet& c : circuits) {
    if (!c.subset_of(ground) || c.empty()) {
      throw InvalidInput("out-of-range",
                         "set " + c.to_string() + " is not a nonempty subset of [" +
                             std::to_string(n) + "]");
    }
  }
  canonicalize(circuits);
  return CircuitMatroid(n, std::move(circuits));
}

std::vector<std::uint64_t> CircuitMatroid::circuit_masks() const {
  std::vector<std::uint64_t> out;
  out.reserve(circuits_.size());
  for (const ElementSet& c : circuits_) out.push_back(c.mask());
  return out;
}

bool CircuitMatroid::has_circuit(ElementSet c) const {
  return circuit_index(c).has_value();
}

std::optional<std::size_t> CircuitMatroid::circuit_index(ElementSet c) const {
  auto it = std::lower_bound(circuits_.begin(), circuits_.end(), c,
                             ElementSet::canonical_less);
  if (it != circuits_.end() && *it == c) {
    return static_cast<std::size_t>(it - circuits_.begin());
  }
  return std::nullopt;
}

bool is_simple(const CircuitMatroid& m) {
  for (const ElementSet& c : m.circuits()) {
    if (c.size() < 3) return false;
  }
  return true;
}

std::vector<int> relabel_map(int n, ElementSet removed) {
  std::vector<int> kept;
  kept.reserve(static_cast<std::size_t>(n));
  for (int e = 1; e <= n; ++e) {
    if (!removed.contains(e)) kept.push_back(e);
  }
  return kept;
}

CircuitMatroid delete_elements(const CircuitMatroid& m, ElementSet t) {
  check_within_ground(m, t, "deletion set");
  const std::uint64_t keep = full_mask(m.ground_size()) & ~t.mask();
  std::vector<ElementSet> out;
  for (const ElementSet& c : m.circuits()) {
    if (!c.intersects(t)) {
      out.push_back(ElementSet::from_mask(compress_mask(c.mask(), keep)));
    }
  }
  return CircuitMatroid::from_circuits_unchecked(m.ground_size() - t.size(),
                                                 std::move(out));
}

CircuitMatroid contract_elements(const CircuitMatroid& m, ElementSet t) {
  check_within_ground(m, t, "contraction set");
  const std::uint64_t keep = full_mask(m.ground_size()) & ~t.mask();
  std::vector<ElementSet> residues;
  for (const ElementSet& c : m.circuits()) {
    const ElementSet r = c - t;
    if (!r.empty()) {
      residues.push_back(ElementSet::from_mask(compress_mask(r.mask(), keep)));
    }
  }
  canonicalize(residues);
  // Size-ascending order makes the minimality filter a single pass.
  std::vector<ElementSet> minimal;
  for (const ElementSet& r : residues) {
    bool dominated = false;
    for (const ElementSet& kept : minimal) {
      if (kept.subset_of(r)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(r);
  }
  return CircuitMatroid::from_circuits_unchecked(m.ground_size() - t.size(),
                                                 std::move(minimal));
}

SimplifyResult simplify(const CircuitMatroid& m) {
  const int n = m.ground_size();
  std::uint64_t loops = 0;
  for (const ElementSet& c : m.circuits()) {
    if (c.size() == 1) loops |= c.mask();
  }
  UnionFind uf(n + 1);
  for (const ElementSet& c : m.circuits()) {
    if (c.size() == 2) {
      const auto elems = c.elements();
      uf.unite(elems[0], elems[1]);
    }
  }
  // Keep the smallest element of each parallel class.
  std::vector<int> class_min(n + 1, 0);
  for (int e = 1; e <= n; ++e) {
    if (loops & (std::uint64_t{1} << (e - 1))) continue;
    const int root = uf.find(e);
    if (class_min[root] == 0) class_min[root] = e;
  }
  std::uint64_t removed = loops;
  for (int e = 1; e <= n; ++e) {
    if (loops & (std::uint64_t{1} << (e - 1))) continue;
    if (class_min[uf.find(e)] != e) removed |= std::uint64_t{1} << (e - 1);
  }
  const ElementSet removed_set = ElementSet::from_mask(removed);
  return SimplifyResult{delete_elements(m, removed_set),
                        relabel_map(n, removed_set)};
}

std::optional<std::pair<int, int>> uniform_parameters(const CircuitMatroid& m) {
  const int n = m.ground_size();
  if (m.circuit_count() == 0) return std::make_pair(n, n);
  const int s = m.circuits().front().size();
  for (const ElementSet& c : m.circuits()) {
    if (c.size() != s) return std::nullopt;
  }
  if (static_cast<std::uint64_t>(m.circuit_count()) != binom_clamped(n, s)) {
    return std::nullopt;
  }
  return std::make_pair(s - 1, n);
}

namespace {

bool decompose_rec(const std::vector<ElementSet>& candidates, ElementSet remaining,
                   std::vector<ElementSet>& chosen) {
  if (remaining.empty()) return true;
  const std::uint64_t low = remaining.mask() & (0 - remaining.mask());
  for (const ElementSet& c : candidates) {
    if ((c.mask() & low) != 0 && c.subset_of(remaining)) {
      chosen.push_back(c);
      if (decompose_rec(candidates, remaining - c, chosen)) return true;
      chosen.pop_back();
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<ElementSet>> symdiff_decompose(const CircuitMatroid& m,
                                                         ElementSet c1,
                                                         ElementSet c2) {
  if (!m.has_circuit(c1)) {
    throw InvalidInput("not-a-circuit",
                       c1.to_string() + " is not a circuit of the matroid");
  }
  if (!m.has_circuit(c2)) {
    throw InvalidInput("not-a-circuit",
                       c2.to_string() + " is not a circuit of the matroid");
  }
  const ElementSet target = c1 ^ c2;
  std::vector<ElementSet> chosen;
  if (target.empty()) return chosen;
  std::vector<ElementSet> candidates;
  for (const ElementSet& c : m.circuits()) {
    if (c.subset_of(target)) candidates.push_back(c);
  }
  if (decompose_rec(candidates, target, chosen)) return chosen;
  return std::nullopt;
}

}  // namespace trop
