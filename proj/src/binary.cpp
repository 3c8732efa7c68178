#include <string>

#include "tropbasis/errors.hpp"
#include "tropbasis/kernels.hpp"
#include "tropbasis/matroid.hpp"

namespace trop {

namespace {

void check_cap(int n, int soft_cap, int hard_cap, bool force, const char* what) {
  const int cap = force ? hard_cap : soft_cap;
  if (n > cap) {
    throw LimitExceeded(std::string(what) + " is capped at n = " +
                        std::to_string(cap) + (force ? "" : " (use force to raise)") +
                        ", got n = " + std::to_string(n));
  }
}

bool is_binary_symdiff(const CircuitMatroid& m) {
  const auto& circuits = m.circuits();
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = i + 1; j < circuits.size(); ++j) {
      if (!symdiff_decompose(m, circuits[i], circuits[j]).has_value()) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::optional<MinorReport> has_u24_minor(const CircuitMatroid& m,
                                         const ExecConfig& cfg) {
  const int n = m.ground_size();
  if (n < 4) return std::nullopt;
  check_cap(n, cfg.max_minor_n, ExecConfig::kHardMinorN, cfg.force,
            "the minor search");
  const auto masks = m.circuit_masks();
  const kernels::MinorScan scan =
      kernels::find_u24_minor(n, masks, cfg.resolve_jobs());
  if (!scan.found) return std::nullopt;
  const ElementSet del = ElementSet::from_mask(scan.delete_mask);
  const ElementSet con = ElementSet::from_mask(scan.contract_mask);
  CircuitMatroid after_delete = delete_elements(m, del);
  // The contraction set has to be renumbered into the deleted labels.
  const ElementSet con_relabeled = ElementSet::from_mask(
      compress_mask(con.mask(), full_mask(n) & ~del.mask()));
  return MinorReport{del, con, contract_elements(after_delete, con_relabeled)};
}

bool is_binary(const CircuitMatroid& m, BinaryMethod method,
               const ExecConfig& cfg) {
  switch (method) {
    case BinaryMethod::kSymdiff:
      return is_binary_symdiff(m);
    case BinaryMethod::kMinor:
      return !has_u24_minor(m, cfg).has_value();
    case BinaryMethod::kCrossCheck: {
      const bool by_symdiff = is_binary_symdiff(m);
      const bool by_minor = !has_u24_minor(m, cfg).has_value();
      if (by_symdiff != by_minor) {
        throw MethodDisagreement(
            "symdiff says " + std::string(by_symdiff ? "binary" : "non-binary") +
            " but the minor search disagrees");
      }
      return by_symdiff;
    }
  }
  return false;  // unreachable
}

RankResult rank_and_bases(const CircuitMatroid& m, const ExecConfig& cfg) {
  check_cap(m.ground_size(), cfg.max_subset_n, ExecConfig::kHardSubsetN,
            cfg.force, "rank/basis enumeration");
  const auto masks = m.circuit_masks();
  kernels::RankScan scan =
      kernels::rank_scan(m.ground_size(), masks, cfg.resolve_jobs());
  RankResult out;
  out.rank = scan.rank;
  out.bases.reserve(scan.bases.size());
  for (std::uint64_t b : scan.bases) out.bases.push_back(ElementSet::from_mask(b));
  return out;
}

CircuitMatroid dual(const CircuitMatroid& m, const ExecConfig& cfg) {
  const RankResult rb = rank_and_bases(m, cfg);
  std::vector<std::uint64_t> basis_masks;
  basis_masks.reserve(rb.bases.size());
  for (const ElementSet& b : rb.bases) basis_masks.push_back(b.mask());
  const std::vector<std::uint64_t> cocircuits = kernels::minimal_transversals(
      m.ground_size(), basis_masks, cfg.resolve_jobs());
  std::vector<ElementSet> out;
  out.reserve(cocircuits.size());
  for (std::uint64_t c : cocircuits) out.push_back(ElementSet::from_mask(c));
  return CircuitMatroid::from_circuits_unchecked(m.ground_size(), std::move(out));
}

}  // namespace trop
