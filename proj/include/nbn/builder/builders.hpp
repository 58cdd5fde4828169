#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "nbn/builder/beta_table.hpp"
#include "nbn/core/sample_set.hpp"

namespace nbn::builder {

/// Exact nearest-better table: for every solution, the closest strictly
/// fitter solution (ties by lower candidate id). O(N^2 * D_eff) with the
/// set's packed representations; rows are independent, so work is chunked
/// across `threads` deterministically.
BetaTable cnbsi(const SampleSet& set, unsigned threads = 1);

/// Exact pass restricted to `ids`: assignments consider only candidates
/// inside `ids` and are min-merged into `out`.
void cnbsi_into(const SampleSet& set, std::span<const SolutionId> ids,
                BetaTable& out);

/// Groups `ids` by their value at dimension `dim`; groups ordered by value,
/// ids in the caller's order within a group (ascending when the caller
/// passes ascending ids, as the division recursion does).
std::vector<std::vector<SolutionId>>
partition_by_domain(const SampleSet& set, std::span<const SolutionId> ids,
                    std::size_t dim);

/// Instrumentation for the division recursion: largest subset entering each
/// recursion depth. Depth 0 is the full set.
struct DivisionStats {
    std::vector<std::size_t> max_subset_at_depth;
    void note(std::size_t depth, std::size_t size);
};

/// One division round: subsets of at most `nm` solutions are solved exactly;
/// larger ones are partitioned on a random unused dimension, solved
/// recursively, and stitched together by an exact pass over the subset
/// champions. Every assignment is sound (parent strictly fitter, distance
/// exact); nearness is approximate within one round. Deterministic in
/// (set, seed, nm).
BetaTable cnbsd(const SampleSet& set, std::uint64_t seed, std::size_t nm,
                DivisionStats* stats = nullptr);

/// Division round for center-concentrated (local) samples: after each
/// partition, the subset matching the center's value at the split dimension
/// is immediately re-partitioned on further dimensions within the same
/// round, so no child subset stays near the full size. Falls back to the
/// plain behavior when the set has no recorded center.
BetaTable cnbsd_local(const SampleSet& set, std::uint64_t seed, std::size_t nm,
                      DivisionStats* stats = nullptr);

} // namespace nbn::builder
