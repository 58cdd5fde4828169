#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nbn/core/nbn_graph.hpp"

namespace nbn::analysis {

/// Chain of nearest-better edges from a start solution to its root,
/// start first, root last.
struct EvolutionaryPath {
    std::vector<SolutionId> nodes;
    double max_edge = 0;  // longest single edge; 0 for a bare root
};

EvolutionaryPath evolutionary_path(const NbnGraph& graph, SolutionId start);

/// Path hardness: the longest single nearest-better edge along it. A path
/// consisting only of short edges means the chain is walkable with small
/// moves regardless of its total length.
double path_distance(const EvolutionaryPath& path);

/// Best-fitness member of the graph, ties toward the lower id.
SolutionId global_optimum(const NbnGraph& graph);

/// set_distance result: the member whose chain is easiest, its path, and
/// that path's hardness.
struct SetDistance {
    double distance = kInfDist;
    SolutionId member = kNoSolution;
    EvolutionaryPath path;
};

/// Minimum path hardness over `members` (e.g. one optimizer run's
/// population), ties toward the lower member id. Members whose chain ends in
/// a maximum-fitness root are preferred; when no member reaches one (only
/// possible with tied non-global roots), the minimum over all members is
/// returned. Requires non-empty members.
SetDistance set_distance(const NbnGraph& graph,
                         std::span<const SolutionId> members);

/// Fitness threshold interpretation for identify_optima. Ratio divides
/// fitness by the set optimum's (for negative fitness: optimum over value,
/// i.e. tour length ratio), so e.g. 0.99 means within 1% of the optimum.
enum class ThetaMode : std::uint32_t { Raw = 0, Ratio = 1 };

struct OptimaReport {
    double theta = 0;
    double vartheta = 0;
    ThetaMode mode = ThetaMode::Raw;
    std::vector<SolutionId> ids;  // ascending
};

/// Attraction-basin census: solutions with fitness passing theta whose
/// nearest-better distance is at least vartheta; roots count as infinitely
/// distant, so they pass any vartheta.
OptimaReport identify_optima(const NbnGraph& graph, double theta,
                             double vartheta, ThetaMode mode = ThetaMode::Raw);

/// Deception screen around a reference optimum: members other than `optimum`
/// whose nearest-better distance is at least nbd_min (roots pass) and whose
/// metric distance to the optimum is at most dist_max. Ascending ids.
std::vector<SolutionId> deception_filter(const NbnGraph& graph,
                                         SolutionId optimum, double nbd_min,
                                         double dist_max);

/// mean fitness around the optimum minus mean fitness around a candidate,
/// over two equal-size local samples; negative means the candidate's
/// surroundings are fitter (deception evidence). Throws on size mismatch or
/// empty sets.
double mean_fitness_delta(const SampleSet& around_optimum,
                          const SampleSet& around_candidate);

} // namespace nbn::analysis
