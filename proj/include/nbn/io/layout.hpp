#pragma once

#include <vector>

#include "nbn/core/nbn_graph.hpp"

namespace nbn::io {

/// Plot-ready placement of one solution. Top view plots (x, y), side view
/// plots (x, height); height is the fitness.
struct LayoutPoint {
    SolutionId id = kNoSolution;
    double x = 0;
    double y = 0;       // cumulative nearest-better edge distance from the root
    double height = 0;  // fitness
    SolutionId parent = kNoSolution;
};

/// Deterministic tidy-forest layout, indexed by solution id. Leaves take
/// consecutive x slots, every parent is centered over its children, children
/// are ordered by subtree size (ties by id), and each tree of the forest
/// occupies a disjoint x range, so separate basins land in separate
/// clusters. Iterative traversal; safe for chain-deep graphs.
std::vector<LayoutPoint> layout_2d(const NbnGraph& graph);

} // namespace nbn::io
