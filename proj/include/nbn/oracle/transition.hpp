#pragma once

#include <optional>

#include "nbn/core/sample_set.hpp"

namespace nbn::oracle {

/// (1+1)-ES step model used as the semantic reference for nearest-better
/// edges: an isotropic mutation kernel with spread r composed with strict
/// improvement selection. The most probable accepted transition from x is
/// the closest strictly fitter solution, independent of r.
struct TransitionModel {
    double r = 1.0;  // mutation spread, > 0
};

/// Mutation density at metric distance `dist` in a dim-dimensional space:
/// (2*pi*r)^(-dim/2) * exp(-dist^2 / (2r)). Computed in log space; extreme
/// dim/r combinations saturate to 0 or +inf in the returned double, while
/// orderings (the only thing the toolkit relies on) stay exact.
double mutation_prob(std::size_t dim, double r, double dist);

/// Strict-improvement acceptance: 1 when fa > fb, else 0.
double selection_prob(double fa, double fb);

/// Most probable accepted transition from x across the set: the strictly
/// fitter member maximizing mutation_prob, ties toward the lower id;
/// nullopt when nothing is fitter. Equals the exact nearest-better parent
/// for every r > 0 (density is strictly decreasing in distance), which is
/// the property the verify pipeline checks.
std::optional<SolutionId> argmax_transition(const SampleSet& set, SolutionId x,
                                            const TransitionModel& model);

} // namespace nbn::oracle
