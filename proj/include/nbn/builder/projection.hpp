#pragma once

#include <cstdint>
#include <optional>

#include "nbn/builder/builders.hpp"

namespace nbn::builder {

/// Round budget for the repeated-division builder. Each round runs one
/// division pass with a fresh full dimension pool and an independent RNG
/// substream; results are min-merged, so the error of a node's assignment
/// only ever shrinks as rounds accumulate.
struct ProjectionPlan {
    std::size_t rounds = 1;
    double epsilon = 0;       // 0 when rounds were given explicitly
    std::uint64_t seed = 0;
    std::size_t nm = 20;      // exact-solve threshold per subset
    bool local = false;       // use the center-aware division variant
};

/// Rounds needed for node error rate epsilon over n solutions:
/// ceil(ln(n)/epsilon^2) + 1 (strictly above the ln(n)/epsilon^2 bound).
/// Requires n >= 2 and epsilon in (0, 1].
std::size_t required_projections(std::size_t n, double epsilon);

/// Plan helper: explicit round count wins; otherwise rounds are derived from
/// epsilon via required_projections(set_size, epsilon).
ProjectionPlan make_plan(std::size_t set_size, std::optional<std::size_t> rounds,
                         double epsilon, std::uint64_t seed, std::size_t nm,
                         bool local);

/// Repeated random-division builder: plan.rounds independent division rounds,
/// min-merged. Rounds are distributed over `threads` workers; merging is
/// commutative, so results are byte-identical for any thread count.
BetaTable cnbsrp(const SampleSet& set, const ProjectionPlan& plan,
                 unsigned threads = 1);

} // namespace nbn::builder
