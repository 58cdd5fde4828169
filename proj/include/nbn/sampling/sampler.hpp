#pragma once

#include <cstdint>
#include <vector>

#include "nbn/core/sample_set.hpp"

namespace nbn::sampling {

/// Generator used inside a local region S(center, K) = { a : d(a, center) <= K }.
///
///  - UniformJ: independent draws; strings flip j distinct positions with
///    j uniform on {0..K}; tours restart at the center and apply a random
///    number of segment reversals, each accepted only while the tour stays
///    inside the ball.
///  - Ball (strings only): like UniformJ but j is weighted by shell size
///    C(D, j), i.e. uniform over the ball rather than over radii.
///  - Walk: records every accepted state of a mutation walk (single bit flip /
///    single segment reversal per step) confined to the ball, restarting from
///    the center periodically. Produces chain-dense samples; this is the mode
///    that reproduces plateau/ruggedness census behavior, since independent
///    shell draws are almost surely far apart in high dimension.
enum class LocalStrategy : std::uint32_t { UniformJ = 0, Ball = 1, Walk = 2 };

const char* to_string(LocalStrategy s);

struct SamplerConfig {
    std::size_t n = 0;        // requested number of distinct solutions
    std::uint64_t seed = 0;

    bool local = false;
    std::vector<std::int32_t> center;  // required in local mode
    double k = 0;                      // ball radius; metric units
    LocalStrategy strategy = LocalStrategy::UniformJ;
    std::size_t restart_every = 0;     // Walk restart period; 0 = 4*max(1,K)

    /// Consecutive duplicate-collision budget per new solution; when
    /// exhausted the set is returned capped below n (callers warn).
    std::size_t max_retries = 50;

    /// Throws std::invalid_argument on inconsistent settings (missing or
    /// malformed center, negative radius, Ball strategy on tours, n == 0).
    void validate(const problems::Problem& problem) const;
};

/// n distinct solutions drawn uniformly over the whole space: iid uniform
/// bit strings, or uniform random permutations.
SampleSet sample_global(problems::ProblemPtr problem, std::size_t n,
                        std::uint64_t seed, std::size_t max_retries = 50);

/// Local sample inside the closed ball around config.center (which is always
/// inserted first, id 0, and recorded as the set's center). May return fewer
/// than n solutions when the duplicate budget is exhausted.
SampleSet sample_local(problems::ProblemPtr problem, const SamplerConfig& config);

/// Dispatch on config.local.
SampleSet sample(problems::ProblemPtr problem, const SamplerConfig& config);

} // namespace nbn::sampling
