#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace nbn {

/// Index of a solution inside one SampleSet. Stable for the set's lifetime.
using SolutionId = std::int64_t;
inline constexpr SolutionId kNoSolution = -1;

inline constexpr double kInfDist = std::numeric_limits<double>::infinity();

/// One sampled candidate: its variable values and the fitness assigned by the
/// owning problem. Values are bits (0/1) for string problems and 1-based
/// city ids for tours.
struct Solution {
    std::vector<std::int32_t> values;
    double fitness = 0.0;
};

/// Admissible values of one solution variable (inclusive integer range).
struct VariableDomain {
    std::uint32_t index = 0;
    std::int32_t lo = 0;
    std::int32_t hi = 0;

    std::size_t size() const { return static_cast<std::size_t>(hi - lo) + 1; }
};

} // namespace nbn
