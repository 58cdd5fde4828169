#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "nbn/core/sample_set.hpp"

namespace nbn::io {

/// One optimizer run recovered from a trajectory file: its points in file
/// order as (iteration, solution id in the merged set). The same solution
/// reached by several runs maps to one id carrying all labels.
struct TrajectoryRun {
    std::string run_id;
    std::vector<std::pair<std::uint64_t, SolutionId>> points;
};

struct TrajectoryData {
    SampleSet samples;  // base set plus the ingested overlay, deduplicated
    std::vector<TrajectoryRun> runs;
};

/// Reads line-oriented trajectory records `run_id iteration v1 .. vD`
/// (whitespace separated; '#' starts a comment; blank lines ignored) and
/// merges them into a copy of `base`. Values are validated through the
/// problem; malformed lines raise std::runtime_error with the line number.
/// An empty file yields base unchanged with zero runs.
TrajectoryData ingest_trajectories(std::istream& in, const std::string& source,
                                   SampleSet base);
TrajectoryData ingest_trajectories_file(const std::string& path, SampleSet base);

} // namespace nbn::io
