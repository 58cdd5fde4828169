#include "nbn/io/trajectory.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nbn::io {

namespace {

[[noreturn]] void fail(const std::string& source, std::size_t line,
                       const std::string& message) {
    throw std::runtime_error(source + ":" + std::to_string(line) + ": " +
                             message);
}

} // namespace

TrajectoryData ingest_trajectories(std::istream& in, const std::string& source,
                                   SampleSet base) {
    TrajectoryData data{std::move(base), {}};
    const std::size_t d = data.samples.dimension();

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::istringstream fields(line);
        std::string run_id;
        if (!(fields >> run_id)) continue; // blank or comment-only line

        long long iter = 0;
        if (!(fields >> iter) || iter < 0)
            fail(source, lineno,
                 "expected a non-negative iteration after run id '" + run_id +
                     "'");

        std::vector<std::int32_t> vals(d);
        for (std::size_t i = 0; i < d; ++i) {
            if (!(fields >> vals[i]))
                fail(source, lineno,
                     "expected " + std::to_string(d) + " values, got " +
                         std::to_string(i));
        }
        std::string extra;
        if (fields >> extra)
            fail(source, lineno,
                 "trailing token '" + extra + "' after " + std::to_string(d) +
                     " values");

        SolutionId id = kNoSolution;
        try {
            id = data.samples.insert(std::move(vals)).first;
        } catch (const std::invalid_argument& e) {
            fail(source, lineno, e.what());
        }

        const std::uint32_t run = data.samples.intern_run(run_id);
        data.samples.add_label(id, run, static_cast<std::uint64_t>(iter));
        if (run == data.runs.size())
            data.runs.push_back(TrajectoryRun{run_id, {}});
        data.runs[run].points.emplace_back(static_cast<std::uint64_t>(iter), id);
    }
    return data;
}

TrajectoryData ingest_trajectories_file(const std::string& path,
                                        SampleSet base) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    return ingest_trajectories(in, path, std::move(base));
}

} // namespace nbn::io
