#include "nbn/analysis/landscape.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nbn::analysis {

EvolutionaryPath evolutionary_path(const NbnGraph& graph, SolutionId start) {
    EvolutionaryPath path;
    SolutionId cur = start;
    path.nodes.push_back(cur);
    while (!graph.is_root(cur)) {
        path.max_edge = std::max(path.max_edge, graph.nbd(cur));
        cur = graph.parent(cur);
        path.nodes.push_back(cur);
    }
    return path;
}

double path_distance(const EvolutionaryPath& path) { return path.max_edge; }

SolutionId global_optimum(const NbnGraph& graph) {
    const auto n = static_cast<SolutionId>(graph.size());
    if (n == 0) throw std::invalid_argument("global_optimum: empty graph");
    SolutionId best = 0;
    for (SolutionId id = 1; id < n; ++id)
        if (graph.fitness(id) > graph.fitness(best)) best = id;
    return best;
}

SetDistance set_distance(const NbnGraph& graph,
                         std::span<const SolutionId> members) {
    if (members.empty())
        throw std::invalid_argument("set_distance: members must be non-empty");
    const double peak = graph.fitness(global_optimum(graph));

    SetDistance best;
    SetDistance best_any;
    for (SolutionId m : members) {
        EvolutionaryPath path = evolutionary_path(graph, m);
        const double hardness = path_distance(path);
        const bool reaches_peak = graph.fitness(path.nodes.back()) == peak;
        auto consider = [&](SetDistance& slot) {
            if (hardness < slot.distance ||
                (hardness == slot.distance &&
                 (slot.member == kNoSolution || m < slot.member))) {
                slot.distance = hardness;
                slot.member = m;
                slot.path = path;
            }
        };
        consider(best_any);
        if (reaches_peak) consider(best);
    }
    // With fitness-tied roots a chain can end in a non-global root; prefer
    // chains that reach the set optimum, fall back to the overall minimum.
    return best.member == kNoSolution ? best_any : best;
}

OptimaReport identify_optima(const NbnGraph& graph, double theta,
                             double vartheta, ThetaMode mode) {
    OptimaReport report;
    report.theta = theta;
    report.vartheta = vartheta;
    report.mode = mode;
    const auto n = static_cast<SolutionId>(graph.size());
    if (n == 0) return report;

    double peak = graph.fitness(global_optimum(graph));
    for (SolutionId id = 0; id < n; ++id) {
        const double f = graph.fitness(id);
        double measure = f;
        if (mode == ThetaMode::Ratio) {
            // Ratio of quality to the set optimum. For negative fitness
            // (tour length negated) the ratio is optimum/value, so better
            // solutions still score closer to 1 from below.
            if (peak == 0) {
                measure = f == 0 ? 1.0 : 0.0;
            } else if (peak > 0) {
                measure = f / peak;
            } else {
                measure = peak / f;
            }
        }
        if (measure < theta) continue;
        if (!graph.is_root(id) && graph.nbd(id) < vartheta) continue;
        report.ids.push_back(id);
    }
    return report;
}

std::vector<SolutionId> deception_filter(const NbnGraph& graph,
                                         SolutionId optimum, double nbd_min,
                                         double dist_max) {
    const auto n = static_cast<SolutionId>(graph.size());
    if (optimum < 0 || optimum >= n)
        throw std::invalid_argument("deception_filter: optimum id out of range");
    std::vector<SolutionId> out;
    for (SolutionId id = 0; id < n; ++id) {
        if (id == optimum) continue;
        if (!graph.is_root(id) && graph.nbd(id) < nbd_min) continue;
        if (graph.samples().distance(id, optimum) > dist_max) continue;
        out.push_back(id);
    }
    return out;
}

double mean_fitness_delta(const SampleSet& around_optimum,
                          const SampleSet& around_candidate) {
    if (around_optimum.size() == 0 || around_candidate.size() == 0)
        throw std::invalid_argument("mean_fitness_delta: empty sample set");
    if (around_optimum.size() != around_candidate.size())
        throw std::invalid_argument(
            "mean_fitness_delta: sample sets must be equal-sized for a fair "
            "comparison");
    auto mean = [](const SampleSet& s) {
        double total = 0;
        const auto n = static_cast<SolutionId>(s.size());
        for (SolutionId id = 0; id < n; ++id) total += s.fitness(id);
        return total / static_cast<double>(n);
    };
    return mean(around_optimum) - mean(around_candidate);
}

} // namespace nbn::analysis
