#include "nbn/oracle/transition.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nbn::oracle {

double mutation_prob(std::size_t dim, double r, double dist) {
    if (!(r > 0)) throw std::invalid_argument("mutation_prob: r must be > 0");
    if (dist < 0) throw std::invalid_argument("mutation_prob: dist must be >= 0");
    const double log_norm = -0.5 * static_cast<double>(dim) *
                            std::log(2.0 * std::numbers::pi * r);
    const double log_kernel = -(dist * dist) / (2.0 * r);
    return std::exp(log_norm + log_kernel);
}

double selection_prob(double fa, double fb) { return fa > fb ? 1.0 : 0.0; }

std::optional<SolutionId> argmax_transition(const SampleSet& set, SolutionId x,
                                            const TransitionModel& model) {
    if (!(model.r > 0))
        throw std::invalid_argument("argmax_transition: r must be > 0");
    const double fx = set.fitness(x);
    // The density is strictly decreasing in distance for any fixed r, so the
    // argmax over accepted moves reduces to a nearest-strictly-fitter scan.
    // Comparing distances instead of densities keeps the result exact even
    // where the density itself underflows.
    double best_d = kInfDist;
    SolutionId best = kNoSolution;
    const auto n = static_cast<SolutionId>(set.size());
    for (SolutionId id = 0; id < n; ++id) {
        if (id == x) continue;
        if (selection_prob(set.fitness(id), fx) <= 0) continue;
        const double d = set.distance(x, id);
        if (d < best_d || (d == best_d && id < best)) {
            best_d = d;
            best = id;
        }
    }
    if (best == kNoSolution) return std::nullopt;
    return best;
}

} // namespace nbn::oracle
