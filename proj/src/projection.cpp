#include "nbn/builder/projection.hpp"

#include <cmath>
#include <stdexcept>

#include "nbn/util/parallel.hpp"
#include "nbn/util/rng.hpp"

namespace nbn::builder {

std::size_t required_projections(std::size_t n, double epsilon) {
    if (n < 2)
        throw std::invalid_argument("required_projections: need n >= 2");
    if (!(epsilon > 0.0) || epsilon > 1.0)
        throw std::invalid_argument(
            "required_projections: epsilon must be in (0, 1]");
    const double bound = std::log(static_cast<double>(n)) / (epsilon * epsilon);
    return static_cast<std::size_t>(std::ceil(bound)) + 1;
}

ProjectionPlan make_plan(std::size_t set_size, std::optional<std::size_t> rounds,
                         double epsilon, std::uint64_t seed, std::size_t nm,
                         bool local) {
    ProjectionPlan plan;
    plan.seed = seed;
    plan.nm = nm;
    plan.local = local;
    if (rounds) {
        if (*rounds == 0)
            throw std::invalid_argument("make_plan: rounds must be >= 1");
        plan.rounds = *rounds;
        plan.epsilon = 0.0;
    } else {
        plan.rounds = required_projections(set_size, epsilon);
        plan.epsilon = epsilon;
    }
    return plan;
}

BetaTable cnbsrp(const SampleSet& set, const ProjectionPlan& plan,
                 unsigned threads) {
    if (plan.rounds == 0)
        throw std::invalid_argument("cnbsrp: plan.rounds must be >= 1");
    if (plan.nm < 1)
        throw std::invalid_argument("cnbsrp: plan.nm must be >= 1");

    unsigned workers = threads < 1 ? 1 : threads;
    if (static_cast<std::size_t>(workers) > plan.rounds)
        workers = static_cast<unsigned>(plan.rounds);

    // Each round gets its own seed substream, indexed by round number alone,
    // so a round computes the same table no matter which worker runs it.
    // Min-merging is commutative and associative, which makes the final
    // table independent of the worker count.
    std::vector<BetaTable> partial(
        workers, BetaTable(set.size(), set.fingerprint()));
    util::parallel_chunks(
        plan.rounds, workers, [&](unsigned w, std::size_t b, std::size_t e) {
            for (std::size_t r = b; r < e; ++r) {
                const std::uint64_t round_seed =
                    util::splitmix64(plan.seed) ^ util::splitmix64(r + 1);
                BetaTable round =
                    plan.local ? cnbsd_local(set, round_seed, plan.nm)
                               : cnbsd(set, round_seed, plan.nm);
                partial[w].merge(round);
            }
        });

    BetaTable table = std::move(partial.front());
    for (std::size_t w = 1; w < partial.size(); ++w) table.merge(partial[w]);
    return table;
}

} // namespace nbn::builder
