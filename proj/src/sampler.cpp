#include "nbn/sampling/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "nbn/util/rng.hpp"

namespace nbn::sampling {

namespace {

using problems::Metric;
using problems::Problem;

constexpr std::uint64_t kGlobalTag = 0x676c6f62u; // stream tag "glob"
constexpr std::uint64_t kLocalTag = 0x6c6f636cu;  // stream tag "locl"

std::vector<std::int32_t> random_bits(std::mt19937_64& rng, std::size_t d) {
    std::vector<std::int32_t> vals(d);
    for (std::size_t w = 0; w < d; w += 64) {
        std::uint64_t word = rng();
        const std::size_t m = std::min<std::size_t>(64, d - w);
        for (std::size_t b = 0; b < m; ++b)
            vals[w + b] = static_cast<std::int32_t>((word >> b) & 1u);
    }
    return vals;
}

std::vector<std::int32_t> random_tour(std::mt19937_64& rng, std::size_t d) {
    std::vector<std::int32_t> vals(d);
    std::iota(vals.begin(), vals.end(), 1);
    for (std::size_t i = d - 1; i > 0; --i) {
        const auto j = static_cast<std::size_t>(util::bounded(rng, i + 1));
        std::swap(vals[i], vals[j]);
    }
    return vals;
}

/// Integer ball radius for a string problem: k is already in metric units.
std::size_t bit_radius(double k, std::size_t d) {
    const double clamped = std::min(k, static_cast<double>(d));
    return static_cast<std::size_t>(std::floor(clamped + 1e-9));
}

/// Picks j distinct indices from [0, d) into the front of idx (partial
/// Fisher-Yates over a caller-owned scratch vector).
void pick_distinct(std::mt19937_64& rng, std::vector<std::uint32_t>& idx,
                   std::size_t d, std::size_t j) {
    if (idx.size() != d) {
        idx.resize(d);
        std::iota(idx.begin(), idx.end(), 0u);
    }
    for (std::size_t t = 0; t < j; ++t) {
        const auto r =
            t + static_cast<std::size_t>(util::bounded(rng, d - t));
        std::swap(idx[t], idx[r]);
    }
}

/// Cumulative shell weights C(d, 0..radius) in log space, for the Ball
/// strategy (uniform over the ball instead of uniform over radii).
std::vector<double> shell_cumulative(std::size_t d, std::size_t radius) {
    std::vector<double> lw(radius + 1);
    double peak = -1e300;
    for (std::size_t j = 0; j <= radius; ++j) {
        lw[j] = std::lgamma(static_cast<double>(d) + 1) -
                std::lgamma(static_cast<double>(j) + 1) -
                std::lgamma(static_cast<double>(d - j) + 1);
        peak = std::max(peak, lw[j]);
    }
    std::vector<double> cum(radius + 1);
    double total = 0;
    for (std::size_t j = 0; j <= radius; ++j) {
        total += std::exp(lw[j] - peak);
        cum[j] = total;
    }
    return cum;
}

std::size_t draw_shell(std::mt19937_64& rng, const std::vector<double>& cum) {
    const double u = util::real01(rng) * cum.back();
    const auto it = std::lower_bound(cum.begin(), cum.end(), u);
    return static_cast<std::size_t>(
        std::min<std::ptrdiff_t>(it - cum.begin(),
                                 static_cast<std::ptrdiff_t>(cum.size()) - 1));
}

/// Undirected edge count shared between a positional tour and the center's
/// successor table (1-based cities).
std::size_t shared_with_center(const std::vector<std::int32_t>& tour,
                               const std::vector<std::int32_t>& center_next) {
    std::size_t shared = 0;
    const std::size_t d = tour.size();
    for (std::size_t i = 0; i < d; ++i) {
        const std::int32_t u = tour[i];
        const std::int32_t v = tour[(i + 1) % d];
        if (center_next[static_cast<std::size_t>(u) - 1] == v ||
            center_next[static_cast<std::size_t>(v) - 1] == u)
            ++shared;
    }
    return shared;
}

std::vector<std::int32_t> successor_table(std::span<const std::int32_t> tour) {
    std::vector<std::int32_t> next(tour.size());
    for (std::size_t i = 0; i < tour.size(); ++i)
        next[static_cast<std::size_t>(tour[i]) - 1] =
            tour[(i + 1) % tour.size()];
    return next;
}

/// Inserts candidates produced by gen() until `n` members exist or
/// `max_retries` consecutive inserts hit duplicates.
template <typename Gen>
void fill(SampleSet& set, std::size_t n, std::size_t max_retries, Gen&& gen) {
    std::size_t consecutive = 0;
    while (set.size() < n) {
        auto [id, fresh] = set.insert(gen());
        (void)id;
        if (fresh) {
            consecutive = 0;
        } else if (++consecutive >= max_retries) {
            break;
        }
    }
}

SampleSet local_bits(problems::ProblemPtr problem, const SamplerConfig& config,
                     std::mt19937_64& rng) {
    const auto d = static_cast<std::size_t>(problem->dimension());
    const std::size_t radius = bit_radius(config.k, d);
    SampleSet set(std::move(problem));
    set.set_center(set.insert(config.center).first);

    std::vector<std::uint32_t> idx;
    auto flip_some = [&](std::size_t j) {
        pick_distinct(rng, idx, d, j);
        std::vector<std::int32_t> vals = config.center;
        for (std::size_t t = 0; t < j; ++t) vals[idx[t]] ^= 1;
        return vals;
    };

    switch (config.strategy) {
    case LocalStrategy::UniformJ:
        fill(set, config.n, config.max_retries, [&] {
            const auto j =
                static_cast<std::size_t>(util::bounded(rng, radius + 1));
            return flip_some(j);
        });
        break;
    case LocalStrategy::Ball: {
        const auto cum = shell_cumulative(d, radius);
        fill(set, config.n, config.max_retries, [&] {
            return flip_some(draw_shell(rng, cum));
        });
        break;
    }
    case LocalStrategy::Walk: {
        const std::size_t period = config.restart_every
                                       ? config.restart_every
                                       : 4 * std::max<std::size_t>(1, radius);
        // One-bit-flip walk confined to the ball; every accepted state is a
        // candidate. Rejected proposals (would leave the ball) have their own
        // generous budget so a string sitting on the boundary cannot burn the
        // duplicate budget.
        std::vector<std::int32_t> cur = config.center;
        std::size_t dist = 0;
        std::size_t accepted_since_restart = 0;
        std::size_t consecutive_dup = 0;
        std::size_t consecutive_rejected = 0;
        const std::size_t reject_budget =
            config.max_retries * std::max<std::size_t>(d, 64);
        while (set.size() < config.n) {
            const auto p = static_cast<std::size_t>(util::bounded(rng, d));
            const bool toward =
                cur[p] != config.center[p]; // flipping back shrinks distance
            const std::size_t next_dist = toward ? dist - 1 : dist + 1;
            if (next_dist > radius) {
                if (++consecutive_rejected >= reject_budget) break;
                continue;
            }
            consecutive_rejected = 0;
            cur[p] ^= 1;
            dist = next_dist;
            if (set.insert(cur).second) {
                consecutive_dup = 0;
            } else if (++consecutive_dup >= config.max_retries) {
                break;
            }
            if (++accepted_since_restart >= period) {
                cur = config.center;
                dist = 0;
                accepted_since_restart = 0;
            }
        }
        break;
    }
    }
    return set;
}

SampleSet local_tours(problems::ProblemPtr problem, const SamplerConfig& config,
                      std::mt19937_64& rng) {
    const auto d = static_cast<std::size_t>(problem->dimension());
    const auto radius = static_cast<std::size_t>(
        std::floor(std::min(config.k, static_cast<double>(d)) + 1e-9));
    SampleSet set(std::move(problem));
    set.set_center(set.insert(config.center).first);
    const std::vector<std::int32_t> center_next = successor_table(config.center);

    auto in_ball = [&](const std::vector<std::int32_t>& tour) {
        return d - shared_with_center(tour, center_next) <= radius;
    };
    auto reverse_segment = [&](std::vector<std::int32_t>& tour) {
        auto a = static_cast<std::size_t>(util::bounded(rng, d));
        auto b = static_cast<std::size_t>(util::bounded(rng, d));
        while (b == a) b = static_cast<std::size_t>(util::bounded(rng, d));
        if (a > b) std::swap(a, b);
        std::reverse(tour.begin() + static_cast<std::ptrdiff_t>(a),
                     tour.begin() + static_cast<std::ptrdiff_t>(b) + 1);
        return std::pair<std::size_t, std::size_t>{a, b};
    };

    if (config.strategy == LocalStrategy::UniformJ) {
        fill(set, config.n, config.max_retries, [&] {
            // Fresh chain from the center: a random count of segment
            // reversals, keeping only moves that stay inside the ball.
            std::vector<std::int32_t> cur = config.center;
            const auto moves =
                static_cast<std::size_t>(util::bounded(rng, radius + 1));
            std::size_t budget = moves * 20;
            for (std::size_t done = 0; done < moves && budget > 0; --budget) {
                std::vector<std::int32_t> trial = cur;
                reverse_segment(trial);
                if (in_ball(trial)) {
                    cur = std::move(trial);
                    ++done;
                }
            }
            return cur;
        });
    } else { // Walk (Ball is rejected by validate for tours)
        const std::size_t period = config.restart_every
                                       ? config.restart_every
                                       : 4 * std::max<std::size_t>(1, radius);
        std::vector<std::int32_t> cur = config.center;
        std::size_t accepted_since_restart = 0;
        std::size_t consecutive_dup = 0;
        std::size_t consecutive_rejected = 0;
        const std::size_t reject_budget =
            config.max_retries * std::max<std::size_t>(d, 64);
        while (set.size() < config.n) {
            std::vector<std::int32_t> trial = cur;
            reverse_segment(trial);
            if (!in_ball(trial)) {
                if (++consecutive_rejected >= reject_budget) break;
                continue;
            }
            consecutive_rejected = 0;
            cur = std::move(trial);
            if (set.insert(cur).second) {
                consecutive_dup = 0;
            } else if (++consecutive_dup >= config.max_retries) {
                break;
            }
            if (++accepted_since_restart >= period) {
                cur = config.center;
                accepted_since_restart = 0;
            }
        }
    }
    return set;
}

} // namespace

const char* to_string(LocalStrategy s) {
    switch (s) {
    case LocalStrategy::UniformJ: return "uniform-j";
    case LocalStrategy::Ball: return "ball";
    case LocalStrategy::Walk: return "walk";
    }
    return "?";
}

void SamplerConfig::validate(const Problem& problem) const {
    if (n == 0) throw std::invalid_argument("sampler: n must be >= 1");
    if (max_retries == 0)
        throw std::invalid_argument("sampler: max_retries must be >= 1");
    if (!local) return;
    if (k < 0) throw std::invalid_argument("sampler: radius k must be >= 0");
    problem.validate(center); // throws with a specific message
    if (problem.metric() == Metric::TspEdgeUnits &&
        strategy == LocalStrategy::Ball)
        throw std::invalid_argument(
            "sampler: ball strategy is defined for bit strings only");
}

SampleSet sample_global(problems::ProblemPtr problem, std::size_t n,
                        std::uint64_t seed, std::size_t max_retries) {
    if (n == 0) throw std::invalid_argument("sampler: n must be >= 1");
    if (max_retries == 0)
        throw std::invalid_argument("sampler: max_retries must be >= 1");
    auto rng = util::substream(seed, kGlobalTag);
    const auto d = static_cast<std::size_t>(problem->dimension());
    const bool tours = problem->metric() == Metric::TspEdgeUnits;
    SampleSet set(std::move(problem));
    fill(set, n, max_retries, [&] {
        return tours ? random_tour(rng, d) : random_bits(rng, d);
    });
    return set;
}

SampleSet sample_local(problems::ProblemPtr problem,
                       const SamplerConfig& config) {
    config.validate(*problem);
    if (!config.local)
        throw std::invalid_argument("sample_local: config.local is false");
    auto rng = util::substream(config.seed, kLocalTag);
    if (problem->metric() == Metric::TspEdgeUnits)
        return local_tours(std::move(problem), config, rng);
    return local_bits(std::move(problem), config, rng);
}

SampleSet sample(problems::ProblemPtr problem, const SamplerConfig& config) {
    if (config.local) return sample_local(std::move(problem), config);
    return sample_global(std::move(problem), config.n, config.seed,
                         config.max_retries);
}

} // namespace nbn::sampling
