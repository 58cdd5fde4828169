#include "nbn/builder/builders.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <numeric>
#include <stdexcept>

#include "nbn/util/parallel.hpp"
#include "nbn/util/rng.hpp"

namespace nbn::builder {

namespace {

/// Candidate order for exact passes: fitness descending, id ascending.
/// A solution at position i only needs to compare against positions
/// [0, better_end[i]), the prefix of strictly fitter solutions.
void fitness_order(const SampleSet& set, std::span<const SolutionId> ids,
                   std::vector<SolutionId>& order,
                   std::vector<std::size_t>& better_end) {
    order.assign(ids.begin(), ids.end());
    std::sort(order.begin(), order.end(), [&](SolutionId a, SolutionId b) {
        const double fa = set.fitness(a);
        const double fb = set.fitness(b);
        if (fa != fb) return fa > fb;
        return a < b;
    });
    better_end.resize(order.size());
    std::size_t block = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (set.fitness(order[i]) != set.fitness(order[block])) block = i;
        better_end[i] = block;
    }
}

SolutionId best_of(const SampleSet& set, std::span<const SolutionId> ids) {
    SolutionId best = ids.front();
    for (SolutionId id : ids.subspan(1)) {
        const double f = set.fitness(id);
        const double fb = set.fitness(best);
        if (f > fb || (f == fb && id < best)) best = id;
    }
    return best;
}

/// Chunk boundaries that equalize pairwise-comparison work: position i costs
/// ~i comparisons, so worker w takes [n*sqrt(w/T), n*sqrt((w+1)/T)).
std::vector<std::size_t> triangular_bounds(std::size_t n, unsigned workers) {
    std::vector<std::size_t> bounds(workers + 1, 0);
    for (unsigned w = 1; w < workers; ++w) {
        const double frac = std::sqrt(static_cast<double>(w) / workers);
        bounds[w] = std::max<std::size_t>(
            bounds[w - 1], static_cast<std::size_t>(frac * static_cast<double>(n)));
    }
    bounds[workers] = n;
    return bounds;
}

} // namespace

BetaTable cnbsi(const SampleSet& set, unsigned threads) {
    const std::size_t n = set.size();
    BetaTable table(n, set.fingerprint());
    if (n < 2) return table;

    std::vector<SolutionId> all(n);
    std::iota(all.begin(), all.end(), SolutionId{0});
    std::vector<SolutionId> order;
    std::vector<std::size_t> better_end;
    fitness_order(set, all, order, better_end);

    unsigned workers = threads < 1 ? 1 : threads;
    if (static_cast<std::size_t>(workers) > n) workers = static_cast<unsigned>(n);
    const auto bounds = triangular_bounds(n, workers);

    if (set.problem().metric() == problems::Metric::Hamming) {
        // Gather packed rows contiguously in scan order so the inner loop is
        // a linear sweep of XOR+popcount over the strictly fitter prefix.
        const std::size_t w = set.words_per_solution();
        std::vector<std::uint64_t> rows(n * w);
        for (std::size_t i = 0; i < n; ++i)
            std::memcpy(rows.data() + i * w, set.packed_bits(order[i]),
                        w * sizeof(std::uint64_t));
        auto scan = [&](unsigned worker, std::size_t, std::size_t) {
            for (std::size_t i = bounds[worker]; i < bounds[worker + 1]; ++i) {
                const std::size_t end = better_end[i];
                if (end == 0) continue;
                const std::uint64_t* me = rows.data() + i * w;
                std::uint64_t best_d = ~std::uint64_t{0};
                SolutionId best_p = kNoSolution;
                const std::uint64_t* cand = rows.data();
                for (std::size_t j = 0; j < end; ++j, cand += w) {
                    std::uint64_t d = 0;
                    for (std::size_t k = 0; k < w; ++k)
                        d += static_cast<std::uint64_t>(std::popcount(me[k] ^ cand[k]));
                    const SolutionId p = order[j];
                    if (d < best_d || (d == best_d && p < best_p)) {
                        best_d = d;
                        best_p = p;
                    }
                }
                table.improve(order[i], best_p, static_cast<double>(best_d));
            }
        };
        util::parallel_chunks(workers, workers, scan);
    } else {
        // Tours: rows hold successor arrays; distance is city count minus
        // shared undirected edges.
        const auto cities = static_cast<std::size_t>(set.problem().dimension());
        std::vector<std::int32_t> rows(n * cities);
        for (std::size_t i = 0; i < n; ++i)
            std::memcpy(rows.data() + i * cities, set.tour_next(order[i]),
                        cities * sizeof(std::int32_t));
        auto scan = [&](unsigned worker, std::size_t, std::size_t) {
            std::vector<std::int32_t> prev(cities);
            for (std::size_t i = bounds[worker]; i < bounds[worker + 1]; ++i) {
                const std::size_t end = better_end[i];
                if (end == 0) continue;
                const std::int32_t* me = rows.data() + i * cities;
                // prev[] of the scanned row lets each candidate edge (c, next)
                // be tested with two lookups.
                for (std::size_t c = 0; c < cities; ++c)
                    prev[static_cast<std::size_t>(me[c]) - 1] =
                        static_cast<std::int32_t>(c + 1);
                std::size_t best_d = ~std::size_t{0};
                SolutionId best_p = kNoSolution;
                const std::int32_t* cand = rows.data();
                for (std::size_t j = 0; j < end; ++j, cand += cities) {
                    std::size_t shared = 0;
                    for (std::size_t c = 0; c < cities; ++c) {
                        const std::int32_t nxt = cand[c];
                        if (me[c] == nxt ||
                            prev[c] == nxt)
                            ++shared;
                    }
                    const std::size_t d = cities - shared;
                    const SolutionId p = order[j];
                    if (d < best_d || (d == best_d && p < best_p)) {
                        best_d = d;
                        best_p = p;
                    }
                }
                table.improve(order[i], best_p, static_cast<double>(best_d));
            }
        };
        util::parallel_chunks(workers, workers, scan);
    }
    return table;
}

void cnbsi_into(const SampleSet& set, std::span<const SolutionId> ids,
                BetaTable& out) {
    if (ids.size() < 2) return;
    std::vector<SolutionId> order;
    std::vector<std::size_t> better_end;
    fitness_order(set, ids, order, better_end);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const std::size_t end = better_end[i];
        if (end == 0) continue;
        double best_d = kInfDist;
        SolutionId best_p = kNoSolution;
        for (std::size_t j = 0; j < end; ++j) {
            const double d = set.distance(order[i], order[j]);
            const SolutionId p = order[j];
            if (d < best_d || (d == best_d && p < best_p)) {
                best_d = d;
                best_p = p;
            }
        }
        out.improve(order[i], best_p, best_d);
    }
}

std::vector<std::vector<SolutionId>>
partition_by_domain(const SampleSet& set, std::span<const SolutionId> ids,
                    std::size_t dim) {
    std::vector<std::vector<SolutionId>> groups;
    if (ids.empty()) return groups;

    std::int32_t lo = set.values(ids.front())[dim];
    std::int32_t hi = lo;
    for (SolutionId id : ids) {
        const std::int32_t v = set.values(id)[dim];
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }

    // Domains are tiny (bits, city indices), so a stable counting pass keeps
    // this linear; it also preserves the caller's id order inside each group.
    const auto range = static_cast<std::size_t>(hi - lo) + 1;
    if (range <= 4096) {
        std::vector<std::vector<SolutionId>> buckets(range);
        for (SolutionId id : ids)
            buckets[static_cast<std::size_t>(set.values(id)[dim] - lo)]
                .push_back(id);
        for (auto& bucket : buckets)
            if (!bucket.empty()) groups.push_back(std::move(bucket));
        return groups;
    }

    std::vector<std::pair<std::int32_t, SolutionId>> keyed;
    keyed.reserve(ids.size());
    for (SolutionId id : ids)
        keyed.emplace_back(set.values(id)[dim], id);
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 0; i < keyed.size();) {
        std::size_t j = i;
        while (j < keyed.size() && keyed[j].first == keyed[i].first) ++j;
        std::vector<SolutionId> group;
        group.reserve(j - i);
        for (std::size_t k = i; k < j; ++k) group.push_back(keyed[k].second);
        groups.push_back(std::move(group));
        i = j;
    }
    return groups;
}

void DivisionStats::note(std::size_t depth, std::size_t size) {
    if (max_subset_at_depth.size() <= depth)
        max_subset_at_depth.resize(depth + 1, 0);
    max_subset_at_depth[depth] =
        std::max(max_subset_at_depth[depth], size);
}

namespace {

struct DivideCtx {
    const SampleSet& set;
    std::mt19937_64 rng;
    std::size_t nm;
    BetaTable& out;
    DivisionStats* stats;
    const std::int32_t* center; // non-null enables the local re-split
};

std::uint32_t draw_dimension(DivideCtx& ctx, std::vector<std::uint32_t>& pool) {
    const std::size_t k =
        static_cast<std::size_t>(util::bounded(ctx.rng, pool.size()));
    const std::uint32_t dim = pool[k];
    pool[k] = pool.back();
    pool.pop_back();
    return dim;
}

/// Recursive division step. `pool` is the per-branch stock of unused
/// dimensions (drawn without replacement down the branch); the returned id is
/// the subset champion that represents this subset in the parent's stitch
/// pass.
SolutionId divide(DivideCtx& ctx, std::vector<SolutionId> ids,
                  std::vector<std::uint32_t> pool, std::size_t depth) {
    if (ctx.stats) ctx.stats->note(depth, ids.size());
    if (ids.size() <= ctx.nm || pool.empty()) {
        cnbsi_into(ctx.set, ids, ctx.out);
        return best_of(ctx.set, ids);
    }

    std::vector<std::vector<SolutionId>> children;
    const std::uint32_t dim = draw_dimension(ctx, pool);
    auto groups = partition_by_domain(ctx.set, ids, dim);
    if (ctx.center == nullptr) {
        children = std::move(groups);
    } else {
        // The subset sharing the center's value keeps most of a
        // center-concentrated sample; split it again on further dimensions
        // until it is small or dimensions run out. Later values of `pool`
        // are what the children inherit.
        std::vector<SolutionId> center_group;
        for (auto& g : groups) {
            if (ctx.set.values(g.front())[dim] == ctx.center[dim])
                center_group = std::move(g);
            else
                children.push_back(std::move(g));
        }
        std::uint32_t last_dim = dim;
        while (center_group.size() > ctx.nm && !pool.empty()) {
            last_dim = draw_dimension(ctx, pool);
            auto sub = partition_by_domain(ctx.set, center_group, last_dim);
            center_group.clear();
            for (auto& g : sub) {
                if (ctx.set.values(g.front())[last_dim] == ctx.center[last_dim])
                    center_group = std::move(g);
                else
                    children.push_back(std::move(g));
            }
        }
        if (!center_group.empty()) children.push_back(std::move(center_group));
    }

    std::vector<SolutionId> champions;
    champions.reserve(children.size());
    for (auto& group : children)
        champions.push_back(divide(ctx, std::move(group), pool, depth + 1));
    cnbsi_into(ctx.set, champions, ctx.out);
    return best_of(ctx.set, champions);
}

BetaTable run_division(const SampleSet& set, std::uint64_t seed, std::size_t nm,
                       DivisionStats* stats, bool local) {
    if (nm < 1) throw std::invalid_argument("cnbsd: nm must be >= 1");
    const std::size_t n = set.size();
    BetaTable table(n, set.fingerprint());
    if (n < 2) return table;

    const std::int32_t* center = nullptr;
    if (local && set.center())
        center = set.values(*set.center()).data();

    DivideCtx ctx{set, util::substream(seed, 0x64697631u), nm, table, stats,
                  center};
    std::vector<SolutionId> ids(n);
    std::iota(ids.begin(), ids.end(), SolutionId{0});
    std::vector<std::uint32_t> pool(
        static_cast<std::size_t>(set.problem().dimension()));
    std::iota(pool.begin(), pool.end(), 0u);
    divide(ctx, std::move(ids), std::move(pool), 0);
    return table;
}

} // namespace

BetaTable cnbsd(const SampleSet& set, std::uint64_t seed, std::size_t nm,
                DivisionStats* stats) {
    return run_division(set, seed, nm, stats, false);
}

BetaTable cnbsd_local(const SampleSet& set, std::uint64_t seed, std::size_t nm,
                      DivisionStats* stats) {
    return run_division(set, seed, nm, stats, true);
}

} // namespace nbn::builder
