#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nbn/core/solution.hpp"
#include "nbn/problems/problem.hpp"

namespace nbn {

/// Label tying a solution to one point of an ingested optimizer trajectory.
struct RunLabel {
    std::uint32_t run = 0;   // index into run_names()
    std::uint64_t iter = 0;
};

/// Deduplicated set of evaluated solutions for one problem.
///
/// Inserting evaluates fitness through the problem and rejects duplicates:
/// bit strings collide on identical vectors, tours on identical undirected
/// edge sets (the stored permutation stays verbatim). Each solution also gets
/// a metric cache entry (packed bit words, or tour successor arrays) so
/// pairwise distances cost a couple of word ops per dimension word / city.
class SampleSet {
public:
    explicit SampleSet(problems::ProblemPtr problem);

    /// Evaluates and inserts. Returns (id, true) for a new solution or
    /// (existing id, false) for a duplicate. Throws on malformed values.
    std::pair<SolutionId, bool> insert(std::vector<std::int32_t> values);

    /// Loader path: inserts with a stored fitness instead of evaluating.
    /// Validation, dedup and fingerprint accumulation are identical to
    /// insert; pair with verify_fitness when the source is untrusted.
    std::pair<SolutionId, bool> insert_evaluated(std::vector<std::int32_t> values,
                                                 double fitness);

    const problems::Problem& problem() const { return *problem_; }
    const problems::ProblemPtr& problem_ptr() const { return problem_; }

    std::size_t size() const { return solutions_.size(); }
    std::size_t dimension() const { return dim_; }
    const Solution& operator[](SolutionId id) const {
        return solutions_[static_cast<std::size_t>(id)];
    }
    double fitness(SolutionId id) const {
        return solutions_[static_cast<std::size_t>(id)].fitness;
    }
    std::span<const std::int32_t> values(SolutionId id) const {
        return solutions_[static_cast<std::size_t>(id)].values;
    }

    /// Metric distance between two members (cached representations).
    /// Defined inline below; this sits in builder inner loops.
    double distance(SolutionId a, SolutionId b) const;

    /// Metric distance from a member to an external point.
    double distance_to(SolutionId a, std::span<const std::int32_t> point) const;

    /// Members strictly closer than r to x, excluding x itself.
    std::vector<SolutionId> neighborhood(SolutionId x, double r) const;

    /// Content fingerprint over the problem identity and all solutions in id
    /// order; graphs and beta tables built from this set carry it so that
    /// mismatched pairings fail loudly.
    std::uint64_t fingerprint() const { return fingerprint_; }

    // --- local-sampling bookkeeping -------------------------------------
    void set_center(SolutionId id) { center_ = id; }
    std::optional<SolutionId> center() const { return center_; }

    // --- trajectory labels ----------------------------------------------
    std::uint32_t intern_run(const std::string& name);
    void add_label(SolutionId id, std::uint32_t run, std::uint64_t iter);
    const std::vector<std::string>& run_names() const { return run_names_; }
    std::span<const RunLabel> labels(SolutionId id) const;
    bool has_labels() const { return !run_names_.empty(); }

    // --- raw caches for builder inner loops ------------------------------
    std::size_t words_per_solution() const { return words_per_; }
    const std::uint64_t* packed_bits(SolutionId id) const {
        return packed_.data() + static_cast<std::size_t>(id) * words_per_;
    }
    const std::int32_t* tour_next(SolutionId id) const {
        return next_.data() + static_cast<std::size_t>(id) * dim_;
    }

private:
    std::pair<SolutionId, bool> insert_impl(std::vector<std::int32_t> values,
                                            std::optional<double> fitness);
    std::uint64_t rep_hash(std::span<const std::int32_t> values) const;
    bool rep_equal(SolutionId id, std::span<const std::int32_t> values) const;
    void append_cache(std::span<const std::int32_t> values);

    problems::ProblemPtr problem_;
    std::size_t dim_ = 0;
    bool is_tour_ = false;
    std::size_t words_per_ = 0;

    std::vector<Solution> solutions_;
    std::vector<std::uint64_t> packed_;  // bit problems: dim bits per solution
    std::vector<std::int32_t> next_;     // tours: successor city per city
    std::unordered_map<std::uint64_t, std::vector<SolutionId>> dedup_;
    std::uint64_t fingerprint_ = 0;

    std::optional<SolutionId> center_;
    std::vector<std::string> run_names_;
    std::unordered_map<SolutionId, std::vector<RunLabel>> labels_;
};

inline double SampleSet::distance(SolutionId a, SolutionId b) const {
    if (!is_tour_) {
        const std::uint64_t* pa = packed_.data() + static_cast<std::size_t>(a) * words_per_;
        const std::uint64_t* pb = packed_.data() + static_cast<std::size_t>(b) * words_per_;
        std::size_t d = 0;
        for (std::size_t w = 0; w < words_per_; ++w)
            d += static_cast<std::size_t>(__builtin_popcountll(pa[w] ^ pb[w]));
        return static_cast<double>(d);
    }
    const std::int32_t* na = next_.data() + static_cast<std::size_t>(a) * dim_;
    const std::int32_t* nb = next_.data() + static_cast<std::size_t>(b) * dim_;
    std::size_t shared = 0;
    for (std::size_t c = 0; c < dim_; ++c) {
        const std::int32_t d = na[c];  // edge (c+1, d) of tour a
        shared += (nb[c] == d || nb[static_cast<std::size_t>(d) - 1] ==
                                     static_cast<std::int32_t>(c) + 1);
    }
    return static_cast<double>(dim_ - shared);
}

} // namespace nbn
