#include "nbn/core/sample_set.hpp"

#include <algorithm>
#include <stdexcept>

#include "nbn/util/rng.hpp"

namespace nbn {

namespace {
std::span<const RunLabel> kNoLabels{};
}

SampleSet::SampleSet(problems::ProblemPtr problem)
    : problem_(std::move(problem)) {
    if (!problem_) throw std::invalid_argument("SampleSet: null problem");
    dim_ = problem_->dimension();
    is_tour_ = problem_->metric() == problems::Metric::TspEdgeUnits;
    words_per_ = is_tour_ ? 0 : (dim_ + 63) / 64;
    fingerprint_ = problem_->content_hash();
}

void SampleSet::append_cache(std::span<const std::int32_t> values) {
    if (!is_tour_) {
        const std::size_t base = packed_.size();
        packed_.resize(base + words_per_, 0);
        for (std::size_t i = 0; i < dim_; ++i)
            if (values[i] != 0) packed_[base + i / 64] |= (1ULL << (i % 64));
    } else {
        const std::size_t base = next_.size();
        next_.resize(base + dim_, 0);
        for (std::size_t i = 0; i < dim_; ++i) {
            const auto u = static_cast<std::size_t>(values[i]) - 1;
            next_[base + u] = values[(i + 1) % dim_];
        }
    }
}

std::uint64_t SampleSet::rep_hash(std::span<const std::int32_t> values) const {
    if (!is_tour_) {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        std::uint64_t word = 0;
        for (std::size_t i = 0; i < dim_; ++i) {
            if (values[i] != 0) word |= (1ULL << (i % 64));
            if (i % 64 == 63 || i + 1 == dim_) {
                h = util::fnv1a_value(word, h);
                word = 0;
            }
        }
        return h;
    }
    // canonical cycle traversal: start at city 1, walk toward the smaller
    // neighbor, so every rotation/reversal of one cycle hashes identically
    std::vector<std::int32_t> nb(2 * dim_, 0);  // two neighbors per city
    for (std::size_t i = 0; i < dim_; ++i) {
        const auto u = static_cast<std::size_t>(values[i]) - 1;
        const std::int32_t succ = values[(i + 1) % dim_];
        const std::int32_t pred = values[(i + dim_ - 1) % dim_];
        nb[2 * u] = succ;
        nb[2 * u + 1] = pred;
    }
    std::uint64_t h = 0xcbf29ce484222325ULL;
    std::int32_t prev = 1;
    std::int32_t cur = std::min(nb[0], nb[1]);
    h = util::fnv1a_value(prev, h);
    for (std::size_t step = 1; step < dim_; ++step) {
        h = util::fnv1a_value(cur, h);
        const auto c = static_cast<std::size_t>(cur) - 1;
        const std::int32_t a = nb[2 * c];
        const std::int32_t b = nb[2 * c + 1];
        const std::int32_t nxt = (a == prev) ? b : a;
        prev = cur;
        cur = nxt;
    }
    return h;
}

bool SampleSet::rep_equal(SolutionId id, std::span<const std::int32_t> values) const {
    const Solution& s = solutions_[static_cast<std::size_t>(id)];
    if (!is_tour_) return std::equal(s.values.begin(), s.values.end(), values.begin());
    // equal as undirected cycles iff every edge of `values` appears in s
    const std::int32_t* ne = next_.data() + static_cast<std::size_t>(id) * dim_;
    for (std::size_t i = 0; i < dim_; ++i) {
        const std::int32_t u = values[i];
        const std::int32_t v = values[(i + 1) % dim_];
        if (ne[static_cast<std::size_t>(u) - 1] != v &&
            ne[static_cast<std::size_t>(v) - 1] != u)
            return false;
    }
    return true;
}

std::pair<SolutionId, bool> SampleSet::insert(std::vector<std::int32_t> values) {
    return insert_impl(std::move(values), std::nullopt);
}

std::pair<SolutionId, bool>
SampleSet::insert_evaluated(std::vector<std::int32_t> values, double fitness) {
    return insert_impl(std::move(values), fitness);
}

std::pair<SolutionId, bool>
SampleSet::insert_impl(std::vector<std::int32_t> values,
                       std::optional<double> fitness) {
    problem_->validate(values);
    const std::uint64_t h = rep_hash(values);
    auto& bucket = dedup_[h];
    for (SolutionId id : bucket)
        if (rep_equal(id, values)) return {id, false};

    const auto id = static_cast<SolutionId>(solutions_.size());
    const double fit = fitness ? *fitness : problem_->evaluate(values);
    append_cache(values);
    fingerprint_ = util::fnv1a(values.data(), values.size() * sizeof(std::int32_t),
                               fingerprint_);
    fingerprint_ = util::fnv1a_value(fit, fingerprint_);
    solutions_.push_back(Solution{std::move(values), fit});
    bucket.push_back(id);
    return {id, true};
}

double SampleSet::distance_to(SolutionId a, std::span<const std::int32_t> point) const {
    return problem_->distance(values(a), point);
}

std::vector<SolutionId> SampleSet::neighborhood(SolutionId x, double r) const {
    std::vector<SolutionId> out;
    const auto n = static_cast<SolutionId>(size());
    for (SolutionId i = 0; i < n; ++i)
        if (i != x && distance(x, i) < r) out.push_back(i);
    return out;
}

std::uint32_t SampleSet::intern_run(const std::string& name) {
    for (std::size_t i = 0; i < run_names_.size(); ++i)
        if (run_names_[i] == name) return static_cast<std::uint32_t>(i);
    run_names_.push_back(name);
    return static_cast<std::uint32_t>(run_names_.size() - 1);
}

void SampleSet::add_label(SolutionId id, std::uint32_t run, std::uint64_t iter) {
    if (run >= run_names_.size())
        throw std::invalid_argument("add_label: unknown run index");
    labels_[id].push_back(RunLabel{run, iter});
}

std::span<const RunLabel> SampleSet::labels(SolutionId id) const {
    auto it = labels_.find(id);
    if (it == labels_.end()) return kNoLabels;
    return it->second;
}

} // namespace nbn
