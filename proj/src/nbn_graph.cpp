#include "nbn/core/nbn_graph.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nbn {

NbnGraph::NbnGraph(std::shared_ptr<const SampleSet> samples,
                   builder::BetaTable beta)
    : samples_(std::move(samples)), beta_(std::move(beta)) {
    if (!samples_) throw std::invalid_argument("NbnGraph: null sample set");
    if (beta_.size() != samples_->size() ||
        beta_.set_fingerprint() != samples_->fingerprint())
        throw std::invalid_argument("NbnGraph: beta table does not match the sample set");
    const auto n = static_cast<SolutionId>(samples_->size());
    for (SolutionId i = 0; i < n; ++i) {
        const builder::BetaEntry& e = beta_[i];
        if (e.parent == kNoSolution) {
            roots_.push_back(i);
            continue;
        }
        if (e.parent < 0 || e.parent >= n || e.parent == i)
            throw std::invalid_argument("NbnGraph: invalid parent id");
        if (!(samples_->fitness(e.parent) > samples_->fitness(i)))
            throw std::invalid_argument("NbnGraph: edge does not strictly increase fitness");
    }
}

std::vector<std::string> NbnGraph::check_forest(bool recheck_distances) const {
    std::vector<std::string> issues;
    const auto n = static_cast<SolutionId>(size());

    for (SolutionId i = 0; i < n; ++i) {
        const SolutionId p = parent(i);
        if (p == kNoSolution) {
            if (std::isfinite(nbd(i)))
                issues.push_back("root " + std::to_string(i) + " has finite nbd");
            continue;
        }
        if (!(fitness(p) > fitness(i)))
            issues.push_back("edge " + std::to_string(i) + "->" + std::to_string(p) +
                             " does not strictly increase fitness");
        if (recheck_distances) {
            const double d = samples_->distance(i, p);
            if (d != nbd(i))
                issues.push_back("edge " + std::to_string(i) + "->" + std::to_string(p) +
                                 " stored distance " + std::to_string(nbd(i)) +
                                 " != metric " + std::to_string(d));
        }
    }

    // cycle check via parent-chain walking with color marks
    std::vector<std::uint8_t> mark(size(), 0);  // 0 new, 1 on stack, 2 done
    for (SolutionId i = 0; i < n; ++i) {
        if (mark[static_cast<std::size_t>(i)]) continue;
        SolutionId cur = i;
        std::vector<SolutionId> chain;
        while (cur != kNoSolution && mark[static_cast<std::size_t>(cur)] == 0) {
            mark[static_cast<std::size_t>(cur)] = 1;
            chain.push_back(cur);
            cur = parent(cur);
        }
        if (cur != kNoSolution && mark[static_cast<std::size_t>(cur)] == 1)
            issues.push_back("cycle through " + std::to_string(cur));
        for (SolutionId c : chain) mark[static_cast<std::size_t>(c)] = 2;
    }
    return issues;
}

} // namespace nbn
