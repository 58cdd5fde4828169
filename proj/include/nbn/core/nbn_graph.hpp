#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nbn/builder/beta_table.hpp"
#include "nbn/core/sample_set.hpp"

namespace nbn {

/// Nearest-better network: every solution points to one strictly fitter
/// solution (its beta), roots have none. Edges strictly increase fitness, so
/// the structure is a forest; in an exact build the parent is the closest
/// strictly fitter member (ties broken toward the lower id) and roots are
/// exactly the maximum-fitness solutions.
class NbnGraph {
public:
    /// Wraps a beta table over `samples`. Throws std::invalid_argument on
    /// size/fingerprint mismatch or on any edge that does not strictly
    /// increase fitness.
    NbnGraph(std::shared_ptr<const SampleSet> samples, builder::BetaTable beta);

    const SampleSet& samples() const { return *samples_; }
    const std::shared_ptr<const SampleSet>& samples_ptr() const { return samples_; }
    const builder::BetaTable& beta() const { return beta_; }

    std::size_t size() const { return samples_->size(); }
    SolutionId parent(SolutionId id) const { return beta_[id].parent; }
    bool is_root(SolutionId id) const { return beta_[id].parent == kNoSolution; }

    /// Nearest-better distance; +inf for roots.
    double nbd(SolutionId id) const { return beta_[id].dist; }
    double fitness(SolutionId id) const { return samples_->fitness(id); }

    const std::vector<SolutionId>& roots() const { return roots_; }

    /// Forest diagnostics: empty when the graph is a well-formed forest whose
    /// edges strictly increase fitness and whose stored distances match the
    /// metric. `recheck_distances` re-derives every edge length.
    std::vector<std::string> check_forest(bool recheck_distances) const;

private:
    std::shared_ptr<const SampleSet> samples_;
    builder::BetaTable beta_;
    std::vector<SolutionId> roots_;
};

} // namespace nbn
