#pragma once

#include <cstdint>
#include <vector>

#include "nbn/core/solution.hpp"

namespace nbn::builder {

/// Candidate nearest-better assignment for one solution. `parent` is a
/// strictly fitter solution, `dist` the metric distance to it; parentless
/// entries keep kNoSolution / +inf.
struct BetaEntry {
    SolutionId parent = kNoSolution;
    double dist = kInfDist;
};

/// One nearest-better assignment per solution of a specific SampleSet.
/// Improvement and merging order entries by (dist, parent id), so merges are
/// commutative and associative: parallel round order cannot change results.
class BetaTable {
public:
    BetaTable() = default;
    BetaTable(std::size_t n, std::uint64_t set_fingerprint)
        : entries_(n), fingerprint_(set_fingerprint) {}

    std::size_t size() const { return entries_.size(); }
    std::uint64_t set_fingerprint() const { return fingerprint_; }
    const BetaEntry& operator[](SolutionId id) const {
        return entries_[static_cast<std::size_t>(id)];
    }

    /// Keeps the better of the current entry and (parent, dist).
    void improve(SolutionId id, SolutionId parent, double dist) {
        BetaEntry& e = entries_[static_cast<std::size_t>(id)];
        if (dist < e.dist || (dist == e.dist && parent < e.parent)) {
            e.parent = parent;
            e.dist = dist;
        }
    }

    /// Pointwise-min merge. Throws std::invalid_argument when `other` was
    /// built over a different sample set.
    void merge(const BetaTable& other);

private:
    std::vector<BetaEntry> entries_;
    std::uint64_t fingerprint_ = 0;
};

/// Merged copy of two tables over the same sample set (spec-level name for
/// BetaTable::merge).
BetaTable merge_beta(const BetaTable& a, const BetaTable& b);

} // namespace nbn::builder
