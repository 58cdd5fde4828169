#include "nbn/builder/beta_table.hpp"

#include <stdexcept>

namespace nbn::builder {

void BetaTable::merge(const BetaTable& other) {
    if (other.size() != size() || other.fingerprint_ != fingerprint_)
        throw std::invalid_argument("BetaTable::merge: tables built over different sample sets");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const BetaEntry& o = other.entries_[i];
        if (o.parent != kNoSolution)
            improve(static_cast<SolutionId>(i), o.parent, o.dist);
    }
}

BetaTable merge_beta(const BetaTable& a, const BetaTable& b) {
    BetaTable out = a;
    out.merge(b);
    return out;
}

} // namespace nbn::builder
