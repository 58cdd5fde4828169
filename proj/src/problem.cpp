#include "nbn/problems/problem.hpp"

#include <stdexcept>
#include <string>

#include "nbn/core/metrics.hpp"
#include "nbn/util/rng.hpp"

namespace nbn::problems {

void Problem::validate(std::span<const std::int32_t> values) const {
    if (values.size() != dimension())
        throw std::invalid_argument("solution has " + std::to_string(values.size()) +
                                    " values, problem dimension is " +
                                    std::to_string(dimension()));
    for (std::size_t i = 0; i < values.size(); ++i) {
        const VariableDomain d = domain(i);
        if (values[i] < d.lo || values[i] > d.hi)
            throw std::invalid_argument("value " + std::to_string(values[i]) +
                                        " at position " + std::to_string(i) +
                                        " outside domain [" + std::to_string(d.lo) +
                                        ", " + std::to_string(d.hi) + "]");
    }
}

double Problem::distance(std::span<const std::int32_t> a,
                         std::span<const std::int32_t> b) const {
    switch (metric()) {
        case Metric::Hamming:
            return static_cast<double>(hamming_distance(a, b));
        case Metric::TspEdgeUnits:
            return static_cast<double>(dice_edge_units(a, b));
    }
    throw std::logic_error("unknown metric");
}

OneMax::OneMax(std::size_t n_bits) : n_(n_bits) {
    if (n_bits == 0) throw std::invalid_argument("OneMax: n_bits must be >= 1");
}

VariableDomain OneMax::domain(std::size_t index) const {
    return {static_cast<std::uint32_t>(index), 0, 1};
}

double OneMax::evaluate(std::span<const std::int32_t> values) const {
    std::size_t ones = 0;
    for (std::int32_t v : values) ones += (v != 0);
    return static_cast<double>(ones);
}

std::uint64_t OneMax::content_hash() const {
    std::uint64_t h = util::fnv1a_value(static_cast<std::uint32_t>(Kind::OneMax));
    return util::fnv1a_value(static_cast<std::uint64_t>(n_), h);
}

std::string OneMax::describe() const {
    return "onemax d=" + std::to_string(n_);
}

} // namespace nbn::problems
