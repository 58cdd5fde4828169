#include "nbn/core/metrics.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace nbn {

std::size_t hamming_distance(std::span<const std::int32_t> a,
                             std::span<const std::int32_t> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("hamming_distance: length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
    return d;
}

std::vector<std::pair<std::int32_t, std::int32_t>>
edge_set(std::span<const std::int32_t> tour) {
    const std::size_t n = tour.size();
    if (n < 3) throw std::invalid_argument("edge_set: tour needs >= 3 cities");
    std::vector<std::pair<std::int32_t, std::int32_t>> edges;
    edges.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::int32_t u = tour[i];
        std::int32_t v = tour[(i + 1) % n];
        if (u > v) std::swap(u, v);
        edges.emplace_back(u, v);
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::size_t shared_edge_count(std::span<const std::int32_t> a,
                              std::span<const std::int32_t> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("shared_edge_count: length mismatch");
    const std::size_t n = a.size();
    // successor of each city in b; cities are 1-based
    std::vector<std::int32_t> next_b(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::int32_t u = b[i];
        const std::int32_t v = b[(i + 1) % n];
        assert(u >= 1 && static_cast<std::size_t>(u) <= n);
        next_b[static_cast<std::size_t>(u)] = v;
    }
    std::size_t shared = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::int32_t u = a[i];
        const std::int32_t v = a[(i + 1) % n];
        shared += (next_b[static_cast<std::size_t>(u)] == v ||
                   next_b[static_cast<std::size_t>(v)] == u);
    }
    return shared;
}

double dice_distance(std::span<const std::int32_t> a,
                     std::span<const std::int32_t> b) {
    const std::size_t n = a.size();
    const std::size_t shared = shared_edge_count(a, b);
    // 1 - 2*shared / (|E(a)| + |E(b)|) with |E| = n on both sides
    return 1.0 - static_cast<double>(shared) / static_cast<double>(n);
}

std::size_t dice_edge_units(std::span<const std::int32_t> a,
                            std::span<const std::int32_t> b) {
    return a.size() - shared_edge_count(a, b);
}

} // namespace nbn
