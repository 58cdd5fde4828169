#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace nbn {

/// Number of positions where a and b differ. Requires equal lengths.
std::size_t hamming_distance(std::span<const std::int32_t> a,
                             std::span<const std::int32_t> b);

/// Undirected edges of a cyclic tour as canonical (min,max) city pairs,
/// sorted ascending. A tour of D cities has exactly D edges.
std::vector<std::pair<std::int32_t, std::int32_t>>
edge_set(std::span<const std::int32_t> tour);

/// Number of undirected edges shared by two tours over the same city set.
std::size_t shared_edge_count(std::span<const std::int32_t> a,
                              std::span<const std::int32_t> b);

/// Dice dissimilarity between two tours: 1 - 2|E(a) n E(b)| / (|E(a)|+|E(b)|),
/// i.e. 1 - shared/D. Rotation- and reversal-invariant, range [0,1].
double dice_distance(std::span<const std::int32_t> a,
                     std::span<const std::int32_t> b);

/// Dice distance in edge units: D * dice = number of edges of `a` that `b`
/// does not contain. Integer-valued; the working metric for tours.
std::size_t dice_edge_units(std::span<const std::int32_t> a,
                            std::span<const std::int32_t> b);

} // namespace nbn
