#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "nbn/problems/problem.hpp"

namespace nbn::problems {

/// Symmetric Euclidean TSP over 2-D coordinates with distances rounded to
/// the nearest integer (TSPLIB EUC_2D convention). Solutions are 1-based
/// city permutations; fitness is the negated cyclic tour length, so shorter
/// tours are fitter. The working metric is Dice in edge units.
class TspInstance final : public Problem {
public:
    TspInstance(std::string name, std::vector<std::pair<double, double>> coords);

    Kind kind() const override { return Kind::Tsp; }
    Metric metric() const override { return Metric::TspEdgeUnits; }
    std::size_t dimension() const override { return coords_.size(); }
    VariableDomain domain(std::size_t index) const override;
    double evaluate(std::span<const std::int32_t> tour) const override;
    void validate(std::span<const std::int32_t> tour) const override;
    std::uint64_t content_hash() const override;
    std::string describe() const override;

    const std::string& name() const { return name_; }
    const std::vector<std::pair<double, double>>& coords() const { return coords_; }

    /// Rounded Euclidean distance between cities (1-based ids).
    std::int64_t edge_weight(std::int32_t a, std::int32_t b) const;

    /// Positive cyclic tour length (fitness is its negation).
    std::int64_t tour_length(std::span<const std::int32_t> tour) const;

private:
    std::string name_;
    std::vector<std::pair<double, double>> coords_;
    std::vector<std::int32_t> weights_;  // dense matrix when dimension permits
    std::size_t dim_ = 0;
};

/// Parses a TSPLIB-format instance (TYPE TSP, EDGE_WEIGHT_TYPE EUC_2D,
/// NODE_COORD_SECTION). Throws std::runtime_error with a line number on
/// malformed input and on unsupported edge weight types.
TspInstance parse_tsplib(std::istream& in, const std::string& source_name);
TspInstance parse_tsplib_file(const std::string& path);

/// Random uniform Euclidean instance: n_cities integer coordinate pairs drawn
/// uniformly from [0, extent)^2. Deterministic in (n_cities, seed, extent);
/// byte compatibility with any particular external generator is a non-goal.
TspInstance generate_rue(std::size_t n_cities, std::uint64_t seed,
                         std::uint32_t extent = 1000000);

} // namespace nbn::problems
