#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>

#include "nbn/core/solution.hpp"

namespace nbn::problems {

enum class Kind : std::uint32_t { OneMax = 0, WModel = 1, Tsp = 2 };

/// Distance used for nearest-better relations. Hamming for bit strings;
/// tours use the Dice dissimilarity expressed in edge units (number of edges
/// of one tour absent from the other), which keeps radii and thresholds
/// integer-valued.
enum class Metric : std::uint32_t { Hamming = 0, TspEdgeUnits = 1 };

class Problem {
public:
    virtual ~Problem() = default;

    virtual Kind kind() const = 0;
    virtual Metric metric() const = 0;
    virtual std::size_t dimension() const = 0;
    virtual VariableDomain domain(std::size_t index) const = 0;

    /// Fitness, maximized. Must be pure and thread-safe.
    virtual double evaluate(std::span<const std::int32_t> values) const = 0;

    /// Throws std::invalid_argument when `values` is not a well-formed
    /// candidate (wrong length, out-of-domain value, non-permutation tour).
    virtual void validate(std::span<const std::int32_t> values) const;

    /// Identity of the problem definition, stamped into file headers so a
    /// sample file cannot be analyzed against a different problem.
    virtual std::uint64_t content_hash() const = 0;

    /// One-line human description for reproducibility headers.
    virtual std::string describe() const = 0;

    /// Metric distance between two raw value vectors (uncached path; hot
    /// loops use the SampleSet representation caches instead).
    double distance(std::span<const std::int32_t> a,
                    std::span<const std::int32_t> b) const;
};

using ProblemPtr = std::shared_ptr<const Problem>;

/// Bit-string problem, fitness = number of ones.
class OneMax final : public Problem {
public:
    explicit OneMax(std::size_t n_bits);

    Kind kind() const override { return Kind::OneMax; }
    Metric metric() const override { return Metric::Hamming; }
    std::size_t dimension() const override { return n_; }
    VariableDomain domain(std::size_t index) const override;
    double evaluate(std::span<const std::int32_t> values) const override;
    std::uint64_t content_hash() const override;
    std::string describe() const override;

private:
    std::size_t n_;
};

} // namespace nbn::problems
