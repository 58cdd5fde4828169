#pragma once

#include <cstdint>
#include <vector>

#include "nbn/problems/problem.hpp"

namespace nbn::problems {

/// Tunable bit-string benchmark layered on OneMax. Layer composition order:
/// neutrality reduction -> epistasis mapping -> OneMax count -> ruggedness
/// value permutation. A parameter of 0 disables its layer, so all-zero
/// parameters reduce to plain OneMax.
///
/// Layer definitions (recorded here because they fix file-format semantics):
///  - neutrality mu: consecutive mu-bit blocks collapse to their majority bit
///    (ties -> 1); the trailing n mod mu bits are dropped. Output length
///    m = floor(n/mu).
///  - epistasis upsilon: consecutive upsilon-bit blocks (the trailing short
///    block at its own size k) pass through a linear bijection with maximal
///    avalanche: output i = parity(block) XOR input i+1 for i < k-1, output
///    k-1 = parity(block). Flipping one input bit flips exactly k-1 outputs.
///  - ruggedness gamma: objective values {0..m} are permuted by the first
///    gamma adjacent-transposition steps of a canonical bubble schedule from
///    the identity toward full reversal; gamma counts inversions, so
///    gamma_max = m(m+1)/2, gamma=0 is the identity and gamma_max inverts
///    the gradient everywhere.
struct WModelParams {
    std::size_t n_bits = 0;
    std::uint64_t gamma = 0;    // ruggedness, 0..m(m+1)/2
    std::uint32_t mu = 0;       // neutrality block size, 0..n
    std::uint32_t upsilon = 0;  // epistasis block size, 0..m
    /// Report fitness on the original n-bit scale (value * n/m) so that
    /// fitness thresholds keep one meaning across neutrality settings.
    bool rescale_fitness = true;
};

class WModel final : public Problem {
public:
    /// Throws std::invalid_argument when a parameter is outside its
    /// admissible range for n_bits.
    explicit WModel(const WModelParams& params);

    Kind kind() const override { return Kind::WModel; }
    Metric metric() const override { return Metric::Hamming; }
    std::size_t dimension() const override { return params_.n_bits; }
    VariableDomain domain(std::size_t index) const override;
    double evaluate(std::span<const std::int32_t> values) const override;
    std::uint64_t content_hash() const override;
    std::string describe() const override;

    const WModelParams& params() const { return params_; }
    /// Post-neutrality string length m (the raw objective scale).
    std::size_t reduced_length() const { return reduced_; }

    // Exposed for unit tests of the individual layers.
    static std::vector<std::int32_t> neutrality(std::span<const std::int32_t> x,
                                                std::uint32_t mu);
    static std::vector<std::int32_t> epistasis(std::span<const std::int32_t> x,
                                               std::uint32_t upsilon);
    static std::vector<std::uint32_t> ruggedness_permutation(std::uint64_t gamma,
                                                             std::size_t q);

private:
    WModelParams params_;
    std::size_t reduced_ = 0;
    std::vector<std::uint32_t> rugged_;  // value permutation, size m+1
};

/// Convenience wrapper: evaluate one bit string under the given parameters.
double wmodel_evaluate(const WModelParams& params,
                       std::span<const std::int32_t> bits);

} // namespace nbn::problems
