#include "nbn/problems/wmodel.hpp"

#include <stdexcept>
#include <string>

#include "nbn/util/rng.hpp"

namespace nbn::problems {

std::vector<std::int32_t> WModel::neutrality(std::span<const std::int32_t> x,
                                             std::uint32_t mu) {
    if (mu <= 1) return {x.begin(), x.end()};
    const std::size_t m = x.size() / mu;
    std::vector<std::int32_t> out;
    out.reserve(m);
    for (std::size_t b = 0; b < m; ++b) {
        std::uint32_t ones = 0;
        for (std::size_t i = 0; i < mu; ++i) ones += (x[b * mu + i] != 0);
        out.push_back(2 * ones >= mu ? 1 : 0);  // majority, ties -> 1
    }
    return out;
}

std::vector<std::int32_t> WModel::epistasis(std::span<const std::int32_t> x,
                                            std::uint32_t upsilon) {
    if (upsilon <= 1) return {x.begin(), x.end()};
    std::vector<std::int32_t> out(x.size());
    for (std::size_t start = 0; start < x.size(); start += upsilon) {
        const std::size_t k = std::min<std::size_t>(upsilon, x.size() - start);
        std::int32_t parity = 0;
        for (std::size_t i = 0; i < k; ++i) parity ^= (x[start + i] & 1);
        // output i = parity ^ input(i+1) for i < k-1; last output = parity.
        // Bijective and zero-preserving; one flipped input flips k-1 outputs.
        for (std::size_t i = 0; i + 1 < k; ++i)
            out[start + i] = parity ^ (x[start + i + 1] & 1);
        out[start + k - 1] = parity;
    }
    return out;
}

std::vector<std::uint32_t> WModel::ruggedness_permutation(std::uint64_t gamma,
                                                          std::size_t q) {
    const std::uint64_t max_gamma =
        static_cast<std::uint64_t>(q) * (q + 1) / 2;
    if (gamma > max_gamma)
        throw std::invalid_argument("ruggedness gamma " + std::to_string(gamma) +
                                    " exceeds q(q+1)/2 = " + std::to_string(max_gamma));
    std::vector<std::uint32_t> r(q + 1);
    for (std::size_t v = 0; v <= q; ++v) r[v] = static_cast<std::uint32_t>(v);
    // Bubble schedule from identity toward full reversal; every adjacent
    // transposition adds exactly one inversion, so gamma counts inversions.
    std::uint64_t left = gamma;
    for (std::size_t pass = 0; pass < q && left > 0; ++pass) {
        for (std::size_t j = 0; j + 1 < r.size() - pass && left > 0; ++j) {
            if (r[j] < r[j + 1]) {
                std::swap(r[j], r[j + 1]);
                --left;
            }
        }
    }
    return r;
}

WModel::WModel(const WModelParams& params) : params_(params) {
    const std::size_t n = params_.n_bits;
    if (n == 0) throw std::invalid_argument("WModel: n_bits must be >= 1");
    if (params_.mu > n)
        throw std::invalid_argument("WModel: mu exceeds n_bits");
    reduced_ = params_.mu > 1 ? n / params_.mu : n;
    if (reduced_ == 0)
        throw std::invalid_argument("WModel: neutrality reduces the string to length 0");
    if (params_.upsilon > reduced_)
        throw std::invalid_argument("WModel: upsilon exceeds the reduced length");
    rugged_ = ruggedness_permutation(params_.gamma, reduced_);
}

VariableDomain WModel::domain(std::size_t index) const {
    return {static_cast<std::uint32_t>(index), 0, 1};
}

double WModel::evaluate(std::span<const std::int32_t> values) const {
    std::vector<std::int32_t> stage = neutrality(values, params_.mu);
    stage = epistasis(stage, params_.upsilon);
    std::size_t ones = 0;
    for (std::int32_t v : stage) ones += (v != 0);
    const std::uint32_t raw = rugged_[ones];
    if (!params_.rescale_fitness) return static_cast<double>(raw);
    return static_cast<double>(raw) * static_cast<double>(params_.n_bits) /
           static_cast<double>(reduced_);
}

std::uint64_t WModel::content_hash() const {
    std::uint64_t h = util::fnv1a_value(static_cast<std::uint32_t>(Kind::WModel));
    h = util::fnv1a_value(static_cast<std::uint64_t>(params_.n_bits), h);
    h = util::fnv1a_value(params_.gamma, h);
    h = util::fnv1a_value(params_.mu, h);
    h = util::fnv1a_value(params_.upsilon, h);
    h = util::fnv1a_value(static_cast<std::uint32_t>(params_.rescale_fitness), h);
    return h;
}

std::string WModel::describe() const {
    return "wmodel d=" + std::to_string(params_.n_bits) +
           " gamma=" + std::to_string(params_.gamma) +
           " mu=" + std::to_string(params_.mu) +
           " upsilon=" + std::to_string(params_.upsilon) +
           (params_.rescale_fitness ? " rescale=1" : " rescale=0");
}

double wmodel_evaluate(const WModelParams& params,
                       std::span<const std::int32_t> bits) {
    return WModel(params).evaluate(bits);
}

} // namespace nbn::problems
