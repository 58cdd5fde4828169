#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "nbn/core/metrics.hpp"
#include "nbn/util/rng.hpp"

using nbn::dice_distance;
using nbn::dice_edge_units;
using nbn::edge_set;
using nbn::hamming_distance;
using nbn::shared_edge_count;

namespace {

/// Reference edge intersection via explicit normalized pair sets; written
/// against no production code path so the two implementations are
/// independent.
std::size_t brute_shared_edges(const std::vector<std::int32_t>& a,
                               const std::vector<std::int32_t>& b) {
    auto pairs = [](const std::vector<std::int32_t>& t) {
        std::set<std::pair<std::int32_t, std::int32_t>> out;
        const std::size_t n = t.size();
        for (std::size_t i = 0; i < n; ++i) {
            const std::int32_t u = t[i];
            const std::int32_t v = t[(i + 1) % n];
            out.insert({std::min(u, v), std::max(u, v)});
        }
        return out;
    };
    const auto pa = pairs(a);
    const auto pb = pairs(b);
    std::size_t shared = 0;
    for (const auto& e : pa) shared += pb.count(e);
    return shared;
}

} // namespace

TEST_CASE("hamming distance of hand-checked strings") {
    const std::vector<std::int32_t> a{1, 1, 0, 0, 1, 0};
    const std::vector<std::int32_t> b{1, 0, 0, 0, 1, 1};
    CHECK(hamming_distance(a, b) == 2);
    CHECK(hamming_distance(a, a) == 0);
    CHECK(hamming_distance(b, a) == 2);
}

TEST_CASE("hamming distance rejects length mismatch") {
    const std::vector<std::int32_t> a{1, 0};
    const std::vector<std::int32_t> b{1, 0, 1};
    CHECK_THROWS_AS((void)hamming_distance(a, b), std::invalid_argument);
}

TEST_CASE("dice distance of a hand-checked tour pair") {
    // a: edges {12,23,34,41}; b: edges {13,32,24,41}; shared {23,41}.
    const std::vector<std::int32_t> a{1, 2, 3, 4};
    const std::vector<std::int32_t> b{1, 3, 2, 4};
    CHECK(shared_edge_count(a, b) == 2);
    CHECK(dice_distance(a, b) == doctest::Approx(0.5));
    CHECK(dice_edge_units(a, b) == 2);
}

TEST_CASE("dice distance symmetry, range and self/reversal invariance") {
    auto rng = nbn::util::substream(41, 0);
    const std::size_t d = 9;
    std::vector<std::int32_t> a(d), b(d);
    std::iota(a.begin(), a.end(), 1);
    std::iota(b.begin(), b.end(), 1);
    for (int trial = 0; trial < 50; ++trial) {
        std::shuffle(a.begin(), a.end(), rng);
        std::shuffle(b.begin(), b.end(), rng);
        const double ab = dice_distance(a, b);
        CHECK(ab == dice_distance(b, a));
        CHECK(ab >= 0.0);
        CHECK(ab <= 1.0);

        std::vector<std::int32_t> rev(a.rbegin(), a.rend());
        CHECK(dice_distance(a, rev) == 0.0); // same undirected cycle
        CHECK(dice_distance(a, a) == 0.0);
    }
}

TEST_CASE("edge metrics agree with the brute-force edge sets for all D<=6 tours") {
    for (std::size_t d = 3; d <= 6; ++d) {
        std::vector<std::int32_t> base(d);
        std::iota(base.begin(), base.end(), 1);
        std::vector<std::vector<std::int32_t>> all;
        std::vector<std::int32_t> perm = base;
        do {
            all.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));

        for (const auto& a : all) {
            for (const auto& b : all) {
                const std::size_t shared = brute_shared_edges(a, b);
                CHECK(shared_edge_count(a, b) == shared);
                CHECK(dice_edge_units(a, b) == d - shared);
                CHECK(dice_distance(a, b) ==
                      doctest::Approx(1.0 - static_cast<double>(shared) /
                                                static_cast<double>(d)));
            }
        }
    }
}

TEST_CASE("a single segment reversal moves a tour at most 2 edge units") {
    auto rng = nbn::util::substream(77, 0);
    const std::size_t d = 12;
    std::vector<std::int32_t> tour(d);
    std::iota(tour.begin(), tour.end(), 1);
    for (int trial = 0; trial < 200; ++trial) {
        std::shuffle(tour.begin(), tour.end(), rng);
        auto moved = tour;
        auto i = static_cast<std::size_t>(nbn::util::bounded(rng, d));
        auto j = static_cast<std::size_t>(nbn::util::bounded(rng, d));
        if (i > j) std::swap(i, j);
        std::reverse(moved.begin() + static_cast<std::ptrdiff_t>(i),
                     moved.begin() + static_cast<std::ptrdiff_t>(j) + 1);
        CHECK(dice_edge_units(tour, moved) <= 2);
    }
}

TEST_CASE("edge metrics reject degenerate tours") {
    const std::vector<std::int32_t> tiny{1, 2};
    CHECK_THROWS_AS((void)edge_set(tiny), std::invalid_argument);
}
