#include "nbn/problems/tsp.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "nbn/util/rng.hpp"

namespace nbn::problems {

namespace {
// dense weight matrix kept while it stays under ~64 MB
constexpr std::size_t kMatrixLimit = 4096;

std::int64_t euc2d(const std::pair<double, double>& a,
                   const std::pair<double, double>& b) {
    const double dx = a.first - b.first;
    const double dy = a.second - b.second;
    return std::llround(std::sqrt(dx * dx + dy * dy));
}
} // namespace

TspInstance::TspInstance(std::string name,
                         std::vector<std::pair<double, double>> coords)
    : name_(std::move(name)), coords_(std::move(coords)), dim_(coords_.size()) {
    if (dim_ < 3)
        throw std::invalid_argument("TspInstance: needs >= 3 cities");
    if (dim_ <= kMatrixLimit) {
        weights_.resize(dim_ * dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                weights_[i * dim_ + j] =
                    static_cast<std::int32_t>(euc2d(coords_[i], coords_[j]));
    }
}

VariableDomain TspInstance::domain(std::size_t index) const {
    return {static_cast<std::uint32_t>(index), 1, static_cast<std::int32_t>(dim_)};
}

std::int64_t TspInstance::edge_weight(std::int32_t a, std::int32_t b) const {
    const std::size_t i = static_cast<std::size_t>(a - 1);
    const std::size_t j = static_cast<std::size_t>(b - 1);
    if (!weights_.empty()) return weights_[i * dim_ + j];
    return euc2d(coords_[i], coords_[j]);
}

std::int64_t TspInstance::tour_length(std::span<const std::int32_t> tour) const {
    std::int64_t len = 0;
    for (std::size_t i = 0; i < tour.size(); ++i)
        len += edge_weight(tour[i], tour[(i + 1) % tour.size()]);
    return len;
}

double TspInstance::evaluate(std::span<const std::int32_t> tour) const {
    return -static_cast<double>(tour_length(tour));
}

void TspInstance::validate(std::span<const std::int32_t> tour) const {
    Problem::validate(tour);
    std::vector<bool> seen(dim_ + 1, false);
    for (std::int32_t c : tour) {
        if (seen[static_cast<std::size_t>(c)])
            throw std::invalid_argument("tour repeats city " + std::to_string(c));
        seen[static_cast<std::size_t>(c)] = true;
    }
}

std::uint64_t TspInstance::content_hash() const {
    std::uint64_t h = util::fnv1a_value(static_cast<std::uint32_t>(Kind::Tsp));
    h = util::fnv1a_value(static_cast<std::uint64_t>(dim_), h);
    for (const auto& [x, y] : coords_) {
        h = util::fnv1a_value(x, h);
        h = util::fnv1a_value(y, h);
    }
    return h;
}

std::string TspInstance::describe() const {
    return "tsp name=" + name_ + " d=" + std::to_string(dim_);
}

TspInstance parse_tsplib(std::istream& in, const std::string& source_name) {
    auto fail = [&](std::size_t line, const std::string& what) -> void {
        throw std::runtime_error(source_name + ":" + std::to_string(line) + ": " + what);
    };

    std::string name = source_name;
    std::size_t dimension = 0;
    bool euc2d_type = false;
    bool in_coords = false;
    std::vector<std::pair<double, double>> coords;
    std::vector<bool> filled;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto cr = line.find('\r'); cr != std::string::npos) line.erase(cr);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank

        if (!in_coords) {
            std::string key = first;
            if (!key.empty() && key.back() == ':') key.pop_back();
            std::string rest;
            std::getline(ls, rest);
            if (auto colon = rest.find(':'); colon != std::string::npos)
                rest.erase(0, colon + 1);
            while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t'))
                rest.erase(rest.begin());
            while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t'))
                rest.pop_back();

            if (key == "NAME") {
                if (!rest.empty()) name = rest;
            } else if (key == "TYPE") {
                if (rest != "TSP") fail(line_no, "unsupported TYPE '" + rest + "' (need TSP)");
            } else if (key == "DIMENSION") {
                dimension = static_cast<std::size_t>(std::stoull(rest));
            } else if (key == "EDGE_WEIGHT_TYPE") {
                if (rest != "EUC_2D")
                    fail(line_no, "unsupported EDGE_WEIGHT_TYPE '" + rest + "' (need EUC_2D)");
                euc2d_type = true;
            } else if (key == "NODE_COORD_SECTION") {
                if (dimension == 0) fail(line_no, "NODE_COORD_SECTION before DIMENSION");
                coords.assign(dimension, {0, 0});
                filled.assign(dimension, false);
                in_coords = true;
            } else if (key == "COMMENT" || key == "EOF") {
                // ignored
            }
            continue;
        }

        if (first == "EOF") break;
        std::size_t idx = 0;
        try {
            idx = static_cast<std::size_t>(std::stoull(first));
        } catch (const std::exception&) {
            fail(line_no, "expected city index, got '" + first + "'");
        }
        double x = 0, y = 0;
        if (!(ls >> x >> y)) fail(line_no, "expected 'index x y'");
        if (idx < 1 || idx > dimension) fail(line_no, "city index out of range");
        if (filled[idx - 1]) fail(line_no, "duplicate city index " + std::to_string(idx));
        coords[idx - 1] = {x, y};
        filled[idx - 1] = true;
    }

    if (!euc2d_type) fail(line_no, "missing EDGE_WEIGHT_TYPE EUC_2D");
    if (!in_coords) fail(line_no, "missing NODE_COORD_SECTION");
    for (std::size_t i = 0; i < filled.size(); ++i)
        if (!filled[i]) fail(line_no, "missing coordinates for city " + std::to_string(i + 1));
    return TspInstance(name, std::move(coords));
}

TspInstance parse_tsplib_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_tsplib(in, path);
}

TspInstance generate_rue(std::size_t n_cities, std::uint64_t seed,
                         std::uint32_t extent) {
    if (n_cities < 3) throw std::invalid_argument("generate_rue: needs >= 3 cities");
    if (extent == 0) throw std::invalid_argument("generate_rue: extent must be > 0");
    std::mt19937_64 rng = util::substream(seed, 0x72756530ULL);  // "rue0"
    std::vector<std::pair<double, double>> coords;
    coords.reserve(n_cities);
    for (std::size_t i = 0; i < n_cities; ++i) {
        const auto x = static_cast<double>(rng() % extent);
        const auto y = static_cast<double>(rng() % extent);
        coords.emplace_back(x, y);
    }
    return TspInstance("rue" + std::to_string(n_cities) + "-s" + std::to_string(seed),
                       std::move(coords));
}

} // namespace nbn::problems
