#include "nbn/io/sampleset_io.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "nbn/problems/tsp.hpp"
#include "nbn/problems/wmodel.hpp"

namespace nbn::io {

namespace {

using problems::Kind;

constexpr char kSetMagic[8] = {'N', 'B', 'N', 'S', 'E', 'T', '0', '1'};
constexpr char kGraphMagic[8] = {'N', 'B', 'N', 'G', 'R', 'F', '0', '1'};

template <typename T>
void put(std::ostream& out, const T& v) {
    static_assert(std::is_trivially_copyable_v<T>);
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

void put_string(std::ostream& out, const std::string& s) {
    put<std::uint64_t>(out, s.size());
    out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

template <typename T>
T get(std::istream& in, const std::string& path, const char* what) {
    static_assert(std::is_trivially_copyable_v<T>);
    T v;
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in)
        throw std::runtime_error(path + ": truncated while reading " + what);
    return v;
}

std::string get_string(std::istream& in, const std::string& path,
                       const char* what) {
    const auto n = get<std::uint64_t>(in, path, what);
    std::string s(n, '\0');
    in.read(s.data(), static_cast<std::streamsize>(n));
    if (!in)
        throw std::runtime_error(path + ": truncated while reading " + what);
    return s;
}

void write_problem(std::ostream& out, const problems::Problem& problem) {
    put<std::uint32_t>(out, static_cast<std::uint32_t>(problem.kind()));
    put<std::uint64_t>(out, problem.content_hash());
    switch (problem.kind()) {
    case Kind::OneMax:
        put<std::uint64_t>(out, problem.dimension());
        break;
    case Kind::WModel: {
        const auto& p = static_cast<const problems::WModel&>(problem).params();
        put<std::uint64_t>(out, p.n_bits);
        put<std::uint64_t>(out, p.gamma);
        put<std::uint32_t>(out, p.mu);
        put<std::uint32_t>(out, p.upsilon);
        put<std::uint8_t>(out, p.rescale_fitness ? 1 : 0);
        break;
    }
    case Kind::Tsp: {
        const auto& tsp = static_cast<const problems::TspInstance&>(problem);
        put_string(out, tsp.name());
        put<std::uint64_t>(out, tsp.coords().size());
        for (const auto& [x, y] : tsp.coords()) {
            put<double>(out, x);
            put<double>(out, y);
        }
        break;
    }
    }
}

problems::ProblemPtr read_problem(std::istream& in, const std::string& path) {
    const auto kind = get<std::uint32_t>(in, path, "problem kind");
    const auto stored_hash = get<std::uint64_t>(in, path, "problem hash");
    problems::ProblemPtr problem;
    switch (static_cast<Kind>(kind)) {
    case Kind::OneMax: {
        const auto n = get<std::uint64_t>(in, path, "problem size");
        problem = std::make_shared<problems::OneMax>(
            static_cast<std::size_t>(n));
        break;
    }
    case Kind::WModel: {
        problems::WModelParams p;
        p.n_bits =
            static_cast<std::size_t>(get<std::uint64_t>(in, path, "n_bits"));
        p.gamma = get<std::uint64_t>(in, path, "gamma");
        p.mu = get<std::uint32_t>(in, path, "mu");
        p.upsilon = get<std::uint32_t>(in, path, "upsilon");
        p.rescale_fitness = get<std::uint8_t>(in, path, "rescale flag") != 0;
        problem = std::make_shared<problems::WModel>(p);
        break;
    }
    case Kind::Tsp: {
        std::string name = get_string(in, path, "instance name");
        const auto n = get<std::uint64_t>(in, path, "city count");
        std::vector<std::pair<double, double>> coords;
        coords.reserve(static_cast<std::size_t>(n));
        for (std::uint64_t i = 0; i < n; ++i) {
            const double x = get<double>(in, path, "city coordinate");
            const double y = get<double>(in, path, "city coordinate");
            coords.emplace_back(x, y);
        }
        problem = std::make_shared<problems::TspInstance>(std::move(name),
                                                          std::move(coords));
        break;
    }
    default:
        throw std::runtime_error(path + ": unknown problem kind " +
                                 std::to_string(kind));
    }
    if (problem->content_hash() != stored_hash)
        throw std::runtime_error(
            path + ": stored problem hash does not match its definition");
    return problem;
}

} // namespace

void persist_sampleset(const SampleSet& set, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out.write(kSetMagic, sizeof(kSetMagic));
    write_problem(out, set.problem());

    put<std::uint64_t>(out, set.size());
    put<std::uint64_t>(out, set.dimension());
    const auto n = static_cast<SolutionId>(set.size());
    for (SolutionId id = 0; id < n; ++id) {
        const auto vals = set.values(id);
        out.write(reinterpret_cast<const char*>(vals.data()),
                  static_cast<std::streamsize>(vals.size() * sizeof(std::int32_t)));
        put<double>(out, set.fitness(id));
    }
    put<std::int64_t>(out, set.center() ? *set.center() : kNoSolution);

    put<std::uint64_t>(out, set.run_names().size());
    for (const auto& name : set.run_names()) put_string(out, name);
    std::vector<SolutionId> labeled;
    for (SolutionId id = 0; id < n; ++id)
        if (!set.labels(id).empty()) labeled.push_back(id);
    put<std::uint64_t>(out, labeled.size());
    for (SolutionId id : labeled) {
        put<std::int64_t>(out, id);
        const auto labels = set.labels(id);
        put<std::uint64_t>(out, labels.size());
        for (const RunLabel& l : labels) {
            put<std::uint32_t>(out, l.run);
            put<std::uint64_t>(out, l.iter);
        }
    }
    put<std::uint64_t>(out, set.fingerprint());
    if (!out) throw std::runtime_error(path + ": write failed");
}

SampleSet load_sampleset(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(path + ": cannot open");
    char magic[8];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kSetMagic, sizeof(magic)) != 0)
        throw std::runtime_error(path + ": not a sample-set file");

    SampleSet set(read_problem(in, path));
    const auto count = get<std::uint64_t>(in, path, "solution count");
    const auto dim = get<std::uint64_t>(in, path, "dimension");
    if (dim != set.dimension())
        throw std::runtime_error(path + ": dimension does not match problem");

    std::vector<std::int32_t> vals(static_cast<std::size_t>(dim));
    for (std::uint64_t i = 0; i < count; ++i) {
        in.read(reinterpret_cast<char*>(vals.data()),
                static_cast<std::streamsize>(vals.size() * sizeof(std::int32_t)));
        if (!in)
            throw std::runtime_error(path + ": truncated while reading solutions");
        const double fit = get<double>(in, path, "fitness");
        const auto [id, fresh] = set.insert_evaluated(vals, fit);
        if (!fresh || id != static_cast<SolutionId>(i))
            throw std::runtime_error(path + ": duplicate solution at index " +
                                     std::to_string(i));
    }

    const auto center = get<std::int64_t>(in, path, "center id");
    if (center != kNoSolution) {
        if (center < 0 || center >= static_cast<std::int64_t>(count))
            throw std::runtime_error(path + ": center id out of range");
        set.set_center(center);
    }

    const auto n_runs = get<std::uint64_t>(in, path, "run count");
    for (std::uint64_t r = 0; r < n_runs; ++r) {
        const std::string name = get_string(in, path, "run name");
        if (set.intern_run(name) != r)
            throw std::runtime_error(path + ": duplicate run name '" + name +
                                     "'");
    }
    const auto n_labeled = get<std::uint64_t>(in, path, "labeled count");
    for (std::uint64_t i = 0; i < n_labeled; ++i) {
        const auto id = get<std::int64_t>(in, path, "labeled id");
        if (id < 0 || id >= static_cast<std::int64_t>(count))
            throw std::runtime_error(path + ": labeled id out of range");
        const auto n_labels = get<std::uint64_t>(in, path, "label count");
        for (std::uint64_t l = 0; l < n_labels; ++l) {
            const auto run = get<std::uint32_t>(in, path, "label run");
            const auto iter = get<std::uint64_t>(in, path, "label iteration");
            if (run >= n_runs)
                throw std::runtime_error(path + ": label run out of range");
            set.add_label(id, run, iter);
        }
    }

    const auto stored = get<std::uint64_t>(in, path, "fingerprint");
    if (stored != set.fingerprint())
        throw std::runtime_error(
            path + ": content fingerprint mismatch (file corrupted or "
                   "written by an incompatible build)");
    return set;
}

void verify_fitness(const SampleSet& set) {
    const auto n = static_cast<SolutionId>(set.size());
    for (SolutionId id = 0; id < n; ++id) {
        const double expect = set.problem().evaluate(set.values(id));
        if (expect != set.fitness(id))
            throw std::runtime_error(
                "stored fitness mismatch at id " + std::to_string(id) +
                ": stored " + std::to_string(set.fitness(id)) +
                ", re-evaluated " + std::to_string(expect));
    }
}

void persist_graph(const NbnGraph& graph, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out.write(kGraphMagic, sizeof(kGraphMagic));
    put<std::uint64_t>(out, graph.samples().fingerprint());
    put<std::uint64_t>(out, graph.size());
    const auto n = static_cast<SolutionId>(graph.size());
    for (SolutionId id = 0; id < n; ++id) {
        put<std::int64_t>(out, graph.parent(id));
        put<double>(out, graph.nbd(id));
    }
    if (!out) throw std::runtime_error(path + ": write failed");
}

NbnGraph load_graph(const std::string& path,
                    std::shared_ptr<const SampleSet> samples) {
    if (!samples) throw std::invalid_argument("load_graph: null sample set");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(path + ": cannot open");
    char magic[8];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kGraphMagic, sizeof(magic)) != 0)
        throw std::runtime_error(path + ": not a graph file");

    const auto fp = get<std::uint64_t>(in, path, "fingerprint");
    if (fp != samples->fingerprint())
        throw std::runtime_error(
            path + ": graph was built from a different sample set "
                   "(fingerprint mismatch)");
    const auto count = get<std::uint64_t>(in, path, "node count");
    if (count != samples->size())
        throw std::runtime_error(path + ": node count does not match sample set");

    builder::BetaTable table(static_cast<std::size_t>(count),
                             samples->fingerprint());
    for (std::uint64_t i = 0; i < count; ++i) {
        const auto parent = get<std::int64_t>(in, path, "parent id");
        const double dist = get<double>(in, path, "edge distance");
        if (parent == kNoSolution) continue;
        if (parent < 0 || parent >= static_cast<std::int64_t>(count))
            throw std::runtime_error(path + ": parent id out of range");
        table.improve(static_cast<SolutionId>(i), parent, dist);
    }
    return NbnGraph(std::move(samples), std::move(table));
}

} // namespace nbn::io
