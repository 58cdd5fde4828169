#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nbn/analysis/landscape.hpp"
#include "nbn/builder/builders.hpp"
#include "nbn/builder/projection.hpp"
#include "nbn/core/nbn_graph.hpp"
#include "nbn/io/graph_export.hpp"
#include "nbn/io/sampleset_io.hpp"
#include "nbn/io/trajectory.hpp"
#include "nbn/oracle/transition.hpp"
#include "nbn/problems/tsp.hpp"
#include "nbn/problems/wmodel.hpp"
#include "nbn/sampling/sampler.hpp"
#include "nbn/util/rng.hpp"

#ifndef NBN_BUILD_ID
#define NBN_BUILD_ID "untracked"
#endif

namespace {

using nbn::SolutionId;
using json = nlohmann::ordered_json;

// Exit codes: 0 success, 1 usage error, 2 data/validation error.
constexpr int kUsageError = 1;
constexpr int kDataError = 2;

class Stopwatch {
public:
    double ms() const {
        const auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(now - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ =
        std::chrono::steady_clock::now();
};

/// Reproducibility trace on stderr; stdout stays clean for piped data.
void trace(const std::string& line) {
    std::cerr << "# nbn " << line << " build=" << NBN_BUILD_ID << "\n";
}

// ---------------------------------------------------------------- sample --

struct SampleArgs {
    std::string problem = "onemax";
    std::size_t d = 0;
    std::size_t n = 0;
    std::uint64_t seed = 1;
    std::string out;

    // wmodel
    std::uint64_t gamma = 0;
    std::uint32_t mu = 0;
    std::uint32_t upsilon = 0;
    bool no_rescale = false;

    // tsp
    std::string tsplib;
    std::size_t rue_cities = 0;
    std::uint64_t rue_seed = 0;

    // local region
    std::string center;
    double k = 0;
    std::string strategy = "uniform-j";
    std::size_t restart_every = 0;
    std::size_t max_retries = 50;
};

nbn::problems::ProblemPtr make_problem(const SampleArgs& a) {
    if (a.problem == "onemax") {
        return std::make_shared<nbn::problems::OneMax>(a.d);
    }
    if (a.problem == "wmodel") {
        nbn::problems::WModelParams p;
        p.n_bits = a.d;
        p.gamma = a.gamma;
        p.mu = a.mu;
        p.upsilon = a.upsilon;
        p.rescale_fitness = !a.no_rescale;
        return std::make_shared<nbn::problems::WModel>(p);
    }
    if (a.problem == "tsp") {
        if (!a.tsplib.empty())
            return std::make_shared<nbn::problems::TspInstance>(
                nbn::problems::parse_tsplib_file(a.tsplib));
        const std::size_t cities = a.rue_cities ? a.rue_cities : a.d;
        if (cities < 3)
            throw std::invalid_argument(
                "tsp needs --tsplib or --rue-cities >= 3");
        return std::make_shared<nbn::problems::TspInstance>(
            nbn::problems::generate_rue(cities,
                                        a.rue_seed ? a.rue_seed : a.seed));
    }
    throw std::invalid_argument("unknown problem '" + a.problem +
                                "' (expected onemax, wmodel, or tsp)");
}

std::vector<std::int32_t> parse_center(const std::string& spec,
                                       const nbn::problems::Problem& problem) {
    const auto d = problem.dimension();
    std::vector<std::int32_t> vals;
    const bool tour =
        problem.metric() == nbn::problems::Metric::TspEdgeUnits;
    if (!tour && (spec == "zeros" || spec == "ones")) {
        vals.assign(d, spec == "ones" ? 1 : 0);
        return vals;
    }
    if (tour && spec == "identity") {
        vals.resize(d);
        for (std::size_t i = 0; i < d; ++i)
            vals[i] = static_cast<std::int32_t>(i + 1);
        return vals;
    }
    std::string text = spec;
    if (std::filesystem::exists(spec)) {
        std::ifstream in(spec);
        if (!in) throw std::runtime_error(spec + ": cannot open center file");
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    for (char& c : text)
        if (c == ',') c = ' ';
    std::istringstream fields(text);
    std::int32_t v = 0;
    while (fields >> v) vals.push_back(v);
    if (vals.size() != d)
        throw std::invalid_argument(
            "center has " + std::to_string(vals.size()) + " values, problem needs " +
            std::to_string(d));
    return vals;
}

nbn::sampling::LocalStrategy parse_strategy(const std::string& name) {
    using nbn::sampling::LocalStrategy;
    if (name == "uniform-j") return LocalStrategy::UniformJ;
    if (name == "ball") return LocalStrategy::Ball;
    if (name == "walk") return LocalStrategy::Walk;
    throw std::invalid_argument("unknown local strategy '" + name +
                                "' (expected uniform-j, ball, or walk)");
}

void run_sample(const SampleArgs& a) {
    Stopwatch timer;
    auto problem = make_problem(a);

    nbn::sampling::SamplerConfig config;
    config.n = a.n;
    config.seed = a.seed;
    config.max_retries = a.max_retries;
    if (!a.center.empty()) {
        config.local = true;
        config.center = parse_center(a.center, *problem);
        config.k = a.k;
        config.strategy = parse_strategy(a.strategy);
        config.restart_every = a.restart_every;
    }

    nbn::SampleSet set = nbn::sampling::sample(problem, config);
    if (set.size() < a.n)
        std::cerr << "warning: requested " << a.n
                  << " distinct solutions, produced " << set.size()
                  << " (duplicate budget exhausted)\n";
    nbn::io::persist_sampleset(set, a.out);
    std::ostringstream line;
    line << "sample problem=\"" << problem->describe() << "\" n=" << set.size()
         << " seed=" << a.seed;
    if (config.local)
        line << " local k=" << a.k << " strategy=" << a.strategy;
    line << " out=" << a.out << " ms=" << static_cast<long>(timer.ms());
    trace(line.str());
}

// ----------------------------------------------------------------- build --

struct BuildArgs {
    std::string in;
    std::string out;
    std::string algo = "cnbsi";
    std::uint64_t seed = 1;
    std::size_t nm = 20;
    std::optional<std::size_t> rounds;
    double epsilon = 0;
    unsigned threads = 1;
    bool local = false;
};

void run_build(const BuildArgs& a) {
    Stopwatch timer;
    auto samples =
        std::make_shared<nbn::SampleSet>(nbn::io::load_sampleset(a.in));

    nbn::builder::BetaTable table;
    if (a.algo == "cnbsi") {
        table = nbn::builder::cnbsi(*samples, a.threads);
    } else if (a.algo == "cnbsd") {
        table = a.local ? nbn::builder::cnbsd_local(*samples, a.seed, a.nm)
                        : nbn::builder::cnbsd(*samples, a.seed, a.nm);
    } else if (a.algo == "cnbsrp") {
        if (!a.rounds && !(a.epsilon > 0))
            throw std::invalid_argument(
                "cnbsrp needs --rounds or --epsilon > 0");
        const auto plan = nbn::builder::make_plan(
            samples->size(), a.rounds, a.epsilon, a.seed, a.nm, a.local);
        table = nbn::builder::cnbsrp(*samples, plan, a.threads);
    } else {
        throw std::invalid_argument("unknown algorithm '" + a.algo +
                                    "' (expected cnbsi, cnbsd, or cnbsrp)");
    }

    nbn::NbnGraph graph(samples, std::move(table));
    nbn::io::persist_graph(graph, a.out);
    std::ostringstream line;
    line << "build algo=" << a.algo << " nodes=" << graph.size()
         << " roots=" << graph.roots().size() << " seed=" << a.seed
         << " threads=" << a.threads << " out=" << a.out
         << " ms=" << static_cast<long>(timer.ms());
    trace(line.str());
}

// --------------------------------------------------------------- analyze --

struct AnalyzeArgs {
    std::string set;
    std::string graph;
    std::string trajectories;
    std::string report = "-";

    std::optional<double> theta;
    double vartheta = 0;
    std::string theta_mode = "raw";

    std::optional<SolutionId> deception_optimum;
    double deception_nbd_min = 0;
    double deception_dist_max = 0;

    std::string members; // comma-separated ids for set_distance
    std::size_t list_cap = 64;

    // rebuild parameters for --trajectories mode
    std::string algo = "cnbsi";
    std::uint64_t seed = 1;
    std::size_t nm = 20;
    std::optional<std::size_t> rounds;
    double epsilon = 0;
    unsigned threads = 1;
};

json id_list(const std::vector<SolutionId>& ids, std::size_t cap) {
    json out = json::array();
    for (std::size_t i = 0; i < ids.size() && i < cap; ++i) out.push_back(ids[i]);
    return out;
}

nbn::analysis::ThetaMode parse_theta_mode(const std::string& name) {
    if (name == "raw") return nbn::analysis::ThetaMode::Raw;
    if (name == "ratio") return nbn::analysis::ThetaMode::Ratio;
    throw std::invalid_argument("unknown theta mode '" + name +
                                "' (expected raw or ratio)");
}

std::vector<SolutionId> parse_id_list(const std::string& text,
                                      std::size_t set_size) {
    std::string s = text;
    for (char& c : s)
        if (c == ',') c = ' ';
    std::istringstream fields(s);
    std::vector<SolutionId> ids;
    long long v = 0;
    while (fields >> v) {
        if (v < 0 || v >= static_cast<long long>(set_size))
            throw std::invalid_argument("member id " + std::to_string(v) +
                                        " out of range");
        ids.push_back(v);
    }
    if (ids.empty()) throw std::invalid_argument("empty member id list");
    return ids;
}

nbn::builder::BetaTable build_table(const nbn::SampleSet& samples,
                                    const AnalyzeArgs& a) {
    if (a.algo == "cnbsi") return nbn::builder::cnbsi(samples, a.threads);
    if (a.algo == "cnbsd") return nbn::builder::cnbsd(samples, a.seed, a.nm);
    if (a.algo == "cnbsrp") {
        if (!a.rounds && !(a.epsilon > 0))
            throw std::invalid_argument("cnbsrp needs --rounds or --epsilon > 0");
        const auto plan = nbn::builder::make_plan(samples.size(), a.rounds,
                                                  a.epsilon, a.seed, a.nm,
                                                  false);
        return nbn::builder::cnbsrp(samples, plan, a.threads);
    }
    throw std::invalid_argument("unknown algorithm '" + a.algo + "'");
}

void run_analyze(const AnalyzeArgs& a) {
    Stopwatch timer;
    if (!a.trajectories.empty() && !a.graph.empty())
        throw std::invalid_argument(
            "--trajectories rebuilds the graph over the merged set; it cannot "
            "be combined with --graph");
    if (a.trajectories.empty() && a.graph.empty())
        throw std::invalid_argument("analyze needs --graph or --trajectories");

    json report;
    report["command"] = "analyze";
    report["build"] = NBN_BUILD_ID;

    std::shared_ptr<nbn::SampleSet> samples;
    std::optional<nbn::NbnGraph> graph;
    std::vector<nbn::io::TrajectoryRun> runs;

    if (!a.trajectories.empty()) {
        nbn::io::TrajectoryData data = nbn::io::ingest_trajectories_file(
            a.trajectories, nbn::io::load_sampleset(a.set));
        samples = std::make_shared<nbn::SampleSet>(std::move(data.samples));
        runs = std::move(data.runs);
        graph.emplace(samples, build_table(*samples, a));
        report["trajectories"] = {{"path", a.trajectories},
                                  {"runs", runs.size()},
                                  {"algo", a.algo}};
    } else {
        samples = std::make_shared<nbn::SampleSet>(nbn::io::load_sampleset(a.set));
        graph.emplace(nbn::io::load_graph(a.graph, samples));
    }

    report["set"] = {{"path", a.set},
                     {"problem", samples->problem().describe()},
                     {"nodes", samples->size()}};
    if (samples->center()) report["set"]["center"] = *samples->center();

    const SolutionId best = nbn::analysis::global_optimum(*graph);
    report["graph"] = {{"roots", graph->roots().size()},
                       {"root_ids", id_list(graph->roots(), a.list_cap)},
                       {"global_optimum", best},
                       {"max_fitness", graph->fitness(best)}};

    if (a.theta) {
        const auto optima = nbn::analysis::identify_optima(
            *graph, *a.theta, a.vartheta, parse_theta_mode(a.theta_mode));
        report["optima"] = {{"theta", optima.theta},
                            {"vartheta", optima.vartheta},
                            {"mode", a.theta_mode},
                            {"count", optima.ids.size()},
                            {"ids", id_list(optima.ids, a.list_cap)}};
    }

    if (a.deception_optimum) {
        const auto flagged = nbn::analysis::deception_filter(
            *graph, *a.deception_optimum, a.deception_nbd_min,
            a.deception_dist_max);
        report["deception"] = {{"optimum", *a.deception_optimum},
                               {"nbd_min", a.deception_nbd_min},
                               {"dist_max", a.deception_dist_max},
                               {"count", flagged.size()},
                               {"ids", id_list(flagged, a.list_cap)}};
    }

    if (!a.members.empty()) {
        const auto ids = parse_id_list(a.members, samples->size());
        const auto sd = nbn::analysis::set_distance(*graph, ids);
        report["set_distance"] = {{"members", ids.size()},
                                  {"distance", sd.distance},
                                  {"member", sd.member},
                                  {"path", id_list(sd.path.nodes, a.list_cap)}};
    }

    if (!runs.empty()) {
        json out_runs = json::array();
        for (const auto& run : runs) {
            std::vector<SolutionId> ids;
            ids.reserve(run.points.size());
            for (const auto& [iter, id] : run.points) ids.push_back(id);
            std::sort(ids.begin(), ids.end());
            ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
            const auto sd = nbn::analysis::set_distance(*graph, ids);
            out_runs.push_back({{"run", run.run_id},
                                {"points", run.points.size()},
                                {"distinct", ids.size()},
                                {"set_distance", sd.distance},
                                {"closest_member", sd.member}});
        }
        report["runs"] = std::move(out_runs);
    }

    report["ms"] = static_cast<long>(timer.ms());
    const std::string text = report.dump(2) + "\n";
    if (a.report == "-") {
        std::cout << text;
    } else {
        std::ofstream out(a.report, std::ios::trunc);
        if (!out) throw std::runtime_error(a.report + ": cannot open for writing");
        out << text;
        if (!out) throw std::runtime_error(a.report + ": write failed");
    }
    trace("analyze set=" + a.set + " ms=" + std::to_string((long)timer.ms()));
}

// ---------------------------------------------------------------- verify --

struct VerifyArgs {
    std::string set;
    std::string graph;
    std::string oracle = "all";
    std::size_t sample_cap = 1000;
    std::uint64_t seed = 1;
    double r = 1.0;
    double max_error_rate = 0;
};

void run_verify(const VerifyArgs& a) {
    Stopwatch timer;
    const bool wants_graph = a.oracle != "fitness";
    if (a.oracle != "fitness" && a.oracle != "forest" && a.oracle != "cnbsi" &&
        a.oracle != "argmax-transition" && a.oracle != "all")
        throw std::invalid_argument(
            "unknown oracle '" + a.oracle +
            "' (expected fitness, forest, cnbsi, argmax-transition, or all)");
    if (wants_graph && a.graph.empty())
        throw std::invalid_argument("verify --oracle " + a.oracle +
                                    " needs --graph");

    auto samples =
        std::make_shared<nbn::SampleSet>(nbn::io::load_sampleset(a.set));
    std::optional<nbn::NbnGraph> graph;
    if (!a.graph.empty()) graph.emplace(nbn::io::load_graph(a.graph, samples));

    bool failed = false;
    auto section = [&](const char* name, std::size_t checked,
                       std::size_t mismatches) {
        const double rate =
            checked ? static_cast<double>(mismatches) / checked : 0.0;
        const bool ok = rate <= a.max_error_rate;
        std::cout << (ok ? "PASS" : "FAIL") << " " << name << ": " << mismatches
                  << "/" << checked << " mismatches\n";
        if (!ok) failed = true;
    };

    // Deterministic node sample shared by the per-node oracles.
    std::vector<SolutionId> picked;
    if (graph) {
        const auto n = static_cast<SolutionId>(samples->size());
        if (samples->size() <= a.sample_cap) {
            for (SolutionId id = 0; id < n; ++id) picked.push_back(id);
        } else {
            auto rng = nbn::util::substream(a.seed, 0x76657269u);
            std::vector<char> taken(samples->size(), 0);
            while (picked.size() < a.sample_cap) {
                const auto id = static_cast<SolutionId>(
                    nbn::util::bounded(rng, samples->size()));
                if (!taken[static_cast<std::size_t>(id)]) {
                    taken[static_cast<std::size_t>(id)] = 1;
                    picked.push_back(id);
                }
            }
            std::sort(picked.begin(), picked.end());
        }
    }

    if (a.oracle == "fitness" || a.oracle == "all") {
        std::size_t bad = 0;
        try {
            nbn::io::verify_fitness(*samples);
        } catch (const std::runtime_error& e) {
            std::cerr << e.what() << "\n";
            bad = 1;
        }
        section("fitness", samples->size(), bad);
    }
    if (graph && (a.oracle == "forest" || a.oracle == "all")) {
        const auto issues = graph->check_forest(true);
        for (const auto& issue : issues) std::cerr << issue << "\n";
        section("forest", graph->size(), issues.size());
    }
    if (graph && (a.oracle == "cnbsi" || a.oracle == "all")) {
        // Independent exact recomputation per sampled node.
        std::size_t bad = 0;
        for (SolutionId x : picked) {
            double best_d = nbn::kInfDist;
            SolutionId best = nbn::kNoSolution;
            const auto n = static_cast<SolutionId>(samples->size());
            for (SolutionId id = 0; id < n; ++id) {
                if (id == x || samples->fitness(id) <= samples->fitness(x))
                    continue;
                const double d = samples->distance(x, id);
                if (d < best_d || (d == best_d && id < best)) {
                    best_d = d;
                    best = id;
                }
            }
            const bool root_ok = graph->is_root(x) == (best == nbn::kNoSolution);
            const bool dist_ok =
                graph->is_root(x) || graph->nbd(x) == best_d;
            if (!root_ok || !dist_ok) ++bad;
        }
        section("cnbsi", picked.size(), bad);
    }
    if (graph && (a.oracle == "argmax-transition" || a.oracle == "all")) {
        std::size_t bad = 0;
        const nbn::oracle::TransitionModel model{a.r};
        for (SolutionId x : picked) {
            const auto hop = nbn::oracle::argmax_transition(*samples, x, model);
            if (graph->is_root(x)) {
                if (hop) ++bad;
            } else if (!hop || graph->nbd(x) != samples->distance(x, *hop)) {
                // The most probable accepted transition must sit exactly as
                // far away as the stored nearest-better parent.
                ++bad;
            }
        }
        section("argmax-transition", picked.size(), bad);
    }

    trace("verify oracle=" + a.oracle +
          " ms=" + std::to_string(static_cast<long>(timer.ms())));
    if (failed) throw std::runtime_error("verification failed");
}

// ---------------------------------------------------------------- export --

struct ExportArgs {
    std::string set;
    std::string graph;
    std::string out;
    std::string format = "csv";
    bool layout = false;

    std::optional<double> theta;
    double vartheta = 0;
    std::string theta_mode = "raw";
    std::optional<SolutionId> deception_optimum;
    double deception_nbd_min = 0;
    double deception_dist_max = 0;
};

void run_export(const ExportArgs& a) {
    Stopwatch timer;
    auto samples =
        std::make_shared<nbn::SampleSet>(nbn::io::load_sampleset(a.set));
    nbn::NbnGraph graph = nbn::io::load_graph(a.graph, samples);

    nbn::io::ExportOptions options;
    options.format = nbn::io::parse_export_format(a.format);
    options.layout = a.layout;

    nbn::analysis::OptimaReport optima;
    std::vector<SolutionId> deceptive;
    if (a.theta) {
        optima = nbn::analysis::identify_optima(graph, *a.theta, a.vartheta,
                                                parse_theta_mode(a.theta_mode));
        options.optima = &optima;
    }
    if (a.deception_optimum) {
        deceptive = nbn::analysis::deception_filter(
            graph, *a.deception_optimum, a.deception_nbd_min,
            a.deception_dist_max);
        options.deceptive = deceptive;
    }

    if (a.out.empty() || a.out == "-") {
        nbn::io::export_graph(graph, options, std::cout);
    } else {
        nbn::io::export_graph_file(graph, options, a.out);
    }
    trace("export format=" + a.format +
          " ms=" + std::to_string(static_cast<long>(timer.ms())));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"nearest-better network toolkit for sampled combinatorial "
                 "landscapes"};
    app.require_subcommand(1);

    SampleArgs sample_args;
    auto* sample = app.add_subcommand(
        "sample", "draw a solution set (global, or local around a center)");
    sample->add_option("--problem", sample_args.problem,
                       "onemax | wmodel | tsp")
        ->required();
    sample->add_option("--d", sample_args.d, "dimension (bits / cities)");
    sample->add_option("--n", sample_args.n, "number of distinct solutions")
        ->required();
    sample->add_option("--seed", sample_args.seed, "RNG seed");
    sample->add_option("--out", sample_args.out, "output sample-set file")
        ->required();
    sample->add_option("--gamma", sample_args.gamma, "wmodel ruggedness");
    sample->add_option("--mu", sample_args.mu, "wmodel neutrality block size");
    sample->add_option("--upsilon", sample_args.upsilon,
                       "wmodel epistasis block size");
    sample->add_flag("--no-rescale-fitness", sample_args.no_rescale,
                     "report wmodel fitness on the reduced scale");
    sample->add_option("--tsplib", sample_args.tsplib, "TSPLIB EUC_2D file");
    sample->add_option("--rue-cities", sample_args.rue_cities,
                       "random uniform euclidean instance size");
    sample->add_option("--rue-seed", sample_args.rue_seed,
                       "instance seed (defaults to --seed)");
    sample->add_option("--local-center", sample_args.center,
                       "center spec: file, inline values, zeros|ones|identity");
    sample->add_option("--k", sample_args.k, "local ball radius (metric units)");
    sample->add_option("--local-strategy", sample_args.strategy,
                       "uniform-j | ball | walk");
    sample->add_option("--restart-every", sample_args.restart_every,
                       "walk restart period (0 = 4*max(1,K))");
    sample->add_option("--max-retries", sample_args.max_retries,
                       "consecutive duplicate budget");
    sample->callback([&] { run_sample(sample_args); });

    BuildArgs build_args;
    auto* build =
        app.add_subcommand("build", "construct the nearest-better network");
    build->add_option("--in", build_args.in, "sample-set file")->required();
    build->add_option("--out", build_args.out, "output graph file")->required();
    build->add_option("--algo", build_args.algo, "cnbsi | cnbsd | cnbsrp");
    build->add_option("--seed", build_args.seed, "division RNG seed");
    build->add_option("--nm", build_args.nm, "exact-solve subset threshold");
    std::size_t rounds_opt = 0;
    auto* rounds_flag =
        build->add_option("--rounds", rounds_opt, "cnbsrp round count");
    build->add_option("--epsilon", build_args.epsilon,
                      "cnbsrp error target; rounds = ceil(ln n / eps^2) + 1");
    build->add_option("--threads", build_args.threads, "worker threads");
    build->add_flag("--local", build_args.local,
                    "center-aware division (local samples)");
    build->callback([&] {
        if (rounds_flag->count()) build_args.rounds = rounds_opt;
        run_build(build_args);
    });

    AnalyzeArgs analyze_args;
    auto* analyze = app.add_subcommand(
        "analyze", "landscape metrics: optima census, deception, run chains");
    analyze->add_option("--set", analyze_args.set, "sample-set file")
        ->required();
    analyze->add_option("--graph", analyze_args.graph, "graph file");
    analyze->add_option("--trajectories", analyze_args.trajectories,
                        "trajectory file to merge; rebuilds the graph");
    analyze->add_option("--report", analyze_args.report,
                        "report path or - for stdout");
    double theta_opt = 0;
    auto* theta_flag =
        analyze->add_option("--theta", theta_opt, "optima fitness threshold");
    analyze->add_option("--vartheta", analyze_args.vartheta,
                        "optima nearest-better distance threshold");
    analyze->add_option("--theta-mode", analyze_args.theta_mode, "raw | ratio");
    long long dec_opt = -1;
    auto* dec_flag = analyze->add_option("--deception-optimum", dec_opt,
                                         "reference optimum id");
    analyze->add_option("--deception-nbd-min", analyze_args.deception_nbd_min,
                        "minimum nearest-better distance");
    analyze->add_option("--deception-dist-max", analyze_args.deception_dist_max,
                        "maximum distance to the reference optimum");
    analyze->add_option("--members", analyze_args.members,
                        "comma-separated ids for set_distance");
    analyze->add_option("--list-cap", analyze_args.list_cap,
                        "max ids listed per report array");
    analyze->add_option("--algo", analyze_args.algo,
                        "rebuild algorithm for --trajectories");
    analyze->add_option("--seed", analyze_args.seed, "rebuild seed");
    analyze->add_option("--nm", analyze_args.nm, "rebuild subset threshold");
    std::size_t analyze_rounds_opt = 0;
    auto* analyze_rounds_flag = analyze->add_option(
        "--rounds", analyze_rounds_opt, "rebuild cnbsrp rounds");
    analyze->add_option("--epsilon", analyze_args.epsilon,
                        "rebuild cnbsrp error target");
    analyze->add_option("--threads", analyze_args.threads, "worker threads");
    analyze->callback([&] {
        if (theta_flag->count()) analyze_args.theta = theta_opt;
        if (dec_flag->count()) analyze_args.deception_optimum = dec_opt;
        if (analyze_rounds_flag->count())
            analyze_args.rounds = analyze_rounds_opt;
        run_analyze(analyze_args);
    });

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand(
        "verify", "check stored data against independent oracles");
    verify->add_option("--set", verify_args.set, "sample-set file")->required();
    verify->add_option("--graph", verify_args.graph, "graph file");
    verify->add_option("--oracle", verify_args.oracle,
                       "fitness | forest | cnbsi | argmax-transition | all");
    verify->add_option("--sample-cap", verify_args.sample_cap,
                       "max nodes checked by per-node oracles");
    verify->add_option("--seed", verify_args.seed, "node sampling seed");
    verify->add_option("--r", verify_args.r, "transition model spread");
    verify->add_option("--max-error-rate", verify_args.max_error_rate,
                       "tolerated mismatch fraction per oracle");
    verify->callback([&] { run_verify(verify_args); });

    ExportArgs export_args;
    auto* exp = app.add_subcommand("export", "write plot-ready node tables");
    exp->add_option("--set", export_args.set, "sample-set file")->required();
    exp->add_option("--graph", export_args.graph, "graph file")->required();
    exp->add_option("--out", export_args.out, "output path or - for stdout");
    exp->add_option("--format", export_args.format, "csv | jsonl | dot");
    exp->add_flag("--layout", export_args.layout,
                  "add x/y/height placement columns");
    double exp_theta_opt = 0;
    auto* exp_theta_flag = exp->add_option("--theta", exp_theta_opt,
                                           "annotate optima: fitness threshold");
    exp->add_option("--vartheta", export_args.vartheta,
                    "annotate optima: distance threshold");
    exp->add_option("--theta-mode", export_args.theta_mode, "raw | ratio");
    long long exp_dec_opt = -1;
    auto* exp_dec_flag = exp->add_option("--deception-optimum", exp_dec_opt,
                                         "annotate deception: optimum id");
    exp->add_option("--deception-nbd-min", export_args.deception_nbd_min,
                    "annotate deception: minimum nearest-better distance");
    exp->add_option("--deception-dist-max", export_args.deception_dist_max,
                    "annotate deception: max distance to the optimum");
    exp->callback([&] {
        if (exp_theta_flag->count()) export_args.theta = exp_theta_opt;
        if (exp_dec_flag->count()) export_args.deception_optimum = exp_dec_opt;
        run_export(export_args);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDataError;
    }
    return 0;
}
