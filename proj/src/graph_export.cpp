#include "nbn/io/graph_export.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "nbn/io/layout.hpp"

namespace nbn::io {

namespace {

/// Shortest round-trip decimal form; locale-independent and deterministic.
std::string fmt(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

struct Annotations {
    std::vector<SolutionId> optima;    // sorted
    std::vector<SolutionId> deceptive; // sorted

    explicit Annotations(const ExportOptions& options) {
        if (options.optima) optima = options.optima->ids;
        deceptive.assign(options.deceptive.begin(), options.deceptive.end());
        std::sort(optima.begin(), optima.end());
        std::sort(deceptive.begin(), deceptive.end());
    }
    bool is_optimum(SolutionId id) const {
        return std::binary_search(optima.begin(), optima.end(), id);
    }
    bool is_deceptive(SolutionId id) const {
        return std::binary_search(deceptive.begin(), deceptive.end(), id);
    }
};

std::string runs_field(const NbnGraph& graph, SolutionId id) {
    std::string joined;
    for (const RunLabel& l : graph.samples().labels(id)) {
        if (!joined.empty()) joined += ';';
        joined += graph.samples().run_names()[l.run];
        joined += '@';
        joined += std::to_string(l.iter);
    }
    return joined;
}

void write_csv(const NbnGraph& graph, const ExportOptions& options,
               const Annotations& notes,
               const std::vector<LayoutPoint>& placed, std::ostream& out) {
    out << "id,fitness,parent,nbd,is_root,is_optimum,is_deceptive,runs";
    if (options.layout) out << ",x,y,height";
    out << '\n';
    const auto n = static_cast<SolutionId>(graph.size());
    for (SolutionId id = 0; id < n; ++id) {
        out << id << ',' << fmt(graph.fitness(id)) << ',';
        if (!graph.is_root(id)) out << graph.parent(id);
        out << ',';
        if (!graph.is_root(id)) out << fmt(graph.nbd(id));
        out << ',' << (graph.is_root(id) ? 1 : 0) << ','
            << (notes.is_optimum(id) ? 1 : 0) << ','
            << (notes.is_deceptive(id) ? 1 : 0) << ',';
        const std::string runs = runs_field(graph, id);
        if (!runs.empty()) out << csv_quote(runs);
        if (options.layout) {
            const auto& p = placed[static_cast<std::size_t>(id)];
            out << ',' << fmt(p.x) << ',' << fmt(p.y) << ',' << fmt(p.height);
        }
        out << '\n';
    }
}

void write_jsonl(const NbnGraph& graph, const ExportOptions& options,
                 const Annotations& notes,
                 const std::vector<LayoutPoint>& placed, std::ostream& out) {
    const auto n = static_cast<SolutionId>(graph.size());
    for (SolutionId id = 0; id < n; ++id) {
        nlohmann::ordered_json node;
        node["id"] = id;
        node["fitness"] = graph.fitness(id);
        if (graph.is_root(id)) {
            node["parent"] = nullptr;
            node["nbd"] = nullptr;
        } else {
            node["parent"] = graph.parent(id);
            node["nbd"] = graph.nbd(id);
        }
        node["is_root"] = graph.is_root(id);
        node["is_optimum"] = notes.is_optimum(id);
        node["is_deceptive"] = notes.is_deceptive(id);
        auto runs = nlohmann::ordered_json::array();
        for (const RunLabel& l : graph.samples().labels(id)) {
            runs.push_back({{"run", graph.samples().run_names()[l.run]},
                            {"iter", l.iter}});
        }
        node["runs"] = std::move(runs);
        if (options.layout) {
            const auto& p = placed[static_cast<std::size_t>(id)];
            node["x"] = p.x;
            node["y"] = p.y;
            node["height"] = p.height;
        }
        out << node.dump() << '\n';
    }
}

void write_dot(const NbnGraph& graph, const ExportOptions& options,
               const Annotations& notes,
               const std::vector<LayoutPoint>& placed, std::ostream& out) {
    out << "digraph nbn {\n  rankdir=BT;\n  node [shape=circle];\n";
    const auto n = static_cast<SolutionId>(graph.size());
    for (SolutionId id = 0; id < n; ++id) {
        out << "  n" << id << " [label=\"" << id << "\", fitness=\""
            << fmt(graph.fitness(id)) << '"';
        if (graph.is_root(id)) out << ", shape=doublecircle";
        if (notes.is_optimum(id)) out << ", optimum=\"1\"";
        if (notes.is_deceptive(id)) out << ", deceptive=\"1\"";
        if (options.layout) {
            const auto& p = placed[static_cast<std::size_t>(id)];
            out << ", pos=\"" << fmt(p.x) << ',' << fmt(p.y) << "!\"";
        }
        out << "];\n";
    }
    for (SolutionId id = 0; id < n; ++id) {
        if (graph.is_root(id)) continue;
        out << "  n" << id << " -> n" << graph.parent(id) << " [dist=\""
            << fmt(graph.nbd(id)) << "\"];\n";
    }
    out << "}\n";
}

} // namespace

ExportFormat parse_export_format(const std::string& name) {
    if (name == "csv") return ExportFormat::Csv;
    if (name == "jsonl") return ExportFormat::Jsonl;
    if (name == "dot") return ExportFormat::Dot;
    throw std::invalid_argument("unknown export format '" + name +
                                "' (expected csv, jsonl, or dot)");
}

void export_graph(const NbnGraph& graph, const ExportOptions& options,
                  std::ostream& out) {
    const Annotations notes(options);
    std::vector<LayoutPoint> placed;
    if (options.layout) placed = layout_2d(graph);
    switch (options.format) {
    case ExportFormat::Csv: write_csv(graph, options, notes, placed, out); break;
    case ExportFormat::Jsonl:
        write_jsonl(graph, options, notes, placed, out);
        break;
    case ExportFormat::Dot: write_dot(graph, options, notes, placed, out); break;
    }
}

void export_graph_file(const NbnGraph& graph, const ExportOptions& options,
                       const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    export_graph(graph, options, out);
    if (!out) throw std::runtime_error(path + ": write failed");
}

} // namespace nbn::io
