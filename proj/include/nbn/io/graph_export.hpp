#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "nbn/analysis/landscape.hpp"
#include "nbn/core/nbn_graph.hpp"

namespace nbn::io {

enum class ExportFormat : std::uint32_t { Csv = 0, Jsonl = 1, Dot = 2 };

ExportFormat parse_export_format(const std::string& name);  // throws on unknown

struct ExportOptions {
    ExportFormat format = ExportFormat::Csv;
    bool layout = false;  // add x/y/height placement columns

    /// Optional annotations; when present the is_optimum / is_deceptive
    /// columns are populated from them, otherwise they stay 0.
    const analysis::OptimaReport* optima = nullptr;
    std::span<const SolutionId> deceptive;
};

/// Writes one node record per solution: id, fitness, parent (empty for
/// roots), nbd (empty for roots), is_root, run labels, annotation flags, and
/// optionally the 2-D placement. Number formatting is locale-independent and
/// deterministic, so identical graphs export byte-identical files.
void export_graph(const NbnGraph& graph, const ExportOptions& options,
                  std::ostream& out);

void export_graph_file(const NbnGraph& graph, const ExportOptions& options,
                       const std::string& path);

} // namespace nbn::io
