#pragma once

#include <memory>
#include <string>

#include "nbn/core/nbn_graph.hpp"
#include "nbn/core/sample_set.hpp"

namespace nbn::io {

/// Versioned little-endian binary container for a sample set: magic
/// "NBNSET01", the full problem definition (so loading needs no side
/// channel), the problem content hash, solutions with fitness, optional
/// center id, and trajectory labels. load_sampleset re-evaluates nothing by
/// default but verify_fitness re-derives every stored fitness.
void persist_sampleset(const SampleSet& set, const std::string& path);
SampleSet load_sampleset(const std::string& path);

/// Re-evaluates every solution through the problem; throws std::runtime_error
/// on the first mismatch. Used by `verify` and after loads in tests.
void verify_fitness(const SampleSet& set);

/// Graph container: magic "NBNGRF01", the sample-set fingerprint it was
/// built from, and one (parent, dist) record per solution. Loading checks
/// the fingerprint against `samples` so a graph cannot be applied to the
/// wrong set.
void persist_graph(const NbnGraph& graph, const std::string& path);
NbnGraph load_graph(const std::string& path,
                    std::shared_ptr<const SampleSet> samples);

} // namespace nbn::io
