#ifndef FRUSTRA_PIPELINE_HPP
#define FRUSTRA_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frustra/graph.hpp"
#include "frustra/metrics.hpp"
#include "frustra/sampler.hpp"

namespace frustra {

enum class ComponentPolicy { Largest, All };

struct RunConfig {
  std::string input_path;
  SamplerKind sampler = SamplerKind::RandomMst;
  long long trees = 1000;
  std::uint64_t seed = 1;
  std::optional<Label> tie_break;    // original label; must exist in the component
  ComponentPolicy components = ComponentPolicy::Largest;
  int workers = 1;
  bool influence_normalized = true;
  TieAgreementRule tie_rule = TieAgreementRule::ZeroCut;
  std::string out_dir;
};

// Serial reference: one plain loop over tree indices. Kept alongside the
// OpenMP version so tests can require identical results.
ConsensusAccumulator consensus_serial(const SignedGraph& g, SamplerKind kind, std::uint64_t seed,
                                      long long trees, TieAgreementRule rule);

// OpenMP workers over disjoint tree-index ranges, one private accumulator
// each, merged at the end. Per-tree RNG streams make the sharding
// invisible: the result is identical for any worker count.
ConsensusAccumulator consensus_parallel(const SignedGraph& g, SamplerKind kind, std::uint64_t seed,
                                        long long trees, TieAgreementRule rule, int workers);

// vertices.csv / edges.csv / summary.txt, written via temp names and
// atomic rename. Directory is created if needed.
void write_report(const SignedGraph& g, const MetricsReport& report, const std::string& dir);

// Human-readable run summary (also the content of summary.txt).
std::string summarize(const SignedGraph& g, const MetricsReport& report);

struct PipelineResult {
  std::vector<MetricsReport> reports;    // one per processed component
  std::vector<std::string> out_dirs;     // where each report was written
  IngestStats ingest;
};

// ingest -> component extraction -> sampled balancing -> metrics files.
// With ComponentPolicy::Largest everything lands in cfg.out_dir; with All,
// component k lands in cfg.out_dir/component_k.
PipelineResult run_pipeline(const RunConfig& cfg);

} // namespace frustra

#endif
