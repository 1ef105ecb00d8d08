#ifndef FRUSTRA_METRICS_HPP
#define FRUSTRA_METRICS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "frustra/balance.hpp"
#include "frustra/graph.hpp"
#include "frustra/rational.hpp"
#include "frustra/sampler.hpp"

namespace frustra {

// Tie-state credit for edges. A cut edge belongs to neither induced side,
// so by default it earns nothing even on ties; `Half` awards the tie
// half-credit to every edge uniformly.
enum class TieAgreementRule {
  ZeroCut, // tie: non-cut edges 0.5, cut edges 0
  Half,    // tie: every edge 0.5
};

std::string to_string(TieAgreementRule rule);
TieAgreementRule tie_rule_from_string(const std::string& name); // "zero-cut" | "half"

// Exact tallies across balanced states, in half-units: 2 per strict
// majority membership, 1 per tie. Thread-local instances merge
// associatively and commutatively into the same totals as sequential
// accumulation.
struct ConsensusAccumulator {
  std::uint64_t graph_fp = 0;
  int n = 0;
  int m = 0;
  TieAgreementRule tie_rule = TieAgreementRule::ZeroCut;

  long long trees_seen = 0;
  long long tie_count = 0;
  std::vector<long long> vertex_tally; // half-units per vertex
  std::vector<long long> edge_tally;   // half-units per edge
  std::map<std::vector<std::uint64_t>, long long> state_weights; // canonical side -> count

  explicit ConsensusAccumulator(const SignedGraph& g,
                                TieAgreementRule rule = TieAgreementRule::ZeroCut);

  // Throws GraphMismatch if s/g do not match this accumulator.
  void add(const SignedGraph& g, const BalancedState& s);
  void merge(const ConsensusAccumulator& other);
};

// status(v) = vertex_tally[v] / (2 * trees_seen), exact.
std::vector<Rational> status(const ConsensusAccumulator& acc);

// agreement(e) = edge_tally[e] / (2 * trees_seen), exact.
std::vector<Rational> agreement(const ConsensusAccumulator& acc);

// influence(v) = sum of incident agreements / deg(v); the unnormalized
// variant returns the raw sum. Throws ZeroDegree.
std::vector<Rational> influence(const SignedGraph& g, const std::vector<Rational>& agreement,
                                bool normalized = true);

// Status with every tie resolved in favor of vertex t's side, recomputed
// from the retained state weights. Exact; mean over vertices equals plain
// controversy for any t (conservation).
std::vector<Rational> vertical_status(const ConsensusAccumulator& acc, int t);

// Mean status over all vertices, in [1/2, 1].
Rational controversy(const ConsensusAccumulator& acc);

struct Provenance {
  SamplerKind sampler = SamplerKind::RandomMst;
  std::uint64_t seed = 0;
  long long trees = 0;
  std::optional<Label> tie_break; // original label, if a tie vertex was designated
  bool influence_normalized = true;
  TieAgreementRule tie_rule = TieAgreementRule::ZeroCut;
  bool exhaustive = false; // true when every spanning tree was enumerated
};

struct MetricsReport {
  std::vector<Rational> status;          // per vertex
  std::vector<Rational> influence;       // per vertex
  std::vector<Rational> vertical;        // per vertex; empty unless tie_break set
  std::vector<Rational> agreement;       // per edge
  Rational controversy;
  long long trees_seen = 0;
  long long tie_states = 0;
  long long distinct_states = 0;
  Provenance provenance;
};

MetricsReport make_report(const SignedGraph& g, const ConsensusAccumulator& acc,
                          const Provenance& prov);

} // namespace frustra

#endif
