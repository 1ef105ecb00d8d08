#ifndef FRUSTRA_GRAPH_HPP
#define FRUSTRA_GRAPH_HPP

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace frustra {

// Original vertex identifier as it appears in the input data.
using Label = long long;

// One directed sentiment as read from an edge list. Zero values are legal
// input; they are discarded during graph construction.
struct RawSentiment {
  Label source = 0;
  Label target = 0;
  long long value = 0;
};

// Undirected signed edge between dense vertex ids, u < v, sign in {+1,-1}.
struct SignedEdge {
  int u = 0;
  int v = 0;
  int sign = +1;
};

// Simple undirected graph with +/-1 edge signs. Vertex ids are dense
// 0..n-1; `labels` maps them back to the source identifiers. Immutable
// once built, safe for concurrent reads.
struct SignedGraph {
  int n = 0;
  std::vector<SignedEdge> edges;
  std::vector<std::vector<std::pair<int, int>>> adj; // per vertex: (neighbor, edge index)
  std::vector<Label> labels;                         // dense id -> original label
  std::unordered_map<Label, int> ids;                // original label -> dense id

  int edge_count() const { return static_cast<int>(edges.size()); }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  int positive_edge_count() const;
  int negative_edge_count() const;
  bool is_connected() const;
  // cheap structural hash used to detect accumulator/graph mix-ups
  std::uint64_t fingerprint() const;
};

// How multiple directed sentiments on one unordered pair collapse into a
// single undirected sign.
enum class SymmetrizationPolicy {
  SumThenSign, // sum surviving values, take the sign, drop zero sums
};

struct IngestStats {
  std::size_t zero_sentiments = 0;  // neutral inputs dropped
  std::size_t self_loops = 0;       // dropped, counted for the warning
  std::size_t cancelled_pairs = 0;  // pairs whose sentiment sum was zero
  std::size_t raw_sentiments = 0;   // surviving directed sentiments
};

// Builds a simple undirected SignedGraph. Vertices are the endpoints of
// surviving edges, densely re-indexed in ascending label order.
// Throws EmptyGraph if nothing survives.
SignedGraph build_graph(const std::vector<RawSentiment>& raw,
                        SymmetrizationPolicy policy = SymmetrizationPolicy::SumThenSign,
                        IngestStats* stats = nullptr);

// Maximal connected subgraphs, each densely re-indexed with its own label
// map, ordered by descending vertex count, ties by smallest original label.
std::vector<SignedGraph> connected_components(const SignedGraph& g);

int count_components(const SignedGraph& g);

// |E| - |V| + #components
int cyclomatic_number(const SignedGraph& g);

} // namespace frustra

#endif
