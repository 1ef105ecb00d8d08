#ifndef FRUSTRA_ORACLE_HPP
#define FRUSTRA_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "frustra/balance.hpp"
#include "frustra/graph.hpp"
#include "frustra/metrics.hpp"
#include "frustra/sampler.hpp"

// Brute-force ground truth on small graphs. Everything in here favors
// obviousness over speed and stays independent of the sampled engine's
// shortcuts, so it can serve as the oracle in tests.
namespace frustra::oracle {

// Every spanning tree exactly once, via recursive edge
// contraction/deletion. Throws TooManyTrees if the Kirchhoff count
// exceeds the cap, Disconnected if g is not connected.
std::vector<SpanningTree> enumerate_spanning_trees(const SignedGraph& g,
                                                   std::uint64_t cap = 1000000);

// All 2^(n-1) canonical side vectors; each induces one balanced signing
// of connected g. Throws TooLarge above max_vertices.
std::vector<std::vector<std::uint64_t>> enumerate_balanced_states(const SignedGraph& g,
                                                                  int max_vertices = 20);

// Smallest number of sign flips that reaches a balanced signing: the
// minimum Hamming distance from g's signing to a bipartition-induced one.
long long frustration_index(const SignedGraph& g, int max_vertices = 20);

struct CloudState {
  std::vector<std::uint64_t> side; // canonical
  long long weight = 0;            // number of spanning trees producing it
  int distance = 0;                // sign flips from g's signing
};

struct FrustrationCloud {
  std::vector<CloudState> states; // sorted by side vector
  mpz_class tree_count;           // weights sum to this
};

// Tree balancing over every enumerated spanning tree, deduplicated with
// weights, cross-validated against the lattice characterization (a state
// is reachable iff the graph minus its differing edge set stays
// connected). Throws TooLarge / TooManyTrees on cap violations.
FrustrationCloud frustration_cloud_exact(const SignedGraph& g, std::uint64_t tree_cap = 1000000,
                                         int max_vertices = 20);

// Exact metrics over all spanning trees, computed straight from the
// definitions: per tree, flip non-tree edges whose fundamental cycle is
// negative (by explicit path products), read the bipartition off the
// positive subgraph, and tally majority membership. Deliberately avoids
// the path-sign and accumulator machinery of the sampled engine.
MetricsReport exact_metrics(const SignedGraph& g, std::optional<int> tie_break_vertex = {},
                            TieAgreementRule tie_rule = TieAgreementRule::ZeroCut,
                            bool influence_normalized = true, std::uint64_t tree_cap = 1000000);

// Product of signs along the tree path u..v (no shortcuts; walks parents).
int path_product_sign(const SignedGraph& g, const SpanningTree& t, int u, int v);

} // namespace frustra::oracle

#endif
