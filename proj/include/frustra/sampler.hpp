#ifndef FRUSTRA_SAMPLER_HPP
#define FRUSTRA_SAMPLER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "frustra/graph.hpp"

namespace frustra {

enum class SamplerKind {
  RandomMst,   // fresh random edge weights, minimum spanning tree
  BreadthFirst,
  DepthFirst,
};

std::string to_string(SamplerKind kind);
SamplerKind sampler_from_string(const std::string& name); // "random-mst" | "bfs" | "dfs"

// Rooted spanning tree of a connected SignedGraph. path_sign(v) is the
// product of tree-edge signs on the root->v path; path_sign(root) = +1.
struct SpanningTree {
  int root = 0;
  std::vector<int> parent;            // parent vertex, -1 at root
  std::vector<int> parent_edge;       // edge index into g.edges, -1 at root
  std::vector<std::int8_t> path_sign; // +1 / -1
  std::vector<char> in_tree;          // per-edge membership flag

  int vertex_count() const { return static_cast<int>(parent.size()); }
  std::vector<int> tree_edges() const; // sorted edge indices, n-1 of them
};

// Builds a rooted tree (root fixed by caller) from a set of tree edge
// indices, deriving parents and path signs.
SpanningTree orient_tree(const SignedGraph& g, const std::vector<int>& tree_edge_ids, int root);

// Samples one spanning tree. Pure function of (g, kind, seed, index):
// the RNG stream is keyed by (seed, index), so any number of trees can be
// drawn concurrently and the result never depends on scheduling.
// Throws Disconnected if g is not connected.
SpanningTree sample_tree(const SignedGraph& g, SamplerKind kind, std::uint64_t seed,
                         std::uint64_t index);

// Exact spanning-tree count: determinant of a reduced Laplacian computed
// with fraction-free big-integer elimination. Throws Disconnected, or
// TooLarge above max_vertices (the dense big-integer matrix is the limit).
mpz_class count_spanning_trees(const SignedGraph& g, int max_vertices = 2048);

} // namespace frustra

#endif
