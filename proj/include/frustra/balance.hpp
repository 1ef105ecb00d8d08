#ifndef FRUSTRA_BALANCE_HPP
#define FRUSTRA_BALANCE_HPP

#include <cstdint>
#include <vector>

#include "frustra/graph.hpp"
#include "frustra/sampler.hpp"

namespace frustra {

// One nearest balanced state: a canonical bipartition of the vertices
// (side of vertex 0 is always 0) plus the non-tree edges whose sign was
// changed to reach it. Under the induced signing (negative exactly across
// sides) every cycle is positive.
struct BalancedState {
  int n = 0;
  std::vector<std::uint64_t> side;  // bit-packed side vector, canonicalized
  std::vector<int> flipped_edges;   // sorted edge indices, non-tree only
  int majority_size = 0;            // max(#side0, #side1)

  int side_of(int v) const { return static_cast<int>((side[v >> 6] >> (v & 63)) & 1u); }
  int side_count1() const;
  bool is_tie() const { return 2 * majority_size == n; }
  bool is_unanimous() const { return majority_size == n; }
};

// Canonical side vector for an explicit 0/1 assignment (flips all bits if
// needed so that vertex 0 lands on side 0).
std::vector<std::uint64_t> pack_sides(const std::vector<int>& side01);

// Tree balancing: derives the Harary bipartition from the tree path signs
// and flips exactly the non-tree edges inconsistent with it. O(|V|+|E|).
// Throws TreeMismatch if t is not a spanning tree of g.
BalancedState balance_with_tree(const SignedGraph& g, const SpanningTree& t);

// Sign of the unique cycle in T + e for a non-tree edge e:
// sigma(e) * path_sign(u) * path_sign(v). Throws EdgeInTree.
int fundamental_cycle_sign(const SignedGraph& g, const SpanningTree& t, int edge);

// True iff g's signing, with s.flipped_edges applied, is exactly the
// signing induced by s's bipartition (negative iff endpoints on different
// sides) -- which is balance. Also spot-checks a fundamental cycle basis.
bool verify_balanced(const SignedGraph& g, const BalancedState& s);

} // namespace frustra

#endif
