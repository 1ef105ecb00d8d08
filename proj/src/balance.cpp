#include "frustra/balance.hpp"

#include <algorithm>

#include "frustra/errors.hpp"

namespace frustra {

namespace {

int popcount_words(const std::vector<std::uint64_t>& words) {
  int c = 0;
  for (std::uint64_t w : words) c += __builtin_popcountll(w);
  return c;
}

void check_tree(const SignedGraph& g, const SpanningTree& t) {
  if (t.vertex_count() != g.n || static_cast<int>(t.in_tree.size()) != g.edge_count())
    raise(Errc::TreeMismatch, "tree does not belong to this graph");
  int tree_edges = 0;
  for (int v = 0; v < g.n; ++v) {
    int ei = t.parent_edge[v];
    if (ei < 0) continue;
    ++tree_edges;
    if (ei >= g.edge_count()) raise(Errc::TreeMismatch, "tree edge out of range");
    const SignedEdge& e = g.edges[ei];
    bool matches = (e.u == v && e.v == t.parent[v]) || (e.v == v && e.u == t.parent[v]);
    if (!matches) raise(Errc::TreeMismatch, "parent edge endpoints do not match");
  }
  if (tree_edges != g.n - 1) raise(Errc::TreeMismatch, "tree must have |V|-1 edges");
}

} // namespace

int BalancedState::side_count1() const { return popcount_words(side); }

std::vector<std::uint64_t> pack_sides(const std::vector<int>& side01) {
  const int n = static_cast<int>(side01.size());
  std::vector<std::uint64_t> words((n + 63) / 64, 0);
  for (int v = 0; v < n; ++v)
    if (side01[v]) words[v >> 6] |= 1ULL << (v & 63);
  if (!side01.empty() && side01[0]) {
    for (auto& w : words) w = ~w;
    int tail = n & 63;
    if (tail) words.back() &= (1ULL << tail) - 1;
  }
  return words;
}

BalancedState balance_with_tree(const SignedGraph& g, const SpanningTree& t) {
  check_tree(g, t);

  BalancedState s;
  s.n = g.n;
  // side 0 <=> positive path sign; the tree never flips, so the
  // bipartition is fixed before any non-tree edge is examined
  s.side.assign((g.n + 63) / 64, 0);
  for (int v = 0; v < g.n; ++v)
    if (t.path_sign[v] < 0) s.side[v >> 6] |= 1ULL << (v & 63);

  for (int ei = 0; ei < g.edge_count(); ++ei) {
    if (t.in_tree[ei]) continue;
    const SignedEdge& e = g.edges[ei];
    if (e.sign * t.path_sign[e.u] * t.path_sign[e.v] < 0) s.flipped_edges.push_back(ei);
  }

  // canonical form: vertex 0 on side 0
  if (s.side[0] & 1ULL) {
    for (auto& w : s.side) w = ~w;
    int tail = g.n & 63;
    if (tail) s.side.back() &= (1ULL << tail) - 1;
  }
  int ones = popcount_words(s.side);
  s.majority_size = std::max(ones, g.n - ones);
  return s;
}

int fundamental_cycle_sign(const SignedGraph& g, const SpanningTree& t, int edge) {
  check_tree(g, t);
  if (edge < 0 || edge >= g.edge_count()) raise(Errc::TreeMismatch, "edge index out of range");
  if (t.in_tree[edge]) raise(Errc::EdgeInTree, "edge belongs to the spanning tree");
  const SignedEdge& e = g.edges[edge];
  return e.sign * t.path_sign[e.u] * t.path_sign[e.v];
}

bool verify_balanced(const SignedGraph& g, const BalancedState& s) {
  if (s.n != g.n) return false;
  std::vector<char> flipped(g.edge_count(), 0);
  for (int ei : s.flipped_edges) {
    if (ei < 0 || ei >= g.edge_count()) return false;
    flipped[ei] = 1;
  }
  // the state's signing must be exactly the one its bipartition induces
  for (int ei = 0; ei < g.edge_count(); ++ei) {
    const SignedEdge& e = g.edges[ei];
    int sign = flipped[ei] ? -g.edges[ei].sign : g.edges[ei].sign;
    bool same_side = s.side_of(e.u) == s.side_of(e.v);
    if (same_side != (sign > 0)) return false;
  }
  // defensive spot check: fundamental cycles of an arbitrary spanning tree
  // must all be positive under the induced signing
  if (g.n >= 2 && g.is_connected()) {
    std::vector<int> sign_at(g.n, 0);
    std::vector<int> stack{0};
    sign_at[0] = +1;
    std::vector<char> in_tree(g.edge_count(), 0);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (auto [w, ei] : g.adj[u]) {
        if (sign_at[w] != 0) continue;
        int sign = flipped[ei] ? -g.edges[ei].sign : g.edges[ei].sign;
        sign_at[w] = sign_at[u] * sign;
        in_tree[ei] = 1;
        stack.push_back(w);
      }
    }
    for (int ei = 0; ei < g.edge_count(); ++ei) {
      if (in_tree[ei]) continue;
      const SignedEdge& e = g.edges[ei];
      int sign = flipped[ei] ? -g.edges[ei].sign : g.edges[ei].sign;
      if (sign * sign_at[e.u] * sign_at[e.v] < 0) return false;
    }
  }
  return true;
}

} // namespace frustra
