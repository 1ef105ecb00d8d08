#include "frustra/sampler.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "frustra/errors.hpp"
#include "frustra/rng.hpp"

namespace frustra {

std::string to_string(SamplerKind kind) {
  switch (kind) {
    case SamplerKind::RandomMst: return "random-mst";
    case SamplerKind::BreadthFirst: return "bfs";
    case SamplerKind::DepthFirst: return "dfs";
  }
  return "?";
}

SamplerKind sampler_from_string(const std::string& name) {
  if (name == "random-mst" || name == "random") return SamplerKind::RandomMst;
  if (name == "bfs") return SamplerKind::BreadthFirst;
  if (name == "dfs") return SamplerKind::DepthFirst;
  raise(Errc::ConfigError, "unknown sampler: " + name);
}

std::vector<int> SpanningTree::tree_edges() const {
  std::vector<int> out;
  out.reserve(parent.size() - 1);
  for (std::size_t v = 0; v < parent.size(); ++v)
    if (parent_edge[v] >= 0) out.push_back(parent_edge[v]);
  std::sort(out.begin(), out.end());
  return out;
}

SpanningTree orient_tree(const SignedGraph& g, const std::vector<int>& tree_edge_ids, int root) {
  SpanningTree t;
  t.root = root;
  t.parent.assign(g.n, -1);
  t.parent_edge.assign(g.n, -1);
  t.path_sign.assign(g.n, 0);
  t.in_tree.assign(g.edge_count(), 0);

  std::vector<std::vector<std::pair<int, int>>> tadj(g.n);
  for (int ei : tree_edge_ids) {
    const SignedEdge& e = g.edges[ei];
    t.in_tree[ei] = 1;
    tadj[e.u].push_back({e.v, ei});
    tadj[e.v].push_back({e.u, ei});
  }

  t.path_sign[root] = +1;
  std::vector<int> stack{root};
  int visited = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (auto [w, ei] : tadj[u]) {
      if (t.path_sign[w] != 0) continue;
      t.parent[w] = u;
      t.parent_edge[w] = ei;
      t.path_sign[w] = static_cast<std::int8_t>(t.path_sign[u] * g.edges[ei].sign);
      ++visited;
      stack.push_back(w);
    }
  }
  if (visited != g.n) raise(Errc::Disconnected, "edge set does not span the graph");
  return t;
}

namespace {

struct DisjointSet {
  std::vector<int> parent, size;
  explicit DisjointSet(int n) : parent(n), size(n, 1) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    return true;
  }
};

SpanningTree random_mst(const SignedGraph& g, TreeRng& rng) {
  const int m = g.edge_count();
  std::vector<std::uint64_t> weight(m);
  for (int ei = 0; ei < m; ++ei) weight[ei] = rng.next();

  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  // weight ties broken by edge index, so the tree is well-defined
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (weight[a] != weight[b]) return weight[a] < weight[b];
    return a < b;
  });

  DisjointSet ds(g.n);
  std::vector<int> chosen;
  chosen.reserve(g.n - 1);
  for (int ei : order) {
    if (ds.unite(g.edges[ei].u, g.edges[ei].v)) {
      chosen.push_back(ei);
      if (static_cast<int>(chosen.size()) == g.n - 1) break;
    }
  }
  if (static_cast<int>(chosen.size()) != g.n - 1)
    raise(Errc::Disconnected, "graph is not connected");
  return orient_tree(g, chosen, 0);
}

SpanningTree traversal_tree(const SignedGraph& g, TreeRng& rng, bool breadth_first) {
  SpanningTree t;
  const int root = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.n)));
  t.root = root;
  t.parent.assign(g.n, -1);
  t.parent_edge.assign(g.n, -1);
  t.path_sign.assign(g.n, 0);
  t.in_tree.assign(g.edge_count(), 0);

  int visited = 0;
  auto visit = [&](int v, int par, int ei) {
    t.parent[v] = par;
    t.parent_edge[v] = ei;
    if (par < 0) {
      t.path_sign[v] = +1;
    } else {
      t.in_tree[ei] = 1;
      t.path_sign[v] = static_cast<std::int8_t>(t.path_sign[par] * g.edges[ei].sign);
    }
    ++visited;
  };

  std::vector<std::pair<int, int>> nbrs; // (neighbor, edge)
  if (breadth_first) {
    std::queue<int> q;
    visit(root, -1, -1);
    q.push(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      nbrs = g.adj[u];
      rng.shuffle(nbrs);
      for (auto [w, ei] : nbrs) {
        if (t.path_sign[w] != 0) continue;
        visit(w, u, ei);
        q.push(w);
      }
    }
  } else {
    // iterative DFS; the vertex that last pushed an unvisited node becomes
    // its parent, which matches the recursive traversal
    std::vector<std::tuple<int, int, int>> stack; // (vertex, parent, edge)
    stack.push_back({root, -1, -1});
    while (!stack.empty()) {
      auto [u, par, ei] = stack.back();
      stack.pop_back();
      if (t.path_sign[u] != 0) continue;
      visit(u, par, ei);
      nbrs = g.adj[u];
      rng.shuffle(nbrs);
      for (auto [w, wei] : nbrs)
        if (t.path_sign[w] == 0) stack.push_back({w, u, wei});
    }
  }
  if (visited != g.n) raise(Errc::Disconnected, "graph is not connected");
  return t;
}

} // namespace

SpanningTree sample_tree(const SignedGraph& g, SamplerKind kind, std::uint64_t seed,
                         std::uint64_t index) {
  if (g.n == 0) raise(Errc::EmptyGraph, "cannot sample a tree of the empty graph");
  TreeRng rng(seed, index);
  switch (kind) {
    case SamplerKind::RandomMst: return random_mst(g, rng);
    case SamplerKind::BreadthFirst: return traversal_tree(g, rng, true);
    case SamplerKind::DepthFirst: return traversal_tree(g, rng, false);
  }
  raise(Errc::ConfigError, "bad sampler kind");
}

mpz_class count_spanning_trees(const SignedGraph& g, int max_vertices) {
  if (!g.is_connected()) raise(Errc::Disconnected, "tree count requires a connected graph");
  if (g.n > max_vertices)
    raise(Errc::TooLarge, "tree count capped at " + std::to_string(max_vertices) + " vertices");
  if (g.n == 1) return 1;

  // reduced Laplacian (vertex 0 removed), fraction-free Bareiss elimination
  const int k = g.n - 1;
  std::vector<std::vector<mpz_class>> a(k, std::vector<mpz_class>(k, 0));
  for (int v = 1; v < g.n; ++v) a[v - 1][v - 1] = g.degree(v);
  for (const SignedEdge& e : g.edges) {
    if (e.u == 0 || e.v == 0) continue;
    a[e.u - 1][e.v - 1] -= 1;
    a[e.v - 1][e.u - 1] -= 1;
  }

  mpz_class prev = 1;
  int sign = 1;
  for (int col = 0; col < k - 1; ++col) {
    if (a[col][col] == 0) {
      int pivot = -1;
      for (int r = col + 1; r < k; ++r)
        if (a[r][col] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0; // singular; cannot happen for a connected graph
      std::swap(a[col], a[pivot]);
      sign = -sign;
    }
    for (int r = col + 1; r < k; ++r) {
      for (int c = col + 1; c < k; ++c) {
        a[r][c] = (a[r][c] * a[col][col] - a[r][col] * a[col][c]) / prev;
      }
      a[r][col] = 0;
    }
    prev = a[col][col];
  }
  mpz_class det = a[k - 1][k - 1] * sign;
  return det < 0 ? mpz_class(-det) : det;
}

} // namespace frustra
