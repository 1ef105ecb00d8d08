#include "frustra/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "frustra/errors.hpp"

namespace frustra {

int SignedGraph::positive_edge_count() const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(),
                                        [](const SignedEdge& e) { return e.sign > 0; }));
}

int SignedGraph::negative_edge_count() const {
  return edge_count() - positive_edge_count();
}

bool SignedGraph::is_connected() const {
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (auto [w, ei] : adj[u]) {
      (void)ei;
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

std::uint64_t SignedGraph::fingerprint() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  mix(static_cast<std::uint64_t>(n));
  for (const SignedEdge& e : edges) {
    mix((static_cast<std::uint64_t>(e.u) << 32) | static_cast<std::uint64_t>(e.v));
    mix(static_cast<std::uint64_t>(e.sign + 2));
  }
  return h;
}

SignedGraph build_graph(const std::vector<RawSentiment>& raw, SymmetrizationPolicy policy,
                        IngestStats* stats) {
  (void)policy; // SumThenSign is the only collapse rule
  IngestStats local;

  std::map<std::pair<Label, Label>, long long> pair_sum;
  for (const RawSentiment& s : raw) {
    if (s.value == 0) {
      ++local.zero_sentiments;
      continue;
    }
    if (s.source == s.target) {
      ++local.self_loops;
      continue;
    }
    ++local.raw_sentiments;
    Label a = std::min(s.source, s.target);
    Label b = std::max(s.source, s.target);
    pair_sum[{a, b}] += s.value;
  }

  std::vector<std::pair<std::pair<Label, Label>, int>> surviving;
  surviving.reserve(pair_sum.size());
  for (const auto& [pair, sum] : pair_sum) {
    if (sum == 0) {
      ++local.cancelled_pairs;
      continue;
    }
    surviving.push_back({pair, sum > 0 ? +1 : -1});
  }
  if (stats) *stats = local;
  if (surviving.empty()) raise(Errc::EmptyGraph, "no edges survive ingestion");

  SignedGraph g;
  // dense ids in ascending label order
  std::vector<Label> labels;
  for (const auto& [pair, sign] : surviving) {
    (void)sign;
    labels.push_back(pair.first);
    labels.push_back(pair.second);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  g.n = static_cast<int>(labels.size());
  g.labels = labels;
  g.ids.reserve(labels.size());
  for (int i = 0; i < g.n; ++i) {
    auto [it, inserted] = g.ids.emplace(labels[i], i);
    (void)it;
    if (!inserted) raise(Errc::LabelCollision, "duplicate label in label map");
  }

  g.adj.assign(g.n, {});
  g.edges.reserve(surviving.size());
  for (const auto& [pair, sign] : surviving) {
    int u = g.ids.at(pair.first);
    int v = g.ids.at(pair.second);
    int ei = g.edge_count();
    g.edges.push_back({std::min(u, v), std::max(u, v), sign});
    g.adj[u].push_back({v, ei});
    g.adj[v].push_back({u, ei});
  }
  return g;
}

int count_components(const SignedGraph& g) {
  std::vector<int> comp(g.n, -1);
  int count = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (auto [w, ei] : g.adj[u]) {
        (void)ei;
        if (comp[w] < 0) {
          comp[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return count;
}

int cyclomatic_number(const SignedGraph& g) {
  return g.edge_count() - g.n + count_components(g);
}

std::vector<SignedGraph> connected_components(const SignedGraph& g) {
  std::vector<int> comp(g.n, -1);
  int count = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (auto [w, ei] : g.adj[u]) {
        (void)ei;
        if (comp[w] < 0) {
          comp[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }

  std::vector<int> size(count, 0);
  std::vector<Label> min_label(count, 0);
  std::vector<char> seen(count, 0);
  for (int v = 0; v < g.n; ++v) {
    int c = comp[v];
    ++size[c];
    if (!seen[c] || g.labels[v] < min_label[c]) {
      min_label[c] = g.labels[v];
      seen[c] = 1;
    }
  }

  // descending vertex count, ties by smallest original label
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (size[a] != size[b]) return size[a] > size[b];
    return min_label[a] < min_label[b];
  });
  std::vector<int> rank(count);
  for (int i = 0; i < count; ++i) rank[order[i]] = i;

  std::vector<SignedGraph> out(count);
  std::vector<int> local(g.n, -1);
  // vertices stay in ascending label order because ids already are
  for (int v = 0; v < g.n; ++v) {
    SignedGraph& part = out[rank[comp[v]]];
    local[v] = part.n++;
    part.labels.push_back(g.labels[v]);
    part.ids.emplace(g.labels[v], local[v]);
  }
  for (auto& part : out) part.adj.assign(part.n, {});
  for (const SignedEdge& e : g.edges) {
    SignedGraph& part = out[rank[comp[e.u]]];
    int u = local[e.u];
    int v = local[e.v];
    int ei = part.edge_count();
    part.edges.push_back({std::min(u, v), std::max(u, v), e.sign});
    part.adj[u].push_back({v, ei});
    part.adj[v].push_back({u, ei});
  }
  return out;
}

} // namespace frustra
