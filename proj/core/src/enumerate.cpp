#include "grpoly/enumerate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <unordered_set>

#include "grpoly/canonical.hpp"

namespace grpoly {

namespace {

std::string code_key(const std::vector<std::uint8_t>& code) { return std::string(code.begin(), code.end()); }

Graph graph_from_code(std::size_t n, const std::string& key) {
  std::vector<Edge> edges;
  std::size_t idx = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++idx) {
      if (key[idx] != 0) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph(n, std::move(edges));
}

std::string canonical_key(const Graph& g) { return code_key(canonical_labeling(weight_matrix(g)).code); }

std::vector<Graph> order_classes(std::size_t n, const std::unordered_set<std::string>& keys) {
  std::vector<std::pair<std::size_t, std::string>> sorted;
  sorted.reserve(keys.size());
  for (const auto& key : keys) {
    auto m = static_cast<std::size_t>(std::count_if(key.begin(), key.end(), [](char c) { return c != 0; }));
    sorted.emplace_back(m, key);
  }
  std::sort(sorted.begin(), sorted.end());
  std::vector<Graph> out;
  out.reserve(sorted.size());
  for (const auto& [m, key] : sorted) out.push_back(graph_from_code(n, key));
  return out;
}

std::vector<Graph> labeled_exhaustion(std::size_t n) {
  const std::size_t pairs = n * (n - 1) / 2;
  std::vector<Edge> all;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) all.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  std::unordered_set<std::string> keys;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < pairs; ++b) {
      if ((mask >> b) & 1U) edges.push_back(all[b]);
    }
    keys.insert(canonical_key(Graph(n, std::move(edges))));
  }
  return order_classes(n, keys);
}

std::vector<Graph> extend_by_vertex(const std::vector<Graph>& smaller, std::size_t n) {
  std::unordered_set<std::string> keys;
  const std::size_t old = n - 1;
  for (const auto& g : smaller) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << old); ++mask) {
      std::vector<Edge> edges = g.edges();
      for (std::size_t v = 0; v < old; ++v) {
        if ((mask >> v) & 1U) edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(old));
      }
      keys.insert(canonical_key(Graph(n, std::move(edges))));
    }
  }
  return order_classes(n, keys);
}

const std::vector<Graph>& all_graphs(std::size_t n) {
  static std::mutex mutex;
  static std::array<std::optional<std::vector<Graph>>, kEnumerateMaxVertices + 1> cache;
  {
    std::lock_guard lock(mutex);
    if (cache[n]) return *cache[n];
  }
  std::vector<Graph> result = n <= 6 ? labeled_exhaustion(n) : extend_by_vertex(all_graphs(n - 1), n);
  std::lock_guard lock(mutex);
  if (!cache[n]) cache[n] = std::move(result);
  return *cache[n];
}

}  // namespace

std::vector<Graph> enumerate_graphs(std::size_t n, EnumerationFilter filter) {
  if (n < 1 || n > kEnumerateMaxVertices) {
    throw SizeCapError("enumerate_graphs supports 1 <= n <= " + std::to_string(kEnumerateMaxVertices));
  }
  const auto& all = all_graphs(n);
  if (!filter.m && !filter.k) return all;
  std::vector<Graph> out;
  for (const auto& g : all) {
    if (filter.m && g.m() != *filter.m) continue;
    if (filter.k && component_count(g) != *filter.k) continue;
    out.push_back(g);
  }
  return out;
}

std::vector<Graph> enumerate_graphs_up_to(std::size_t nmax) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= nmax; ++n) {
    auto part = enumerate_graphs(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

namespace {

std::string rooted_code(const std::vector<std::vector<Vertex>>& adj, Vertex v, Vertex parent) {
  std::vector<std::string> children;
  for (Vertex w : adj[v]) {
    if (w != parent) children.push_back(rooted_code(adj, w, v));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  out += ")";
  return out;
}

}  // namespace

std::string tree_code(const Graph& tree) {
  if (!is_tree(tree)) throw DomainError("tree_code needs a tree");
  const std::size_t n = tree.n();
  auto adj = tree.adjacency_lists();
  if (n <= 2) return rooted_code(adj, 0, static_cast<Vertex>(n));
  // Peel leaves to find the centre (one or two vertices).
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> layer;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = adj[v].size();
    if (deg[v] <= 1) layer.push_back(static_cast<Vertex>(v));
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex w : adj[v]) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::string best;
  for (Vertex c : layer) {
    std::string code = rooted_code(adj, c, static_cast<Vertex>(n));
    if (best.empty() || code < best) best = code;
  }
  return best;
}

std::vector<Graph> enumerate_trees(std::size_t n) {
  if (n < 1 || n > kTreeEnumerateMaxVertices) {
    throw SizeCapError("enumerate_trees supports 1 <= n <= " + std::to_string(kTreeEnumerateMaxVertices));
  }
  if (n == 1) return {Graph(1, {})};
  if (n == 2) return {Graph(2, {{0, 1}})};
  std::map<std::string, Graph> classes;
  std::vector<Vertex> code(n - 2, 0);
  while (true) {
    Graph t = tree_from_prufer(code);
    auto key = tree_code(t);
    if (!classes.contains(key)) classes.emplace(std::move(key), std::move(t));
    std::size_t i = 0;
    while (i < code.size() && ++code[i] == n) code[i++] = 0;
    if (i == code.size()) break;
  }
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [key, t] : classes) out.push_back(std::move(t));
  return out;
}

}  // namespace grpoly
