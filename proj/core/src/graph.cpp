#include "grpoly/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace grpoly {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ == 0) throw DomainError("graphs must have at least one vertex");
  for (auto& [u, v] : edges_) {
    if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
    if (u >= n_ || v >= n_) {
      throw DomainError("edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw DomainError("duplicate edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ")");
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> deg(n_, 0);
  for (auto [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

std::vector<std::vector<Vertex>> Graph::adjacency_lists() const {
  std::vector<std::vector<Vertex>> adj(n_);
  for (auto [u, v] : edges_) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
  if (n_ > 64) throw SizeCapError("adjacency masks need n <= 64");
  std::vector<std::uint64_t> adj(n_, 0);
  for (auto [u, v] : edges_) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  return adj;
}

std::string to_string(const SimilarityTriple& t) {
  std::ostringstream os;
  os << "(" << t.n << "," << t.m << "," << t.k << ")";
  return os.str();
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

std::vector<std::size_t> component_labels(const Graph& g) {
  DisjointSets ds(g.n());
  for (auto [u, v] : g.edges()) ds.unite(u, v);
  std::vector<std::size_t> root_index(g.n(), g.n());
  std::vector<std::size_t> labels(g.n());
  std::size_t next = 0;
  for (std::size_t v = 0; v < g.n(); ++v) {
    std::size_t r = ds.find(v);
    if (root_index[r] == g.n()) root_index[r] = next++;
    labels[v] = root_index[r];
  }
  return labels;
}

std::size_t component_count(const Graph& g) {
  DisjointSets ds(g.n());
  std::size_t k = g.n();
  for (auto [u, v] : g.edges()) {
    if (ds.unite(u, v)) --k;
  }
  return k;
}

SimilarityTriple similarity_triple(const Graph& g) { return {g.n(), g.m(), component_count(g)}; }

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) {
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(g.n(), std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const auto shift = static_cast<Vertex>(a.n());
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph(a.n() + b.n(), std::move(edges));
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  if (perm.size() != g.n()) throw DomainError("relabel: permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.m());
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.n(), std::move(edges));
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep) {
  std::vector<Vertex> index(g.n(), static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (index[u] != static_cast<Vertex>(-1) && index[v] != static_cast<Vertex>(-1)) {
      edges.emplace_back(index[u], index[v]);
    }
  }
  return Graph(keep.size(), std::move(edges));
}

namespace {

// Number of pairs C(x, 2), saturating is unnecessary for the sizes we accept.
std::size_t choose2(std::size_t x) { return x * (x - (x > 0 ? 1 : 0)) / 2; }

}  // namespace

bool parameters_realizable(std::size_t v, std::size_t e, std::size_t k) {
  if (v == 0 || k == 0 || k > v) return false;
  if (v > e + k) return false;
  return e <= choose2(v - k + 1);
}

Graph build_graph_with_parameters(std::size_t v, std::size_t e, std::size_t k) {
  if (v == 0) throw DomainError("build_graph_with_parameters: v must be positive");
  if (k == 0) throw DomainError("build_graph_with_parameters: k must be positive");
  if (k > v) throw DomainError("build_graph_with_parameters: violates k <= v");
  if (v > e + k) throw DomainError("build_graph_with_parameters: violates v - e <= k");
  const std::size_t c = v - k + 1;
  if (e > choose2(c)) {
    throw DomainError("build_graph_with_parameters: violates e <= C(v-k+1, 2) = " + std::to_string(choose2(c)));
  }
  std::vector<Edge> edges;
  edges.reserve(e);
  for (std::size_t i = 0; i + 1 < c; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  for (std::size_t a = 0; a < c && edges.size() < e; ++a) {
    for (std::size_t b = a + 2; b < c && edges.size() < e; ++b) {
      edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
  }
  return Graph(v, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph(n, std::move(edges));
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return Graph(n, std::move(edges));
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph(n, std::move(edges));
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, static_cast<Vertex>(i));
  return Graph(leaves + 1, std::move(edges));
}

Graph empty_graph(std::size_t n) { return Graph(n, {}); }

Graph tree_from_prufer(const std::vector<Vertex>& code) {
  const std::size_t n = code.size() + 2;
  for (Vertex c : code) {
    if (c >= n) throw DomainError("Pruefer code entry out of range");
  }
  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex c : code) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, c);
    --degree[leaf];
    --degree[c];
  }
  Vertex u = 0;
  while (degree[u] != 1) ++u;
  Vertex w = u + 1;
  while (degree[w] != 1) ++w;
  edges.emplace_back(u, w);
  return Graph(n, std::move(edges));
}

Graph named_graph(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw DomainError("named graph needs family:size, got '" + spec + "'");
  std::string family = spec.substr(0, colon);
  std::string arg = spec.substr(colon + 1);
  if (family == "prufer") {
    std::vector<Vertex> code;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      code.push_back(static_cast<Vertex>(std::stoul(item)));
    }
    return tree_from_prufer(code);
  }
  std::size_t size = 0;
  try {
    std::size_t used = 0;
    size = std::stoul(arg, &used);
    if (used != arg.size()) throw DomainError("bad size");
  } catch (const std::exception&) {
    throw DomainError("named graph size must be a positive integer, got '" + arg + "'");
  }
  if (size < 1) throw DomainError("named graph size must be >= 1");
  if (family == "cycle") return cycle_graph(size);
  if (family == "complete") return complete_graph(size);
  if (family == "path") return path_graph(size);
  if (family == "star") return star_graph(size);
  if (family == "empty") return empty_graph(size);
  throw DomainError("unknown graph family '" + family + "'");
}

bool is_forest(const Graph& g) { return g.m() + component_count(g) == g.n(); }

bool is_tree(const Graph& g) { return is_forest(g) && component_count(g) == 1; }

}  // namespace grpoly
