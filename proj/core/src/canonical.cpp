#include "grpoly/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace grpoly {

WeightMatrix weight_matrix(const Graph& g) {
  WeightMatrix m(g.n());
  for (auto [u, v] : g.edges()) {
    m.at(u, v) = 1;
    m.at(v, u) = 1;
  }
  return m;
}

namespace {

class Search {
 public:
  explicit Search(const WeightMatrix& m) : m_(m), n_(m.n), twin_(n_ * n_, false) {
    for (std::size_t u = 0; u < n_; ++u) {
      for (std::size_t v = u + 1; v < n_; ++v) {
        bool same = true;
        for (std::size_t x = 0; x < n_ && same; ++x) {
          if (x == u || x == v) continue;
          same = m_(u, x) == m_(v, x);
        }
        twin_[u * n_ + v] = twin_[v * n_ + u] = same;
      }
    }
  }

  CanonicalLabeling run() {
    std::vector<int> cell(n_, 0);
    refine(cell);
    descend(cell);
    CanonicalLabeling out;
    out.order.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) out.order[static_cast<std::size_t>(best_cell_[v])] = static_cast<Vertex>(v);
    out.code = std::move(best_code_);
    return out;
  }

 private:
  // Splits cells by the weight profile each vertex sends into every cell until stable.
  void refine(std::vector<int>& cell) const {
    std::vector<Vertex> verts(n_);
    std::vector<std::vector<int>> sig(n_);
    int count = n_ == 0 ? 0 : *std::max_element(cell.begin(), cell.end()) + 1;
    while (true) {
      for (std::size_t v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.assign(static_cast<std::size_t>(count) + 1, 0);
        s[0] = cell[v];
        for (std::size_t x = 0; x < n_; ++x) s[static_cast<std::size_t>(cell[x]) + 1] += m_(v, x);
      }
      std::iota(verts.begin(), verts.end(), 0);
      std::sort(verts.begin(), verts.end(), [&](Vertex a, Vertex b) { return sig[a] < sig[b]; });
      int next = -1;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i == 0 || sig[verts[i]] != sig[verts[i - 1]]) ++next;
        cell[verts[i]] = next;
      }
      const int fresh = next + 1;
      if (fresh == count) return;
      count = fresh;
    }
  }

  void descend(const std::vector<int>& cell) {
    // Choose the first smallest non-singleton cell.
    std::vector<int> size(n_, 0);
    for (std::size_t v = 0; v < n_; ++v) ++size[static_cast<std::size_t>(cell[v])];
    int target = -1;
    for (std::size_t c = 0; c < n_; ++c) {
      if (size[c] > 1 && (target < 0 || size[c] < size[static_cast<std::size_t>(target)])) target = static_cast<int>(c);
    }
    if (target < 0) {
      leaf(cell);
      return;
    }
    std::vector<Vertex> tried;
    for (std::size_t v = 0; v < n_; ++v) {
      if (cell[v] != target) continue;
      bool redundant = std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twin_[u * n_ + v]; });
      if (redundant) continue;
      tried.push_back(static_cast<Vertex>(v));
      std::vector<int> child = cell;
      for (std::size_t x = 0; x < n_; ++x) {
        if (child[x] > target) ++child[x];
        else if (child[x] == target && x != v) child[x] = target + 1;
      }
      refine(child);
      descend(child);
    }
  }

  void leaf(const std::vector<int>& cell) {
    std::vector<Vertex> order(n_);
    for (std::size_t v = 0; v < n_; ++v) order[static_cast<std::size_t>(cell[v])] = static_cast<Vertex>(v);
    std::vector<std::uint8_t> code;
    code.reserve(n_ * (n_ - 1) / 2);
    for (std::size_t j = 1; j < n_; ++j) {
      for (std::size_t i = 0; i < j; ++i) code.push_back(m_(order[i], order[j]));
    }
    if (!have_best_ || code < best_code_) {
      best_code_ = std::move(code);
      best_cell_ = cell;
      have_best_ = true;
    }
  }

  const WeightMatrix& m_;
  std::size_t n_;
  std::vector<bool> twin_;
  bool have_best_ = false;
  std::vector<std::uint8_t> best_code_;
  std::vector<int> best_cell_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const WeightMatrix& m) {
  if (m.n == 0) return {};
  return Search(m).run();
}

std::vector<std::uint8_t> canonical_form(const Graph& g) {
  if (g.n() > kCanonicalFormMaxVertices) {
    throw SizeCapError("canonical_form supports n <= " + std::to_string(kCanonicalFormMaxVertices));
  }
  auto lab = canonical_labeling(weight_matrix(g));
  std::vector<std::uint8_t> out;
  out.reserve(1 + (lab.code.size() + 7) / 8);
  out.push_back(static_cast<std::uint8_t>(g.n()));
  std::uint8_t byte = 0;
  std::size_t filled = 0;
  for (std::uint8_t bit : lab.code) {
    byte = static_cast<std::uint8_t>((byte << 1) | bit);
    if (++filled == 8) {
      out.push_back(byte);
      byte = 0;
      filled = 0;
    }
  }
  if (filled > 0) out.push_back(static_cast<std::uint8_t>(byte << (8 - filled)));
  return out;
}

Graph canonical_graph(const Graph& g) {
  auto lab = canonical_labeling(weight_matrix(g));
  std::vector<Vertex> position(g.n());
  for (std::size_t i = 0; i < lab.order.size(); ++i) position[lab.order[i]] = static_cast<Vertex>(i);
  return relabel(g, position);
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  return canonical_labeling(weight_matrix(a)).code == canonical_labeling(weight_matrix(b)).code;
}

}  // namespace grpoly
