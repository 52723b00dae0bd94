#include "grpoly/graph6.hpp"

namespace grpoly {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void append_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.n();
  std::string out;
  append_size(out, n);
  const std::size_t bits = n * (n - 1) / 2;
  std::vector<unsigned char> packed((bits + 5) / 6, 0);
  for (auto [u, v] : g.edges()) {
    // Column-major upper triangle: bit index of (u, v) with u < v.
    const std::size_t idx = static_cast<std::size_t>(v) * (v - 1) / 2 + u;
    packed[idx / 6] |= static_cast<unsigned char>(1U << (5 - idx % 6));
  }
  for (unsigned char b : packed) out.push_back(static_cast<char>(b + kBias));
  return out;
}

Graph graph_from_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kHeader.size()) == kHeader) {
    base = kHeader.size();
    text.remove_prefix(kHeader.size());
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: non-printable or out-of-range byte", base + i);
  }
  if (text.empty()) throw ParseError("graph6: empty input", base);

  std::size_t pos = 0;
  std::size_t n = 0;
  auto read_digits = [&](int count) {
    if (pos + static_cast<std::size_t>(count) > text.size()) throw ParseError("graph6: truncated size header", base + pos);
    std::size_t value = 0;
    for (int i = 0; i < count; ++i) {
      auto c = static_cast<unsigned char>(text[pos]);
      value = (value << 6) | static_cast<std::size_t>(c - kBias);
      ++pos;
    }
    return value;
  };
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = static_cast<std::size_t>(text[0] - kBias);
    pos = 1;
  } else if (text.size() > 1 && static_cast<unsigned char>(text[1]) != 126) {
    pos = 1;
    n = read_digits(3);
    if (n <= 62) throw ParseError("graph6: non-minimal size header", base);
  } else {
    pos = 2;
    n = read_digits(6);
    if (n <= 258047) throw ParseError("graph6: non-minimal size header", base);
  }
  if (n == 0) throw ParseError("graph6: graphs must have at least one vertex", base);

  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw ParseError("graph6: expected " + std::to_string(bytes) + " adjacency bytes, found " +
                         std::to_string(text.size() - pos),
                     base + std::min(text.size(), pos + bytes));
  }
  std::vector<Edge> edges;
  std::size_t idx = 0;
  Vertex u = 0;
  Vertex v = 1;
  for (std::size_t b = 0; b < bytes; ++b) {
    const unsigned value = static_cast<unsigned char>(text[pos + b]) - kBias;
    for (int bit = 5; bit >= 0; --bit, ++idx) {
      const bool set = (value >> bit) & 1U;
      if (idx >= bits) {
        if (set) throw ParseError("graph6: nonzero padding bits", base + pos + b);
        continue;
      }
      if (set) edges.emplace_back(u, v);
      if (++u == v) {
        u = 0;
        ++v;
      }
    }
  }
  return Graph(n, std::move(edges));
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(graph_from_graph6(line));
  }
  return out;
}

void write_graph6_stream(std::ostream& out, const std::vector<Graph>& graphs) {
  for (const auto& g : graphs) out << to_graph6(g) << '\n';
}

}  // namespace grpoly
