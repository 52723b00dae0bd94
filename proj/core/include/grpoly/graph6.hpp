#pragma once

/// \file graph6.hpp
/// \brief graph6 text encoding (one graph per line).

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "grpoly/graph.hpp"

namespace grpoly {

/// Encodes g as a graph6 string without trailing newline.
std::string to_graph6(const Graph& g);

/// Decodes one graph6 line. An optional ">>graph6<<" header and trailing
/// newline are accepted. Throws ParseError carrying the byte offset.
Graph graph_from_graph6(std::string_view text);

/// Reads every non-empty line of a stream.
std::vector<Graph> read_graph6_stream(std::istream& in);
void write_graph6_stream(std::ostream& out, const std::vector<Graph>& graphs);

}  // namespace grpoly
