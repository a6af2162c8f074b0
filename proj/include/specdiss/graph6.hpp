#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "specdiss/graph.hpp"

namespace specdiss {

// Standard graph6 layout: header byte 63+n (n <= 62 only), then the upper
// triangle in column-major order, 6 bits per byte, zero-padded, each byte
// offset by 63.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

std::vector<Graph> read_graph6_lines(std::istream& in);
void write_graph6_lines(std::ostream& out, const std::vector<Graph>& graphs);

}  // namespace specdiss
