#include "specdiss/graph6.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

namespace specdiss {

std::string graph6_encode(const Graph& g) {
    if (g.n > 62)
        throw std::invalid_argument("graph6 single-byte header supports n <= 62");
    std::string out;
    out.push_back(static_cast<char>(63 + g.n));
    int acc = 0, nbits = 0;
    for (int col = 1; col < g.n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph graph6_decode(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty graph6 string");
    for (char c : text)
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6 character out of range 63..126");
    int n = text[0] - 63;
    if (n == 63)
        throw std::invalid_argument("multi-byte graph6 headers (n > 62) unsupported");
    Graph g = empty_graph(n);
    int nbits = n * (n - 1) / 2;
    int nbytes = (nbits + 5) / 6;
    if (static_cast<int>(text.size()) != 1 + nbytes)
        throw std::invalid_argument("graph6 length does not match header");
    int bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            int byte = text[1 + bit / 6] - 63;
            if ((byte >> (5 - bit % 6)) & 1) {
                g.adj[row] |= vbit(col);
                g.adj[col] |= vbit(row);
            }
        }
    }
    for (; bit < 6 * nbytes; ++bit) {
        int byte = text[1 + bit / 6] - 63;
        if ((byte >> (5 - bit % 6)) & 1)
            throw std::invalid_argument("nonzero graph6 padding bits");
    }
    return g;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
            line.pop_back();
        if (line.empty()) continue;
        out.push_back(graph6_decode(line));
    }
    return out;
}

void write_graph6_lines(std::ostream& out, const std::vector<Graph>& graphs) {
    for (const Graph& g : graphs) out << graph6_encode(g) << '\n';
}

}  // namespace specdiss
