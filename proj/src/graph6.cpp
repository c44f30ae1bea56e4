#include "turan/graph6.hpp"

#include <stdexcept>

namespace turan {

namespace {

constexpr int kOffset = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int take_byte(std::string_view& s) {
    if (s.empty()) throw std::invalid_argument("graph6: truncated input");
    unsigned char c = static_cast<unsigned char>(s.front());
    s.remove_prefix(1);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte outside 63..126");
    return c - kOffset;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kOffset));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kOffset));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kOffset));
        out.push_back(static_cast<char>((n & 0x3f) + kOffset));
    }
    int acc = 0, filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kOffset));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
    return out;
}

Graph decode_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
    if (text.empty()) throw std::invalid_argument("graph6: empty input");

    long n;
    if (static_cast<unsigned char>(text.front()) != 126) {
        n = take_byte(text);
    } else {
        text.remove_prefix(1);
        if (!text.empty() && static_cast<unsigned char>(text.front()) == 126)
            throw std::invalid_argument("graph6: order exceeds supported range");
        n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | take_byte(text);
    }
    if (n > Graph::max_vertices) throw std::invalid_argument("graph6: order exceeds supported range");

    Graph g(static_cast<int>(n));
    int acc = 0, left = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (left == 0) {
                acc = take_byte(text);
                left = 6;
            }
            if ((acc >> (left - 1)) & 1) {
                g.set_adjacent(u, v);
                ++g.edges_;
            }
            --left;
        }
    }
    if (!text.empty()) throw std::invalid_argument("graph6: trailing bytes");
    return g;
}

}  // namespace turan
