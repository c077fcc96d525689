#include "ramsey/graph6.hpp"

namespace ramsey {

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    if (n > kMaxOrder) throw Graph6Error(Graph6Error::Kind::TooLarge, "order above 64 unsupported");
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else {
        out.push_back(126);
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    }
    int group = 0, filled = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            group = (group << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(char(group + 63));
                group = filled = 0;
            }
        }
    if (filled > 0) out.push_back(char((group << (6 - filled)) + 63));
    return out;
}

Graph graph6_decode(std::string_view line) {
    if (line.empty()) throw Graph6Error(Graph6Error::Kind::BadHeader, "empty line");
    std::size_t pos = 0;
    int n;
    if (line[0] == 126) {
        if (line.size() >= 2 && line[1] == 126)
            throw Graph6Error(Graph6Error::Kind::TooLarge, "eight-byte size header: order above 64 unsupported");
        if (line.size() < 4) throw Graph6Error(Graph6Error::Kind::Truncated, "truncated size header");
        int a = line[1] - 63, b = line[2] - 63, c = line[3] - 63;
        if (a < 0 || a > 63 || b < 0 || b > 63 || c < 0 || c > 63)
            throw Graph6Error(Graph6Error::Kind::BadHeader, "size header byte out of range");
        n = (a << 12) | (b << 6) | c;
        pos = 4;
    } else {
        n = line[0] - 63;
        if (n < 0 || n > 62) throw Graph6Error(Graph6Error::Kind::BadHeader, "size byte out of range");
        pos = 1;
    }
    if (n > kMaxOrder) throw Graph6Error(Graph6Error::Kind::TooLarge, "order above 64 unsupported");

    const long nbits = long(n) * (n - 1) / 2;
    const std::size_t nbytes = std::size_t((nbits + 5) / 6);
    if (line.size() < pos + nbytes)
        throw Graph6Error(Graph6Error::Kind::Truncated, "truncated adjacency bits");
    if (line.size() > pos + nbytes)
        throw Graph6Error(Graph6Error::Kind::BadHeader, "trailing bytes after adjacency bits");

    Graph g(n);
    long bit = 0;
    int row = 0, col = 1;
    for (std::size_t i = 0; i < nbytes; ++i) {
        int val = line[pos + i] - 63;
        if (val < 0 || val > 63)
            throw Graph6Error(Graph6Error::Kind::BadHeader, "adjacency byte out of range");
        for (int k = 5; k >= 0; --k, ++bit) {
            int b = (val >> k) & 1;
            if (bit >= nbits) {
                if (b) throw Graph6Error(Graph6Error::Kind::Padding, "nonzero padding bit");
                continue;
            }
            if (b) g.add_edge(row, col);
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
    }
    return g;
}

}  // namespace ramsey
