#include "specgraph/graph6.hpp"

#include <stdexcept>

namespace specgraph {

namespace {
constexpr int kOffset = 63;
constexpr int kMaxDecodeVertices = 1024;  // dense representation; keep inputs sane
}  // namespace

std::string graph6_encode(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kOffset));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + kOffset));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kOffset));
        out.push_back(static_cast<char>((n & 63) + kOffset));
    } else {
        throw std::invalid_argument("graph6_encode: vertex count too large");
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kOffset));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kOffset));
    return out;
}

Graph graph6_decode(const std::string& s) {
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size()) throw std::invalid_argument("graph6_decode: truncated input");
        unsigned char c = static_cast<unsigned char>(s[pos++]);
        if (c < kOffset || c > 126) throw std::invalid_argument("graph6_decode: non-printable byte");
        return c - kOffset;
    };

    if (s.empty()) throw std::invalid_argument("graph6_decode: empty input");
    long n;
    if (static_cast<unsigned char>(s[0]) == 126) {
        ++pos;
        if (pos + 3 > s.size() || static_cast<unsigned char>(s[pos]) == 126)
            throw std::invalid_argument("graph6_decode: malformed length header");
        long a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = next();
    }
    if (n < 1) throw std::invalid_argument("graph6_decode: malformed length header");
    if (n > kMaxDecodeVertices) throw std::invalid_argument("graph6_decode: vertex count too large");

    EdgeList edges;
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                acc = next();
                nbits = 6;
            }
            if (acc & (1 << (nbits - 1))) edges.emplace_back(i, j);
            --nbits;
        }
    }
    if (nbits > 0 && (acc & ((1 << nbits) - 1)) != 0)
        throw std::invalid_argument("graph6_decode: nonzero trailing bits");
    if (pos != s.size()) throw std::invalid_argument("graph6_decode: trailing bytes");
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

}  // namespace specgraph
