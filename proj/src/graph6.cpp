#include "twofold/graph6.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace twofold {

namespace {

constexpr char kBias = 63;

int byte_value(unsigned char c, std::size_t pos) {
    if (c < 63 || c > 126)
        throw std::invalid_argument("graph6: byte " + std::to_string(pos) +
                                    " outside the printable range");
    return c - kBias;
}

} // namespace

Graph parse_graph6(const std::string& line, int max_n) {
    std::string s = line;
    if (s.rfind(">>graph6<<", 0) == 0) s.erase(0, 10);
    if (s.empty()) throw std::invalid_argument("graph6: empty string");

    std::size_t pos = 0;
    std::int64_t n = 0;
    if (byte_value(static_cast<unsigned char>(s[pos]), pos) < 63) {
        n = byte_value(static_cast<unsigned char>(s[pos]), pos);
        pos = 1;
    } else if (s.size() >= 4 &&
               byte_value(static_cast<unsigned char>(s[1]), 1) < 63) {
        n = 0;
        for (pos = 1; pos < 4; ++pos)
            n = (n << 6) | byte_value(static_cast<unsigned char>(s[pos]), pos);
    } else if (s.size() >= 8) {
        n = 0;
        for (pos = 2; pos < 8; ++pos)
            n = (n << 6) | byte_value(static_cast<unsigned char>(s[pos]), pos);
    } else {
        throw std::invalid_argument("graph6: truncated size header");
    }
    if (n > max_n)
        throw std::invalid_argument("graph6: " + std::to_string(n) +
                                    " vertices exceeds the bound of " + std::to_string(max_n));

    const std::int64_t nbits = n * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (s.size() - pos != nbytes)
        throw std::invalid_argument("graph6: body has " + std::to_string(s.size() - pos) +
                                    " bytes, expected " + std::to_string(nbytes));

    std::vector<std::pair<int, int>> edges;
    std::int64_t bit = 0;
    int u = 0, v = 1;
    for (std::size_t i = 0; i < nbytes; ++i) {
        const int val = byte_value(static_cast<unsigned char>(s[pos + i]), pos + i);
        for (int k = 5; k >= 0; --k, ++bit) {
            const bool set = (val >> k) & 1;
            if (bit >= nbits) {
                if (set) throw std::invalid_argument("graph6: non-zero padding bits");
                continue;
            }
            if (set) edges.push_back({u, v});
            if (++u == v) {
                u = 0;
                ++v;
            }
        }
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n > 258047) {
        throw std::invalid_argument("graph6: vertex count needs the 8-byte header form");
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
    int acc = 0, nfill = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++nfill == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                nfill = 0;
            }
        }
    if (nfill > 0) out.push_back(static_cast<char>((acc << (6 - nfill)) + kBias));
    return out;
}

} // namespace twofold
