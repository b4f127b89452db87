#include "gmverify/graph6.hpp"

#include <vector>

namespace gmv {

namespace {

constexpr int kLo = 63;   // '?'
constexpr int kHi = 126;  // '~'

}  // namespace

Graph parse_graph6(std::string_view record) {
    std::string_view rest = record;
    std::size_t base = 0;
    constexpr std::string_view kHeader = ">>graph6<<";
    if (rest.substr(0, kHeader.size()) == kHeader) {
        rest.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    while (!rest.empty() && (rest.back() == '\n' || rest.back() == '\r')) rest.remove_suffix(1);
    if (rest.empty()) throw parse_error("empty graph6 record", base);

    auto group = [&](std::size_t k) -> int {
        const unsigned char c = static_cast<unsigned char>(rest[k]);
        if (c < kLo || c > kHi) throw parse_error("byte outside graph6 range [63,126]", base + k);
        return c - kLo;
    };

    std::size_t pos = 0;
    long long n = 0;
    if (static_cast<unsigned char>(rest[0]) == kHi) {
        if (rest.size() >= 2 && static_cast<unsigned char>(rest[1]) == kHi)
            throw parse_error("graph6 order beyond supported range", base + 1);
        if (rest.size() < 4) throw parse_error("truncated graph6 length header", base + rest.size());
        n = (static_cast<long long>(group(1)) << 12) | (group(2) << 6) | group(3);
        pos = 4;
    } else {
        n = group(0);
        pos = 1;
    }
    if (n < 1 || n > Graph::max_vertices)
        throw parse_error("graph6 order " + std::to_string(n) + " outside supported [1,64]", base);

    const int bits = Graph::pair_count(static_cast<int>(n));
    const std::size_t need = (static_cast<std::size_t>(bits) + 5) / 6;
    if (rest.size() - pos < need)
        throw parse_error("truncated graph6 adjacency data", base + rest.size());
    if (rest.size() - pos > need)
        throw parse_error("unexpected trailing bytes", base + pos + need);

    std::vector<std::pair<int, int>> edges;
    int consumed = 0;
    int current = 0;
    int left = 0;  // bits remaining in current group
    std::size_t at = pos;
    auto next_bit = [&]() -> int {
        if (left == 0) {
            current = group(at++);
            left = 6;
        }
        --left;
        ++consumed;
        return (current >> left) & 1;
    };

    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (next_bit()) edges.emplace_back(i, j);
    while (consumed < static_cast<int>(need) * 6) {
        if (next_bit()) throw parse_error("nonzero padding bits", base + at - 1);
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kLo + n));
    } else {
        out.push_back(static_cast<char>(kHi));
        out.push_back(static_cast<char>(kLo + ((n >> 12) & 0x3f)));
        out.push_back(static_cast<char>(kLo + ((n >> 6) & 0x3f)));
        out.push_back(static_cast<char>(kLo + (n & 0x3f)));
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(kLo + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(kLo + (acc << (6 - filled))));
    return out;
}

}  // namespace gmv
