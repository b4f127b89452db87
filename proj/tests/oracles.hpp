// Test-only oracles, kept independent of the implementation paths they check.
#pragma once

#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "gmverify/graph.hpp"
#include "gmverify/linalg.hpp"

namespace oracle {

// graph6 writer built from an explicit 0/1 bit string, nothing shared with the
// library serializer.
inline std::string g6_reference(const gmv::Graph& g) {
    const int n = g.vertex_count();
    std::string bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits += g.adjacent(i, j) ? '1' : '0';
    while (bits.size() % 6 != 0) bits += '0';
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(63 + n);
    } else {
        out += static_cast<char>(126);
        out += static_cast<char>(63 + ((n >> 12) & 63));
        out += static_cast<char>(63 + ((n >> 6) & 63));
        out += static_cast<char>(63 + (n & 63));
    }
    for (std::size_t t = 0; t < bits.size(); t += 6) {
        int v = 0;
        for (int b = 0; b < 6; ++b) v = v * 2 + (bits[t + b] - '0');
        out += static_cast<char>(63 + v);
    }
    return out;
}

// Pairwise re-examination of a clique/co-clique bipartition given as sets.
inline bool split_sets_valid(const gmv::Graph& g, const std::vector<int>& clique,
                             const std::vector<int>& coclique) {
    std::vector<int> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : clique) seen[static_cast<std::size_t>(v)]++;
    for (int v : coclique) seen[static_cast<std::size_t>(v)]++;
    for (int c : seen)
        if (c != 1) return false;
    for (std::size_t x = 0; x < clique.size(); ++x)
        for (std::size_t y = x + 1; y < clique.size(); ++y)
            if (!g.adjacent(clique[x], clique[y])) return false;
    for (std::size_t x = 0; x < coclique.size(); ++x)
        for (std::size_t y = x + 1; y < coclique.size(); ++y)
            if (g.adjacent(coclique[x], coclique[y])) return false;
    return true;
}

// Does any clique/co-clique bipartition exist? Subset loop over adjacent() calls.
inline bool is_split_bruteforce(const gmv::Graph& g) {
    const int n = g.vertex_count();
    for (unsigned s = 0; s < (1u << n); ++s) {
        std::vector<int> clique, coclique;
        for (int v = 0; v < n; ++v) ((s >> v) & 1u ? clique : coclique).push_back(v);
        if (split_sets_valid(g, clique, coclique)) return true;
    }
    return false;
}

inline gmv::SymMatrix random_symmetric(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    gmv::SymMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.set(i, j, dist(rng));
    return m;
}

// Newton power sums of the spectrum must match matrix moments.
inline double moment(const gmv::SymMatrix& h, int power) {
    gmv::Matrix acc = gmv::Matrix::identity(h.dim());
    const gmv::Matrix d = h.dense();
    for (int p = 0; p < power; ++p) acc = acc * d;
    return acc.trace();
}

// Orthogonal projector onto the column span of b.
inline gmv::Matrix projector(const gmv::Matrix& b) {
    const gmv::Matrix bt = b.transposed();
    const auto gram_inv = gmv::try_inverse(bt * b);
    REQUIRE(gram_inv.has_value());
    return b * *gram_inv * bt;
}

}  // namespace oracle
