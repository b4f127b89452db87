#include "gmverify/graph.hpp"

#include <algorithm>
#include <bit>

namespace gmv {

Graph::Graph(int n) {
    if (n < 1 || n > max_vertices)
        throw input_error("vertex count must be in [1, 64], got " + std::to_string(n));
    n_ = n;
    rows_.assign(static_cast<std::size_t>(n), 0);
}

void Graph::require_pair(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
        throw input_error("vertex pair (" + std::to_string(i) + "," + std::to_string(j) +
                          ") out of range for n=" + std::to_string(n_));
    if (i == j) throw input_error("self-loop at vertex " + std::to_string(i));
}

void Graph::set_adjacent(int i, int j, bool present) {
    const std::uint64_t bi = 1ull << i, bj = 1ull << j;
    if (present) {
        rows_[static_cast<std::size_t>(i)] |= bj;
        rows_[static_cast<std::size_t>(j)] |= bi;
    } else {
        rows_[static_cast<std::size_t>(i)] &= ~bj;
        rows_[static_cast<std::size_t>(j)] &= ~bi;
    }
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [i, j] : edges) {
        g.require_pair(i, j);
        g.set_adjacent(i, j, true);
    }
    return g;
}

int Graph::pair_bit(int i, int j) {
    if (i > j) std::swap(i, j);
    return j * (j - 1) / 2 + i;
}

Graph Graph::from_edge_mask(int n, std::uint64_t mask) {
    Graph g(n);
    if (n > 11)
        throw input_error("edge masks are limited to n <= 11 (55 pair bits)");
    const int bits = pair_count(n);
    if (bits < 64 && (mask >> bits) != 0)
        throw input_error("edge mask has bits beyond the " + std::to_string(bits) + " pair positions");
    int b = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++b)
            if ((mask >> b) & 1u) g.set_adjacent(i, j, true);
    return g;
}

int Graph::edge_count() const {
    int twice = 0;
    for (int i = 0; i < n_; ++i) twice += std::popcount(rows_[static_cast<std::size_t>(i)]);
    return twice / 2;
}

bool Graph::adjacent(int i, int j) const {
    require_pair(i, j);
    return (rows_[static_cast<std::size_t>(i)] >> j) & 1u;
}

int Graph::degree(int i) const {
    if (i < 0 || i >= n_) throw input_error("vertex " + std::to_string(i) + " out of range");
    return std::popcount(rows_[static_cast<std::size_t>(i)]);
}

Graph Graph::complement() const {
    Graph g(n_);
    const std::uint64_t all = (n_ == 64) ? ~0ull : ((1ull << n_) - 1);
    for (int i = 0; i < n_; ++i)
        g.rows_[static_cast<std::size_t>(i)] =
            (~rows_[static_cast<std::size_t>(i)] & all) & ~(1ull << i);
    return g;
}

Graph Graph::with_edge(int i, int j) const {
    require_pair(i, j);
    Graph g = *this;
    g.set_adjacent(i, j, true);
    return g;
}

Graph Graph::without_edge(int i, int j) const {
    require_pair(i, j);
    Graph g = *this;
    g.set_adjacent(i, j, false);
    return g;
}

std::uint64_t Graph::edge_mask() const {
    if (n_ > 11) throw input_error("edge masks are limited to n <= 11");
    std::uint64_t mask = 0;
    int b = 0;
    for (int j = 1; j < n_; ++j)
        for (int i = 0; i < j; ++i, ++b)
            if ((rows_[static_cast<std::size_t>(i)] >> j) & 1u) mask |= 1ull << b;
    return mask;
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d(static_cast<std::size_t>(g.vertex_count()));
    for (int i = 0; i < g.vertex_count(); ++i) d[static_cast<std::size_t>(i)] = g.degree(i);
    std::sort(d.begin(), d.end(), std::greater<int>());
    return d;
}

std::vector<int> conjugate_sequence(const std::vector<int>& s, int length) {
    if (length < 0) throw input_error("conjugate length must be non-negative");
    for (int v : s)
        if (v < 0) throw input_error("conjugate sequence requires non-negative entries");
    std::vector<int> out(static_cast<std::size_t>(length), 0);
    for (int k = 1; k <= length; ++k) {
        int count = 0;
        for (int v : s)
            if (v >= k) ++count;
        out[static_cast<std::size_t>(k - 1)] = count;
    }
    return out;
}

SplitPartition make_split_partition(const Graph& g, const std::vector<int>& clique_vertices) {
    const int n = g.vertex_count();
    std::vector<char> in_clique(static_cast<std::size_t>(n), 0);
    for (int v : clique_vertices) {
        if (v < 0 || v >= n) throw input_error("clique vertex " + std::to_string(v) + " out of range");
        if (in_clique[static_cast<std::size_t>(v)]) throw input_error("duplicate clique vertex");
        in_clique[static_cast<std::size_t>(v)] = 1;
    }

    SplitPartition p;
    for (int v = 0; v < n; ++v)
        (in_clique[static_cast<std::size_t>(v)] ? p.clique : p.coclique).push_back(v);

    for (std::size_t x = 0; x < p.clique.size(); ++x)
        for (std::size_t y = x + 1; y < p.clique.size(); ++y)
            if (!g.adjacent(p.clique[x], p.clique[y]))
                throw input_error("clique set is not a clique: missing edge (" +
                                  std::to_string(p.clique[x]) + "," + std::to_string(p.clique[y]) + ")");
    for (std::size_t x = 0; x < p.coclique.size(); ++x)
        for (std::size_t y = x + 1; y < p.coclique.size(); ++y)
            if (g.adjacent(p.coclique[x], p.coclique[y]))
                throw input_error("co-clique set is not independent: edge (" +
                                  std::to_string(p.coclique[x]) + "," + std::to_string(p.coclique[y]) + ")");

    const int nc = p.clique_size(), mc = p.coclique_size();
    p.d1.resize(static_cast<std::size_t>(nc));
    p.d2.resize(static_cast<std::size_t>(mc));
    p.a.assign(static_cast<std::size_t>(nc) * static_cast<std::size_t>(mc), 0);
    p.delta = 0;
    for (int i = 0; i < nc; ++i) {
        int crossdeg = 0;
        for (int j = 0; j < mc; ++j) {
            const bool e = g.adjacent(p.clique[static_cast<std::size_t>(i)],
                                      p.coclique[static_cast<std::size_t>(j)]);
            p.a[static_cast<std::size_t>(i) * mc + j] = e ? 1 : 0;
            crossdeg += e ? 1 : 0;
        }
        p.d1[static_cast<std::size_t>(i)] = crossdeg;
    }
    for (int j = 0; j < mc; ++j) {
        const int deg = g.degree(p.coclique[static_cast<std::size_t>(j)]);
        p.d2[static_cast<std::size_t>(j)] = deg;
        p.delta = std::max(p.delta, deg);
    }
    return p;
}

bool validate_split_partition(const Graph& g, const SplitPartition& p) {
    const int n = g.vertex_count();
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (int v : p.clique) {
        if (v < 0 || v >= n) return false;
        seen[static_cast<std::size_t>(v)] += 1;
    }
    for (int v : p.coclique) {
        if (v < 0 || v >= n) return false;
        seen[static_cast<std::size_t>(v)] += 1;
    }
    for (int c : seen)
        if (c != 1) return false;
    if (!std::is_sorted(p.clique.begin(), p.clique.end())) return false;
    if (!std::is_sorted(p.coclique.begin(), p.coclique.end())) return false;

    const int nc = p.clique_size(), mc = p.coclique_size();
    if (static_cast<int>(p.d1.size()) != nc || static_cast<int>(p.d2.size()) != mc) return false;
    if (p.a.size() != static_cast<std::size_t>(nc) * static_cast<std::size_t>(mc)) return false;

    // every pair, re-examined from scratch
    for (int x = 0; x < nc; ++x)
        for (int y = x + 1; y < nc; ++y)
            if (!g.adjacent(p.clique[static_cast<std::size_t>(x)], p.clique[static_cast<std::size_t>(y)]))
                return false;
    for (int x = 0; x < mc; ++x)
        for (int y = x + 1; y < mc; ++y)
            if (g.adjacent(p.coclique[static_cast<std::size_t>(x)], p.coclique[static_cast<std::size_t>(y)]))
                return false;

    int delta = 0;
    for (int j = 0; j < mc; ++j) {
        const int deg = g.degree(p.coclique[static_cast<std::size_t>(j)]);
        if (p.d2[static_cast<std::size_t>(j)] != deg) return false;
        delta = std::max(delta, deg);
    }
    if (p.delta != delta) return false;
    if (p.delta > nc) return false;  // co-clique neighbors all lie in the clique

    for (int i = 0; i < nc; ++i) {
        int crossdeg = 0;
        for (int j = 0; j < mc; ++j) {
            const bool e = g.adjacent(p.clique[static_cast<std::size_t>(i)],
                                      p.coclique[static_cast<std::size_t>(j)]);
            if ((p.a[static_cast<std::size_t>(i) * mc + j] != 0) != e) return false;
            crossdeg += e ? 1 : 0;
        }
        if (p.d1[static_cast<std::size_t>(i)] != crossdeg) return false;
    }
    return true;
}

namespace {

// For equal-size vertex sets, the sorted list starting with the smallest
// differing vertex is lexicographically smaller.
bool lex_smaller_set(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t diff = a ^ b;
    if (diff == 0) return false;
    return (a & (diff & ~(diff - 1))) != 0;
}

}  // namespace

void for_each_split_clique(const Graph& g, const std::function<void(std::uint64_t)>& fn) {
    const int n = g.vertex_count();
    if (n > 16)
        throw input_error("split recognition is exhaustive and limited to n <= 16; "
                          "build the partition explicitly for larger graphs");
    const std::uint64_t all = (1ull << n) - 1;
    for (std::uint64_t s = 0; s <= all; ++s) {
        bool ok = true;
        for (int i = 0; ok && i < n; ++i) {
            const std::uint64_t row = g.adjacency_row(i);
            if ((s >> i) & 1u)
                ok = (row & s) == (s & ~(1ull << i));
            else
                ok = (row & (all & ~s)) == 0;
        }
        if (ok) fn(s);
    }
}

std::optional<SplitPartition> split_partition(const Graph& g) {
    const int n = g.vertex_count();
    bool found = false;
    std::uint64_t best = 0;
    int best_size = -1;
    for_each_split_clique(g, [&](std::uint64_t s) {
        const int size = std::popcount(s);
        if (!found || size > best_size || (size == best_size && lex_smaller_set(s, best))) {
            found = true;
            best = s;
            best_size = size;
        }
    });
    if (!found) return std::nullopt;
    std::vector<int> clique;
    for (int v = 0; v < n; ++v)
        if ((best >> v) & 1u) clique.push_back(v);
    return make_split_partition(g, clique);
}

Graph complete_split(int clique_size, int coclique_size) {
    if (clique_size < 1 || coclique_size < 0 || clique_size + coclique_size > Graph::max_vertices)
        throw input_error("complete split sizes must satisfy N >= 1, M >= 0, N+M <= 64");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < clique_size; ++i) {
        for (int j = i + 1; j < clique_size; ++j) edges.emplace_back(i, j);
        for (int j = clique_size; j < clique_size + coclique_size; ++j) edges.emplace_back(i, j);
    }
    return Graph::from_edge_list(clique_size + coclique_size, edges);
}

std::uint64_t labeled_graph_count(int n) {
    if (n < 1 || n > 11) throw input_error("labeled count limited to n <= 11");
    return 1ull << Graph::pair_count(n);
}

LabeledEnumeration::LabeledEnumeration(int n) : n_(n), total_(0) {
    if (n < 1) throw input_error("enumeration needs n >= 1");
    if (n > 7)
        throw input_error("labeled enumeration is capped at n = 7 (2^21 graphs); "
                          "use a graph6 corpus for larger orders");
    total_ = 1ull << Graph::pair_count(n);
}

std::optional<Graph> LabeledEnumeration::next() {
    if (next_mask_ >= total_) return std::nullopt;
    return Graph::from_edge_mask(n_, next_mask_++);
}

void for_each_labeled(int n, const std::function<void(const Graph&, std::uint64_t)>& fn) {
    LabeledEnumeration en(n);
    const std::uint64_t total = en.total();
    for (std::uint64_t mask = 0; mask < total; ++mask) fn(Graph::from_edge_mask(n, mask), mask);
}

}  // namespace gmv
