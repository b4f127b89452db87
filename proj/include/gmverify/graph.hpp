#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gmverify/errors.hpp"

namespace gmv {

/// Simple undirected graph on labeled vertices 0..n-1, n <= 64.
/// One 64-bit adjacency row per vertex; values are immutable once built.
class Graph {
public:
    static constexpr int max_vertices = 64;

    explicit Graph(int n);

    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    /// Pair {i,j} with i < j occupies bit j*(j-1)/2 + i of the mask
    /// (column-major upper triangle, the graph6 bit order). Defined for
    /// n <= 11 so the mask fits 64 bits.
    static Graph from_edge_mask(int n, std::uint64_t mask);

    int vertex_count() const { return n_; }
    int edge_count() const;
    bool adjacent(int i, int j) const;
    int degree(int i) const;
    std::uint64_t adjacency_row(int i) const { return rows_[static_cast<std::size_t>(i)]; }

    Graph complement() const;
    Graph with_edge(int i, int j) const;
    Graph without_edge(int i, int j) const;

    std::uint64_t edge_mask() const;

    static int pair_count(int n) { return n * (n - 1) / 2; }
    static int pair_bit(int i, int j);

    bool operator==(const Graph&) const = default;

private:
    void require_pair(int i, int j) const;
    void set_adjacent(int i, int j, bool present);

    int n_ = 0;
    std::vector<std::uint64_t> rows_;
};

/// Degrees sorted non-increasing; the sum equals twice the edge count.
std::vector<int> degree_sequence(const Graph& g);

/// Conjugate sequence: entry k (1-based) counts the s_i >= k, for k = 1..length.
std::vector<int> conjugate_sequence(const std::vector<int>& s, int length);

/// Split-partition witness. d1 lists clique degrees INTO the co-clique: this is
/// the convention under which L(G) = [[K_N + D1, -A], [-A^T, D2]] reproduces the
/// Laplacian entrywise with the clique listed first. d2 lists full co-clique
/// degrees (every co-clique edge crosses, so the two readings agree there).
struct SplitPartition {
    std::vector<int> clique;      // sorted ascending
    std::vector<int> coclique;    // sorted ascending
    int delta = 0;                // max degree over the co-clique
    std::vector<int> d1;          // aligned with clique
    std::vector<int> d2;          // aligned with coclique
    std::vector<std::uint8_t> a;  // N x M incidence block, row-major

    int clique_size() const { return static_cast<int>(clique.size()); }
    int coclique_size() const { return static_cast<int>(coclique.size()); }
    bool cross(int i, int j) const {
        return a[static_cast<std::size_t>(i) * coclique.size() + static_cast<std::size_t>(j)] != 0;
    }
};

/// Builds the witness for a given clique set; throws input_error unless the set
/// is a clique and the remaining vertices are pairwise non-adjacent.
SplitPartition make_split_partition(const Graph& g, const std::vector<int>& clique_vertices);

/// Re-examines every vertex pair and every derived field; independent of the
/// recognizer and of make_split_partition.
bool validate_split_partition(const Graph& g, const SplitPartition& p);

/// Exhaustive recognizer (n <= 16): returns the partition maximizing the clique
/// size, ties broken by lexicographically smallest clique vertex list; nullopt
/// when the graph is not split. Larger graphs are refused.
std::optional<SplitPartition> split_partition(const Graph& g);

/// Calls fn with every vertex mask that is a clique whose complement is
/// independent (n <= 16). Masks arrive in increasing numeric order.
void for_each_split_clique(const Graph& g, const std::function<void(std::uint64_t)>& fn);

/// Clique on the first N vertices, co-clique on the last M, all cross edges.
Graph complete_split(int clique_size, int coclique_size);

std::uint64_t labeled_graph_count(int n);

/// All 2^(n(n-1)/2) labeled graphs in increasing edge-mask order; n <= 7.
class LabeledEnumeration {
public:
    explicit LabeledEnumeration(int n);
    std::optional<Graph> next();
    std::uint64_t total() const { return total_; }

private:
    int n_;
    std::uint64_t next_mask_ = 0;
    std::uint64_t total_;
};

void for_each_labeled(int n, const std::function<void(const Graph&, std::uint64_t)>& fn);

}  // namespace gmv
