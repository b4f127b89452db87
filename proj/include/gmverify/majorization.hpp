#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gmverify/graph.hpp"
#include "gmverify/linalg.hpp"

namespace gmv {

inline constexpr double kCheckTol = 1e-8;

/// Degree diagonal minus adjacency; row sums are zero.
SymMatrix laplacian(const Graph& g);

/// eigh of the Laplacian with the smallest eigenvalue clamped to exactly 0
/// when it lies within kEigTol (relative to the Frobenius norm).
EigDecomp laplacian_spectrum(const Graph& g);

struct MajorizationReport {
    std::vector<double> prefix_slack;  // sum_{i<=k} y_[i] - sum_{i<=k} x_[i]
    double sum_gap = 0.0;              // |sum x - sum y|
    bool holds = false;
    std::optional<int> first_violation;  // 1-based k of the first failing prefix

    bool operator==(const MajorizationReport&) const = default;
};

/// x majorized by y: both sorted non-increasing, every prefix slack >= -prefix_tol
/// and the total sums equal within sum_tol.
MajorizationReport majorizes(std::span<const double> x, std::span<const double> y,
                             double prefix_tol, double sum_tol);
MajorizationReport majorizes(std::span<const double> x, std::span<const double> y,
                             double tol = kCheckTol);

struct ConjectureReport {
    std::string graph_id;  // graph6 record
    std::vector<double> spectrum;
    std::vector<int> dprime;
    MajorizationReport report;     // spectrum majorized by dprime
    std::vector<double> margins;   // sum_{i<=k}(d'_i - lambda_i)
};

/// Laplacian spectrum majorized by the conjugate degree sequence.
ConjectureReport check_grone_merris(const Graph& g, double tol = kCheckTol);

/// (degrees majorized by spectrum, spectrum majorized by conjugate degrees).
std::pair<MajorizationReport, MajorizationReport> check_double_majorization(
    const Graph& g, double tol = kCheckTol);

/// (d1+1, d2, ..., d_{n-1}, d_n - 1) majorized by the spectrum; the graph must
/// have at least one edge.
MajorizationReport check_grone_bound(const Graph& g, double tol = kCheckTol);

/// lambda(H1+H2) majorized by lambda(H1)+lambda(H2).
MajorizationReport check_fan(const SymMatrix& h1, const SymMatrix& h2, double tol = kCheckTol);

/// (a) L(G)+L(complement)+J = nI exactly in integers, (b) the spectrum
/// reflection within tol, (c) the conjugate-degree reflection exactly.
bool check_complement_duality(const Graph& g, double tol = kCheckTol);

/// sum_{i<=k} d'_i - sum_{i<=k} lambda_i, for k = 1..n (exact integer d' side).
std::vector<double> grone_merris_margins(const Graph& g);

/// margin_k(G) equals margin_{n-1-k}(complement) within tol; 1 <= k < n.
bool check_prefix_duality(const Graph& g, int k, double tol = kCheckTol);

/// Split-graph eigenvalue bounds, plus the exact partial-sum identities
/// sum_{i<=N} d'_i = N^2 + Tr(D1) and sum_j min(d_j, N) = N^2 + Tr(D2)
/// whenever lambda_N >= N - tol.
bool check_split_bounds(const Graph& g, const SplitPartition& p, double tol = kCheckTol);

/// For every edge ij with both endpoint degrees <= k: the k-prefix eigenvalue
/// sum drops by at most 2 under deletion, and the k-prefix of d' drops by
/// exactly 2. nullopt when no edge qualifies.
std::optional<bool> check_degree_threshold_lemma(const Graph& g, int k, double tol = kCheckTol);

/// Adds an edge between every non-adjacent pair whose degrees in g are both >= k.
Graph split_closure(const Graph& g, int k);

struct SplitClosureReport {
    Graph closure;
    bool is_split = false;                // recognizer accepts the closure
    bool stated_partition_valid = false;  // clique {deg >= k}, co-clique the rest
    bool clique_ok = false;               // stated clique complete, size d'_k
    bool coclique_degree_ok = false;      // stated co-clique degrees <= k-1
    bool dprime_prefix_preserved = false; // d'_i unchanged for i <= k
    bool eigen_monotone = false;          // lambda_i(closure) >= lambda_i(g) - tol
};

SplitClosureReport check_split_closure(const Graph& g, int k, double tol = kCheckTol);

}  // namespace gmv
