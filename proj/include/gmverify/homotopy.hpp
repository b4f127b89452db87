#pragma once

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "gmverify/graph.hpp"
#include "gmverify/linalg.hpp"

namespace gmv {

/// Affine family L_alpha = (1-alpha)*L0 + alpha*L1 between the complete-split
/// Laplacian and the target Laplacian, in clique-first vertex order.
struct HomotopyProblem {
    int n_clique = 0;    // N
    int n_coclique = 0;  // M
    std::vector<int> order;  // permuted index -> original vertex
    std::vector<int> d1;     // clique cross-degrees (block convention)
    std::vector<int> d2;     // co-clique degrees
    std::vector<std::uint8_t> a;  // N x M incidence, row-major
    SymMatrix l0, l1;
    std::vector<double> alpha_grid;  // ascending, first 0, last 1

    bool cross(int i, int j) const {
        return a[static_cast<std::size_t>(i) * n_coclique + static_cast<std::size_t>(j)] != 0;
    }
};

HomotopyProblem make_homotopy_problem(const Graph& g, const SplitPartition& p,
                                      int grid_points = 101);

SymMatrix l_alpha(const HomotopyProblem& p, double alpha);

/// {(M+N, N), (N, M-1), (0, 1)} with zero-multiplicity entries dropped; N, M >= 1.
std::vector<std::pair<double, int>> complete_split_spectrum(int clique_size, int coclique_size);

struct TracePoint {
    double alpha = 0.0;
    Matrix v;  // M x N
    double lambda_n = 0.0;   // N-th largest eigenvalue of L_alpha
    double lambda_n1 = 0.0;  // (N+1)-th largest
    double gap = 0.0;
    double eq1_residual = 0.0;
    double omega_entry_margin = 0.0;   // max entry of v (non-positive when inside)
    double omega_colsum_margin = 0.0;  // max |column sum + 1|
    double x_trace = 0.0;
    double sum_top = 0.0;  // sum of the N largest eigenvalues of L_alpha
};

struct HomotopyTrace {
    std::vector<TracePoint> points;
};

struct TrackOptions {
    double gap_tol = kGapTol;
    double hyp_tol = 1e-8;
    double drift_coeff = 0.1;  // cap is drift_coeff * (1 + |v|_max)
    int max_bisect_depth = 20;
};

/// Requires the tracking hypothesis at alpha = 1: lambda_N > N, or
/// lambda_N = N > delta (hypothesis_error otherwise). Walks the grid in
/// ascending alpha, bisecting any step whose normal-form drift exceeds the cap.
HomotopyTrace track(const HomotopyProblem& p, const TrackOptions& opt = {});

/// Max entrywise self-consistency residual of the quadratic matrix equation at
/// the given alpha; near zero when v is the tracked invariant subspace.
double eq1_residual(const HomotopyProblem& p, double alpha, const Matrix& v);

struct OmegaMargins {
    bool inside = false;
    double entry_margin = 0.0;
    double colsum_margin = 0.0;
};

/// Membership in {column sums = -1, entries <= 0} within tol.
OmegaMargins omega_membership(const Matrix& v, double tol);

/// X_alpha = K_N + (1-alpha)M + alpha*D1 - [(1-alpha)J + alpha*A] v; represents
/// the action of L_alpha on the tracked subspace (not symmetric in general).
Matrix x_alpha(const HomotopyProblem& p, double alpha, const Matrix& v);

enum class KeyLemmaBranch { strict, equality };

/// Branch of the tracking hypothesis satisfied by (g, p), or nullopt.
std::optional<KeyLemmaBranch> key_lemma_hypothesis(const Graph& g, const SplitPartition& p,
                                                   double tol = 1e-8);

/// The hypothesis is partition-dependent: a clique size that maximizes N need
/// not satisfy it even when another valid partition does. Scans every valid
/// partition (n <= 16) and returns one meeting the hypothesis, preferring
/// larger cliques then lexicographically smaller ones; nullopt when none does.
std::optional<SplitPartition> tracking_partition(const Graph& g, double tol = 1e-8);

struct KeyLemmaReport {
    KeyLemmaBranch branch = KeyLemmaBranch::strict;
    double sum_top = 0.0;          // sum of the N largest eigenvalues, direct
    long long dprime_prefix = 0;   // sum_{i<=N} d'_i, exact
    long long n2_plus_tr_d1 = 0;   // N^2 + Tr(D1), exact
    double trace_x1 = 0.0;         // Tr(X_1) from the tracked subspace
    double trace_av1 = 0.0;        // Tr(A V^(1))
    bool inequality_holds = false;      // sum_top <= dprime_prefix (+1e-6)
    bool trace_identity_holds = false;  // |sum_top - trace_x1| <= 1e-6
    bool bound_holds = false;           // trace_av1 >= -N - 1e-8
    bool identity_exact = false;        // n2_plus_tr_d1 == dprime_prefix
    bool consistent = false;            // all of the above
};

/// Verifies sum_{i<=N} lambda_i <= sum_{i<=N} d'_i three ways: directly, via
/// the trace of X_1, and via the trace bound Tr(A V^(1)) >= -N.
KeyLemmaReport key_lemma_check(const Graph& g, const SplitPartition& p,
                               const TrackOptions& opt = {});

/// Columns: alpha, gap, eq1_residual, omega_entry_margin, omega_colsum_margin,
/// trace_X, sum_topN_eigs. One row per grid point.
void write_trace_csv(const HomotopyTrace& t, std::ostream& out);

}  // namespace gmv
