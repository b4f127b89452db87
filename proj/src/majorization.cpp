#include "gmverify/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>

#include "gmverify/graph6.hpp"

namespace gmv {

SymMatrix laplacian(const Graph& g) {
    const int n = g.vertex_count();
    SymMatrix l(n);
    for (int i = 0; i < n; ++i) {
        l.set(i, i, static_cast<double>(g.degree(i)));
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(i, j)) l.set(i, j, -1.0);
    }
    return l;
}

EigDecomp laplacian_spectrum(const Graph& g) {
    const SymMatrix l = laplacian(g);
    EigDecomp e = eigh(l);
    const int n = e.dim();
    if (std::abs(e.values[static_cast<std::size_t>(n - 1)]) <= kEigTol * l.frobenius_norm())
        e.values[static_cast<std::size_t>(n - 1)] = 0.0;
    return e;
}

MajorizationReport majorizes(std::span<const double> x, std::span<const double> y,
                             double prefix_tol, double sum_tol) {
    if (x.size() != y.size()) throw input_error("majorization requires equal lengths");
    std::vector<double> xs(x.begin(), x.end()), ys(y.begin(), y.end());
    std::sort(xs.begin(), xs.end(), std::greater<double>());
    std::sort(ys.begin(), ys.end(), std::greater<double>());

    MajorizationReport rep;
    rep.prefix_slack.resize(xs.size());
    double px = 0.0, py = 0.0;
    rep.holds = true;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        px += xs[k];
        py += ys[k];
        rep.prefix_slack[k] = py - px;
        if (rep.prefix_slack[k] < -prefix_tol && !rep.first_violation) {
            rep.first_violation = static_cast<int>(k) + 1;
            rep.holds = false;
        }
    }
    rep.sum_gap = std::abs(py - px);
    if (rep.sum_gap > sum_tol) rep.holds = false;
    return rep;
}

MajorizationReport majorizes(std::span<const double> x, std::span<const double> y, double tol) {
    return majorizes(x, y, tol, tol);
}

namespace {

std::vector<double> to_double(const std::vector<int>& v) {
    return std::vector<double>(v.begin(), v.end());
}

// d' is exact; only the eigenvalue side carries roundoff, so the total-sum
// tolerance scales with 2m while prefixes stay absolute.
double sum_tol_for(const Graph& g, double tol) {
    return tol * std::max(1.0, 2.0 * g.edge_count());
}

}  // namespace

ConjectureReport check_grone_merris(const Graph& g, double tol) {
    ConjectureReport rep;
    rep.graph_id = to_graph6(g);
    rep.spectrum = laplacian_spectrum(g).values;
    rep.dprime = conjugate_sequence(degree_sequence(g), g.vertex_count());
    const std::vector<double> dp = to_double(rep.dprime);
    rep.report = majorizes(rep.spectrum, dp, tol, sum_tol_for(g, tol));
    rep.margins = rep.report.prefix_slack;
    return rep;
}

std::pair<MajorizationReport, MajorizationReport> check_double_majorization(const Graph& g,
                                                                            double tol) {
    const std::vector<double> lam = laplacian_spectrum(g).values;
    const std::vector<double> deg = to_double(degree_sequence(g));
    const std::vector<double> dp =
        to_double(conjugate_sequence(degree_sequence(g), g.vertex_count()));
    const double st = sum_tol_for(g, tol);
    return {majorizes(deg, lam, tol, st), majorizes(lam, dp, tol, st)};
}

MajorizationReport check_grone_bound(const Graph& g, double tol) {
    if (g.edge_count() == 0) throw input_error("grone bound requires at least one edge");
    std::vector<double> modified = to_double(degree_sequence(g));
    modified.front() += 1.0;
    modified.back() -= 1.0;
    const std::vector<double> lam = laplacian_spectrum(g).values;
    return majorizes(modified, lam, tol, sum_tol_for(g, tol));
}

MajorizationReport check_fan(const SymMatrix& h1, const SymMatrix& h2, double tol) {
    if (h1.dim() != h2.dim()) throw input_error("fan check requires equal dimensions");
    const std::vector<double> lam_sum = eigh(h1 + h2).values;
    const std::vector<double> l1 = eigh(h1).values;
    const std::vector<double> l2 = eigh(h2).values;
    std::vector<double> rhs(l1.size());
    for (std::size_t i = 0; i < l1.size(); ++i) rhs[i] = l1[i] + l2[i];
    return majorizes(lam_sum, rhs, tol,
                     tol * std::max(1.0, std::abs(h1.trace()) + std::abs(h2.trace())));
}

bool check_complement_duality(const Graph& g, double tol) {
    const int n = g.vertex_count();
    if (n < 2) throw input_error("complement duality requires n >= 2");
    const Graph gc = g.complement();

    // L(G) + L(complement) + J = nI, entrywise in integers
    for (int i = 0; i < n; ++i) {
        if (g.degree(i) + gc.degree(i) + 1 != n) return false;
        for (int j = i + 1; j < n; ++j) {
            const int lg = g.adjacent(i, j) ? -1 : 0;
            const int lc = gc.adjacent(i, j) ? -1 : 0;
            if (lg + lc + 1 != 0) return false;
        }
    }

    const std::vector<double> lam = laplacian_spectrum(g).values;
    const std::vector<double> lamc = laplacian_spectrum(gc).values;
    for (int j = 0; j + 1 < n; ++j)
        if (std::abs(lamc[static_cast<std::size_t>(j)] -
                     (n - lam[static_cast<std::size_t>(n - 2 - j)])) > tol)
            return false;
    if (std::abs(lamc[static_cast<std::size_t>(n - 1)]) > tol) return false;

    const std::vector<int> dp = conjugate_sequence(degree_sequence(g), n);
    const std::vector<int> dpc = conjugate_sequence(degree_sequence(gc), n);
    for (int j = 0; j + 1 < n; ++j)
        if (dpc[static_cast<std::size_t>(j)] != n - dp[static_cast<std::size_t>(n - 2 - j)])
            return false;
    return dpc[static_cast<std::size_t>(n - 1)] == 0;
}

std::vector<double> grone_merris_margins(const Graph& g) {
    const int n = g.vertex_count();
    const std::vector<double> lam = laplacian_spectrum(g).values;
    const std::vector<int> dp = conjugate_sequence(degree_sequence(g), n);
    std::vector<double> margins(static_cast<std::size_t>(n));
    long long pd = 0;
    double pl = 0.0;
    for (int k = 0; k < n; ++k) {
        pd += dp[static_cast<std::size_t>(k)];
        pl += lam[static_cast<std::size_t>(k)];
        margins[static_cast<std::size_t>(k)] = static_cast<double>(pd) - pl;
    }
    return margins;
}

bool check_prefix_duality(const Graph& g, int k, double tol) {
    const int n = g.vertex_count();
    if (k < 1 || k >= n) throw input_error("prefix duality requires 1 <= k < n");
    const double mk = grone_merris_margins(g)[static_cast<std::size_t>(k - 1)];
    const int kc = n - 1 - k;
    const double mkc =
        kc == 0 ? 0.0
                : grone_merris_margins(g.complement())[static_cast<std::size_t>(kc - 1)];
    return std::abs(mk - mkc) <= tol;
}

bool check_split_bounds(const Graph& g, const SplitPartition& p, double tol) {
    if (!validate_split_partition(g, p)) throw input_error("invalid split partition");
    const int n = g.vertex_count();
    const int nc = p.clique_size();
    const std::vector<double> lam = laplacian_spectrum(g).values;

    bool ok = true;
    if (nc >= 2) ok = ok && lam[static_cast<std::size_t>(nc - 2)] >= nc - tol;
    ok = ok && p.delta <= nc;
    if (nc + 1 <= n) ok = ok && p.delta >= lam[static_cast<std::size_t>(nc)] - tol;

    if (ok && lam[static_cast<std::size_t>(nc - 1)] >= nc - tol) {
        const std::vector<int> dp = conjugate_sequence(degree_sequence(g), n);
        long long prefix = 0;
        for (int i = 0; i < nc; ++i) prefix += dp[static_cast<std::size_t>(i)];
        long long tr_d1 = 0;
        for (int v : p.d1) tr_d1 += v;
        long long tr_d2 = 0;
        for (int v : p.d2) tr_d2 += v;
        long long min_sum = 0;
        for (int v = 0; v < n; ++v) min_sum += std::min(g.degree(v), nc);
        ok = ok && prefix == static_cast<long long>(nc) * nc + tr_d1;
        ok = ok && min_sum == static_cast<long long>(nc) * nc + tr_d2;
    }
    return ok;
}

std::optional<bool> check_degree_threshold_lemma(const Graph& g, int k, double tol) {
    const int n = g.vertex_count();
    if (k < 1 || k >= n) throw input_error("degree threshold requires 1 <= k < n");

    std::vector<std::pair<int, int>> qualifying;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(i, j) && g.degree(i) <= k && g.degree(j) <= k)
                qualifying.emplace_back(i, j);
    if (qualifying.empty()) return std::nullopt;

    const std::vector<double> lam = laplacian_spectrum(g).values;
    double prefix_g = 0.0;
    for (int t = 0; t < k; ++t) prefix_g += lam[static_cast<std::size_t>(t)];
    const std::vector<int> dp = conjugate_sequence(degree_sequence(g), n);
    long long dprefix_g = 0;
    for (int t = 0; t < k; ++t) dprefix_g += dp[static_cast<std::size_t>(t)];

    for (const auto& [i, j] : qualifying) {
        const Graph reduced = g.without_edge(i, j);
        const std::vector<double> lam_r = laplacian_spectrum(reduced).values;
        double prefix_r = 0.0;
        for (int t = 0; t < k; ++t) prefix_r += lam_r[static_cast<std::size_t>(t)];
        if (!(prefix_g <= prefix_r + 2.0 + tol)) return false;

        const std::vector<int> dp_r = conjugate_sequence(degree_sequence(reduced), n);
        long long dprefix_r = 0;
        for (int t = 0; t < k; ++t) dprefix_r += dp_r[static_cast<std::size_t>(t)];
        if (dprefix_g - dprefix_r != 2) return false;
    }
    return true;
}

Graph split_closure(const Graph& g, int k) {
    const int n = g.vertex_count();
    if (k < 1 || k >= n) throw input_error("split closure requires 1 <= k < n");
    Graph out = g;
    for (int i = 0; i < n; ++i) {
        if (g.degree(i) < k) continue;
        for (int j = i + 1; j < n; ++j)
            if (g.degree(j) >= k && !g.adjacent(i, j)) out = out.with_edge(i, j);
    }
    return out;
}

SplitClosureReport check_split_closure(const Graph& g, int k, double tol) {
    const int n = g.vertex_count();
    SplitClosureReport rep{split_closure(g, k)};
    const Graph& closure = rep.closure;

    std::vector<int> stated_clique;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= k) stated_clique.push_back(v);

    rep.clique_ok = true;
    for (std::size_t x = 0; x < stated_clique.size(); ++x)
        for (std::size_t y = x + 1; y < stated_clique.size(); ++y)
            rep.clique_ok = rep.clique_ok && closure.adjacent(stated_clique[x], stated_clique[y]);
    const std::vector<int> dp_g = conjugate_sequence(degree_sequence(g), n);
    rep.clique_ok =
        rep.clique_ok && static_cast<int>(stated_clique.size()) == dp_g[static_cast<std::size_t>(k - 1)];

    rep.coclique_degree_ok = true;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) < k)
            rep.coclique_degree_ok = rep.coclique_degree_ok && closure.degree(v) <= k - 1;

    try {
        make_split_partition(closure, stated_clique);
        rep.stated_partition_valid = true;
    } catch (const input_error&) {
        rep.stated_partition_valid = false;
    }
    rep.is_split = split_partition(closure).has_value();

    const std::vector<int> dp_c = conjugate_sequence(degree_sequence(closure), n);
    rep.dprime_prefix_preserved = true;
    for (int i = 0; i < k; ++i)
        rep.dprime_prefix_preserved =
            rep.dprime_prefix_preserved &&
            dp_c[static_cast<std::size_t>(i)] == dp_g[static_cast<std::size_t>(i)];

    const std::vector<double> lam_g = laplacian_spectrum(g).values;
    const std::vector<double> lam_c = laplacian_spectrum(closure).values;
    rep.eigen_monotone = true;
    for (int i = 0; i < n; ++i)
        rep.eigen_monotone =
            rep.eigen_monotone &&
            lam_c[static_cast<std::size_t>(i)] >= lam_g[static_cast<std::size_t>(i)] - tol;
    return rep;
}

}  // namespace gmv
