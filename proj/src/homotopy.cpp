#include "gmverify/homotopy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "gmverify/majorization.hpp"

namespace gmv {

HomotopyProblem make_homotopy_problem(const Graph& g, const SplitPartition& p, int grid_points) {
    if (!validate_split_partition(g, p)) throw input_error("invalid split partition");
    if (grid_points < 2) throw input_error("homotopy grid needs at least 2 points");
    if (p.coclique_size() < 1) throw input_error("homotopy requires a non-empty co-clique");

    const int nc = p.clique_size(), mc = p.coclique_size();
    const int n = nc + mc;

    HomotopyProblem hp{nc, mc, {}, p.d1, p.d2, p.a, SymMatrix(n), SymMatrix(n), {}};
    hp.order = p.clique;
    hp.order.insert(hp.order.end(), p.coclique.begin(), p.coclique.end());

    Graph permuted(n);
    {
        std::vector<std::pair<int, int>> edges;
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                if (g.adjacent(hp.order[static_cast<std::size_t>(x)],
                               hp.order[static_cast<std::size_t>(y)]))
                    edges.emplace_back(x, y);
        permuted = Graph::from_edge_list(n, edges);
    }
    hp.l0 = laplacian(complete_split(nc, mc));
    hp.l1 = laplacian(permuted);

    hp.alpha_grid.resize(static_cast<std::size_t>(grid_points));
    for (int i = 0; i < grid_points; ++i)
        hp.alpha_grid[static_cast<std::size_t>(i)] =
            static_cast<double>(i) / static_cast<double>(grid_points - 1);
    hp.alpha_grid.front() = 0.0;
    hp.alpha_grid.back() = 1.0;
    return hp;
}

SymMatrix l_alpha(const HomotopyProblem& p, double alpha) {
    if (alpha < 0.0 || alpha > 1.0) throw input_error("alpha must lie in [0,1]");
    if (alpha == 0.0) return p.l0;
    if (alpha == 1.0) return p.l1;
    const int n = p.l0.dim();
    SymMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            out.set(i, j, (1.0 - alpha) * p.l0(i, j) + alpha * p.l1(i, j));
    return out;
}

std::vector<std::pair<double, int>> complete_split_spectrum(int clique_size, int coclique_size) {
    if (clique_size < 1 || coclique_size < 1)
        throw input_error("closed-form split spectrum requires N >= 1, M >= 1");
    std::vector<std::pair<double, int>> spec;
    spec.emplace_back(static_cast<double>(clique_size + coclique_size), clique_size);
    if (coclique_size > 1) spec.emplace_back(static_cast<double>(clique_size), coclique_size - 1);
    spec.emplace_back(0.0, 1);
    return spec;
}

double eq1_residual(const HomotopyProblem& p, double alpha, const Matrix& v) {
    const int nc = p.n_clique, mc = p.n_coclique;
    if (v.rows() != mc || v.cols() != nc) throw input_error("v must be M x N");
    double worst = 0.0;
    for (int i = 0; i < nc; ++i) {
        const double den = (1.0 - alpha) * mc + alpha * (nc + p.d1[static_cast<std::size_t>(i)]);
        for (int j = 0; j < mc; ++j) {
            double quad = 0.0;
            for (int i2 = 0; i2 < nc; ++i2)
                for (int j2 = 0; j2 < mc; ++j2)
                    if (!p.cross(i2, j2)) quad += v(j, i2) * v(j2, i);
            const double num = -(1.0 - alpha) - alpha * (p.cross(i, j) ? 1.0 : 0.0) +
                               alpha * (p.d2[static_cast<std::size_t>(j)] * v(j, i) - quad);
            worst = std::max(worst, std::abs(v(j, i) - num / den));
        }
    }
    return worst;
}

OmegaMargins omega_membership(const Matrix& v, double tol) {
    OmegaMargins om;
    if (v.rows() > 0 && v.cols() > 0) om.entry_margin = v(0, 0);
    for (int j = 0; j < v.cols(); ++j) {
        double colsum = 0.0;
        for (int i = 0; i < v.rows(); ++i) {
            colsum += v(i, j);
            om.entry_margin = std::max(om.entry_margin, v(i, j));
        }
        om.colsum_margin = std::max(om.colsum_margin, std::abs(colsum + 1.0));
    }
    om.inside = om.entry_margin <= tol && om.colsum_margin <= tol;
    return om;
}

Matrix x_alpha(const HomotopyProblem& p, double alpha, const Matrix& v) {
    const int nc = p.n_clique, mc = p.n_coclique;
    if (v.rows() != mc || v.cols() != nc) throw input_error("v must be M x N");
    Matrix x(nc, nc);
    for (int i = 0; i < nc; ++i)
        for (int i2 = 0; i2 < nc; ++i2) {
            double e = (i == i2 ? static_cast<double>(nc) : 0.0) - 1.0;  // K_N entry
            if (i == i2)
                e += (1.0 - alpha) * mc + alpha * p.d1[static_cast<std::size_t>(i)];
            for (int j = 0; j < mc; ++j)
                e -= ((1.0 - alpha) + alpha * (p.cross(i, j) ? 1.0 : 0.0)) * v(j, i2);
            x(i, i2) = e;
        }
    return x;
}

std::optional<KeyLemmaBranch> key_lemma_hypothesis(const Graph& g, const SplitPartition& p,
                                                   double tol) {
    const int nc = p.clique_size();
    const std::vector<double> lam = laplacian_spectrum(g).values;
    const double lam_n = lam[static_cast<std::size_t>(nc - 1)];
    if (lam_n >= nc + tol) return KeyLemmaBranch::strict;
    if (std::abs(lam_n - nc) <= tol && p.delta <= nc - 1) return KeyLemmaBranch::equality;
    return std::nullopt;
}

std::optional<SplitPartition> tracking_partition(const Graph& g, double tol) {
    const int n = g.vertex_count();
    const std::vector<double> lam = laplacian_spectrum(g).values;
    bool found = false;
    std::uint64_t best = 0;
    int best_size = -1;
    for_each_split_clique(g, [&](std::uint64_t mask) {
        const int nc = std::popcount(mask);
        if (nc < 1 || nc >= n) return;  // tracking needs 1 <= N < n
        int delta = 0;
        for (int v = 0; v < n; ++v)
            if (!((mask >> v) & 1u)) delta = std::max(delta, g.degree(v));
        const double lam_n = lam[static_cast<std::size_t>(nc - 1)];
        const bool ok = lam_n >= nc + tol || (std::abs(lam_n - nc) <= tol && delta <= nc - 1);
        if (!ok) return;
        const std::uint64_t diff = mask ^ best;
        const bool lex_smaller = diff != 0 && (mask & (diff & ~(diff - 1))) != 0;
        if (!found || nc > best_size || (nc == best_size && lex_smaller)) {
            found = true;
            best = mask;
            best_size = nc;
        }
    });
    if (!found) return std::nullopt;
    std::vector<int> clique;
    for (int v = 0; v < n; ++v)
        if ((best >> v) & 1u) clique.push_back(v);
    return make_split_partition(g, clique);
}

namespace {

TracePoint evaluate_point(const HomotopyProblem& p, double alpha, const TrackOptions& opt) {
    const int nc = p.n_clique;
    const EigDecomp e = eigh(l_alpha(p, alpha));
    std::optional<SubspaceNormalForm> nf;
    try {
        nf = top_subspace(e, nc, opt.gap_tol);
    } catch (const gap_error& ge) {
        throw gap_error(std::string(ge.what()) + " at alpha=" + std::to_string(alpha));
    }
    if (!nf)
        throw numeric_error("normal form singular at alpha=" + std::to_string(alpha));

    TracePoint pt;
    pt.alpha = alpha;
    pt.v = std::move(nf->v);
    pt.lambda_n = e.values[static_cast<std::size_t>(nc - 1)];
    pt.lambda_n1 = e.values[static_cast<std::size_t>(nc)];
    pt.gap = pt.lambda_n - pt.lambda_n1;
    pt.eq1_residual = eq1_residual(p, alpha, pt.v);
    const OmegaMargins om = omega_membership(pt.v, 0.0);
    pt.omega_entry_margin = om.entry_margin;
    pt.omega_colsum_margin = om.colsum_margin;
    pt.x_trace = x_alpha(p, alpha, pt.v).trace();
    pt.sum_top = 0.0;
    for (int i = 0; i < nc; ++i) pt.sum_top += e.values[static_cast<std::size_t>(i)];
    return pt;
}

void advance(const HomotopyProblem& p, const TrackOptions& opt, std::vector<TracePoint>& points,
             TracePoint&& to, int depth) {
    const TracePoint& from = points.back();
    const double cap = opt.drift_coeff * (1.0 + from.v.max_abs());
    if ((to.v - from.v).max_abs() <= cap) {
        points.push_back(std::move(to));
        return;
    }
    if (depth >= opt.max_bisect_depth)
        throw numeric_error("subspace drift not resolved by bisection near alpha=" +
                            std::to_string(to.alpha));
    const double mid = 0.5 * (from.alpha + to.alpha);
    advance(p, opt, points, evaluate_point(p, mid, opt), depth + 1);
    advance(p, opt, points, std::move(to), depth + 1);
}

}  // namespace

HomotopyTrace track(const HomotopyProblem& p, const TrackOptions& opt) {
    const int nc = p.n_clique;
    const EigDecomp e1 = eigh(p.l1);
    const double lam_n = e1.values[static_cast<std::size_t>(nc - 1)];
    int delta = 0;
    for (int v : p.d2) delta = std::max(delta, v);
    const bool strict = lam_n >= nc + opt.hyp_tol;
    const bool equality = std::abs(lam_n - nc) <= opt.hyp_tol && delta <= nc - 1;
    if (!strict && !equality)
        throw hypothesis_error("tracking hypothesis fails: lambda_N = " + std::to_string(lam_n) +
                               ", N = " + std::to_string(nc) + ", delta = " + std::to_string(delta));

    HomotopyTrace tr;
    tr.points.reserve(p.alpha_grid.size());
    tr.points.push_back(evaluate_point(p, p.alpha_grid.front(), opt));
    for (std::size_t gi = 1; gi < p.alpha_grid.size(); ++gi)
        advance(p, opt, tr.points, evaluate_point(p, p.alpha_grid[gi], opt), 0);
    return tr;
}

KeyLemmaReport key_lemma_check(const Graph& g, const SplitPartition& p, const TrackOptions& opt) {
    const auto branch = key_lemma_hypothesis(g, p, opt.hyp_tol);
    if (!branch) {
        const int nc = p.clique_size();
        const double lam_n = laplacian_spectrum(g).values[static_cast<std::size_t>(nc - 1)];
        throw hypothesis_error("key lemma hypothesis fails: lambda_N = " + std::to_string(lam_n) +
                               ", N = " + std::to_string(nc) +
                               ", delta = " + std::to_string(p.delta));
    }

    const HomotopyProblem hp = make_homotopy_problem(g, p);
    const HomotopyTrace tr = track(hp, opt);
    const TracePoint& last = tr.points.back();
    const int nc = p.clique_size(), mc = p.coclique_size();

    KeyLemmaReport rep;
    rep.branch = *branch;
    rep.sum_top = last.sum_top;
    rep.trace_x1 = last.x_trace;
    rep.trace_av1 = 0.0;
    for (int i = 0; i < nc; ++i)
        for (int j = 0; j < mc; ++j)
            if (hp.cross(i, j)) rep.trace_av1 += last.v(j, i);

    const std::vector<int> dp = conjugate_sequence(degree_sequence(g), g.vertex_count());
    rep.dprime_prefix = 0;
    for (int i = 0; i < nc; ++i) rep.dprime_prefix += dp[static_cast<std::size_t>(i)];
    long long tr_d1 = 0;
    for (int v : p.d1) tr_d1 += v;
    rep.n2_plus_tr_d1 = static_cast<long long>(nc) * nc + tr_d1;

    rep.inequality_holds = rep.sum_top <= static_cast<double>(rep.dprime_prefix) + 1e-6;
    rep.trace_identity_holds = std::abs(rep.sum_top - rep.trace_x1) <= 1e-6;
    rep.bound_holds = rep.trace_av1 >= -static_cast<double>(nc) - 1e-8;
    rep.identity_exact = rep.n2_plus_tr_d1 == rep.dprime_prefix;
    rep.consistent = rep.inequality_holds && rep.trace_identity_holds && rep.bound_holds &&
                     rep.identity_exact &&
                     rep.sum_top <= static_cast<double>(rep.n2_plus_tr_d1) + 1e-6;
    return rep;
}

void write_trace_csv(const HomotopyTrace& t, std::ostream& out) {
    out << "alpha,gap,eq1_residual,omega_entry_margin,omega_colsum_margin,trace_X,sum_topN_eigs\n";
    char buf[256];
    for (const TracePoint& pt : t.points) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", pt.alpha,
                      pt.gap, pt.eq1_residual, pt.omega_entry_margin, pt.omega_colsum_margin,
                      pt.x_trace, pt.sum_top);
        out << buf;
    }
}

}  // namespace gmv
