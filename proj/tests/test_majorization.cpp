#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "gmverify/graph6.hpp"
#include "gmverify/majorization.hpp"
#include "oracles.hpp"

using namespace gmv;

namespace {

Graph path3() { return Graph::from_edge_list(3, {{0, 1}, {1, 2}}); }

Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, edges);
}

bool connected(const Graph& g) {
    const int n = g.vertex_count();
    std::uint64_t reached = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (int v = 0; v < n; ++v)
            if ((frontier >> v) & 1u) next |= g.adjacency_row(v);
        frontier = next & ~reached;
        reached |= next;
    }
    return reached == (n == 64 ? ~0ull : (1ull << n) - 1);
}

SymMatrix edge_laplacian(int n, int i, int j) {
    SymMatrix h(n);
    h.set(i, i, 1.0);
    h.set(j, j, 1.0);
    h.set(i, j, -1.0);
    return h;
}

}  // namespace

TEST_CASE("laplacian entries") {
    const SymMatrix k2 = laplacian(Graph::from_edge_list(2, {{0, 1}}));
    CHECK(k2(0, 0) == 1.0);
    CHECK(k2(0, 1) == -1.0);
    CHECK(k2(1, 1) == 1.0);

    const SymMatrix zero = laplacian(Graph(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(zero(i, j) == 0.0);

    const SymMatrix p3 = laplacian(path3());
    CHECK(p3(0, 0) == 1.0);
    CHECK(p3(1, 1) == 2.0);
    CHECK(p3(2, 2) == 1.0);
    CHECK(p3(0, 1) == -1.0);
    CHECK(p3(0, 2) == 0.0);

    // zero row sums on every graph up to n=5
    for (int n = 1; n <= 5; ++n)
        for_each_labeled(n, [&](const Graph& g, std::uint64_t) {
            const SymMatrix l = laplacian(g);
            for (int i = 0; i < n; ++i) {
                double row = 0;
                for (int j = 0; j < n; ++j) row += l(i, j);
                CHECK(row == 0.0);
            }
        });
}

TEST_CASE("majorizes") {
    const std::vector<double> a{2, 2, 0}, b{3, 1, 0};
    CHECK(majorizes(a, b, 1e-8).holds);
    const auto rev = majorizes(b, a, 1e-8);
    CHECK_FALSE(rev.holds);
    CHECK(rev.first_violation == 1);

    const std::vector<double> c{4, 1, 1, 0};
    const auto refl = majorizes(c, c, 1e-8);
    CHECK(refl.holds);
    for (double s : refl.prefix_slack) CHECK(s == 0.0);
    CHECK(refl.sum_gap == 0.0);

    // inputs are rearranged non-increasing before comparison
    const std::vector<double> shuffled{0, 2, 2};
    CHECK(majorizes(shuffled, b, 1e-8).holds);

    CHECK_THROWS_AS(majorizes(a, c, 1e-8), input_error);
}

TEST_CASE("grone-merris on closed-form graphs") {
    const auto star = check_grone_merris(complete_split(1, 3));
    CHECK(star.report.holds);
    CHECK(star.dprime == std::vector<int>{4, 1, 1, 0});
    for (double m : star.margins) CHECK(std::abs(m) < 1e-9);
    CHECK(star.margins == star.report.prefix_slack);
    CHECK(star.graph_id == to_graph6(complete_split(1, 3)));

    const auto k3 = check_grone_merris(complete_split(3, 0));
    CHECK(k3.report.holds);
    CHECK(k3.dprime == std::vector<int>{3, 3, 0});
    for (double m : k3.margins) CHECK(std::abs(m) < 1e-9);

    const auto p3 = check_grone_merris(path3());
    CHECK(p3.report.holds);
    CHECK(p3.dprime == std::vector<int>{3, 1, 0});
    for (double m : p3.margins) CHECK(std::abs(m) < 1e-9);

    // the margin at k=n vanishes: both sides sum to 2m
    for_each_labeled(5, [&](const Graph& g, std::uint64_t) {
        const auto rep = check_grone_merris(g);
        CHECK(std::abs(rep.margins.back()) < 1e-8);
    });
}

TEST_CASE("double majorization") {
    const auto [lo_k4, hi_k4] = check_double_majorization(complete_split(4, 0));
    CHECK(lo_k4.holds);
    CHECK(hi_k4.holds);

    const auto [lo_e, hi_e] = check_double_majorization(Graph(4));
    CHECK(lo_e.holds);
    CHECK(hi_e.holds);

    // C4: d=(2,2,2,2), lambda=(4,2,2,0), d'=(4,4,0,0)
    const Graph c4 = cycle(4);
    const auto lam = laplacian_spectrum(c4).values;
    CHECK(lam[0] == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(lam[1] == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(lam[2] == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(lam[3] == 0.0);
    const auto [lo_c4, hi_c4] = check_double_majorization(c4);
    CHECK(lo_c4.holds);
    CHECK(hi_c4.holds);
}

TEST_CASE("grone bound on connected graphs, with the disconnected boundary") {
    const auto k2 = check_grone_bound(Graph::from_edge_list(2, {{0, 1}}));
    CHECK(k2.holds);
    for (double s : k2.prefix_slack) CHECK(std::abs(s) < 1e-9);

    CHECK(check_grone_bound(path3()).holds);

    // K4: modified (4,3,3,2) against spectrum (4,4,4,0)
    const auto k4 = check_grone_bound(complete_split(4, 0));
    CHECK(k4.holds);
    CHECK(k4.prefix_slack[0] == doctest::Approx(0.0));
    CHECK(k4.prefix_slack[1] == doctest::Approx(1.0));
    CHECK(k4.prefix_slack[2] == doctest::Approx(2.0));
    CHECK(k4.prefix_slack[3] == doctest::Approx(0.0));

    CHECK_THROWS_AS(check_grone_bound(Graph(3)), input_error);

    // the bound needs connectivity: one edge plus an isolated vertex breaks it
    const Graph k2_k1 = Graph::from_edge_list(3, {{0, 1}});
    const auto broken = check_grone_bound(k2_k1);
    CHECK_FALSE(broken.holds);
    CHECK(broken.first_violation == 2);

    for (int n = 2; n <= 5; ++n)
        for_each_labeled(n, [&](const Graph& g, std::uint64_t) {
            if (g.edge_count() == 0 || !connected(g)) return;
            CHECK(check_grone_bound(g).holds);
        });
}

TEST_CASE("fan inequality") {
    std::mt19937_64 rng(123);
    const SymMatrix h1 = oracle::random_symmetric(4, rng);
    const SymMatrix zero(4);
    const auto eq = check_fan(h1, zero);
    CHECK(eq.holds);
    for (double s : eq.prefix_slack) CHECK(std::abs(s) < 1e-10);

    // single-edge update: lambda(L(G)) majorized by lambda(L(G-e)) + (2,0,...,0)
    const SymMatrix he = edge_laplacian(3, 0, 1);
    const auto ev = eigh(he).values;
    CHECK(ev[0] == doctest::Approx(2.0));
    CHECK(std::abs(ev[1]) < 1e-12);
    CHECK(std::abs(ev[2]) < 1e-12);
    const Graph p3 = path3();
    CHECK(check_fan(laplacian(p3.without_edge(0, 1)), edge_laplacian(3, 0, 1)).holds);

    for (int trial = 0; trial < 100; ++trial) {
        const SymMatrix a = oracle::random_symmetric(5, rng);
        const SymMatrix b = oracle::random_symmetric(5, rng);
        CHECK(check_fan(a, b).holds);
    }

    CHECK_THROWS_AS(check_fan(h1, SymMatrix(3)), input_error);
}

TEST_CASE("complement duality") {
    // complement of the path is one edge plus an isolated vertex
    CHECK(check_complement_duality(path3()));
    const auto lamc = laplacian_spectrum(path3().complement()).values;
    CHECK(lamc[0] == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(std::abs(lamc[1]) < 1e-10);
    CHECK(lamc[2] == 0.0);

    CHECK(check_complement_duality(complete_split(5, 0)));
    CHECK(check_complement_duality(cycle(5)));
    CHECK_THROWS_AS(check_complement_duality(Graph(1)), input_error);

    for (int n = 2; n <= 5; ++n)
        for_each_labeled(n, [&](const Graph& g, std::uint64_t) {
            CHECK(check_complement_duality(g));
        });
}

TEST_CASE("prefix duality margins") {
    CHECK(check_prefix_duality(path3(), 1));
    CHECK(check_prefix_duality(path3(), 2));  // k=n-1 reduces to the empty sum
    CHECK_THROWS_AS(check_prefix_duality(path3(), 0), input_error);
    CHECK_THROWS_AS(check_prefix_duality(path3(), 3), input_error);

    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = Graph::from_edge_mask(6, rng() & ((1u << 15) - 1));
        for (int k = 1; k < 6; ++k) CHECK(check_prefix_duality(g, k));
    }
}

TEST_CASE("split bounds and the partial-sum identity") {
    // complete split N=2, M=2 with its natural partition: lambda=(4,4,2,0),
    // sum of the first two d' entries is 8 = N^2 + Tr(D1) = 4 + (2+2)
    const Graph cs22 = complete_split(2, 2);
    const SplitPartition natural = make_split_partition(cs22, {0, 1});
    CHECK(natural.d1 == std::vector<int>{2, 2});
    CHECK(natural.d2 == std::vector<int>{2, 2});
    CHECK(check_split_bounds(cs22, natural));

    const std::vector<int> dp = conjugate_sequence(degree_sequence(cs22), 4);
    CHECK(dp[0] + dp[1] == 8);

    // the recognizer's N-maximal partition also satisfies the proposition
    CHECK(check_split_bounds(cs22, *split_partition(cs22)));

    // star: N=1 skips the lambda_{N-1} part; identity reads 4 = 1 + 3
    const Graph star = complete_split(1, 3);
    const SplitPartition center = make_split_partition(star, {0});
    CHECK(center.d1 == std::vector<int>{3});
    CHECK(check_split_bounds(star, center));

    // complete graph: empty co-clique, only lambda_{N-1} >= N applies
    const Graph k5 = complete_split(5, 0);
    CHECK(check_split_bounds(k5, make_split_partition(k5, {0, 1, 2, 3, 4})));

    SplitPartition bogus = natural;
    bogus.delta = 7;
    CHECK_THROWS_AS(check_split_bounds(cs22, bogus), input_error);

    // every valid partition of every split graph up to n=5
    for (int n = 2; n <= 5; ++n)
        for_each_labeled(n, [&](const Graph& g, std::uint64_t) {
            for_each_split_clique(g, [&](std::uint64_t mask) {
                std::vector<int> clique;
                for (int v = 0; v < n; ++v)
                    if ((mask >> v) & 1u) clique.push_back(v);
                if (clique.empty()) return;  // the proposition needs N >= 1
                CHECK(check_split_bounds(g, make_split_partition(g, clique)));
            });
        });
}

TEST_CASE("block layout reproduces the laplacian entrywise") {
    // clique-first ordering: [[K_N + D1, -A], [-A^T, D2]] must equal L(G)
    // exactly, which pins D1 to cross-degrees and D2 to co-clique degrees.
    for (int n = 2; n <= 5; ++n)
        for_each_labeled(n, [&](const Graph& g, std::uint64_t) {
            const auto p = split_partition(g);
            if (!p) return;
            const int nc = p->clique_size(), mc = p->coclique_size();
            std::vector<int> order = p->clique;
            order.insert(order.end(), p->coclique.begin(), p->coclique.end());
            const SymMatrix l = laplacian(g);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    double block;
                    if (x < nc && y < nc)
                        block = (x == y ? nc - 1.0 + p->d1[static_cast<std::size_t>(x)] : -1.0);
                    else if (x < nc && y >= nc)
                        block = p->cross(x, y - nc) ? -1.0 : 0.0;
                    else if (x >= nc && y < nc)
                        block = p->cross(y, x - nc) ? -1.0 : 0.0;
                    else
                        block = (x == y ? static_cast<double>(
                                              p->d2[static_cast<std::size_t>(x - nc)])
                                        : 0.0);
                    CHECK(l(order[static_cast<std::size_t>(x)],
                            order[static_cast<std::size_t>(y)]) == block);
                }
        });
}

TEST_CASE("degree threshold lemma") {
    CHECK(check_degree_threshold_lemma(path3(), 2) == true);
    CHECK(check_degree_threshold_lemma(Graph::from_edge_list(2, {{0, 1}}), 1) == true);
    // triangle at k=1: both endpoints have degree 2 > 1, nothing qualifies
    CHECK_FALSE(check_degree_threshold_lemma(complete_split(3, 0), 1).has_value());
    CHECK_THROWS_AS(check_degree_threshold_lemma(path3(), 0), input_error);
    CHECK_THROWS_AS(check_degree_threshold_lemma(path3(), 3), input_error);

    for (int n = 2; n <= 5; ++n)
        for_each_labeled(n, [&](const Graph& g, std::uint64_t) {
            for (int k = 1; k < n; ++k) {
                const auto res = check_degree_threshold_lemma(g, k);
                if (res) CHECK(*res);
            }
        });
}

TEST_CASE("split closure") {
    // already closed: complete split with clique degrees >= k, co-clique below
    const Graph cs22 = complete_split(2, 2);
    CHECK(split_closure(cs22, 3) == cs22);

    // path on four vertices: the two middle vertices are already adjacent
    const Graph p4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(split_closure(p4, 2) == p4);
    const auto rep_p4 = check_split_closure(p4, 2);
    CHECK(rep_p4.is_split);
    CHECK(rep_p4.stated_partition_valid);
    CHECK(rep_p4.dprime_prefix_preserved);
    CHECK(rep_p4.eigen_monotone);

    // k=1 joins every pair of non-isolated vertices
    CHECK(split_closure(p4, 1) == complete_split(4, 0));

    const Graph empty(4);
    CHECK(split_closure(empty, 2) == empty);
    CHECK(check_split_closure(empty, 2).stated_partition_valid);

    CHECK_THROWS_AS(split_closure(p4, 0), input_error);
    CHECK_THROWS_AS(split_closure(p4, 4), input_error);

    // the closure is split only when no edge joins two vertices of degree < k:
    // the 4-cycle at k=3 stays a 4-cycle, which is not split
    const Graph c4 = cycle(4);
    const auto rep_c4 = check_split_closure(c4, 3);
    CHECK(rep_c4.closure == c4);
    CHECK_FALSE(rep_c4.is_split);
    CHECK_FALSE(rep_c4.stated_partition_valid);
    CHECK(rep_c4.dprime_prefix_preserved);
    CHECK(rep_c4.eigen_monotone);

    // one edge plus an isolated vertex at k=2: split, but not via the stated
    // empty clique (the co-clique keeps the edge)
    const Graph k2_k1 = Graph::from_edge_list(3, {{0, 1}});
    const auto rep_mixed = check_split_closure(k2_k1, 2);
    CHECK(rep_mixed.is_split);
    CHECK_FALSE(rep_mixed.stated_partition_valid);
}

TEST_CASE("split closure properties over n <= 5") {
    for (int n = 2; n <= 5; ++n)
        for_each_labeled(n, [&](const Graph& g, std::uint64_t) {
            for (int k = 1; k < n; ++k) {
                const auto rep = check_split_closure(g, k);
                CHECK(rep.clique_ok);
                CHECK(rep.coclique_degree_ok);
                CHECK(rep.dprime_prefix_preserved);
                CHECK(rep.eigen_monotone);

                bool low_degree_edge = false;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (g.adjacent(i, j) && g.degree(i) < k && g.degree(j) < k)
                            low_degree_edge = true;
                if (!low_degree_edge) {
                    CHECK(rep.stated_partition_valid);
                    CHECK(rep.is_split);
                }
            }
        });
}
