#include <doctest.h>

#include <algorithm>
#include <set>

#include "gmverify/graph.hpp"
#include "oracles.hpp"

using namespace gmv;

namespace {

Graph path3() { return Graph::from_edge_list(3, {{0, 1}, {1, 2}}); }

Graph k4_minus_edge() {
    return Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

}  // namespace

TEST_CASE("from_edge_list basics") {
    const Graph p3 = path3();
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(1, 2));
    CHECK_FALSE(p3.adjacent(0, 2));

    const Graph empty = Graph::from_edge_list(3, {});
    CHECK(empty.edge_count() == 0);

    // duplicates collapse
    const Graph dup = Graph::from_edge_list(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);

    CHECK(k4_minus_edge() == complete_split(2, 2));

    CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 0}}), input_error);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), input_error);
    CHECK_THROWS_AS(Graph(0), input_error);
    CHECK_THROWS_AS(Graph(65), input_error);
}

TEST_CASE("complement") {
    const Graph k3 = Graph::from_edge_list(3, {}).complement();
    CHECK(k3.edge_count() == 3);

    // path with center 1: complement is the single edge {0,2}
    const Graph pc = path3().complement();
    CHECK(pc.edge_count() == 1);
    CHECK(pc.adjacent(0, 2));
    CHECK(pc.degree(1) == 0);

    const Graph k4 = complete_split(4, 0);
    CHECK(k4.complement().edge_count() == 0);

    for (int n = 1; n <= 5; ++n)
        for_each_labeled(n, [&](const Graph& g, std::uint64_t) {
            CHECK(g.complement().complement() == g);
            // sorted complement degrees are n-1 minus the reversed sorted degrees
            const auto d = degree_sequence(g);
            const auto dc = degree_sequence(g.complement());
            for (int i = 0; i < n; ++i)
                CHECK(dc[static_cast<std::size_t>(i)] ==
                      n - 1 - d[static_cast<std::size_t>(n - 1 - i)]);
        });
}

TEST_CASE("degree and conjugate sequences") {
    CHECK(degree_sequence(path3()) == std::vector<int>{2, 1, 1});
    CHECK(degree_sequence(complete_split(1, 3)) == std::vector<int>{3, 1, 1, 1});
    CHECK(degree_sequence(k4_minus_edge()) == std::vector<int>{3, 3, 2, 2});

    CHECK(conjugate_sequence({3, 2, 2, 1}, 4) == std::vector<int>{4, 3, 1, 0});
    CHECK(conjugate_sequence({0, 0, 0}, 3) == std::vector<int>{0, 0, 0});
    CHECK(conjugate_sequence({3, 1, 1, 1}, 4) == std::vector<int>{4, 1, 1, 0});
    CHECK_THROWS_AS(conjugate_sequence({-1}, 1), input_error);

    for (int n = 1; n <= 6; ++n)
        for_each_labeled(n, [&](const Graph& g, std::uint64_t) {
            const auto d = degree_sequence(g);
            const auto dp = conjugate_sequence(d, n);
            CHECK(std::is_sorted(dp.rbegin(), dp.rend()));
            long long sd = 0, sdp = 0;
            for (int v : d) sd += v;
            for (int v : dp) sdp += v;
            CHECK(sd == sdp);
            // conjugation is an involution on partitions with parts <= n
            const auto back = conjugate_sequence(dp, n);
            CHECK(back == d);
        });
}

TEST_CASE("split partition recognizer") {
    const Graph c4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK_FALSE(split_partition(c4).has_value());

    // K4 minus {2,3}: {0,1,2} is a clique with {3} independent, so the
    // N-maximal partition has N=3 (lex-smaller than {0,1,3})
    const auto p = split_partition(k4_minus_edge());
    REQUIRE(p.has_value());
    CHECK(p->clique == std::vector<int>{0, 1, 2});
    CHECK(p->coclique == std::vector<int>{3});
    CHECK(p->delta == 2);
    CHECK(p->d1 == std::vector<int>{1, 1, 0});
    CHECK(p->d2 == std::vector<int>{2});

    // star with center 0: an edge plus the two remaining leaves is N-maximal
    const auto ps = split_partition(complete_split(1, 3));
    REQUIRE(ps.has_value());
    CHECK(ps->clique == std::vector<int>{0, 1});
    CHECK(ps->coclique == std::vector<int>{2, 3});
    CHECK(ps->delta == 1);

    const Graph big(17);
    CHECK_THROWS_AS(split_partition(big), input_error);
}

TEST_CASE("split partition agrees with brute force over n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for_each_labeled(n, [&](const Graph& g, std::uint64_t) {
            const auto p = split_partition(g);
            CHECK(p.has_value() == oracle::is_split_bruteforce(g));
            if (p) {
                CHECK(validate_split_partition(g, *p));
                CHECK(oracle::split_sets_valid(g, p->clique, p->coclique));
                // no valid partition has a strictly larger clique
                for (unsigned s = 0; s < (1u << n); ++s) {
                    std::vector<int> cl, co;
                    for (int v = 0; v < n; ++v) ((s >> v) & 1u ? cl : co).push_back(v);
                    if (oracle::split_sets_valid(g, cl, co))
                        CHECK(static_cast<int>(cl.size()) <= p->clique_size());
                }
            }
        });
}

TEST_CASE("make_split_partition rejects bad sets") {
    const Graph g = k4_minus_edge();
    CHECK_THROWS_AS(make_split_partition(g, {2, 3}), input_error);  // not a clique
    CHECK_THROWS_AS(make_split_partition(g, {2}), input_error);     // rest not independent
    CHECK_THROWS_AS(make_split_partition(g, {0, 0}), input_error);  // duplicate
    CHECK(validate_split_partition(g, make_split_partition(g, {0, 1, 2})));
}

TEST_CASE("complete split families") {
    CHECK(complete_split(1, 3) == Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}}));
    CHECK(complete_split(2, 2) == k4_minus_edge());
    const Graph k5 = complete_split(5, 0);
    CHECK(k5.edge_count() == 10);
    CHECK_THROWS_AS(complete_split(0, 3), input_error);
    CHECK_THROWS_AS(complete_split(40, 30), input_error);
}

TEST_CASE("labeled enumeration") {
    CHECK(labeled_graph_count(2) == 2);
    CHECK(labeled_graph_count(3) == 8);
    CHECK(labeled_graph_count(4) == 64);

    LabeledEnumeration en(3);
    std::set<std::uint64_t> seen;
    std::uint64_t expected_mask = 0;
    while (auto g = en.next()) {
        CHECK(g->edge_mask() == expected_mask++);  // increasing edge-mask order
        seen.insert(g->edge_mask());
    }
    CHECK(seen.size() == 8);

    std::uint64_t count = 0;
    for_each_labeled(4, [&](const Graph&, std::uint64_t) { ++count; });
    CHECK(count == 64);

    CHECK_THROWS_AS(LabeledEnumeration(8), input_error);
}

TEST_CASE("edge toggles") {
    const Graph k3 = complete_split(3, 0);
    const Graph p = k3.without_edge(0, 1);
    CHECK(p.edge_count() == 2);
    CHECK_FALSE(p.adjacent(0, 1));

    const Graph back = path3().with_edge(0, 2);
    CHECK(back == complete_split(3, 0));

    CHECK(path3().without_edge(0, 1).with_edge(0, 1) == path3());
    // setting, not toggling
    CHECK(path3().with_edge(0, 1) == path3());
    CHECK(path3().without_edge(0, 2) == path3());
}

TEST_CASE("edge masks round trip") {
    CHECK(Graph::from_edge_mask(3, 1).adjacent(0, 1));  // bit 0 is pair (0,1)
    for (std::uint64_t mask = 0; mask < 64; ++mask)
        CHECK(Graph::from_edge_mask(4, mask).edge_mask() == mask);
    CHECK_THROWS_AS(Graph::from_edge_mask(3, 8), input_error);
    CHECK_THROWS_AS(Graph::from_edge_mask(12, 0), input_error);
}
