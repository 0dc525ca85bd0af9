#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "geodex/walks.hpp"
#include "oracles.hpp"

using namespace geodex;

TEST_CASE("walk counts on the directed 4-cycle, k=2") {
    auto g = Digraph::cycle(4);
    auto t = walk_counts(g, 2);
    for (Vertex u = 0; u < 4; ++u)
        for (Vertex v = 0; v < 4; ++v) {
            BigInt expect = (v == u || v == (u + 1) % 4 || v == (u + 2) % 4) ? 1 : 0;
            CHECK(t.at(u, v) == expect);
        }
}

TEST_CASE("walk counts on K3, k=1 are all ones") {
    auto t = walk_counts(Digraph::complete(3), 1);
    for (Vertex u = 0; u < 3; ++u)
        for (Vertex v = 0; v < 3; ++v) CHECK(t.at(u, v) == 1);
}

TEST_CASE("walk counts match the naive enumerator on random digraphs") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 15; ++trial) {
        auto g = oracle::random_digraph(6, 0.4, rng);
        auto t = walk_counts(g, 3);
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = 0; v < g.order(); ++v)
                REQUIRE(t.at(u, v) == oracle::count_walks_naive(g, u, v, 3));
    }
}

TEST_CASE("geodecity verdicts and witnesses") {
    for (int k = 1; k <= 6; ++k) CHECK(is_k_geodetic(Digraph::cycle(k + 2), k).ok);

    auto rep = is_k_geodetic(Digraph::complete(3), 2);
    REQUIRE_FALSE(rep.ok);
    REQUIRE(rep.witness.has_value());
    const auto& w = *rep.witness;
    CHECK(w.walk1 != w.walk2);
    CHECK(w.walk1.front() == w.from);
    CHECK(w.walk1.back() == w.to);
    CHECK(w.walk2.front() == w.from);
    CHECK(w.walk2.back() == w.to);
    CHECK(w.walk1.size() <= 3);
    CHECK(w.walk2.size() <= 3);
}

TEST_CASE("is_k_geodetic agrees with the table condition on random digraphs") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = oracle::random_digraph(6, 0.25, rng);
        auto t = walk_counts(g, 2);
        bool all_le_one = true;
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = 0; v < g.order(); ++v)
                if (t.at(u, v) > 1) all_le_one = false;
        auto rep = is_k_geodetic(g, 2);
        REQUIRE(rep.ok == all_le_one);
        if (!rep.ok) {
            const auto& w = *rep.witness;
            // both witness walks are real walks in g
            auto valid = [&](const std::vector<Vertex>& walk) {
                for (std::size_t i = 0; i + 1 < walk.size(); ++i)
                    if (!g.has_arc(walk[i], walk[i + 1])) return false;
                return true;
            };
            CHECK(valid(w.walk1));
            CHECK(valid(w.walk2));
        }
    }
}

TEST_CASE("closed walk traces") {
    auto c4 = Digraph::cycle(4);
    CHECK(closed_walk_trace(c4, 4) == 4);
    CHECK(closed_walk_trace(c4, 3) == 0);

    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        auto g = oracle::random_digraph(6, 0.4, rng);
        for (int r = 1; r <= 4; ++r) REQUIRE(closed_walk_trace(g, r) == oracle::closed_walks_naive(g, r));
    }
}

TEST_CASE("k-geodetic digraphs have zero trace for r <= k") {
    for (int k = 1; k <= 6; ++k) {
        auto g = Digraph::cycle(k + 2);
        for (int r = 1; r <= k; ++r) CHECK(closed_walk_trace(g, r) == 0);
    }
}

TEST_CASE("cycle counting") {
    CHECK(count_cycles_of_length(Digraph::cycle(4), 4) == 1);
    CHECK(count_cycles_of_length(Digraph::cycle(4), 3) == 0);
    CHECK(count_cycles_of_length(Digraph::complete(3), 3) == 2);

    std::mt19937 rng(77);
    for (int trial = 0; trial < 12; ++trial) {
        auto g = oracle::random_digraph(6, 0.4, rng);
        for (int len = 2; len <= 6; ++len)
            REQUIRE(count_cycles_of_length(g, len) == oracle::count_cycles_naive(g, len));
    }
}

TEST_CASE("excess profiles") {
    auto p = excess_profile(Digraph::cycle(4), 1, 2);
    CHECK(p.moore == 3);
    CHECK(p.excess == 1);
    CHECK(p.is_excess_one);

    auto k4 = excess_profile(Digraph::complete(4), 3, 1);
    CHECK(k4.excess == 0);
    CHECK_FALSE(k4.is_excess_one);

    // any 8-vertex diregular degree-2 digraph has excess 1 but fails
    // 2-geodecity (no (2,2;+1)-digraph exists)
    std::mt19937 rng(99);
    auto g = oracle::random_diregular(8, 2, rng);
    auto q = excess_profile(g, 2, 2);
    CHECK(q.excess == 1);
    CHECK(q.diregular);
    CHECK_FALSE(q.is_excess_one);

    for (int k = 1; k <= 20; ++k) CHECK(excess_profile(Digraph::cycle(k + 2), 1, k).is_excess_one);
}
