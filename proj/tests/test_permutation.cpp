#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "geodex/outlier.hpp"
#include "geodex/permutation.hpp"
#include "oracles.hpp"

using namespace geodex;

TEST_CASE("automorphism testing") {
    auto c4 = Digraph::cycle(4);
    CHECK(is_automorphism(c4, VertexPermutation::identity(4)));
    CHECK(is_automorphism(c4, VertexPermutation::from_cycles(4, {{0, 1, 2, 3}})));
    CHECK_FALSE(is_automorphism(c4, VertexPermutation::from_cycles(4, {{0, 1}})));
    CHECK_THROWS_AS(is_automorphism(c4, VertexPermutation::identity(3)), std::invalid_argument);
}

TEST_CASE("fix sets") {
    CHECK(fix_set(VertexPermutation::identity(5)).size() == 5);
    CHECK(fix_set(VertexPermutation::from_cycles(4, {{0, 1, 2, 3}})).empty());
    // o = one 2-cycle + one 4-cycle; o^2 fixes exactly the 2-cycle
    auto o = VertexPermutation::from_cycles(6, {{0, 1}, {2, 3, 4, 5}});
    CHECK(fix_set(o.power(2)) == std::vector<Vertex>{0, 1});
}

TEST_CASE("permutation vectors and their invariant") {
    CHECK(permutation_vector(VertexPermutation::from_cycles(4, {{0, 1, 2, 3}})).count(4) == 1);
    CHECK(permutation_vector(VertexPermutation::identity(3)).count(1) == 3);

    auto pv = permutation_vector(
        VertexPermutation::from_cycles(10, {{0, 1}, {2, 3, 4, 5}, {6, 7, 8, 9}}));
    CHECK(pv.count(2) == 1);
    CHECK(pv.count(4) == 2);

    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        auto perm = oracle::random_permutation(9, rng);
        auto v = permutation_vector(perm);
        CHECK(v.n() == 9);
        auto s = m_stats(v, 1);
        CHECK(s.total == v.total_cycles());
    }
}

TEST_CASE("m-statistics match the worked values") {
    PermutationVector pv1;
    pv1.m[2] = 1;
    pv1.m[4] = 14;
    auto s = m_stats(pv1, 1);
    CHECK(s.odd == 0);
    CHECK(s.even == 15);
    CHECK(s.total == 15);
    CHECK(m_stats(pv1, 4).total == 14);

    PermutationVector pv2;
    pv2.m[4] = 11;
    auto s2 = m_stats(pv2, 4);
    CHECK(s2.odd == 0);
    CHECK(s2.even == 11);
    CHECK(s2.total == 11);

    PermutationVector pv3;
    pv3.m[3] = 5;
    auto s3 = m_stats(pv3, 2);
    CHECK(s3.odd == 0);
    CHECK(s3.even == 0);
    CHECK(s3.total == 0);
}

TEST_CASE("vertex orders and index") {
    auto rot = VertexPermutation::from_cycles(4, {{0, 1, 2, 3}});
    for (Vertex u = 0; u < 4; ++u) CHECK(vertex_order(rot, u) == 4);
    CHECK(perm_index(rot) == 4);

    auto mixed = VertexPermutation::from_cycles(8, {{0, 1}, {2, 3, 4, 5, 6, 7}});
    CHECK(perm_index(mixed) == 2);
    CHECK(perm_index(VertexPermutation::identity(3)) == 1);

    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        auto perm = oracle::random_permutation(10, rng);
        BigInt perm_order = 1;
        for (const auto& cyc : perm.cycles()) perm_order = big_lcm(perm_order, BigInt(cyc.size()));
        for (Vertex u = 0; u < 10; ++u) {
            long ord = vertex_order(perm, u);
            CHECK(perm_order % ord == 0);
            for (long r = 1; r <= 12; ++r)
                if (perm.power(r)(u) == u) CHECK(r % ord == 0);
        }
    }
}

TEST_CASE("outlier structure classification") {
    // 4-outlier-regular on 44 vertices
    PermutationVector regular;
    regular.m[4] = 11;
    auto perm = oracle::permutation_of_type(std::vector<int>(11, 4));
    auto s = classify_outlier_structure(perm, 2);
    CHECK(s.tag == OutlierClass::OutlierRegular);
    CHECK(s.omega == 4);

    // Type B: unique transposition
    std::vector<int> typeb{2};
    for (int i = 0; i < 14; ++i) typeb.push_back(4);
    auto sb = classify_outlier_structure(oracle::permutation_of_type(typeb), 2);
    CHECK(sb.tag == OutlierClass::TypeB);
    CHECK(sb.index == 2);

    // Type A candidate: m_4 = 1, m_6 = 3 with k = 2
    auto sa = classify_outlier_structure(oracle::permutation_of_type({6, 6, 6, 4}), 2);
    CHECK(sa.tag == OutlierClass::TypeA);
    CHECK(sa.index == 4);

    auto other = classify_outlier_structure(oracle::permutation_of_type({5, 3}), 2);
    CHECK(other.tag == OutlierClass::Other);

    CHECK_THROWS_AS(classify_outlier_structure(VertexPermutation::identity(4), 2), std::invalid_argument);

    for (int k = 2; k <= 6; ++k) {
        auto g = Digraph::cycle(k + 2);
        auto o = outlier_map(g, k);
        auto st = classify_outlier_structure(o.perm, k);
        CHECK(st.tag == OutlierClass::OutlierRegular);
        CHECK(st.omega == k + 2);
    }
}

TEST_CASE("fix-set classification") {
    for (int k = 2; k <= 5; ++k) {
        auto g = Digraph::cycle(k + 2);
        auto o = outlier_map(g, k);
        CHECK(classify_fix_subdigraph(g, k, VertexPermutation::identity(g.order())).tag == FixTag::WholeGraph);
        auto null_case = classify_fix_subdigraph(g, k, o.perm.power(2));
        if (k % 2 == 0) {
            // gcd(2, k+2) = 2: o^2 fixes nothing
            CHECK(null_case.tag == FixTag::Null);
        }
        // o^r is never Inconsistent on a valid fixture
        for (long r = 1; r <= 2 * (k + 2); ++r) {
            auto c = classify_fix_subdigraph(g, k, o.perm.power(r));
            CHECK(c.tag != FixTag::Inconsistent);
        }
    }

    // a pair of isolated fixed vertices: swapping the common sinks fixes the
    // two sources, which have no arcs between them
    {
        auto g = Digraph::parse("4\n0: 2 3\n1: 2 3\n2:\n3:\n");
        auto phi = VertexPermutation::from_cycles(4, {{2, 3}});
        REQUIRE(is_automorphism(g, phi));
        auto c = classify_fix_subdigraph(g, 1, phi);
        CHECK(c.tag == FixTag::TwoIsolated);
        CHECK(c.fix_size == 2);
    }

    // fixed (k+2)-cycle inside a larger digraph
    {
        auto g = Digraph::parse("6\n0: 1\n1: 2\n2: 3\n3: 0\n4: 5\n5: 4\n");
        auto phi = VertexPermutation::from_cycles(6, {{4, 5}});
        auto c = classify_fix_subdigraph(g, 2, phi);
        CHECK(c.tag == FixTag::CycleKplus2);
        CHECK(c.fix_size == 4);
    }

    // an automorphism fixing a 3-path is proof of an invalid input
    {
        auto g = Digraph::parse("5\n0: 1\n1: 2\n2:\n3: 4\n4: 3\n");
        auto phi = VertexPermutation::from_cycles(5, {{3, 4}});
        REQUIRE(is_automorphism(g, phi));
        CHECK(classify_fix_subdigraph(g, 2, phi).tag == FixTag::Inconsistent);
    }

    // not an automorphism at all
    {
        auto g = Digraph::cycle(4);
        auto swap01 = VertexPermutation::from_cycles(4, {{0, 1}});
        CHECK_THROWS_AS(classify_fix_subdigraph(g, 2, swap01), NotAutomorphismError);
    }
}

TEST_CASE("path order divisibility") {
    for (int k : {2, 5}) {
        auto g = Digraph::cycle(k + 2);
        auto o = outlier_map(g, k);
        CHECK(check_path_order_divisibility(g, k, o.perm));
    }

    // orders 2,3,2 along a 2-path violate the lemma
    auto g = Digraph::parse("7\n0: 1\n1: 2\n2:\n3:\n4:\n5:\n6:\n");
    auto o = VertexPermutation::from_cycles(7, {{0, 3}, {1, 4, 5}, {2, 6}});
    CHECK_FALSE(check_path_order_divisibility(g, 2, o));
}

TEST_CASE("permutation serialization round-trips") {
    auto perm = VertexPermutation::from_cycles(5, {{0, 2, 4}});
    CHECK(perm.to_string() == "2 1 4 3 0");
    CHECK(VertexPermutation::parse(perm.to_string()) == perm);

    PermutationVector pv;
    pv.m[2] = 1;
    pv.m[4] = 14;
    CHECK(pv.to_string() == "2:1 4:14");
    CHECK(PermutationVector::parse(pv.to_string()) == pv);
}
