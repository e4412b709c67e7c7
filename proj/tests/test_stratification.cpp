#include "strata/poset.hpp"

#include "oracles.hpp"
#include "strata/atlas.hpp"
#include "strata/errors.hpp"

#include <doctest.h>

#include <random>

using namespace strata;

namespace {

Atlas atlas_of(const std::string& type) { return build_atlas(TypeSpec::parse(type)); }

std::vector<RootMask> to_masks(const std::vector<std::vector<bool>>& leq) {
    std::vector<RootMask> rows(leq.size(), RootMask(leq.size()));
    for (std::size_t i = 0; i < leq.size(); ++i)
        for (std::size_t j = 0; j < leq.size(); ++j)
            if (leq[i][j]) rows[i].set(j);
    return rows;
}

}  // namespace

TEST_CASE("transitive_reduction: chains, antichains, errors") {
    // 3-chain: 0 < 1 < 2.
    std::vector<RootMask> chain(3, RootMask(3));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j) chain[i].set(j);
    const auto covers = transitive_reduction(chain);
    CHECK(covers == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

    // Antichain of 4: no edges.
    std::vector<RootMask> anti(4, RootMask(4));
    for (std::size_t i = 0; i < 4; ++i) anti[i].set(i);
    CHECK(transitive_reduction(anti).empty());

    // A 2-cycle violates antisymmetry.
    std::vector<RootMask> cyc(2, RootMask(2));
    cyc[0].set(0); cyc[0].set(1);
    cyc[1].set(0); cyc[1].set(1);
    CHECK_THROWS_AS((void)transitive_reduction(cyc), std::invalid_argument);

    // Missing transitivity is rejected.
    std::vector<RootMask> bad(3, RootMask(3));
    bad[0].set(0); bad[0].set(1);
    bad[1].set(1); bad[1].set(2);
    bad[2].set(2);
    CHECK_THROWS_AS((void)transitive_reduction(bad), std::invalid_argument);
}

TEST_CASE("transitive_reduction matches the naive oracle on random posets") {
    std::mt19937_64 rng(20240804);
    for (int iter = 0; iter < 200; ++iter) {
        const auto leq = oracles::random_poset(15, rng);
        CHECK(transitive_reduction(to_masks(leq)) == oracles::naive_transitive_reduction(leq));
    }
}

TEST_CASE("transitive reduction regenerates the order under closure") {
    std::mt19937_64 rng(8);
    for (int iter = 0; iter < 50; ++iter) {
        const auto leq = oracles::random_poset(12, rng);
        const auto covers = transitive_reduction(to_masks(leq));
        // Reflexive-transitive closure of the covers.
        std::vector<std::vector<bool>> re(12, std::vector<bool>(12, false));
        for (std::size_t i = 0; i < 12; ++i) re[i][i] = true;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [lo, hi] : covers)
                for (std::size_t i = 0; i < 12; ++i)
                    if (re[i][std::size_t(lo)] && !re[i][std::size_t(hi)]) {
                        re[i][std::size_t(hi)] = true;
                        changed = true;
                    }
        }
        CHECK(re == leq);
    }
}

TEST_CASE("fine poset: A1 chain") {
    const auto a = atlas_of("A1");
    CHECK(a.fine.size == 2);
    CHECK(a.fine.covers == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("fine poset: A2 has 5 nodes and 6 cover edges") {
    const auto a = atlas_of("A2");
    CHECK(a.fine.size == 5);
    CHECK(a.fine.covers.size() == 6);
    // Bottom covers the three A1s, which cover the top.
    int from_bottom = 0, to_top = 0;
    for (const auto& [lo, hi] : a.fine.covers) {
        if (a.subsystems[std::size_t(lo)].none()) ++from_bottom;
        if (a.subsystems[std::size_t(hi)] == a.rs->full_mask()) ++to_top;
    }
    CHECK(from_bottom == 3);
    CHECK(to_top == 3);
}

TEST_CASE("fine poset: each G2 A1^2 covers exactly one long and one short A1") {
    const auto a = atlas_of("G2");
    CHECK(a.fine.size == 12);
    for (std::size_t i = 0; i < a.subsystems.size(); ++i) {
        if (identify_type(*a.rs, a.subsystems[i]).str() != "A1^2") continue;
        std::vector<int> covered;
        for (const auto& [lo, hi] : a.fine.covers)
            if (hi == int(i)) covered.push_back(lo);
        REQUIRE(covered.size() == 2);
        std::vector<Coord> norms;
        for (int lo : covered) {
            const auto idx = a.subsystems[std::size_t(lo)].indices();
            REQUIRE(idx.size() == 2);
            norms.push_back(a.rs->norm2(idx[0]));
        }
        std::sort(norms.begin(), norms.end());
        CHECK(norms == std::vector<Coord>{2, 6});
    }
}

TEST_CASE("fine order equals mask inclusion") {
    for (const std::string type : {"B2", "B3", "D4"}) {
        const auto a = atlas_of(type);
        for (std::size_t i = 0; i < a.fine.size; ++i)
            for (std::size_t j = 0; j < a.fine.size; ++j)
                CHECK(a.fine.leq[i].test(j) ==
                      a.subsystems[i].is_subset_of(a.subsystems[j]));
    }
}

TEST_CASE("coarse_leq: bottom below everything, everything below top") {
    const auto a = atlas_of("B3");
    const int n = int(a.classes().size());
    int top = -1, bottom = -1;
    for (const auto& c : a.classes()) {
        if (c.representative == a.rs->full_mask()) top = c.class_id;
        if (c.representative.none()) bottom = c.class_id;
    }
    REQUIRE(top >= 0);
    REQUIRE(bottom >= 0);
    for (int c = 0; c < n; ++c) {
        CHECK(coarse_leq(a.subsystems, a.partition, bottom, c));
        CHECK(coarse_leq(a.subsystems, a.partition, c, top));
    }
}

TEST_CASE("coarse_leq: G2 short-A1 vs A2") {
    const auto a = atlas_of("G2");
    int a2 = -1, long_a1 = -1, short_a1 = -1;
    for (const auto& c : a.classes()) {
        if (c.label.str() == "A2") a2 = c.class_id;
        if (c.label.str() == "A1") {
            const int root = a.subsystems[std::size_t(c.members.front())].indices()[0];
            (a.rs->norm2(root) == 6 ? long_a1 : short_a1) = c.class_id;
        }
    }
    REQUIRE(a2 >= 0);
    REQUIRE(long_a1 >= 0);
    REQUIRE(short_a1 >= 0);
    CHECK(coarse_leq(a.subsystems, a.partition, long_a1, a2));
    CHECK_FALSE(coarse_leq(a.subsystems, a.partition, short_a1, a2));
}

TEST_CASE("coarse_leq equals the exhaustive member-pair inclusion scan") {
    for (const std::string type : {"B2", "G2", "B3"}) {
        const auto a = atlas_of(type);
        const int n = int(a.classes().size());
        for (int c1 = 0; c1 < n; ++c1)
            for (int c2 = 0; c2 < n; ++c2) {
                bool exhaustive = false;
                for (int m1 : a.classes()[std::size_t(c1)].members)
                    for (int m2 : a.classes()[std::size_t(c2)].members)
                        if (a.subsystems[std::size_t(m1)].is_subset_of(
                                a.subsystems[std::size_t(m2)]))
                            exhaustive = true;
                CHECK(coarse_leq(a.subsystems, a.partition, c1, c2) == exhaustive);
            }
    }
}

TEST_CASE("coarse poset shapes: A1, G2, F4") {
    const auto a1 = atlas_of("A1");
    CHECK(a1.coarse.size == 2);
    CHECK(a1.coarse.covers.size() == 1);

    const auto g2 = atlas_of("G2");
    CHECK(g2.coarse.size == 6);
    CHECK(g2.coarse.covers.size() == 7);
    // Exactly one A1 node connects upward to the A2 node.
    int a2 = -1;
    for (const auto& c : g2.classes())
        if (c.label.str() == "A2") a2 = c.class_id;
    int a1_to_a2 = 0;
    for (const auto& [lo, hi] : g2.coarse.covers)
        if (hi == a2 && g2.classes()[std::size_t(lo)].label.str() == "A1") ++a1_to_a2;
    CHECK(a1_to_a2 == 1);

    const auto f4 = atlas_of("F4");
    CHECK(f4.coarse.size == 24);
}

TEST_CASE("dim_top values") {
    const auto g2 = atlas_of("G2");
    CHECK(dim_top(*g2.rs, g2.rs->empty_mask()) == 0);
    CHECK(dim_top(*g2.rs, g2.rs->full_mask()) == 40);  // 4 (12 - 2)
    for (const auto& c : g2.classes())
        if (c.label.str() == "A1") CHECK(c.dim_top == 4);

    const auto a1 = atlas_of("A1");
    CHECK(a1.classes().front().dim_top == 4);
    CHECK(a1.classes().back().dim_top == 0);
}

TEST_CASE("node labels: top prints the bare type, bottom the bare count") {
    const auto g2 = atlas_of("G2");
    std::vector<std::string> labels;
    for (const auto& c : g2.classes()) labels.push_back(node_label(c));
    CHECK(labels == std::vector<std::string>{"G2", "2A2", "9A1^2", "18A1", "18A1", "12"});

    const auto names = display_labels(g2.classes());
    CHECK(names == std::vector<std::string>{"G2", "2A2", "9A1^2", "18A1#0", "18A1#1", "12"});
}

TEST_CASE("consistency_check passes on computed atlases, sum for G2 is 60") {
    const auto g2 = atlas_of("G2");
    const auto rep = consistency_check(g2);
    for (const auto& c : rep.checks) CHECK_MESSAGE(c.passed, c.name, " ", c.detail);
    exact::Int sum = 0;
    for (const auto& c : g2.classes()) sum += c.embedding_number;
    CHECK(sum == 60);  // 1 + 2 + 9 + 18 + 18 + 12

    const auto a1 = atlas_of("A1");
    exact::Int sum_a1 = 0;
    for (const auto& c : a1.classes()) sum_a1 += c.embedding_number;
    CHECK(sum_a1 == 3);
}

TEST_CASE("consistency_check flags a tampered embedding number") {
    auto g2 = atlas_of("G2");
    g2.partition.classes[2].embedding_number -= 1;  // the 9A1^2 class
    const auto rep = consistency_check(g2);
    CHECK_FALSE(rep.all_passed());
    bool sum_failed = false, factor_failed = false;
    for (const auto& c : rep.checks) {
        if (c.name == "embedding_sum_matches_weyl_index_sum" && !c.passed) sum_failed = true;
        if (c.name == "embedding_number_factorization" && !c.passed) factor_failed = true;
    }
    CHECK(sum_failed);
    CHECK(factor_failed);
}

TEST_CASE("cover edges strictly increase dimension in corpus atlases") {
    for (const std::string type :
         {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"}) {
        const auto a = atlas_of(type);
        for (const auto& [lo, hi] : a.coarse.covers)
            CHECK(a.coarse.level[std::size_t(lo)] < a.coarse.level[std::size_t(hi)]);
        for (const auto& [lo, hi] : a.fine.covers)
            CHECK(a.fine.level[std::size_t(lo)] < a.fine.level[std::size_t(hi)]);
    }
}
