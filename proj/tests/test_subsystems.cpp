#include "strata/subsystems.hpp"

#include "oracles.hpp"
#include "strata/errors.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace strata;

namespace {

RootSystem make(const std::string& type) { return RootSystem(TypeSpec::parse(type)); }

int root_index(const RootSystem& rs, std::initializer_list<Coord> coords) {
    const int idx = rs.index_of(RootVec(coords));
    REQUIRE(idx >= 0);
    return idx;
}

}  // namespace

TEST_CASE("closure: trivial cases") {
    const auto b2 = make("B2");
    CHECK(closure(b2, std::vector<int>{}).none());

    // closure of one root is its +/- pair in a reduced system
    for (std::size_t i = 0; i < b2.num_roots(); ++i) {
        const auto c = closure(b2, std::vector<int>{int(i)});
        CHECK(c.count() == 2);
        CHECK(c.test(i));
        CHECK(c.test(std::size_t(b2.negation(int(i)))));
    }
}

TEST_CASE("closure: G2 long roots at 120 degrees generate the long A2") {
    const auto g2 = make("G2");
    // alpha2 = (0,1) and 3*alpha1 + alpha2 = (3,1) are long roots at 120 degrees.
    const int b1 = root_index(g2, {0, 1});
    const int b2 = root_index(g2, {3, 1});
    CHECK(g2.pairing(b1, b2) == -1);
    const auto c = closure(g2, {b1, b2});
    CHECK(c.count() == 6);
    for (int i : c.indices()) CHECK(g2.norm2(i) == 6);
}

TEST_CASE("closure: two short B2 roots generate everything") {
    const auto b2 = make("B2");
    // e1 = alpha1 + alpha2 = (1,1), e2 = alpha2 = (0,1)
    const int e1 = root_index(b2, {1, 1});
    const int e2 = root_index(b2, {0, 1});
    const auto c = closure(b2, {e1, e2});
    CHECK(c == b2.full_mask());
    CHECK(c == oracles::closed_symmetric_hull(b2, RootMask::from_indices(8, {e1, e2})));
}

TEST_CASE("closure agrees with the closed-symmetric hull oracle") {
    std::mt19937_64 rng(1123);
    for (const std::string type : {"A2", "B2", "G2", "A3", "B3", "C3"}) {
        const auto rs = make(type);
        std::uniform_int_distribution<std::size_t> size_d(1, 4);
        std::uniform_int_distribution<std::size_t> pick(0, rs.num_roots() - 1);
        for (int iter = 0; iter < 100; ++iter) {
            std::vector<int> s;
            const std::size_t n = size_d(rng);
            for (std::size_t k = 0; k < n; ++k) s.push_back(int(pick(rng)));
            const auto c = closure(rs, s);
            CHECK(c == oracles::closed_symmetric_hull(rs, RootMask::from_indices(rs.num_roots(), s)));
        }
    }
}

TEST_CASE("closure is idempotent and negation-invariant") {
    std::mt19937_64 rng(20240803);
    for (const std::string type :
         {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"}) {
        const auto rs = make(type);
        std::uniform_int_distribution<std::size_t> size_d(0, 5);
        std::uniform_int_distribution<std::size_t> pick(0, rs.num_roots() - 1);
        std::uniform_int_distribution<int> coin(0, 1);
        for (int iter = 0; iter < 1000; ++iter) {
            std::vector<int> s;
            const std::size_t n = size_d(rng);
            for (std::size_t k = 0; k < n; ++k) s.push_back(int(pick(rng)));
            const auto c = closure(rs, s);
            CHECK(closure(rs, c) == c);

            std::vector<int> flipped;
            for (int i : s) flipped.push_back(coin(rng) ? rs.negation(i) : i);
            CHECK(closure(rs, flipped) == c);
        }
    }
}

TEST_CASE("enumerate_subsystems counts") {
    CHECK(enumerate_subsystems(make("A1")).size() == 2);
    CHECK(enumerate_subsystems(make("A1A1")).size() == 4);
    CHECK(enumerate_subsystems(make("A2")).size() == 5);
    CHECK(enumerate_subsystems(make("B2")).size() == 7);
    CHECK(enumerate_subsystems(make("G2")).size() == 12);
}

TEST_CASE("B2 subsystem census: 2 long A1, 2 short A1, 1 long A1^2") {
    const auto b2 = make("B2");
    const auto subs = enumerate_subsystems(b2);
    REQUIRE(subs.size() == 7);
    int empty = 0, full = 0, long_a1 = 0, short_a1 = 0, a1a1 = 0;
    for (const auto& s : subs) {
        if (s.none()) { ++empty; continue; }
        if (s == b2.full_mask()) { ++full; continue; }
        const auto idx = s.indices();
        const bool all_long = std::all_of(idx.begin(), idx.end(),
                                          [&](int i) { return b2.norm2(i) == 4; });
        if (s.count() == 2) (all_long ? long_a1 : short_a1)++;
        if (s.count() == 4) {
            CHECK(all_long);
            ++a1a1;
        }
    }
    CHECK(empty == 1);
    CHECK(full == 1);
    CHECK(long_a1 == 2);
    CHECK(short_a1 == 2);
    CHECK(a1a1 == 1);
}

TEST_CASE("G2 subsystem census matches the worked example") {
    const auto g2 = make("G2");
    const auto subs = enumerate_subsystems(g2);
    REQUIRE(subs.size() == 12);
    std::map<std::string, int> by_label;
    for (const auto& s : subs) ++by_label[identify_type(g2, s).str()];
    CHECK(by_label["0"] == 1);
    CHECK(by_label["A1"] == 6);    // three long + three short
    CHECK(by_label["A1^2"] == 3);
    CHECK(by_label["A2"] == 1);
    CHECK(by_label["G2"] == 1);
}

TEST_CASE("every enumerated subsystem satisfies the three defining invariants") {
    for (const std::string type : {"A2", "B2", "G2", "B3", "C3", "D4"}) {
        const auto rs = make(type);
        for (const auto& psi : enumerate_subsystems(rs)) {
            CHECK(oracles::is_symmetric_set(rs, psi));
            CHECK(oracles::is_closed_set(rs, psi));
            CHECK(closure(rs, psi) == psi);  // saturation
        }
    }
}

TEST_CASE("enumeration agrees with the brute-force symmetric-closed oracle") {
    for (const std::string type : {"A1", "A1A1", "A2", "B2", "G2", "B3", "C3"}) {
        const auto rs = make(type);
        const auto got = enumerate_subsystems(rs);
        const auto expected = oracles::enumerate_symmetric_closed(rs);
        CHECK_MESSAGE(got == expected, type);
    }
}

TEST_CASE("enumeration refuses ranks above the limit") {
    CHECK_THROWS_AS((void)enumerate_subsystems(make("E6")), CapabilityError);
    CHECK_THROWS_AS((void)enumerate_subsystems(make("A1A1A1A1A1")), CapabilityError);
    CHECK_NOTHROW((void)enumerate_subsystems(make("A1A1A1A1A1"), 5));
}

TEST_CASE("weyl_orbit: fixed points and the G2 A1^2 orbit") {
    const auto g2 = make("G2");
    CHECK(weyl_orbit(g2, g2.empty_mask()).size() == 1);
    CHECK(weyl_orbit(g2, g2.full_mask()).size() == 1);

    const auto subs = enumerate_subsystems(g2);
    for (const auto& s : subs) {
        if (identify_type(g2, s).str() != "A1^2") continue;
        const auto orbit = weyl_orbit(g2, s);
        CHECK(orbit.size() == 3);
        for (const auto& member : orbit) CHECK(identify_type(g2, member).str() == "A1^2");
    }
}

TEST_CASE("conjugacy classes of G2 match the worked example") {
    const auto g2 = make("G2");
    const auto subs = enumerate_subsystems(g2);
    const auto part = conjugacy_classes(g2, subs);
    REQUIRE(part.classes.size() == 6);
    std::vector<std::pair<std::string, long>> got;
    for (const auto& c : part.classes)
        got.emplace_back(c.label.str(), long(c.embedding_number));
    const std::vector<std::pair<std::string, long>> expected = {
        {"G2", 1}, {"A2", 2}, {"A1^2", 9}, {"A1", 18}, {"A1", 18}, {"0", 12}};
    CHECK(got == expected);

    // The A1^2 class reproduces 3 * 12 / 4 = 9.
    const auto& c = part.classes[2];
    CHECK(c.orbit_size == 3);
    CHECK(weyl_order(g2.spec()) == 12);
    CHECK(weyl_order(c.label) == 4);
    CHECK(c.weyl_index == 3);
    CHECK(c.embedding_number == 9);
}

TEST_CASE("conjugacy classes of A2") {
    const auto a2 = make("A2");
    const auto part = conjugacy_classes(a2, enumerate_subsystems(a2));
    REQUIRE(part.classes.size() == 3);
    CHECK(part.classes[0].label.str() == "A2");
    CHECK(part.classes[0].embedding_number == 1);
    CHECK(part.classes[1].label.str() == "A1");
    CHECK(part.classes[1].embedding_number == 9);
    CHECK(part.classes[2].label.trivial());
    CHECK(part.classes[2].embedding_number == 6);
}

TEST_CASE("top and bottom embedding numbers for every corpus type") {
    for (const std::string type :
         {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"}) {
        const auto rs = make(type);
        const auto subs = enumerate_subsystems(rs);
        const auto part = conjugacy_classes(rs, subs);
        const auto w = weyl_order(rs.spec());
        exact::Int sum_m = 0, sum_idx = 0;
        std::size_t member_count = 0;
        for (const auto& c : part.classes) {
            if (c.representative == rs.full_mask()) CHECK(c.embedding_number == 1);
            if (c.representative.none()) CHECK(c.embedding_number == w);
            CHECK(c.embedding_number == c.weyl_index * exact::Int(c.orbit_size));
            CHECK(w % exact::Int(c.orbit_size) == 0);
            sum_m += c.embedding_number;
            sum_idx += c.weyl_index * exact::Int(c.members.size());
            member_count += c.members.size();
        }
        CHECK(sum_m == sum_idx);
        CHECK(member_count == subs.size());
    }
}

TEST_CASE("embedding_number: pinned values") {
    const auto g2 = make("G2");
    CHECK(embedding_number(g2, g2.full_mask()) == 1);
    CHECK(embedding_number(g2, g2.empty_mask()) == 12);
    for (const auto& s : enumerate_subsystems(g2))
        if (identify_type(g2, s).str() == "A1^2") CHECK(embedding_number(g2, s) == 9);
}

TEST_CASE("subsystem masks are distinct and sorted") {
    const auto d4 = make("D4");
    const auto subs = enumerate_subsystems(d4);
    for (std::size_t i = 0; i + 1 < subs.size(); ++i) {
        CHECK(subs[i] < subs[i + 1]);
    }
}
