#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chevalley/root_system.hpp"

using namespace chevalley;

TEST_CASE("root counts match the classification") {
    CHECK(RootSystem::get(RootLabel::A2).num_roots() == 6);
    CHECK(RootSystem::get(RootLabel::B2).num_roots() == 8);
    CHECK(RootSystem::get(RootLabel::G2).num_roots() == 12);
    CHECK(RootSystem::get(RootLabel::A3).num_roots() == 12);
    CHECK(RootSystem::get(RootLabel::B3).num_roots() == 18);
    CHECK(RootSystem::get(RootLabel::C3).num_roots() == 18);
    CHECK_THROWS_AS(RootSystem::build(RootLabel::F4), UnsupportedTypeError);
}

TEST_CASE("lengths") {
    const RootSystem& a2 = RootSystem::get(RootLabel::A2);
    for (int i = 0; i < a2.num_roots(); ++i) CHECK(a2.norm2(i) == a2.norm2(0));

    const RootSystem& g2 = RootSystem::get(RootLabel::G2);
    int shorts = 0, longs = 0;
    for (int i = 0; i < g2.num_roots(); ++i) (g2.is_long(i) ? longs : shorts)++;
    CHECK(shorts == 6);
    CHECK(longs == 6);
}

TEST_CASE("B2 cartan matrix") {
    const RootSystem& b2 = RootSystem::get(RootLabel::B2);
    CHECK(b2.cartan(0, 0) == 2);
    CHECK(b2.cartan(1, 1) == 2);
    CHECK(b2.cartan(0, 1) == -2);
    CHECK(b2.cartan(1, 0) == -1);
}

TEST_CASE("closed under negation and reflections permute roots") {
    for (RootLabel l : {RootLabel::A2, RootLabel::B2, RootLabel::G2, RootLabel::A3,
                        RootLabel::B3, RootLabel::C3}) {
        const RootSystem& rs = RootSystem::get(l);
        for (int i = 0; i < rs.num_roots(); ++i) {
            CHECK(rs.negative(rs.negative(i)) == i);
            std::vector<bool> hit(rs.num_roots(), false);
            for (int j = 0; j < rs.num_roots(); ++j) hit[rs.reflect(i, j)] = true;
            for (bool b : hit) CHECK(b);
            CHECK(rs.reflect(i, rs.reflect(i, i)) == i);
        }
    }
}

TEST_CASE("root sums and strings") {
    const RootSystem& a2 = RootSystem::get(RootLabel::A2);
    int a = a2.simple_root(0), b = a2.simple_root(1);
    CHECK(a2.root_sum(a, b) >= 0);
    CHECK(a2.root_sum(a, a) < 0);  // 2a is not a root

    const RootSystem& g2 = RootSystem::get(RootLabel::G2);
    int as = g2.simple_root(0);  // short
    int bl = g2.simple_root(1);  // long
    CHECK_FALSE(g2.is_long(as));
    CHECK(g2.is_long(bl));
    auto [p, q] = g2.alpha_string(as, bl);
    CHECK(p == 0);
    CHECK(q == 3);
}

TEST_CASE("weyl group orders and the longest element") {
    CHECK(RootSystem::get(RootLabel::A2).weyl_elements().size() == 6);
    CHECK(RootSystem::get(RootLabel::B2).weyl_elements().size() == 8);
    CHECK(RootSystem::get(RootLabel::G2).weyl_elements().size() == 12);
    CHECK(RootSystem::get(RootLabel::A3).weyl_elements().size() == 24);
    CHECK(RootSystem::get(RootLabel::B3).weyl_elements().size() == 48);
    CHECK(RootSystem::get(RootLabel::C3).weyl_elements().size() == 48);

    const RootSystem& a2 = RootSystem::get(RootLabel::A2);
    const WeylElement& w0 = a2.longest();
    for (int i = 0; i < a2.num_roots(); ++i)
        if (a2.is_positive(i)) CHECK_FALSE(a2.is_positive(a2.act(w0, i)));
    CHECK(a2.compose(w0, w0).is_identity());
}

TEST_CASE("length function and words agree") {
    for (RootLabel l : {RootLabel::A2, RootLabel::B2, RootLabel::G2, RootLabel::A3}) {
        const RootSystem& rs = RootSystem::get(l);
        int l0 = rs.longest().length;
        for (const auto& w : rs.weyl_elements()) {
            CHECK(rs.weyl_length(w) == w.length);
            CHECK(rs.from_word(w.word).perm == w.perm);
            // l(w) + l(w0 w) = l(w0)
            WeylElement w0w = rs.compose(rs.longest(), w);
            CHECK(w.length + w0w.length == l0);
        }
    }
}

TEST_CASE("positivity is uniform-sign in the simple basis") {
    for (RootLabel l : {RootLabel::B3, RootLabel::G2}) {
        const RootSystem& rs = RootSystem::get(l);
        for (int i = 0; i < rs.num_roots(); ++i) {
            bool pos = rs.is_positive(i);
            for (int c : rs.root(i)) {
                if (pos) CHECK(c >= 0);
                else CHECK(c <= 0);
            }
        }
    }
}

TEST_CASE("json serialization is stable") {
    std::string j = RootSystem::get(RootLabel::A2).json();
    CHECK(j.find("\"type\":\"A2\"") != std::string::npos);
    CHECK(j.find("\"roots\"") != std::string::npos);
}
