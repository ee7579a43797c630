#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chevalley/chevalley.hpp"
#include "chevalley/rng.hpp"
#include "chevalley/word.hpp"

using namespace chevalley;

TEST_CASE("structure constants: magnitudes and antisymmetry") {
    for (RootLabel l : {RootLabel::A2, RootLabel::B2, RootLabel::G2, RootLabel::A3,
                        RootLabel::B3, RootLabel::C3}) {
        const StructureTable& t = StructureTable::get(l);
        const RootSystem& rs = t.roots();
        bool saw_three = false;
        for (int a = 0; a < rs.num_roots(); ++a)
            for (int b = 0; b < rs.num_roots(); ++b) {
                if (rs.root_sum(a, b) < 0) continue;
                int64_t n = t.structure_constant(a, b);
                int p = rs.alpha_string(a, b).first;
                CHECK(std::abs(n) == p + 1);
                CHECK(n == -t.structure_constant(b, a));
                CHECK(n == -t.structure_constant(rs.negative(a), rs.negative(b)));
                if (std::abs(n) == 3) saw_three = true;
            }
        if (l == RootLabel::G2) CHECK(saw_three);
        if (l == RootLabel::A2 || l == RootLabel::A3) CHECK_FALSE(saw_three);
    }
}

TEST_CASE("A2 simple pair has |N| = 1") {
    const StructureTable& t = StructureTable::get(RootLabel::A2);
    const RootSystem& rs = t.roots();
    CHECK(std::abs(t.structure_constant(rs.simple_root(0), rs.simple_root(1))) == 1);
}

TEST_CASE("x elements: identity, additivity, termination degree") {
    const GroupContext& g2 = GroupContext::get(RootLabel::G2);
    Ring z4 = Ring::integers_mod(4);
    int alpha = g2.roots().simple_root(0);  // short
    CHECK(g2.x_elem(z4, alpha, z4.zero()).is_identity());
    CHECK(g2.x_elem(z4, alpha, z4.one()) * g2.x_elem(z4, alpha, z4.one()) ==
          g2.x_elem(z4, alpha, z4.from_int(2)));
    // (ad e_alpha)^4 = 0 on G2 for the short simple root: powers 0..3
    CHECK(g2.table().x_powers(alpha).size() == 4);
}

TEST_CASE("w and h elements") {
    const GroupContext& ctx = GroupContext::get(RootLabel::A2);
    Ring z = Ring::integers();
    int alpha = ctx.roots().simple_root(0);
    GroupElement w1 = ctx.w_elem(z, alpha, z.one());
    // entries on root spaces lie in {-1, 0, 1}
    for (int i = 0; i < ctx.dim(); ++i)
        for (int j = 0; j < ctx.dim(); ++j) {
            int64_t v = w1.mat().at(i, j).int_value();
            CHECK(v >= -1);
            CHECK(v <= 1);
        }
    CHECK(ctx.h_elem(z, alpha, z.one()).is_identity());
    // w_alpha(eps)^-1 = w_alpha(-eps)
    Ring f5 = Ring::prime_field(5);
    GroupElement w2 = ctx.w_elem(f5, alpha, f5.from_int(2));
    CHECK(w2.inverse() == ctx.w_elem(f5, alpha, f5.from_int(-2)));
    // w^2 = h(-1)
    GroupElement ww = ctx.w_elem(f5, alpha, f5.one()) * ctx.w_elem(f5, alpha, f5.one());
    CHECK(ww == ctx.h_elem(f5, alpha, f5.from_int(-1)));
    Ring z4 = Ring::integers_mod(4);
    CHECK_THROWS_AS(ctx.w_elem(z4, alpha, z4.from_int(2)), NotAUnitError);
}

TEST_CASE("weyl representatives and the root action") {
    for (RootLabel l : {RootLabel::A2, RootLabel::B2, RootLabel::G2}) {
        const GroupContext& ctx = GroupContext::get(l);
        const RootSystem& rs = ctx.roots();
        Ring f5 = Ring::prime_field(5);
        CHECK(ctx.weyl_rep(f5, rs.identity_weyl()).is_identity());
        for (int j = 0; j < rs.rank(); ++j)
            CHECK(ctx.weyl_rep(f5, rs.simple_reflection(j)) ==
                  ctx.w_elem(f5, rs.simple_root(j), f5.one()));
        for (const auto& w : rs.weyl_elements()) {
            GroupElement wrep = ctx.weyl_rep(f5, w);
            for (int a = 0; a < rs.num_roots(); ++a) {
                auto [img, sign] = ctx.conj_root(w, a);
                CHECK(img == rs.act(w, a));
                CHECK((sign == 1 || sign == -1));
                GroupElement lhs = ctx.x_elem(f5, a, f5.from_int(3)).conj(wrep);
                CHECK(lhs == ctx.x_elem(f5, img, f5.from_int(3 * sign)));
            }
        }
    }
}

TEST_CASE("x_alpha(r)^{w_alpha(1)} = x_{-alpha}(-r)") {
    const GroupContext& ctx = GroupContext::get(RootLabel::A2);
    Ring z = Ring::integers();
    int alpha = ctx.roots().simple_root(0);
    GroupElement w1 = ctx.w_elem(z, alpha, z.one());
    GroupElement lhs = ctx.x_elem(z, alpha, z.from_int(2)).conj(w1);
    CHECK(lhs == ctx.x_elem(z, ctx.roots().negative(alpha), z.from_int(-2)));
}

TEST_CASE("commutator expansion matches matrices exhaustively over GF(7)") {
    for (RootLabel l : {RootLabel::A2, RootLabel::B2, RootLabel::G2}) {
        const GroupContext& ctx = GroupContext::get(l);
        const RootSystem& rs = ctx.roots();
        Ring f7 = Ring::prime_field(7);
        for (int a = 0; a < rs.num_roots(); ++a)
            for (int b = 0; b < rs.num_roots(); ++b) {
                if (a == b || rs.negative(a) == b) continue;
                for (auto& t : f7.elements())
                    for (auto& u : f7.elements()) {
                        GroupElement lhs = ctx.x_elem(f7, a, t).comm(ctx.x_elem(f7, b, u));
                        GroupElement rhs = ctx.identity(f7);
                        for (const auto& term : ctx.commutator_terms(a, b))
                            rhs = rhs * ctx.x_elem(f7, term.rootidx,
                                                   f7.from_int(term.coeff) * t.pow(term.i) *
                                                       u.pow(term.j));
                        CHECK(lhs == rhs);
                    }
            }
    }
}

TEST_CASE("commutator expansion special cases") {
    const GroupContext& a2 = GroupContext::get(RootLabel::A2);
    const RootSystem& rs2 = a2.roots();
    // simple pair: single factor with coefficient +-1
    auto terms = a2.commutator_terms(rs2.simple_root(0), rs2.simple_root(1));
    REQUIRE(terms.size() == 1);
    CHECK(std::abs(terms[0].coeff) == 1);
    CHECK(terms[0].i == 1);
    CHECK(terms[0].j == 1);
    // opposite roots are rejected
    CHECK_THROWS_AS(a2.commutator_terms(rs2.simple_root(0), rs2.negative(rs2.simple_root(0))),
                    OppositeRootsError);
    // commuting pair: empty word
    const GroupContext& b2 = GroupContext::get(RootLabel::B2);
    const RootSystem& rsb = b2.roots();
    int lng = rsb.simple_root(0);                  // long simple
    int hi = rsb.root_sum(lng, rsb.simple_root(1));  // long + short
    REQUIRE(hi >= 0);
    int top = rsb.root_sum(hi, rsb.simple_root(1));
    REQUIRE(top >= 0);
    CHECK(b2.commutator_terms(lng, top).empty());
    // short simple, long simple in B2: two factors
    CHECK(b2.commutator_terms(rsb.simple_root(1), rsb.simple_root(0)).size() == 2);
}

TEST_CASE("is_central") {
    const GroupContext& ctx = GroupContext::get(RootLabel::A2);
    Ring f3 = Ring::prime_field(3);
    CHECK(ctx.is_central(ctx.identity(f3)));
    int alpha = ctx.roots().simple_root(0);
    CHECK_FALSE(ctx.is_central(ctx.x_elem(f3, alpha, f3.one())));
    // the only torus element acting trivially on all root spaces is e
    for (auto& e1 : f3.units())
        for (auto& e2 : f3.units()) {
            GroupElement h = ctx.h_elem(f3, ctx.roots().simple_root(0), e1) *
                             ctx.h_elem(f3, ctx.roots().simple_root(1), e2);
            CHECK(ctx.is_central(h) == h.is_identity());
        }
}

TEST_CASE("peel round trips") {
    const GroupContext& ctx = GroupContext::get(RootLabel::B2);
    Ring z9 = Ring::integers_mod(9);
    auto pos = ctx.positive_roots();
    GroupElement m = ctx.x_elem(z9, pos[0], z9.from_int(3));
    auto params = ctx.peel(m, pos);
    REQUIRE(params.size() == 1);
    CHECK(params[0].first == pos[0]);
    CHECK(params[0].second == z9.from_int(3));

    GroupElement prod = ctx.x_elem(z9, pos[0], z9.one()) * ctx.x_elem(z9, pos[1], z9.one());
    auto params2 = ctx.peel(prod, pos);
    GroupElement re = ctx.identity(z9);
    for (auto& [root, t] : params2) re = re * ctx.x_elem(z9, root, t);
    CHECK(re == prod);

    // a non-unipotent matrix is rejected
    CHECK_THROWS_AS(ctx.peel(ctx.w_elem(z9, pos[0], z9.one()), pos), NotUnipotentError);
}

TEST_CASE("group word evaluation is a homomorphism with inverses") {
    const GroupContext& ctx = GroupContext::get(RootLabel::A2);
    Ring f5 = Ring::prime_field(5);
    WordSampler ws(ctx, f5, 11);
    for (int i = 0; i < 20; ++i) {
        GroupWord w1 = ws.random_word();
        GroupWord w2 = ws.random_word();
        GroupWord cat = w1;
        cat.append(w2);
        CHECK(cat.evaluate(ctx, f5) == w1.evaluate(ctx, f5) * w2.evaluate(ctx, f5));
        CHECK(w1.inverse().evaluate(ctx, f5) == w1.evaluate(ctx, f5).inverse());
    }
    CHECK(GroupWord().evaluate(ctx, f5).is_identity());
}

TEST_CASE("commutator identity [x,yz]^{z^-1} = [z^-1,x][x,y] on random triples") {
    for (RootLabel l : {RootLabel::A2, RootLabel::B2, RootLabel::G2}) {
        const GroupContext& ctx = GroupContext::get(l);
        Ring f5 = Ring::prime_field(5);
        WordSampler ws(ctx, f5, 1234);
        for (int i = 0; i < 100; ++i) {
            GroupElement x = ws.random_element_of_group();
            GroupElement y = ws.random_element_of_group();
            GroupElement z = ws.random_element_of_group();
            CHECK(x.comm(y * z).conj(z.inverse()) == z.inverse().comm(x) * x.comm(y));
        }
    }
}
