#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "chevalley/decompose.hpp"
#include "chevalley/rng.hpp"
#include "chevalley/subgroup.hpp"

using namespace chevalley;

TEST_CASE("big cell membership basics") {
    const GroupContext& ctx = GroupContext::get(RootLabel::A2);
    Ring f3 = Ring::prime_field(3);
    CHECK(in_big_cell(ctx, ctx.identity(f3)));
    // a Weyl reflection representative is not in the big cell
    GroupElement s = ctx.weyl_rep(f3, ctx.roots().simple_reflection(0));
    CHECK_FALSE(in_big_cell(ctx, s));
}

TEST_CASE("big cell over GF(2) equals the U T U^- product set") {
    const GroupContext& ctx = GroupContext::get(RootLabel::A2);
    Ring f2 = Ring::prime_field(2);
    // enumerate U, T (trivial over GF(2)) and U^- exhaustively
    std::set<std::string> cell;
    auto pos = ctx.positive_roots();
    auto neg = ctx.negative_roots();
    auto enum_unipotent = [&](const std::vector<int>& roots) {
        std::vector<GroupElement> out;
        size_t count = 1u << roots.size();
        for (size_t mask = 0; mask < count; ++mask) {
            GroupElement g = ctx.identity(f2);
            for (size_t i = 0; i < roots.size(); ++i)
                if (mask & (1u << i)) g = g * ctx.x_elem(f2, roots[i], f2.one());
            out.push_back(g);
        }
        return out;
    };
    for (auto& u : enum_unipotent(pos))
        for (auto& v : enum_unipotent(neg)) cell.insert((u * v).mat().str());
    CHECK(cell.size() == 64);

    size_t in_cell_count = 0;
    elementary_subgroup(ctx, f2).for_each([&](const GroupElement& g) {
        bool member = cell.count(g.mat().str()) > 0;
        CHECK(in_big_cell(ctx, g) == member);
        if (member) ++in_cell_count;
    });
    CHECK(in_cell_count == 64);
}

TEST_CASE("congruence kernel mod 2 lies in the big cell") {
    const GroupContext& ctx = GroupContext::get(RootLabel::A2);
    Ring z4 = Ring::integers_mod(4);
    Ring z2 = Ring::integers_mod(2);
    size_t kernel = 0;
    elementary_subgroup(ctx, z4).for_each([&](const GroupElement& g) {
        if (!g.mapped(z2).is_identity()) return;
        ++kernel;
        CHECK(in_big_cell(ctx, g));
    });
    CHECK(kernel == 256);
}

TEST_CASE("gauss decomposition basics") {
    const GroupContext& ctx = GroupContext::get(RootLabel::A2);
    Ring f5 = Ring::prime_field(5);
    GaussFactorization f = gauss_decompose(ctx, ctx.identity(f5), CellOrientation::UmBw);
    CHECK(f.w.is_identity());
    CHECK(f.first.is_identity());
    CHECK(f.torus.is_identity());
    CHECK(f.second.is_identity());

    GroupElement w0rep = ctx.weyl_rep(f5, ctx.roots().longest());
    GaussFactorization f0 = gauss_decompose(ctx, w0rep, CellOrientation::UmBw);
    CHECK(f0.w.perm == ctx.roots().longest().perm);
    CHECK(f0.first.is_identity());
    CHECK(f0.second.is_identity());

    Ring z4 = Ring::integers_mod(4);
    CHECK_THROWS_AS(gauss_decompose(ctx, ctx.identity(z4), CellOrientation::UmBw),
                    NotAFieldError);
}

TEST_CASE("gauss round trips on random words") {
    for (RootLabel l : {RootLabel::A2, RootLabel::B2, RootLabel::G2}) {
        const GroupContext& ctx = GroupContext::get(l);
        Ring f5 = Ring::prime_field(5);
        WordSampler ws(ctx, f5, 99);
        for (int i = 0; i < 50; ++i) {
            GroupElement g = ws.random_element_of_group();
            for (auto o : {CellOrientation::UmBw, CellOrientation::UBw}) {
                GaussFactorization f = gauss_decompose(ctx, g, o);
                CHECK(f.product() == g);
            }
        }
    }
}

TEST_CASE("peel examples") {
    const GroupContext& ctx = GroupContext::get(RootLabel::B2);
    Ring z9 = Ring::integers_mod(9);
    CHECK(peel_unipotent(ctx, ctx.identity(z9)).empty());
    int a = ctx.roots().simple_root(0);
    auto params = peel_unipotent(ctx, ctx.x_elem(z9, a, z9.from_int(3)));
    REQUIRE(params.size() == 1);
    CHECK(params[0].second == z9.from_int(3));
}

TEST_CASE("bruhat cells partition the group over GF(2) with the right sizes") {
    const GroupContext& ctx = GroupContext::get(RootLabel::A2);
    const RootSystem& rs = ctx.roots();
    Ring f2 = Ring::prime_field(2);
    std::map<std::vector<int>, size_t> sizes;
    size_t total = 0;
    elementary_subgroup(ctx, f2).for_each([&](const GroupElement& g) {
        WeylElement w = bruhat_cell(ctx, g);
        sizes[w.perm] += 1;
        ++total;
    });
    CHECK(total == 168);
    size_t sum = 0;
    for (const auto& w : rs.weyl_elements()) {
        size_t expect = (1u << w.length) * 8;
        CHECK(sizes[w.perm] == expect);
        sum += sizes[w.perm];
    }
    CHECK(sum == 168);
}

TEST_CASE("identity and x_{-alpha}(1) bruhat cells") {
    const GroupContext& ctx = GroupContext::get(RootLabel::A2);
    Ring f2 = Ring::prime_field(2);
    CHECK(bruhat_cell(ctx, ctx.identity(f2)).is_identity());
    int alpha = ctx.roots().simple_root(0);
    WeylElement w = bruhat_cell(ctx, ctx.x_elem(f2, ctx.roots().negative(alpha), f2.one()));
    CHECK(w.perm == ctx.roots().simple_reflection(0).perm);
}

TEST_CASE("bruhat cell is contained in the gauss cell of the same w") {
    const GroupContext& ctx = GroupContext::get(RootLabel::A2);
    Ring f3 = Ring::prime_field(3);
    WordSampler ws(ctx, f3, 17);
    for (int i = 0; i < 40; ++i) {
        GroupElement g = ws.random_element_of_group();
        WeylElement w = bruhat_cell(ctx, g);
        GroupElement wrep = ctx.weyl_rep(f3, w);
        CHECK(in_big_cell(ctx, g * wrep.inverse()));
    }
}

TEST_CASE("gauss covering is exhaustive over GF(2) and GF(3) for A2 and B2") {
    for (RootLabel l : {RootLabel::A2, RootLabel::B2}) {
        const GroupContext& ctx = GroupContext::get(l);
        for (int64_t p : {2, 3}) {
            Ring f = Ring::prime_field(p);
            size_t failures = 0;
            elementary_subgroup(ctx, f).for_each([&](const GroupElement& g) {
                GaussFactorization fac = gauss_decompose(ctx, g, CellOrientation::UmBw);
                if (fac.product() != g) ++failures;
            });
            CHECK(failures == 0);
        }
    }
}
