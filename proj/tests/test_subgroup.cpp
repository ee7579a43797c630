#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chevalley/rng.hpp"
#include "chevalley/subgroup.hpp"

using namespace chevalley;

TEST_CASE("elementary subgroup sizes at desk scale") {
    const GroupContext& a2 = GroupContext::get(RootLabel::A2);
    CHECK(elementary_subgroup(a2, Ring::prime_field(2)).size() == 168);
    CHECK(elementary_subgroup(a2, Ring::prime_field(3)).size() == 5616);
}

TEST_CASE("levels of basic subgroups") {
    const GroupContext& ctx = GroupContext::get(RootLabel::A2);
    Ring z4 = Ring::integers_mod(4);

    SubgroupHandle e = elementary_subgroup(ctx, z4);
    LevelData le = level(e);
    CHECK(le.level.is_unit_ideal());

    SubgroupHandle triv =
        SubgroupHandle::generated(ctx, z4, {ctx.identity(z4)}, /*normalized_by_e=*/true);
    CHECK(level(triv).level.is_zero_ideal());

    Ideal two(z4, {z4.from_int(2)});
    SubgroupHandle e2 = relative_elementary(ctx, z4, two);
    LevelData l2 = level(e2);
    CHECK(l2.level == two);

    // condition violation is reported
    const GroupContext& b2 = GroupContext::get(RootLabel::B2);
    SubgroupHandle eb = elementary_subgroup(b2, z4);
    CHECK_THROWS_AS(level(eb), ConditionViolatedError);
}

TEST_CASE("relative elementary subgroups at the extreme ideals") {
    const GroupContext& ctx = GroupContext::get(RootLabel::A2);
    Ring f3 = Ring::prime_field(3);
    CHECK(relative_elementary(ctx, f3, Ideal(f3, {f3.zero()})).size() == 1);
    CHECK(relative_elementary(ctx, f3, Ideal(f3, {f3.one()})).size() == 5616);
}

TEST_CASE("congruence subgroups") {
    const GroupContext& ctx = GroupContext::get(RootLabel::A2);
    Ring z4 = Ring::integers_mod(4);
    Ideal two(z4, {z4.from_int(2)});
    CongruencePair cp = congruence(ctx, z4, two);

    SubgroupHandle e = elementary_subgroup(ctx, z4);
    size_t kernel = 0, full = 0;
    e.for_each([&](const GroupElement& g) {
        if (cp.principal.contains(g)) ++kernel;
        if (cp.full.contains(g)) ++full;
    });
    CHECK(kernel == 256);
    CHECK(full >= kernel);

    // extreme ideals
    CongruencePair unit = congruence(ctx, z4, Ideal(z4, {z4.one()}));
    CHECK(unit.principal.contains(e.for_each, true) == true);  // placeholder
}

TEST_CASE("relative elementary kernel containment") {
    const GroupContext& ctx = GroupContext::get(RootLabel::A2);
    Ring z4 = Ring::integers_mod(4);
    Ideal two(z4, {z4.from_int(2)});
    SubgroupHandle e2 = relative_elementary(ctx, z4, two);
    CongruencePair cp = congruence(ctx, z4, two);
    CHECK(e2.all_of([&](const GroupElement& g) { return cp.principal.contains(g); }));
}

TEST_CASE("sandwich for seeded closures") {
    const GroupContext& ctx = GroupContext::get(RootLabel::A2);
    Ring z4 = Ring::integers_mod(4);
    int alpha = ctx.roots().simple_root(0);

    // H = <x_alpha(2)>^E has level (2)
    SubgroupHandle h =
        SubgroupHandle::generated(ctx, z4, {ctx.x_elem(z4, alpha, z4.from_int(2))}, true);
    SandwichReport rep = sandwich_check(h);
    CHECK(rep.ok());
    CHECK(rep.level.principal_generator().int_value() == 2);

    // central subgroup: level (0)
    SubgroupHandle c = SubgroupHandle::generated(ctx, z4, {ctx.identity(z4)}, true);
    SandwichReport rep0 = sandwich_check(c);
    CHECK(rep0.ok());
    CHECK(rep0.level.is_zero_ideal());

    // randomized closures over Z/4 and GF(3)
    for (Ring r : {z4, Ring::prime_field(3)}) {
        WordSampler ws(ctx, r, 31);
        for (int i = 0; i < 8; ++i) {
            GroupElement g = ws.random_element_of_group();
            SubgroupHandle hh = SubgroupHandle::generated(ctx, r, {g}, true);
            CHECK(sandwich_check(hh).ok());
        }
    }
}

TEST_CASE("perfectness and hall-witt") {
    const GroupContext& ctx = GroupContext::get(RootLabel::A2);
    Ring f3 = Ring::prime_field(3);
    PerfectnessReport pr = perfectness(ctx, f3);
    CHECK(pr.perfect);
    CHECK(pr.e_size == 5616);

    // central subgroup: [C, E] = {e}, identity holds trivially
    SubgroupHandle c = SubgroupHandle::generated(ctx, f3, {ctx.identity(f3)}, true);
    CHECK(mutual_commutant_with_e(c).size() == 1);
    CHECK(hall_witt_check(c));

    // a couple of seeded subgroups
    WordSampler ws(ctx, f3, 77);
    for (int i = 0; i < 3; ++i) {
        SubgroupHandle h =
            SubgroupHandle::generated(ctx, f3, {ws.random_element_of_group()}, true);
        CHECK(hall_witt_check(h));
    }

    // type C2 over a ring with a GF(2) residue field is rejected
    const GroupContext& b2 = GroupContext::get(RootLabel::B2);
    CHECK_THROWS_AS(perfectness(b2, Ring::prime_field(2)), HypothesisViolatedError);
}

TEST_CASE("standard commutation formula at Z/4") {
    const GroupContext& ctx = GroupContext::get(RootLabel::A2);
    Ring z4 = Ring::integers_mod(4);
    CHECK(commutation_formula_check(ctx, z4, Ideal(z4, {z4.from_int(2)})));
    // extreme ideals
    CHECK(commutation_formula_check(ctx, z4, Ideal(z4, {z4.zero()})));
    CHECK(commutation_formula_check(ctx, z4, Ideal(z4, {z4.one()})));
}
