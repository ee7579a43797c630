#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "chevalley/ring.hpp"

using namespace chevalley;

TEST_CASE("units and inverses in small rings") {
    Ring z9 = Ring::integers_mod(9);
    CHECK(z9.from_int(2).is_unit());
    CHECK(z9.from_int(2).inv() == z9.from_int(5));

    Ring z4 = Ring::integers_mod(4);
    CHECK_FALSE(z4.from_int(2).is_unit());
    CHECK_THROWS_AS(z4.from_int(2).inv(), NotAUnitError);

    Ring f7 = Ring::prime_field(7);
    CHECK(f7.from_int(3).inv() == f7.from_int(5));

    Ring z = Ring::integers();
    CHECK(z.from_int(-1).is_unit());
    CHECK_FALSE(z.from_int(2).is_unit());
}

TEST_CASE("unit/nonunit partition by full enumeration") {
    for (int64_t n : {4, 6, 9, 12}) {
        Ring r = Ring::integers_mod(n);
        size_t units = 0, nonunits = 0;
        for (auto& x : r.elements()) (x.is_unit() ? units : nonunits)++;
        CHECK(units + nonunits == static_cast<size_t>(n));
        for (auto& x : r.units()) CHECK((x.inv() * x).is_one());
    }
}

TEST_CASE("ring axioms on random samples") {
    std::mt19937_64 rng(7);
    for (Ring r : {Ring::integers_mod(12), Ring::prime_field(5), Ring::integers()}) {
        std::uniform_int_distribution<int64_t> d(-50, 50);
        for (int i = 0; i < 200; ++i) {
            RingElement a = r.from_int(d(rng)), b = r.from_int(d(rng)), c = r.from_int(d(rng));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + r.zero()) == a);
            CHECK((a * r.one()) == a);
        }
    }
}

TEST_CASE("mixed rings are rejected") {
    Ring a = Ring::integers_mod(4), b = Ring::integers_mod(9);
    CHECK_THROWS_AS(a.from_int(1) + b.from_int(1), MixedRingsError);
}

TEST_CASE("ideal membership agrees with brute-force closure") {
    Ring r = Ring::integers_mod(12);
    for (int64_t g : {0, 2, 3, 4, 6, 1}) {
        Ideal ideal(r, {r.from_int(g)});
        // closure of {g} under addition and ring multiples
        std::set<int64_t> closure{0};
        bool grew = true;
        while (grew) {
            grew = false;
            std::set<int64_t> next = closure;
            for (auto v : closure) {
                next.insert((v + g) % 12);
                for (int64_t m = 0; m < 12; ++m) next.insert((v * m) % 12);
            }
            if (next != closure) {
                closure = next;
                grew = true;
            }
        }
        for (auto& x : r.elements())
            CHECK(ideal.contains(x) == (closure.count(x.int_value()) > 0));
    }
}

TEST_CASE("jacobson radical") {
    CHECK(jacobson_radical(Ring::integers_mod(4)).principal_generator().int_value() == 2);
    CHECK(jacobson_radical(Ring::prime_field(5)).is_zero_ideal());
    CHECK(jacobson_radical(Ring::integers()).is_zero_ideal());
    // intersection of the maximal ideals (2) and (3) in Z/12
    CHECK(jacobson_radical(Ring::integers_mod(12)).principal_generator().int_value() == 6);
}

TEST_CASE("structure constant condition") {
    CHECK(check_condition(RootLabel::B2, Ring::integers_mod(9)).ok);
    CHECK_FALSE(check_condition(RootLabel::G2, Ring::integers_mod(6)).ok);
    CHECK(check_condition(RootLabel::A2, Ring::integers_mod(4)).ok);
    CHECK_FALSE(check_condition(RootLabel::B2, Ring::prime_field(2)).ok);
    CHECK(check_condition(RootLabel::G2, Ring::prime_field(7)).ok);
    CHECK_FALSE(check_condition(RootLabel::G2, Ring::prime_field(3)).ok);
    CHECK_FALSE(check_condition(RootLabel::F4, Ring::prime_field(2)).ok);
    CHECK(check_condition(RootLabel::F4, Ring::prime_field(3)).ok);
}

TEST_CASE("polynomial quotient ring equality") {
    // Z[x,y]/(x*y - 1): x*y reduces to 1
    Poly rel = Poly::variable(0) * Poly::variable(1) - Poly::constant(1);
    Ring q = Ring::poly_quot({"x", "y"}, {rel});
    RingElement x = q.var(0), y = q.var(1);
    CHECK(x * y == q.one());
    CHECK((x * x * y) == x);
    CHECK(x != y);

    auto rep = poly_quot_equal(x * x * y, x, 20, 42);
    CHECK(rep.equal);
    CHECK(rep.path == "normal_form");
}

TEST_CASE("polynomial division is exact and canonical") {
    Poly x = Poly::variable(0), y = Poly::variable(1);
    Poly p = x * x * y + x * y + Poly::constant(3);
    auto [quo, rem] = p.divmod(x);
    CHECK((quo * x + rem) == p);
    CHECK(rem == Poly::constant(3));
    CHECK_THROWS_AS(p.divexact(x), Error);
    CHECK((p * y).divexact(y) == p);
}
