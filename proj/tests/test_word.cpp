#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <deque>
#include <unordered_set>

#include "chevalley/rng.hpp"
#include "chevalley/word.hpp"

using namespace chevalley;

namespace {

GroupWord xw(const GroupContext& ctx, int root, const RingElement& t) {
    GroupWord w;
    w.push_x(root, t);
    return w;
}

// independent brute-force normal closure <seed>^{E(R)} over a finite ring,
// by plain orbit-then-subgroup enumeration on matrices
std::unordered_set<std::string> brute_normal_closure(const GroupContext& ctx, const Ring& r,
                                                const GroupElement& seed) {
    std::vector<GroupElement> gens;
    for (int root = 0; root < ctx.roots().num_roots(); ++root)
        for (auto& t : r.elements())
            if (!t.is_zero()) gens.push_back(ctx.x_elem(r, root, t));
    // conjugation orbit
    std::vector<GroupElement> orbit{seed};
    std::unordered_set<std::string> oseen{seed.mat().str()};
    std::deque<GroupElement> q{seed};
    while (!q.empty()) {
        GroupElement cur = q.front();
        q.pop_front();
        for (auto& g : gens) {
            GroupElement c = cur.conj(g);
            if (oseen.insert(c.mat().str()).second) {
                orbit.push_back(c);
                q.push_back(c);
            }
        }
    }
    // subgroup closure
    std::unordered_set<std::string> seen;
    std::vector<GroupElement> elems{ctx.identity(r)};
    seen.insert(elems[0].mat().str());
    std::deque<GroupElement> sq{elems[0]};
    while (!sq.empty()) {
        GroupElement cur = sq.front();
        sq.pop_front();
        for (auto& o : orbit) {
            GroupElement nxt = cur * o;
            if (seen.insert(nxt.mat().str()).second) sq.push_back(nxt);
        }
    }
    return seen;
}

}  // namespace

TEST_CASE("certificate shapes") {
    auto seed = Certificate::seed();
    const GroupContext& ctx = GroupContext::get(RootLabel::A2);
    Ring f3 = Ring::prime_field(3);
    auto elem = Certificate::elementary(xw(ctx, 0, f3.one()));

    CHECK(seed->normal_closure_shape());
    CHECK(Certificate::conjugate(seed, elem)->normal_closure_shape());
    CHECK(Certificate::commutator(elem, seed)->normal_closure_shape());
    CHECK(Certificate::commutator(seed, elem)->normal_closure_shape());
    CHECK(Certificate::product({seed, Certificate::inverse(seed)})->normal_closure_shape());
    // conjugation by a seed-bearing subtree breaks the shape...
    CHECK_FALSE(Certificate::conjugate(seed, seed)->normal_closure_shape());
    CHECK_FALSE(Certificate::commutator(seed, seed)->normal_closure_shape());
    // ...but the closure-safe constructor rewrites it as a product
    CHECK(Certificate::conjugate_by_closure(seed, seed)->normal_closure_shape());
}

TEST_CASE("certificate evaluation") {
    const GroupContext& ctx = GroupContext::get(RootLabel::A2);
    Ring f3 = Ring::prime_field(3);
    int alpha = ctx.roots().simple_root(0);
    GroupElement seedval = ctx.x_elem(f3, alpha, f3.one());
    GroupElement id = ctx.identity(f3);

    // empty word evaluates to the identity
    CHECK(GroupWord().evaluate(ctx, f3).is_identity());
    // cert = Commutator(Elementary, Seed) with identity seed is the identity
    auto cert = Certificate::commutator(Certificate::elementary(xw(ctx, alpha, f3.one())),
                                        Certificate::seed());
    CHECK(evaluate(cert, ctx, f3, &id).is_identity());

    // cert = Seed
    CHECK(check_certificate(Certificate::seed(), ctx, seedval, seedval));
    // cert = Conjugate(Seed, by x)
    GroupElement conjugator = ctx.x_elem(f3, ctx.roots().simple_root(1), f3.one());
    auto cc = Certificate::conjugate(Certificate::seed(),
                                     Certificate::elementary(xw(ctx, ctx.roots().simple_root(1),
                                                                f3.one())));
    CHECK(check_certificate(cc, ctx, seedval, seedval.conj(conjugator)));
    // wrong claim fails
    CHECK_FALSE(check_certificate(cc, ctx, seedval, seedval));
    // non-closure shape is rejected
    auto bad = Certificate::conjugate(Certificate::seed(), Certificate::seed());
    CHECK_THROWS_AS(check_certificate(bad, ctx, seedval, seedval), NotNormalClosureShapeError);
}

TEST_CASE("certificate values land in the brute-force normal closure") {
    const GroupContext& ctx = GroupContext::get(RootLabel::A2);
    Ring f2 = Ring::prime_field(2);
    WordSampler ws(ctx, f2, 5);
    GroupElement seed = ws.random_element_of_group();
    auto closure = brute_normal_closure(ctx, f2, seed);

    // random certificates over the seed stay inside
    std::vector<Certificate::Ptr> pool{Certificate::seed()};
    for (int i = 0; i < 60; ++i) {
        auto elem = Certificate::elementary(xw(ctx, ws.random_root(), f2.one()));
        auto base = pool[ws.rng()() % pool.size()];
        Certificate::Ptr next;
        switch (ws.rng()() % 4) {
            case 0: next = Certificate::conjugate(base, elem); break;
            case 1: next = Certificate::commutator(base, elem); break;
            case 2: next = Certificate::inverse(base); break;
            default: next = Certificate::product({base, pool[ws.rng()() % pool.size()]}); break;
        }
        pool.push_back(next);
        CHECK(next->normal_closure_shape());
        GroupElement v = evaluate(next, ctx, f2, &seed);
        CHECK(closure.count(v.mat().str()) > 0);
    }
}

TEST_CASE("depth-4 certificate moves saturate a full closure over GF(2)") {
    // adjoint A2 over GF(2): 168 elements; for this sampled seed the
    // depth-4 reachable set equals the brute-force normal closure
    const GroupContext& ctx = GroupContext::get(RootLabel::A2);
    Ring f2 = Ring::prime_field(2);
    int alpha = ctx.roots().simple_root(0);
    GroupElement seed = ctx.x_elem(f2, alpha, f2.one());
    auto closure = brute_normal_closure(ctx, f2, seed);

    std::vector<GroupElement> gens;
    for (int root = 0; root < ctx.roots().num_roots(); ++root)
        gens.push_back(ctx.x_elem(f2, root, f2.one()));

    std::unordered_set<std::string> reached{seed.mat().str()};
    std::vector<GroupElement> frontier{seed}, all{seed};
    for (int depth = 0; depth < 4; ++depth) {
        std::vector<GroupElement> next;
        for (auto& v : frontier) {
            std::vector<GroupElement> cands;
            cands.push_back(v.inverse());
            for (auto& g : gens) {
                cands.push_back(v.conj(g));
                cands.push_back(v.comm(g));
                cands.push_back(g.comm(v));
            }
            for (auto& a : all) cands.push_back(v * a);
            for (auto& c : cands)
                if (reached.insert(c.mat().str()).second) next.push_back(c);
        }
        for (auto& x : next) all.push_back(x);
        frontier = std::move(next);
    }
    CHECK(reached.size() == closure.size());
    for (auto h : reached) CHECK(closure.count(h) > 0);
}
