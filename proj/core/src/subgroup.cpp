#include "chevalley/subgroup.hpp"

#include <algorithm>
#include <deque>

#include "packed.hpp"

namespace chevalley {

struct SubgroupHandle::Closure {
    packed::Engine eng;
    // matrix key -> inverse key
    std::unordered_map<std::string, std::string> elems;
    explicit Closure(int n, int64_t mod) : eng(n, mod) {}
};

namespace {

using Key = std::string;

// generators of E(R) as packed (matrix, inverse) pairs
std::vector<std::pair<Key, Key>> e_generators(const GroupContext& ctx, const Ring& r,
                                              const packed::Engine& eng) {
    std::vector<std::pair<Key, Key>> out;
    for (int root = 0; root < ctx.roots().num_roots(); ++root)
        for (auto& t : r.elements()) {
            if (t.is_zero()) continue;
            GroupElement g = ctx.x_elem(r, root, t);
            out.emplace_back(eng.pack(g.mat()), eng.pack(g.inv_mat()));
        }
    return out;
}

// conjugation orbit of the seeds under the E-generators
void conj_orbit(const packed::Engine& eng, const std::vector<std::pair<Key, Key>>& egens,
                std::vector<std::pair<Key, Key>>& seeds, size_t cap) {
    std::unordered_map<Key, Key> seen;
    std::deque<std::pair<Key, Key>> q;
    for (auto& s : seeds)
        if (seen.emplace(s.first, s.second).second) q.push_back(s);
    while (!q.empty()) {
        auto [k, ki] = q.front();
        q.pop_front();
        for (auto& [g, gi] : egens) {
            Key k2 = eng.mul(eng.mul(gi, k), g);
            if (seen.count(k2)) continue;
            Key ki2 = eng.mul(eng.mul(gi, ki), g);
            seen.emplace(k2, ki2);
            q.emplace_back(std::move(k2), std::move(ki2));
            if (seen.size() > cap) throw EnumerationCapError("conjugation orbit exceeded the cap");
        }
    }
    seeds.assign(seen.begin(), seen.end());
}

// subgroup closure of the given generators; the generating subset grows
// until it covers every listed generator
void subgroup_closure(const packed::Engine& eng, const std::vector<std::pair<Key, Key>>& gens,
                      std::unordered_map<Key, Key>& out, size_t cap) {
    out.clear();
    if (gens.empty()) {
        out.emplace(eng.identity(), eng.identity());
        return;
    }
    std::vector<size_t> use = {0};
    for (;;) {
        out.clear();
        out.emplace(eng.identity(), eng.identity());
        std::deque<const Key*> q;
        q.push_back(&out.find(eng.identity())->first);
        while (!q.empty()) {
            const Key* curp = q.front();
            q.pop_front();
            Key cur = *curp;
            Key curi = out.at(cur);
            for (size_t ui : use) {
                const auto& [g, gi] = gens[ui];
                Key k2 = eng.mul(cur, g);
                auto it = out.find(k2);
                if (it != out.end()) continue;
                Key ki2 = eng.mul(gi, curi);
                auto ins = out.emplace(std::move(k2), std::move(ki2));
                q.push_back(&ins.first->first);
                if (out.size() > cap) throw EnumerationCapError("subgroup closure exceeded the cap");
            }
        }
        size_t missing = gens.size();
        for (size_t i = 0; i < gens.size(); ++i)
            if (!out.count(gens[i].first)) { missing = i; break; }
        if (missing == gens.size()) return;
        use.push_back(missing);
    }
}

}  // namespace

SubgroupHandle SubgroupHandle::generated(const GroupContext& ctx, Ring ring,
                                         std::vector<GroupElement> gens, bool normalized_by_e) {
    if (!ring.is_finite()) throw UnsupportedError("subgroup handles require a finite ring");
    SubgroupHandle h;
    h.ctx_ = &ctx;
    h.ring_ = std::move(ring);
    h.gens_ = std::move(gens);
    h.normalized_ = normalized_by_e;
    return h;
}

SubgroupHandle SubgroupHandle::predicate(const GroupContext& ctx, Ring ring, std::string name,
                                         std::function<bool(const GroupElement&)> pred) {
    SubgroupHandle h;
    h.ctx_ = &ctx;
    h.ring_ = std::move(ring);
    h.name_ = std::move(name);
    h.pred_ = std::move(pred);
    return h;
}

void SubgroupHandle::force() const {
    if (closure_ || pred_) return;
    auto cl = std::make_shared<Closure>(ctx_->dim(), ring_.modulus());
    std::vector<std::pair<Key, Key>> seeds;
    for (auto& g : gens_) seeds.emplace_back(cl->eng.pack(g.mat()), cl->eng.pack(g.inv_mat()));
    if (normalized_) {
        auto egens = e_generators(*ctx_, ring_, cl->eng);
        conj_orbit(cl->eng, egens, seeds, kClosureCap);
    }
    subgroup_closure(cl->eng, seeds, cl->elems, kClosureCap);
    closure_ = std::move(cl);
}

size_t SubgroupHandle::size() const {
    if (pred_) {
        size_t n = 0;
        elementary_subgroup(*ctx_, ring_).for_each([&](const GroupElement& x) {
            if (pred_(x)) ++n;
        });
        return n;
    }
    force();
    return closure_->elems.size();
}

bool SubgroupHandle::contains(const GroupElement& x) const {
    if (pred_) return pred_(x);
    force();
    return closure_->elems.count(closure_->eng.pack(x.mat())) > 0;
}

void SubgroupHandle::for_each(const std::function<void(const GroupElement&)>& fn) const {
    if (pred_) throw UnsupportedError("cannot enumerate a predicate subgroup directly");
    force();
    for (auto& [k, ki] : closure_->elems) {
        GroupElement g(closure_->eng.unpack(k, ring_), closure_->eng.unpack(ki, ring_));
        fn(g);
    }
}

const std::unordered_map<std::string, std::string>& SubgroupHandle::closure_keys() const {
    if (pred_) throw UnsupportedError("predicate subgroup has no closure keys");
    force();
    return closure_->elems;
}

bool SubgroupHandle::all_of(const std::function<bool(const GroupElement&)>& fn) const {
    bool ok = true;
    for_each([&](const GroupElement& g) {
        if (ok && !fn(g)) ok = false;
    });
    return ok;
}

bool SubgroupHandle::subset_of(const SubgroupHandle& other) const {
    if (!other.pred_ && !pred_ && ring_ == other.ring_) {
        other.force();
        force();
        for (auto& [k, ki] : closure_->elems)
            if (!other.closure_->elems.count(k)) return false;
        return true;
    }
    return all_of([&](const GroupElement& g) { return other.contains(g); });
}

// ---------------------------------------------------------------------------

SubgroupHandle elementary_subgroup(const GroupContext& ctx, const Ring& r) {
    std::vector<GroupElement> gens;
    for (int root = 0; root < ctx.roots().num_roots(); ++root)
        for (auto& t : r.elements()) {
            if (t.is_zero()) continue;
            gens.push_back(ctx.x_elem(r, root, t));
        }
    return SubgroupHandle::generated(ctx, r, std::move(gens), false);
}

SubgroupHandle relative_elementary(const GroupContext& ctx, const Ring& r, const Ideal& a) {
    std::vector<GroupElement> gens;
    for (int root = 0; root < ctx.roots().num_roots(); ++root)
        for (auto& t : r.elements()) {
            if (t.is_zero() || !a.contains(t)) continue;
            gens.push_back(ctx.x_elem(r, root, t));
        }
    return SubgroupHandle::generated(ctx, r, std::move(gens), true);
}

LevelData level(const SubgroupHandle& h) {
    const GroupContext& ctx = h.context();
    const Ring& r = h.ring();
    auto verdict = check_condition(ctx.label(), r);
    if (!verdict.ok) throw ConditionViolatedError(verdict.reason);

    LevelData out{{}, Ideal(r, {r.zero()})};
    for (int root = 0; root < ctx.roots().num_roots(); ++root) {
        std::vector<int64_t> q;
        for (auto& t : r.elements())
            if (h.contains(ctx.x_elem(r, root, t))) q.push_back(t.int_value());
        std::sort(q.begin(), q.end());
        out.q_alpha[root] = std::move(q);
    }
    const auto& q0 = out.q_alpha.begin()->second;
    for (auto& [root, q] : out.q_alpha)
        if (q != q0)
            throw LevelInconsistentError("level set depends on the root");
    // the common set must be the ideal it generates
    std::vector<RingElement> gens;
    for (auto v : q0) gens.push_back(r.from_int(v));
    if (gens.empty()) gens.push_back(r.zero());
    Ideal q(r, gens);
    std::vector<int64_t> members;
    for (auto& t : r.elements())
        if (q.contains(t)) members.push_back(t.int_value());
    std::sort(members.begin(), members.end());
    if (members != q0) throw LevelInconsistentError("level set is not an ideal");
    out.level = q;
    return out;
}

CongruencePair congruence(const GroupContext& ctx, const Ring& r, const Ideal& a) {
    if (!r.is_finite()) throw UnsupportedError("congruence subgroups require a finite ring");
    int64_t g = a.principal_generator().int_value();
    if (a.is_unit_ideal()) {
        auto all = [](const GroupElement&) { return true; };
        return {SubgroupHandle::predicate(ctx, r, "G(R,R)", all),
                SubgroupHandle::predicate(ctx, r, "C(R,R)", all)};
    }
    if (a.is_zero_ideal() || g == 0) {
        auto is_id = [](const GroupElement& x) { return x.is_identity(); };
        auto is_c = [&ctx](const GroupElement& x) { return ctx.is_central(x); };
        return {SubgroupHandle::predicate(ctx, r, "G(R,0)", is_id),
                SubgroupHandle::predicate(ctx, r, "C(R,0)", is_c)};
    }
    Ring quotient = Ring::integers_mod(g);
    auto in_g = [quotient](const GroupElement& x) {
        return x.mapped(quotient).is_identity();
    };
    auto in_c = [quotient, &ctx](const GroupElement& x) {
        return ctx.is_central(x.mapped(quotient));
    };
    return {SubgroupHandle::predicate(ctx, r, "G(R," + a.str() + ")", in_g),
            SubgroupHandle::predicate(ctx, r, "C(R," + a.str() + ")", in_c)};
}

SandwichReport sandwich_check(const SubgroupHandle& h) {
    const GroupContext& ctx = h.context();
    const Ring& r = h.ring();
    LevelData lv = level(h);
    SandwichReport rep{lv.level, false, false, false, ""};

    auto check_pair = [&](const Ideal& a) -> std::pair<bool, bool> {
        SubgroupHandle ea = relative_elementary(ctx, r, a);
        CongruencePair cp = congruence(ctx, r, a);
        bool lower = ea.subset_of(h);
        bool upper = h.all_of([&](const GroupElement& x) { return cp.full.contains(x); });
        return {lower, upper};
    };
    auto [lo, up] = check_pair(lv.level);
    rep.lower_ok = lo;
    rep.upper_ok = up;

    // uniqueness over the (small) ideal lattice
    rep.unique = true;
    int64_t n = r.modulus();
    int64_t qgen = lv.level.principal_generator().int_value();
    for (int64_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;  // ideals of Z/n are (d) for d | n
        int64_t dd = d % n;
        if (dd == qgen) continue;
        auto [l2, u2] = check_pair(Ideal(r, {r.from_int(dd)}));
        if (l2 && u2) {
            rep.unique = false;
            rep.detail = "ideal (" + std::to_string(dd) + ") also sandwiches";
            break;
        }
    }
    return rep;
}

SubgroupHandle mutual_commutant_with_e(const SubgroupHandle& a) {
    const GroupContext& ctx = a.context();
    const Ring& r = a.ring();
    packed::Engine eng(ctx.dim(), r.modulus());
    auto egens = e_generators(ctx, r, eng);
    std::vector<GroupElement> seeds;
    std::unordered_map<Key, Key> seen;
    for (auto& [k, ki] : a.closure_keys()) {
        for (auto& [g, gi] : egens) {
            // [x, e] = x^-1 e^-1 x e
            Key c = eng.mul(eng.mul(ki, gi), eng.mul(k, g));
            Key cinv = eng.mul(eng.mul(gi, ki), eng.mul(g, k));
            if (seen.emplace(c, cinv).second)
                seeds.emplace_back(eng.unpack(c, r), eng.unpack(cinv, r));
        }
    }
    return SubgroupHandle::generated(ctx, r, std::move(seeds), true);
}

PerfectnessReport perfectness(const GroupContext& ctx, const Ring& r) {
    if (!r.is_finite()) throw UnsupportedError("perfectness check requires a finite ring");
    if (ctx.label() == RootLabel::B2 && r.modulus() % 2 == 0) {
        // C2 hypothesis: no residue field of two elements
        throw HypothesisViolatedError("type C2 over a ring with a GF(2) residue field");
    }
    SubgroupHandle e = elementary_subgroup(ctx, r);
    SubgroupHandle comm = mutual_commutant_with_e(e);
    PerfectnessReport rep;
    rep.e_size = e.size();
    rep.commutant_size = comm.size();
    rep.perfect = rep.e_size == rep.commutant_size && comm.subset_of(e);
    return rep;
}

bool hall_witt_check(const SubgroupHandle& h) {
    SubgroupHandle he = mutual_commutant_with_e(h);
    SubgroupHandle hee = mutual_commutant_with_e(he);
    return he.size() == hee.size() && hee.subset_of(he);
}

bool commutation_formula_check(const GroupContext& ctx, const Ring& r, const Ideal& q) {
    // [E(R), G(R,q)] = E(R,q)
    SubgroupHandle e = elementary_subgroup(ctx, r);
    CongruencePair cp = congruence(ctx, r, q);
    std::vector<GroupElement> kernel_elems;
    e.for_each([&](const GroupElement& x) {
        if (cp.principal.contains(x)) kernel_elems.push_back(x);
    });
    SubgroupHandle gq = SubgroupHandle::generated(ctx, r, kernel_elems, false);
    SubgroupHandle lhs = mutual_commutant_with_e(gq);
    SubgroupHandle rhs = relative_elementary(ctx, r, q);
    return lhs.size() == rhs.size() && rhs.subset_of(lhs);
}

}  // namespace chevalley
