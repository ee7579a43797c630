#include "chevalley/extract.hpp"

#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

#include "packed.hpp"

namespace chevalley {

namespace {

std::string root_str(const RootSystem& rs, int idx) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < rs.rank(); ++i) {
        if (i) os << ",";
        os << rs.root(idx)[i];
    }
    os << ")";
    return os.str();
}

GroupWord single_x(int rootidx, const RingElement& t) {
    GroupWord w;
    w.push_x(rootidx, t);
    return w;
}

class Extractor {
public:
    Extractor(const GroupContext& ctx, GroupElement seed)
        : ctx_(ctx), seed_(std::move(seed)), ring_(seed_.ring()) {}

    std::vector<std::string> trace;

    ExtractionResult run_parabolic(const GroupElement& h, Certificate::Ptr cert,
                                   const Parabolic& p, int depth);
    ExtractionResult run_puq(GroupElement h, Certificate::Ptr cert, GroupElement a,
                             GroupElement b, Parabolic pu, Parabolic ppar);
    ExtractionResult run_cell(const GroupElement& h, Certificate::Ptr cert,
                              const GaussFactorization& f);

    ExtractionResult finish(int rootidx, const RingElement& t, Certificate::Ptr cert);

private:
    const GroupContext& ctx_;
    GroupElement seed_;
    Ring ring_;

    ExtractionResult handle_unipotent(const GroupElement& c, Certificate::Ptr cert,
                                      const std::vector<int>& rootset, int depth);
    ExtractionResult search(const GroupElement& start, Certificate::Ptr cert);

    void note(const std::string& s) { trace.push_back(s); }
};

ExtractionResult Extractor::finish(int rootidx, const RingElement& t, Certificate::Ptr cert) {
    if (t.is_zero()) throw Error("extraction produced a trivial parameter");
    GroupElement claimed = ctx_.x_elem(ring_, rootidx, t);
    if (!check_certificate(cert, ctx_, seed_, claimed))
        throw Error("extraction certificate failed to check");
    note("result x_" + root_str(ctx_.roots(), rootidx) + "(" + t.str() + ")");
    ExtractionResult res;
    res.rootidx = rootidx;
    res.t = t;
    res.certificate = cert;
    res.trace = trace;
    return res;
}

ExtractionResult Extractor::handle_unipotent(const GroupElement& c, Certificate::Ptr cert,
                                             const std::vector<int>& rootset, int depth) {
    auto ordered = ctx_.order_rootset(rootset);
    auto params = ctx_.peel(c, ordered);
    if (params.empty()) throw Error("handle_unipotent on the identity");
    if (params.size() == 1) return finish(params[0].first, params[0].second, cert);
    // multi-root support: shrink by commutating with root elements until a
    // single root survives; the certified search below performs that walk
    (void)depth;
    return search(c, cert);
}

// ---------------------------------------------------------------------------
// certified search (fallback): breadth-bounded moves, then the full
// enumeration of <start>^{E(R)} with certificates rebuilt from the BFS

struct Arrival {
    enum Kind { Start, Conj, Comm, GComm, Inv, Orbit, Prod, Ident } kind = Start;
    int parent = -1;
    int second = -1;  // generator index or orbit index
};

ExtractionResult Extractor::search(const GroupElement& start, Certificate::Ptr cert0) {
    if (!ring_.is_finite())
        throw SearchExhaustedError("certified search requires a finite ring");
    note("search");
    packed::Engine eng(ctx_.dim(), ring_.modulus());

    // generator alphabet: all nontrivial root elements
    struct Gen {
        packed::Engine::Key k, ki;
        GroupWord word;
    };
    std::vector<Gen> gens;
    for (int root = 0; root < ctx_.roots().num_roots(); ++root)
        for (auto& t : ring_.elements()) {
            if (t.is_zero()) continue;
            GroupElement g = ctx_.x_elem(ring_, root, t);
            gens.push_back({eng.pack(g.mat()), eng.pack(g.inv_mat()), single_x(root, t)});
        }

    // nontrivial root elements, for the success test
    std::unordered_map<std::string, std::pair<int, RingElement>> targets;
    for (int root = 0; root < ctx_.roots().num_roots(); ++root)
        for (auto& t : ring_.elements()) {
            if (t.is_zero()) continue;
            targets.emplace(eng.pack(ctx_.x_elem(ring_, root, t).mat()), std::make_pair(root, t));
        }

    struct Node {
        packed::Engine::Key k, ki;
        Arrival how;
        int d = 0;
    };
    std::vector<Node> nodes;
    std::unordered_map<std::string, int> seen;
    std::deque<int> q;
    auto push = [&](packed::Engine::Key k, packed::Engine::Key ki, Arrival how, int d) -> int {
        auto it = seen.find(k);
        if (it != seen.end()) return -1;
        int idx = static_cast<int>(nodes.size());
        seen.emplace(k, idx);
        nodes.push_back({std::move(k), std::move(ki), how, d});
        q.push_back(idx);
        return idx;
    };

    std::vector<Certificate::Ptr> node_cert;
    auto build_cert = [&](int i) {
        // arrivals only ever reference earlier nodes, so one forward pass works
        node_cert.resize(nodes.size());
        for (int j = 0; j <= i; ++j) {
            if (node_cert[j]) continue;
            const Arrival& a = nodes[j].how;
            switch (a.kind) {
                case Arrival::Start: node_cert[j] = cert0; break;
                case Arrival::Conj:
                    node_cert[j] = Certificate::conjugate(node_cert[a.parent],
                                                          Certificate::elementary(gens[a.second].word));
                    break;
                case Arrival::Comm:
                    node_cert[j] = Certificate::commutator(node_cert[a.parent],
                                                           Certificate::elementary(gens[a.second].word));
                    break;
                case Arrival::GComm:
                    node_cert[j] = Certificate::commutator(Certificate::elementary(gens[a.second].word),
                                                           node_cert[a.parent]);
                    break;
                case Arrival::Inv: node_cert[j] = Certificate::inverse(node_cert[a.parent]); break;
                case Arrival::Orbit: node_cert[j] = node_cert[a.parent]; break;
                case Arrival::Prod:
                    node_cert[j] = Certificate::product({node_cert[a.parent], node_cert[a.second]});
                    break;
                case Arrival::Ident: node_cert[j] = Certificate::product({}); break;
            }
        }
        return node_cert[i];
    };
    auto try_finish = [&](int idx) -> std::optional<ExtractionResult> {
        auto it = targets.find(nodes[idx].k);
        if (it == targets.end()) return std::nullopt;
        return finish(it->second.first, it->second.second, build_cert(idx));
    };

    push(eng.pack(start.mat()), eng.pack(start.inv_mat()), {Arrival::Start, -1, -1}, 0);
    if (auto r = try_finish(0)) return *r;

    constexpr int kDepthBound = 4;
    constexpr size_t kCap = 1u << 20;

    // phase 1: conjugates, commutators and inverses, breadth <= 4
    while (!q.empty()) {
        int cur = q.front();
        q.pop_front();
        if (nodes[cur].d >= kDepthBound) continue;
        int d = nodes[cur].d + 1;
        const auto k = nodes[cur].k;
        const auto ki = nodes[cur].ki;
        {
            int idx = push(ki, k, {Arrival::Inv, cur, -1}, d);
            if (idx >= 0)
                if (auto r = try_finish(idx)) return *r;
        }
        for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
            if (nodes.size() > kCap) throw SearchExhaustedError("search cap exceeded");
            // v^g
            auto conj = eng.mul(eng.mul(gens[g].ki, k), gens[g].k);
            int idx = push(std::move(conj), eng.mul(eng.mul(gens[g].ki, ki), gens[g].k),
                           {Arrival::Conj, cur, g}, d);
            if (idx >= 0)
                if (auto r = try_finish(idx)) return *r;
            // [v, g] = v^-1 g^-1 v g
            auto comm = eng.mul(eng.mul(ki, gens[g].ki), eng.mul(k, gens[g].k));
            auto commi = eng.mul(eng.mul(gens[g].ki, ki), eng.mul(gens[g].k, k));
            idx = push(std::move(comm), std::move(commi), {Arrival::Comm, cur, g}, d);
            if (idx >= 0)
                if (auto r = try_finish(idx)) return *r;
            // [g, v]
            auto gcomm = eng.mul(eng.mul(gens[g].ki, ki), eng.mul(gens[g].k, k));
            auto gcommi = eng.mul(eng.mul(ki, gens[g].ki), eng.mul(k, gens[g].k));
            idx = push(std::move(gcomm), std::move(gcommi), {Arrival::GComm, cur, g}, d);
            if (idx >= 0)
                if (auto r = try_finish(idx)) return *r;
        }
    }
    note("search: depth-4 pass exhausted, enumerating the closure");

    // phase 2a: conjugation orbit of start (these generate <start>^E)
    std::vector<int> orbit;
    {
        std::deque<int> oq;
        oq.push_back(0);
        std::unordered_map<std::string, int> oseen;
        oseen.emplace(nodes[0].k, 0);
        orbit.push_back(0);
        while (!oq.empty()) {
            int cur = oq.front();
            oq.pop_front();
            for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
                auto k2 = eng.mul(eng.mul(gens[g].ki, nodes[cur].k), gens[g].k);
                if (oseen.count(k2)) continue;
                auto ki2 = eng.mul(eng.mul(gens[g].ki, nodes[cur].ki), gens[g].k);
                int idx = static_cast<int>(nodes.size());
                nodes.push_back({k2, ki2, {Arrival::Conj, cur, g}, 0});
                oseen.emplace(std::move(k2), idx);
                orbit.push_back(idx);
                oq.push_back(idx);
                if (nodes.size() > kCap) throw SearchExhaustedError("orbit cap exceeded");
            }
        }
    }
    for (int idx : orbit)
        if (auto r = try_finish(idx)) return *r;

    // phase 2b: subgroup closure of the orbit, growing the generating set
    // until it covers the orbit
    std::vector<int> sgens = {orbit[0]};
    for (;;) {
        std::unordered_map<std::string, int> sub;
        std::vector<int> elems;
        std::deque<int> sq;
        int id_idx = static_cast<int>(nodes.size());
        nodes.push_back({eng.identity(), eng.identity(), {Arrival::Ident, -1, -1}, 0});
        sub.emplace(eng.identity(), id_idx);
        elems.push_back(id_idx);
        sq.push_back(id_idx);
        while (!sq.empty()) {
            int cur = sq.front();
            sq.pop_front();
            for (int gi : sgens) {
                auto k2 = eng.mul(nodes[cur].k, nodes[gi].k);
                if (sub.count(k2)) continue;
                auto ki2 = eng.mul(nodes[gi].ki, nodes[cur].ki);
                int idx = static_cast<int>(nodes.size());
                nodes.push_back({k2, ki2, {Arrival::Prod, cur, gi}, 0});
                sub.emplace(std::move(k2), idx);
                elems.push_back(idx);
                sq.push_back(idx);
                if (nodes.size() > kCap) throw SearchExhaustedError("closure cap exceeded");
                if (auto r = try_finish(idx)) return *r;
            }
        }
        int missing = -1;
        for (int idx : orbit)
            if (!sub.count(nodes[idx].k)) { missing = idx; break; }
        if (missing < 0) break;
        sgens.push_back(missing);
    }
    throw SearchExhaustedError("no root element in the enumerated normal closure");
}

// ---------------------------------------------------------------------------

ExtractionResult Extractor::run_parabolic(const GroupElement& h, Certificate::Ptr cert,
                                          const Parabolic& p, int depth) {
    if (ctx_.is_central(h)) throw CentralInputError();
    if (!p.contains(ctx_, h)) throw Error("run_parabolic: element not in the parabolic");
    note("parabolic " + p.str());

    GroupWord tw = p.transport_word(ctx_);
    GroupElement h0 = h;
    Certificate::Ptr cert0 = cert;
    if (!tw.empty()) {
        h0 = h.conj(tw.evaluate(ctx_, ring_));
        cert0 = Certificate::conjugate(cert, Certificate::elementary(tw));
    }
    std::vector<int> subset = p.transported_subset();
    auto split = levi_split_standard(ctx_, subset, h0);

    Parabolic pstd = Parabolic::standard(p.type_label(), subset);
    std::vector<int> rad = pstd.radical_roots();
    bool in_levi = split.u.is_identity();
    note(std::string("levi split: u ") + (in_levi ? "= e" : "!= e"));

    // commutators with radical root subgroups land in U_P
    for (int g : rad) {
        for (auto& t : ring_.elements()) {
            if (t.is_zero()) continue;
            GroupElement xg = ctx_.x_elem(ring_, g, t);
            GroupElement c = xg.comm(h0);
            if (c.is_identity()) continue;
            auto cc = Certificate::commutator(Certificate::elementary(single_x(g, t)), cert0);
            note("radical commutator at " + root_str(ctx_.roots(), g));
            return handle_unipotent(c, cc, rad, depth);
        }
    }
    // h0 centralizes U_P; if it is a Levi element, try the opposite radical
    if (in_levi) {
        std::vector<int> radneg = rad;
        for (auto& g : radneg) g = ctx_.roots().negative(g);
        for (int g : radneg) {
            for (auto& t : ring_.elements()) {
                if (t.is_zero()) continue;
                GroupElement xg = ctx_.x_elem(ring_, g, t);
                GroupElement c = xg.comm(h0);
                if (c.is_identity()) continue;
                auto cc = Certificate::commutator(Certificate::elementary(single_x(g, t)), cert0);
                note("opposite-radical commutator at " + root_str(ctx_.roots(), g));
                return handle_unipotent(c, cc, radneg, depth);
            }
        }
    }
    // Levi-interior commutators stay in P
    if (depth < 3) {
        for (int g : pstd.levi_roots()) {
            for (auto& t : ring_.elements()) {
                if (t.is_zero()) continue;
                GroupElement xg = ctx_.x_elem(ring_, g, t);
                GroupElement c = xg.comm(h0);
                if (c.is_identity() || ctx_.is_central(c)) continue;
                auto cc = Certificate::commutator(Certificate::elementary(single_x(g, t)), cert0);
                note("levi commutator at " + root_str(ctx_.roots(), g));
                return run_parabolic(c, cc, pstd, depth + 1);
            }
        }
    }
    return search(h0, cert0);
}

ExtractionResult Extractor::run_puq(GroupElement h, Certificate::Ptr cert, GroupElement a,
                                    GroupElement b, Parabolic pu, Parabolic ppar) {
    if (ctx_.is_central(h)) throw CentralInputError();
    if (a * b != h) throw Error("run_puq: factorization does not multiply to the element");
    if (!pu.radical_contains(ctx_, a)) throw Error("run_puq: a not in the unipotent radical");
    if (!ppar.contains(ctx_, b)) throw Error("run_puq: b not in the parabolic");

    // reduce to Q = Borel (radical side) and P maximal
    Parabolic bu = pu.borel_inside();
    Parabolic pmax = ppar.enlarged_to_maximal();
    std::vector<int> urad = bu.radical_roots();
    std::vector<int> levi = pmax.levi_roots();
    int alpha = -1;
    for (int g : urad)
        if (std::find(levi.begin(), levi.end(), g) != levi.end()) { alpha = g; break; }
    if (alpha < 0) throw NoCommonRootError();
    note("puq with " + bu.str() + " and " + pmax.str() + ", alpha " +
         root_str(ctx_.roots(), alpha));

    int guard = ctx_.unipotent_class() + 2;
    while (guard-- > 0) {
        if (a.is_identity()) return run_parabolic(h, cert, pmax, 0);

        std::optional<RingElement> found;
        for (auto& t : ring_.elements()) {
            if (t.is_zero()) continue;
            GroupElement y = ctx_.x_elem(ring_, alpha, t);
            if (!ctx_.is_central(y.comm(h))) { found = t; break; }
        }
        if (!found) {
            note("all radical commutators central: escaping via a parabolic");
            Parabolic esc = escape_centralizer(ctx_, h, alpha);
            return run_parabolic(h, cert, esc, 0);
        }
        RingElement r = *found;
        GroupElement y = ctx_.x_elem(ring_, alpha, r);
        GroupWord yw = single_x(alpha, r);

        // descent: [y, ab]^{b^-1} = [b^-1, y] [y, a], and b^-1 = h^-1 a keeps
        // the conjugation inside the closure
        GroupWord aword;
        {
            auto params = ctx_.peel(a, ctx_.order_rootset(urad));
            for (auto& [g, t] : params) aword.push_x(g, t);
        }
        Certificate::Ptr cert_binv =
            Certificate::product({Certificate::inverse(cert), Certificate::elementary(aword)});
        GroupElement c1 = y.comm(h);
        Certificate::Ptr cert1 = Certificate::commutator(Certificate::elementary(yw), cert);
        GroupElement binv = b.inverse();
        GroupElement h2 = c1.conj(binv);
        Certificate::Ptr cert2 = Certificate::conjugate_by_closure(cert1, cert_binv);

        GroupElement pnew = binv.comm(y);
        GroupElement unew = y.comm(a);
        if (pnew * unew != h2) throw Error("descent identity failed");

        h = h2.inverse();
        cert = Certificate::inverse(cert2);
        a = unew.inverse();
        b = pnew.inverse();
        pu = bu;
        ppar = pmax;
        note("descent step");
    }
    throw Error("puq descent exceeded the nilpotency class bound");
}

ExtractionResult Extractor::run_cell(const GroupElement& h, Certificate::Ptr cert,
                                     const GaussFactorization& f) {
    if (ctx_.is_central(h)) throw CentralInputError();
    if (f.orientation != CellOrientation::UmBw)
        throw Error("run_cell expects a U^-Bw factorization");
    const RootSystem& rs = ctx_.roots();
    if (rs.rank() < 2) throw Error("rank >= 2 required");
    note("cell w length " + std::to_string(f.w.length));

    GroupElement v = f.first;  // in U^-
    GroupWord vword = f.first_word;

    int alpha = rs.simple_root(0);
    Parabolic p = Parabolic::maximal(ctx_.label(), 0).conjugated(f.w);
    Parabolic q = Parabolic::maximal_opposite(ctx_.label(), 1);

    GroupElement vinv = v.inverse();
    GroupElement cw = vinv * h;  // = b * wrep
    for (auto& t : ring_.elements()) {
        if (t.is_zero()) continue;
        GroupElement y = ctx_.x_elem(ring_, alpha, t).conj(vinv);
        GroupElement c1 = y.comm(h);
        if (ctx_.is_central(c1)) continue;

        GroupWord yword = single_x(alpha, t).conjugated_letters(vword.inverse());
        Certificate::Ptr cert1 = Certificate::commutator(Certificate::elementary(yword), cert);
        GroupElement qpart = ctx_.x_elem(ring_, alpha, -t).conj(vinv);
        GroupElement upart = ctx_.x_elem(ring_, alpha, t).conj(cw);
        if (qpart * upart != c1) throw Error("cell commutator failed to split");
        if (!q.contains(ctx_, qpart)) throw Error("cell q-part not in Q");
        if (!p.radical_contains(ctx_, upart)) throw Error("cell u-part not in U_P");
        note("cell commutator noncentral at r = " + t.str());
        return run_puq(c1.inverse(), Certificate::inverse(cert1), upart.inverse(),
                       qpart.inverse(), p, q);
    }
    // every commutator is central: h^v commutes with X_alpha modulo the
    // center, so it lives in a proper parabolic
    note("cell commutators all central: escaping via a parabolic");
    GroupElement hv = h.conj(v);
    Certificate::Ptr certv = Certificate::conjugate(cert, Certificate::elementary(vword));
    Parabolic esc = escape_centralizer(ctx_, hv, alpha);
    return run_parabolic(hv, certv, esc, 0);
}

}  // namespace

// ---------------------------------------------------------------------------

Parabolic escape_centralizer(const GroupContext& ctx, const GroupElement& a, int rootidx) {
    const Ring& r = a.ring();
    if (r.is_finite()) {
        for (auto& t : r.elements()) {
            if (t.is_zero()) continue;
            GroupElement c = ctx.x_elem(r, rootidx, t).comm(a);
            if (!ctx.is_central(c))
                throw HypothesisFailsError("noncentral commutator at parameter " + t.str());
        }
    } else {
        GroupElement c = ctx.x_elem(r, rootidx, r.one()).comm(a);
        if (!ctx.is_central(c)) throw HypothesisFailsError("noncentral commutator at 1");
    }
    for (const auto& p : proper_parabolics(ctx.label()))
        if (p.contains(ctx, a)) return p;
    throw NotFoundError("no proper parabolic contains the almost-central element");
}

ExtractionResult extract_from_parabolic(const GroupContext& ctx, const GroupElement& seed,
                                        const Parabolic& p) {
    if (ctx.is_central(seed)) throw CentralInputError();
    Extractor e(ctx, seed);
    return e.run_parabolic(seed, Certificate::seed(), p, 0);
}

ExtractionResult extract_from_puq(const GroupContext& ctx, const GroupElement& seed,
                                  const GroupElement& a, const GroupElement& b,
                                  const Parabolic& pu, const Parabolic& ppar) {
    if (ctx.is_central(seed)) throw CentralInputError();
    Extractor e(ctx, seed);
    return e.run_puq(seed, Certificate::seed(), a, b, pu, ppar);
}

ExtractionResult extract_from_cell(const GroupContext& ctx, const GroupElement& seed,
                                   const GaussFactorization& f) {
    if (ctx.is_central(seed)) throw CentralInputError();
    Extractor e(ctx, seed);
    return e.run_cell(seed, Certificate::seed(), f);
}

ExtractionResult extract_under_radical(const GroupContext& ctx, const GroupElement& seed) {
    const Ring& r = seed.ring();
    if (!r.is_finite()) throw UnsupportedError("extract_under_radical requires a finite ring");
    if (ctx.is_central(seed)) throw CentralInputError();
    Ideal j = jacobson_radical(r);
    if (j.is_zero_ideal()) throw NotUnderRadicalError("radical is zero and the element is noncentral");
    int64_t rad = j.principal_generator().int_value();
    Ring rbar = Ring::integers_mod(rad);
    if (!ctx.is_central(seed.mapped(rbar)))
        throw NotUnderRadicalError();
    // key step: such an element lies in the same principal open sets as the
    // identity, in particular in the big cell
    if (!in_big_cell(ctx, seed))
        throw Error("element under the radical escaped the big cell");
    GaussFactorization f = big_cell_factor(ctx, seed, CellOrientation::UBw);
    Extractor e(ctx, seed);
    e.trace.push_back("under-radical big cell factorization");
    return e.run_puq(seed, Certificate::seed(), f.first, f.torus * f.second,
                     Parabolic::borel(ctx.label()), Parabolic::borel_opposite(ctx.label()));
}

ExtractionResult extract_over_field(const GroupContext& ctx, const GroupElement& seed) {
    const Ring& r = seed.ring();
    if (!r.is_field()) throw NotAFieldError();
    auto verdict = check_condition(ctx.label(), r);
    if (!verdict.ok) throw ConditionViolatedError(verdict.reason);
    if (ctx.is_central(seed)) throw CentralInputError();
    GaussFactorization f = gauss_decompose(ctx, seed, CellOrientation::UmBw);
    Extractor e(ctx, seed);
    return e.run_cell(seed, Certificate::seed(), f);
}

}  // namespace chevalley
