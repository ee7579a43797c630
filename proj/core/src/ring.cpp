#include "chevalley/ring.hpp"

#include <algorithm>
#include <random>

#include "chevalley/int_util.hpp"

namespace chevalley {

struct Ring::Rep {
    RingKind kind;
    int64_t n = 0;  // modulus for IntegersMod/PrimeField
    std::vector<std::string> vars;
    std::vector<Poly> relations;
};

Ring Ring::integers() {
    auto rep = std::make_shared<Rep>();
    rep->kind = RingKind::Integers;
    return Ring(rep);
}

Ring Ring::integers_mod(int64_t n) {
    if (n < 2) throw Error("IntegersMod requires n >= 2");
    auto rep = std::make_shared<Rep>();
    rep->kind = RingKind::IntegersMod;
    rep->n = n;
    return Ring(rep);
}

Ring Ring::prime_field(int64_t p) {
    if (!is_prime_small(p)) throw Error("PrimeField requires a prime modulus");
    auto rep = std::make_shared<Rep>();
    rep->kind = RingKind::PrimeField;
    rep->n = p;
    return Ring(rep);
}

Ring Ring::poly_quot(std::vector<std::string> vars, std::vector<Poly> relations) {
    if (vars.size() > kMaxPolyVars) throw UnsupportedError("too many variables");
    if (relations.size() > 1)
        throw UnsupportedError("poly_quot supports at most one relation");
    for (auto& r : relations) {
        if (r.is_zero()) throw Error("zero relation");
        int64_t lc = r.leading_term().c;
        if (lc != 1 && lc != -1)
            throw UnsupportedError("relation must have leading coefficient +-1");
        if (r.max_var_index() >= static_cast<int>(vars.size()))
            throw Error("relation uses undeclared variable");
    }
    auto rep = std::make_shared<Rep>();
    rep->kind = RingKind::PolyQuot;
    rep->vars = std::move(vars);
    rep->relations = std::move(relations);
    return Ring(rep);
}

RingKind Ring::kind() const { return rep_->kind; }

int64_t Ring::modulus() const {
    if (rep_->kind != RingKind::IntegersMod && rep_->kind != RingKind::PrimeField)
        throw Error("ring has no modulus");
    return rep_->n;
}

bool Ring::is_field() const {
    if (rep_->kind == RingKind::PrimeField) return true;
    if (rep_->kind == RingKind::IntegersMod) return is_prime_small(rep_->n);
    return false;
}

bool Ring::is_finite() const {
    return rep_->kind == RingKind::IntegersMod || rep_->kind == RingKind::PrimeField;
}

const std::vector<std::string>& Ring::var_names() const { return rep_->vars; }
const std::vector<Poly>& Ring::relations() const { return rep_->relations; }

RingElement Ring::zero() const { return from_int(0); }
RingElement Ring::one() const { return from_int(1); }

RingElement Ring::from_int(int64_t v) const {
    if (rep_->kind == RingKind::PolyQuot) return RingElement(*this, Poly::constant(v));
    return RingElement(*this, v);
}

RingElement Ring::from_poly(const Poly& p) const {
    if (rep_->kind != RingKind::PolyQuot) throw Error("from_poly on a scalar ring");
    return RingElement(*this, p);
}

RingElement Ring::var(int idx) const {
    if (rep_->kind != RingKind::PolyQuot) throw Error("var on a scalar ring");
    if (idx < 0 || idx >= static_cast<int>(rep_->vars.size())) throw Error("var index out of range");
    return RingElement(*this, Poly::variable(idx));
}

std::vector<RingElement> Ring::elements() const {
    if (!is_finite()) throw UnsupportedError("elements() requires a finite ring");
    std::vector<RingElement> out;
    out.reserve(rep_->n);
    for (int64_t v = 0; v < rep_->n; ++v) out.push_back(from_int(v));
    return out;
}

std::vector<RingElement> Ring::units() const {
    std::vector<RingElement> out;
    for (auto& x : elements())
        if (x.is_unit()) out.push_back(x);
    return out;
}

bool Ring::operator==(const Ring& o) const {
    if (rep_ == o.rep_) return true;
    if (rep_->kind != o.rep_->kind) return false;
    switch (rep_->kind) {
        case RingKind::Integers: return true;
        case RingKind::IntegersMod:
        case RingKind::PrimeField: return rep_->n == o.rep_->n;
        case RingKind::PolyQuot:
            return rep_->vars == o.rep_->vars && rep_->relations == o.rep_->relations;
    }
    return false;
}

std::string Ring::str() const {
    switch (rep_->kind) {
        case RingKind::Integers: return "Z";
        case RingKind::IntegersMod: return "Z/" + std::to_string(rep_->n);
        case RingKind::PrimeField: return "GF(" + std::to_string(rep_->n) + ")";
        case RingKind::PolyQuot: {
            std::string s = "Z[";
            for (size_t i = 0; i < rep_->vars.size(); ++i) {
                if (i) s += ",";
                s += rep_->vars[i];
            }
            s += "]";
            if (!rep_->relations.empty()) s += "/(rel)";
            return s;
        }
    }
    return "?";
}

// ---------------------------------------------------------------------------

RingElement::RingElement(Ring r, int64_t v) : ring_(std::move(r)) {
    switch (ring_.kind()) {
        case RingKind::Integers: iv_ = v; break;
        case RingKind::IntegersMod:
        case RingKind::PrimeField: iv_ = floormod(v, ring_.modulus()); break;
        case RingKind::PolyQuot: pv_ = Poly::constant(v); break;
    }
}

RingElement::RingElement(Ring r, Poly p) : ring_(std::move(r)) {
    if (ring_.kind() != RingKind::PolyQuot) throw Error("poly element in scalar ring");
    for (auto& rel : ring_.relations()) p = p.reduce(rel);
    pv_ = std::move(p);
}

void RingElement::check_same(const RingElement& o) const {
    if (ring_ != o.ring_) throw MixedRingsError();
}

bool RingElement::is_zero() const {
    return ring_.kind() == RingKind::PolyQuot ? pv_.is_zero() : iv_ == 0;
}

bool RingElement::is_one() const {
    return ring_.kind() == RingKind::PolyQuot ? (pv_.is_constant() && pv_.constant_value() == 1)
                                              : iv_ == 1;
}

int64_t RingElement::int_value() const {
    if (ring_.kind() == RingKind::PolyQuot) return pv_.constant_value();
    return iv_;
}

const Poly& RingElement::poly_value() const {
    if (ring_.kind() != RingKind::PolyQuot) throw Error("poly_value on scalar element");
    return pv_;
}

RingElement RingElement::operator+(const RingElement& o) const {
    check_same(o);
    if (ring_.kind() == RingKind::PolyQuot) return RingElement(ring_, pv_ + o.pv_);
    return RingElement(ring_, checked_add(iv_, o.iv_));
}

RingElement RingElement::operator-(const RingElement& o) const {
    check_same(o);
    if (ring_.kind() == RingKind::PolyQuot) return RingElement(ring_, pv_ - o.pv_);
    return RingElement(ring_, checked_sub(iv_, o.iv_));
}

RingElement RingElement::operator*(const RingElement& o) const {
    check_same(o);
    if (ring_.kind() == RingKind::PolyQuot) return RingElement(ring_, pv_ * o.pv_);
    return RingElement(ring_, checked_mul(iv_, o.iv_));
}

RingElement RingElement::operator-() const {
    if (ring_.kind() == RingKind::PolyQuot) return RingElement(ring_, -pv_);
    return RingElement(ring_, -iv_);
}

bool RingElement::operator==(const RingElement& o) const {
    if (ring_ != o.ring_) return false;
    if (ring_.kind() == RingKind::PolyQuot) return pv_ == o.pv_;
    return iv_ == o.iv_;
}

bool RingElement::is_unit() const {
    switch (ring_.kind()) {
        case RingKind::Integers: return iv_ == 1 || iv_ == -1;
        case RingKind::IntegersMod: return gcd64(iv_, ring_.modulus()) == 1;
        case RingKind::PrimeField: return iv_ != 0;
        case RingKind::PolyQuot:
            // units of Z[G] for a connected semisimple scheme are +-1
            return pv_.is_constant() && (pv_.constant_value() == 1 || pv_.constant_value() == -1);
    }
    return false;
}

RingElement RingElement::inv() const {
    if (!is_unit()) throw NotAUnitError(str() + " is not a unit in " + ring_.str());
    switch (ring_.kind()) {
        case RingKind::Integers: return *this;
        case RingKind::IntegersMod:
        case RingKind::PrimeField: {
            auto [g, x, y] = egcd(iv_, ring_.modulus());
            (void)g; (void)y;
            return RingElement(ring_, x);
        }
        case RingKind::PolyQuot: return *this;  // +-1
    }
    throw Error("unreachable");
}

RingElement RingElement::pow(int64_t k) const {
    if (k < 0) return inv().pow(-k);
    RingElement acc = ring_.one();
    RingElement base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::string RingElement::str() const {
    if (ring_.kind() == RingKind::PolyQuot) return pv_.str(ring_.var_names());
    return std::to_string(iv_);
}

size_t RingElement::hash() const {
    if (ring_.kind() == RingKind::PolyQuot) return pv_.hash();
    return std::hash<int64_t>()(iv_);
}

// ---------------------------------------------------------------------------

Ideal::Ideal(Ring r, std::vector<RingElement> gens) : ring_(std::move(r)), gens_(std::move(gens)) {
    for (auto& g : gens_)
        if (g.ring() != ring_) throw MixedRingsError("ideal generator in wrong ring");
}

RingElement Ideal::principal_generator() const {
    switch (ring_.kind()) {
        case RingKind::Integers: {
            int64_t g = 0;
            for (auto& x : gens_) g = gcd64(g, x.int_value());
            return ring_.from_int(g);
        }
        case RingKind::IntegersMod:
        case RingKind::PrimeField: {
            int64_t g = ring_.modulus();
            for (auto& x : gens_) g = gcd64(g, x.int_value());
            return ring_.from_int(g % ring_.modulus());
        }
        case RingKind::PolyQuot:
            throw UnsupportedError("principal_generator unsupported for PolyQuot");
    }
    throw Error("unreachable");
}

bool Ideal::contains(const RingElement& x) const {
    if (x.ring() != ring_) throw MixedRingsError();
    switch (ring_.kind()) {
        case RingKind::Integers:
        case RingKind::IntegersMod:
        case RingKind::PrimeField: {
            int64_t g = principal_generator().int_value();
            if (ring_.kind() == RingKind::IntegersMod || ring_.kind() == RingKind::PrimeField)
                g = gcd64(g == 0 ? ring_.modulus() : g, ring_.modulus());
            if (g == 0) return x.is_zero();
            return x.int_value() % g == 0;
        }
        case RingKind::PolyQuot: {
            if (x.is_zero()) return true;
            for (auto& gen : gens_)
                if (gen.is_unit()) return true;
            throw UnsupportedError("ideal membership undecidable for PolyQuot");
        }
    }
    throw Error("unreachable");
}

bool Ideal::is_zero_ideal() const {
    for (auto& g : gens_)
        if (!g.is_zero()) return false;
    return true;
}

bool Ideal::is_unit_ideal() const { return contains(ring_.one()); }

bool Ideal::operator==(const Ideal& o) const {
    if (ring_ != o.ring_) return false;
    if (ring_.kind() == RingKind::PolyQuot) throw UnsupportedError("ideal equality for PolyQuot");
    return principal_generator() == o.principal_generator();
}

std::string Ideal::str() const {
    std::string s = "(";
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ",";
        s += gens_[i].str();
    }
    return s + ")";
}

Ideal jacobson_radical(const Ring& r) {
    switch (r.kind()) {
        case RingKind::Integers: return Ideal(r, {r.from_int(0)});
        case RingKind::PrimeField: return Ideal(r, {r.from_int(0)});
        case RingKind::IntegersMod: {
            // intersection of the maximal ideals (p) for p | n
            int64_t rad = 1;
            for (int64_t p : prime_factors(r.modulus())) rad = checked_mul(rad, p);
            return Ideal(r, {r.from_int(rad % r.modulus())});
        }
        case RingKind::PolyQuot: throw UnsupportedError("jacobson_radical unsupported for PolyQuot");
    }
    throw Error("unreachable");
}

namespace {
bool has_gf2_residue_field(const Ring& r) {
    switch (r.kind()) {
        case RingKind::Integers: return true;  // Z/(2)
        case RingKind::IntegersMod: return r.modulus() % 2 == 0;
        case RingKind::PrimeField: return r.modulus() == 2;
        case RingKind::PolyQuot:
            throw UnsupportedError("residue-field test unsupported for PolyQuot");
    }
    throw Error("unreachable");
}
}  // namespace

ConditionVerdict check_condition(RootLabel label, const Ring& r) {
    if (doubly_laced(label)) {
        if (!r.from_int(2).is_unit())
            return {false, "2 is not a unit in " + r.str()};
        return {true, "doubly laced and 2 is a unit"};
    }
    if (label == RootLabel::G2) {
        if (!r.from_int(3).is_unit())
            return {false, "3 is not a unit in " + r.str()};
        if (has_gf2_residue_field(r))
            return {false, r.str() + " has a residue field of 2 elements"};
        return {true, "3 is a unit and no residue field of 2 elements"};
    }
    return {true, "simply laced: no condition"};
}

RingElement map_into(const RingElement& x, const Ring& target) {
    if (x.ring() == target) return x;
    if (!reduction_exists(x.ring(), target))
        throw MixedRingsError("no canonical reduction from " + x.ring().str() + " to " + target.str());
    return target.from_int(x.int_value());
}

bool reduction_exists(const Ring& from, const Ring& target) {
    if (from == target) return true;
    if (from.kind() == RingKind::Integers && target.kind() != RingKind::PolyQuot) return true;
    if ((from.kind() == RingKind::IntegersMod || from.kind() == RingKind::PrimeField) &&
        (target.kind() == RingKind::IntegersMod || target.kind() == RingKind::PrimeField))
        return target.modulus() > 0 && from.modulus() % target.modulus() == 0;
    return false;
}

RingElement eval_poly(const Poly& p, const std::vector<RingElement>& images, const Ring& target) {
    RingElement acc = target.zero();
    for (auto& t : p.terms()) {
        RingElement m = target.from_int(t.c);
        for (int i = 0; i < kMaxPolyVars; ++i) {
            if (t.e[i] == 0) continue;
            if (i >= static_cast<int>(images.size())) throw Error("eval_poly: missing image");
            m = m * images[i].pow(t.e[i]);
        }
        acc = acc + m;
    }
    return acc;
}

PitReport poly_quot_equal(const RingElement& a, const RingElement& b, int min_points, uint64_t seed) {
    if (a.ring() != b.ring() || a.ring().kind() != RingKind::PolyQuot)
        throw MixedRingsError("poly_quot_equal requires two PolyQuot elements of one ring");
    PitReport rep;
    const Poly diff = a.poly_value() - b.poly_value();  // both already in normal form
    constexpr size_t kNormalFormTermLimit = 200000;
    if (a.poly_value().term_count() + b.poly_value().term_count() < kNormalFormTermLimit) {
        rep.path = "normal_form";
        rep.equal = diff.is_zero();
        rep.failure_bound = 0.0;
        return rep;
    }
    // probabilistic identity testing on the relation variety over GF(p)
    rep.path = "pit";
    rep.prime = 2147483647;  // 2^31 - 1
    rep.points = std::max(min_points, 20);
    rep.degree = std::max(a.poly_value().total_degree(), b.poly_value().total_degree());
    Ring gfp = Ring::prime_field(rep.prime);
    const Ring& R = a.ring();
    int nv = static_cast<int>(R.var_names().size());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int64_t> dist(0, rep.prime - 1);
    const Poly* rel = R.relations().empty() ? nullptr : &R.relations()[0];
    for (int k = 0; k < rep.points; ++k) {
        std::vector<RingElement> pt;
        for (int tries = 0;; ++tries) {
            pt.clear();
            for (int i = 0; i < nv; ++i) pt.push_back(gfp.from_int(dist(rng)));
            if (!rel) break;
            // adjust the last variable so the relation vanishes when it
            // occurs linearly with invertible cofactor; otherwise resample
            int last = rel->max_var_index();
            Poly c0, c1;  // rel = c1 * x_last + c0
            for (auto& t : rel->terms()) {
                if (t.e[last] == 0) {
                    c0 = c0 + Poly::from_terms({t});
                } else if (t.e[last] == 1) {
                    PolyTerm s = t;
                    s.e[last] = 0;
                    c1 = c1 + Poly::from_terms({s});
                } else {
                    throw UnsupportedError("relation not linear in its last variable");
                }
            }
            RingElement cv = eval_poly(c1, pt, gfp);
            if (cv.is_zero()) {
                if (tries > 64) throw Error("pit: cannot sample variety point");
                continue;
            }
            pt[last] = (-eval_poly(c0, pt, gfp)) * cv.inv();
            break;
        }
        RingElement va = eval_poly(a.poly_value(), pt, gfp);
        RingElement vb = eval_poly(b.poly_value(), pt, gfp);
        if (va != vb) {
            rep.equal = false;
            return rep;
        }
    }
    rep.equal = true;
    double per_point = static_cast<double>(4 * rep.degree + 3) / static_cast<double>(rep.prime);
    rep.failure_bound = 1.0;
    for (int i = 0; i < rep.points; ++i) rep.failure_bound *= per_point;
    return rep;
}

}  // namespace chevalley
