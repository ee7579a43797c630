#include "chevalley/poly.hpp"

#include <algorithm>
#include <map>

#include "chevalley/int_util.hpp"

namespace chevalley {

int exp_cmp(const Exponents& a, const Exponents& b) {
    int da = 0, db = 0;
    for (int i = 0; i < kMaxPolyVars; ++i) { da += a[i]; db += b[i]; }
    if (da != db) return da < db ? -1 : 1;
    for (int i = 0; i < kMaxPolyVars; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

namespace {
bool term_before(const PolyTerm& x, const PolyTerm& y) { return exp_cmp(x.e, y.e) > 0; }
}  // namespace

void Poly::normalize() {
    std::sort(terms_.begin(), terms_.end(), term_before);
    std::vector<PolyTerm> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && exp_cmp(out.back().e, t.e) == 0) {
            out.back().c = checked_add(out.back().c, t.c);
            if (out.back().c == 0) out.pop_back();
        } else if (t.c != 0) {
            out.push_back(t);
        }
    }
    terms_ = std::move(out);
}

Poly Poly::from_terms(std::vector<PolyTerm> ts) {
    Poly p;
    p.terms_ = std::move(ts);
    p.normalize();
    return p;
}

Poly Poly::constant(int64_t c) {
    Poly p;
    if (c != 0) p.terms_.push_back({Exponents{}, c});
    return p;
}

Poly Poly::variable(int idx) {
    if (idx < 0 || idx >= kMaxPolyVars) throw Error("variable index out of range");
    PolyTerm t;
    t.e[idx] = 1;
    t.c = 1;
    Poly p;
    p.terms_.push_back(t);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && exp_cmp(terms_[0].e, Exponents{}) == 0);
}

int64_t Poly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw Error("poly is not constant");
    return terms_[0].c;
}

int Poly::total_degree() const {
    int d = 0;
    for (auto& t : terms_) {
        int s = 0;
        for (int i = 0; i < kMaxPolyVars; ++i) s += t.e[i];
        d = std::max(d, s);
    }
    return d;
}

int Poly::max_var_index() const {
    int m = -1;
    for (auto& t : terms_)
        for (int i = 0; i < kMaxPolyVars; ++i)
            if (t.e[i] > 0) m = std::max(m, i);
    return m;
}

const PolyTerm& Poly::leading_term() const {
    if (terms_.empty()) throw Error("leading_term of zero poly");
    return terms_[0];
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) t.c = -t.c;
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<PolyTerm> ts;
    ts.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = exp_cmp(terms_[i].e, o.terms_[j].e);
        if (c > 0) {
            ts.push_back(terms_[i++]);
        } else if (c < 0) {
            ts.push_back(o.terms_[j++]);
        } else {
            int64_t s = checked_add(terms_[i].c, o.terms_[j].c);
            if (s != 0) ts.push_back({terms_[i].e, s});
            ++i; ++j;
        }
    }
    while (i < terms_.size()) ts.push_back(terms_[i++]);
    while (j < o.terms_.size()) ts.push_back(o.terms_[j++]);
    Poly p;
    p.terms_ = std::move(ts);
    return p;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::mul_term(const Exponents& e, int64_t c) const {
    if (c == 0) return Poly();
    Poly p = *this;
    for (auto& t : p.terms_) {
        for (int i = 0; i < kMaxPolyVars; ++i) {
            int v = t.e[i] + e[i];
            if (v > 255) throw OverflowError("exponent overflow");
            t.e[i] = static_cast<uint8_t>(v);
        }
        t.c = checked_mul(t.c, c);
    }
    return p;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::map<Exponents, int64_t, bool (*)(const Exponents&, const Exponents&)> acc(
        [](const Exponents& a, const Exponents& b) { return exp_cmp(a, b) > 0; });
    for (auto& s : terms_) {
        for (auto& t : o.terms_) {
            Exponents e;
            for (int i = 0; i < kMaxPolyVars; ++i) {
                int v = s.e[i] + t.e[i];
                if (v > 255) throw OverflowError("exponent overflow");
                e[i] = static_cast<uint8_t>(v);
            }
            int64_t& slot = acc[e];
            slot = checked_add(slot, checked_mul(s.c, t.c));
        }
    }
    std::vector<PolyTerm> ts;
    ts.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (c != 0) ts.push_back({e, c});
    Poly p;
    p.terms_ = std::move(ts);
    return p;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw Error("division by zero poly");
    const PolyTerm& lt = d.leading_term();
    if (lt.c != 1 && lt.c != -1)
        throw UnsupportedError("divmod requires divisor with leading coefficient +-1");
    Poly q, r = *this;
    // repeatedly cancel the first reducible term of r
    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& t : r.terms()) {
            bool divisible = true;
            for (int i = 0; i < kMaxPolyVars; ++i)
                if (t.e[i] < lt.e[i]) { divisible = false; break; }
            if (!divisible) continue;
            Exponents e;
            for (int i = 0; i < kMaxPolyVars; ++i) e[i] = static_cast<uint8_t>(t.e[i] - lt.e[i]);
            int64_t c = t.c * lt.c;  // t.c / lt.c with lt.c = +-1
            Poly m = Poly::constant(c).mul_term(e, 1);
            q = q + m;
            r = r - d.mul_term(e, c);
            progress = true;
            break;
        }
    }
    return {q, r};
}

Poly Poly::divexact(const Poly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw Error("divexact: nonzero remainder");
    return q;
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (size_t k = 0; k < terms_.size(); ++k) {
        const auto& t = terms_[k];
        int64_t c = t.c;
        if (k == 0) {
            if (c < 0) { out += "-"; c = -c; }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        bool has_var = false;
        std::string mon;
        for (int i = 0; i < kMaxPolyVars; ++i) {
            if (t.e[i] == 0) continue;
            if (has_var) mon += "*";
            mon += (i < static_cast<int>(names.size())) ? names[i] : ("v" + std::to_string(i));
            if (t.e[i] > 1) mon += "^" + std::to_string(static_cast<int>(t.e[i]));
            has_var = true;
        }
        if (!has_var) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c) + "*";
            out += mon;
        }
    }
    return out;
}

size_t Poly::hash() const {
    size_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    for (auto& t : terms_) {
        for (int i = 0; i < kMaxPolyVars; ++i) mix(t.e[i] + 1);
        mix(static_cast<uint64_t>(t.c));
    }
    return h;
}

}  // namespace chevalley
