#include "chevalley/chevalley.hpp"

#include <algorithm>

#include "chevalley/int_util.hpp"

namespace chevalley {

namespace {

Mat64 zero_mat(int n) { return Mat64(n, std::vector<int64_t>(n, 0)); }

Mat64 mat_mul(const Mat64& a, const Mat64& b) {
    int n = static_cast<int>(a.size());
    Mat64 c = zero_mat(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < n; ++j)
                if (b[k][j] != 0) c[i][j] = checked_add(c[i][j], checked_mul(a[i][k], b[k][j]));
        }
    return c;
}

bool mat_is_zero(const Mat64& a) {
    for (auto& row : a)
        for (auto v : row)
            if (v != 0) return false;
    return true;
}

}  // namespace

// --------------------------------------------------------------------------
// structure constants

int64_t StructureTable::lookup(int a, int b) const { return n_[a][b]; }

int64_t StructureTable::structure_constant(int a, int b) const {
    if (rs_->root_sum(a, b) < 0) return 0;
    return n_[a][b];
}

class TableBuilder {
public:
    explicit TableBuilder(StructureTable& t) : t_(t), rs_(*t.rs_) {}

    void run() {
        const int nr = rs_.num_roots();
        t_.n_.assign(nr, std::vector<int64_t>(nr, 0));
        fill_positive_pairs();
        verify_constants();
    }

private:
    StructureTable& t_;
    const RootSystem& rs_;

    int64_t& N(int a, int b) { return t_.n_[a][b]; }

    // N for a pair whose constants reduce to already-filled positive pairs
    int64_t resolve(int a, int b) {
        int s = rs_.root_sum(a, b);
        if (s < 0) throw Error("resolve on non-root sum");
        if (N(a, b) != 0) return N(a, b);
        int64_t v;
        bool pa = rs_.is_positive(a), pb = rs_.is_positive(b);
        if (pa && pb) throw Error("positive pair missing from table");
        if (!pa && !pb) {
            v = -resolve(rs_.negative(a), rs_.negative(b));
        } else {
            int rho = rs_.negative(s);  // -(a+b)
            bool pr = rs_.is_positive(rho);
            if (pb == pr) {
                // N(a,b)/(rho,rho) = N(b,rho)/(a,a)
                int64_t num = checked_mul(rs_.norm2(rho), resolve(b, rho));
                if (num % rs_.norm2(a) != 0) throw Error("cyclic identity not integral");
                v = num / rs_.norm2(a);
            } else if (pa == pr) {
                // N(a,b)/(rho,rho) = N(rho,a)/(b,b)
                int64_t num = checked_mul(rs_.norm2(rho), resolve(rho, a));
                if (num % rs_.norm2(b) != 0) throw Error("cyclic identity not integral");
                v = num / rs_.norm2(b);
            } else {
                throw Error("unreachable sign pattern");
            }
        }
        N(a, b) = v;
        N(b, a) = -v;
        return v;
    }

    void fill_positive_pairs() {
        const int npos = rs_.num_roots() / 2;
        // positive roots are indexed 0..npos-1 in (height, lex) order
        for (int g = 0; g < npos; ++g) {
            std::vector<std::pair<int, int>> specials;
            for (int x = 0; x < npos; ++x)
                for (int y = x + 1; y < npos; ++y)
                    if (rs_.root_sum(x, y) == g) specials.emplace_back(x, y);
            if (specials.empty()) continue;
            std::sort(specials.begin(), specials.end());
            auto [al, be] = specials[0];  // extraspecial pair
            int p = rs_.alpha_string(al, be).first;
            N(al, be) = p + 1;
            N(be, al) = -(p + 1);
            for (size_t k = 1; k < specials.size(); ++k) {
                auto [xi, eta] = specials[k];
                // Jacobi on (e_xi, e_eta, e_{-al}):
                // N(xi,eta) N(g,-al) = -( N(eta,-al) N(eta-al,xi) + N(-al,xi) N(xi-al,eta) )
                int nal = rs_.negative(al);
                int64_t denom = resolve(g, nal);
                int64_t t1 = 0, t2 = 0;
                if (rs_.root_sum(eta, nal) >= 0) {
                    int ema = rs_.root_sum(eta, nal);
                    t1 = checked_mul(resolve(eta, nal), resolve(ema, xi));
                }
                if (rs_.root_sum(xi, nal) >= 0) {
                    int xma = rs_.root_sum(xi, nal);
                    t2 = checked_mul(resolve(nal, xi), resolve(xma, eta));
                }
                int64_t num = -(checked_add(t1, t2));
                if (denom == 0 || num % denom != 0) throw Error("Jacobi recursion failed");
                int64_t v = num / denom;
                N(xi, eta) = v;
                N(eta, xi) = -v;
            }
        }
        // force every remaining pair through resolve
        for (int a = 0; a < rs_.num_roots(); ++a)
            for (int b = 0; b < rs_.num_roots(); ++b)
                if (rs_.root_sum(a, b) >= 0) resolve(a, b);
    }

    void verify_constants() {
        const int nr = rs_.num_roots();
        for (int a = 0; a < nr; ++a) {
            for (int b = 0; b < nr; ++b) {
                if (rs_.root_sum(a, b) < 0) continue;
                int64_t v = N(a, b);
                int p = rs_.alpha_string(a, b).first;
                if (v != p + 1 && v != -(p + 1))
                    throw Error("structure constant magnitude violates |N| = p+1");
                if (v != -N(b, a)) throw Error("antisymmetry violated");
                if (v != -N(rs_.negative(a), rs_.negative(b)))
                    throw Error("N(a,b) = -N(-a,-b) violated");
            }
        }
    }
};

StructureTable StructureTable::build(RootLabel label) {
    StructureTable t;
    t.rs_ = &RootSystem::get(label);
    const RootSystem& rs = *t.rs_;
    const int nr = rs.num_roots();
    const int l = rs.rank();
    const int npos = nr / 2;
    t.npos_ = npos;
    t.dim_ = nr + l;

    TableBuilder(t).run();

    // basis slots: positive roots by decreasing height, cartan, then
    // negative roots by decreasing height (i.e. increasing depth)
    std::vector<int> pos, neg;
    for (int i = 0; i < nr; ++i) (rs.is_positive(i) ? pos : neg).push_back(i);
    auto by_desc_height = [&rs](int a, int b) {
        if (rs.height(a) != rs.height(b)) return rs.height(a) > rs.height(b);
        return a < b;
    };
    std::sort(pos.begin(), pos.end(), by_desc_height);
    std::sort(neg.begin(), neg.end(), by_desc_height);

    t.root_slot_.assign(nr, -1);
    t.cartan_slot_.assign(l, -1);
    t.slot_root_.assign(t.dim_, -1);
    int s = 0;
    for (int i : pos) { t.root_slot_[i] = s; t.slot_root_[s] = i; ++s; }
    for (int i = 0; i < l; ++i) { t.cartan_slot_[i] = s; ++s; }
    for (int i : neg) { t.root_slot_[i] = s; t.slot_root_[s] = i; ++s; }

    // coroot coordinates and Bezout witnesses
    t.coroot_.assign(nr, {});
    t.bezout_.assign(nr, {});
    for (int i = 0; i < nr; ++i) {
        std::vector<int64_t> c(l);
        for (int k = 0; k < l; ++k) {
            int64_t num = checked_mul(rs.root(i)[k], rs.norm2(rs.simple_root(k)));
            if (num % rs.norm2(i) != 0) throw Error("coroot coordinates not integral");
            c[k] = num / rs.norm2(i);
        }
        int64_t g = 0;
        for (auto v : c) g = gcd64(g, v);
        if (g != 1) throw Error("coroot coordinates not primitive");
        t.coroot_[i] = c;
        t.bezout_[i] = bezout_vector(c);
    }

    // adjoint matrices and verified Jacobi identity
    t.ad_.assign(nr, {});
    for (int i = 0; i < nr; ++i) {
        Mat64 m = zero_mat(t.dim_);
        int sa = t.root_slot_[i];
        for (int col = 0; col < t.dim_; ++col) {
            auto v = t.bracket(sa, col);
            for (int row = 0; row < t.dim_; ++row) m[row][col] = v[row];
        }
        t.ad_[i] = std::move(m);
    }
    // Jacobi: [[a,b],c] + [[b,c],a] + [[c,a],b] = 0 over all basis triples
    for (int a = 0; a < t.dim_; ++a) {
        for (int b = 0; b < t.dim_; ++b) {
            auto ab = t.bracket(a, b);
            for (int c = 0; c < t.dim_; ++c) {
                std::vector<int64_t> total(t.dim_, 0);
                auto acc = [&](const std::vector<int64_t>& coef, int other) {
                    for (int s2 = 0; s2 < t.dim_; ++s2) {
                        if (coef[s2] == 0) continue;
                        auto br = t.bracket(s2, other);
                        for (int r = 0; r < t.dim_; ++r)
                            total[r] = checked_add(total[r], checked_mul(coef[s2], br[r]));
                    }
                };
                acc(ab, c);
                acc(t.bracket(b, c), a);
                acc(t.bracket(c, a), b);
                for (auto v : total)
                    if (v != 0) throw Error("Jacobi identity violated");
            }
        }
    }

    // divided powers x_root(t) = sum t^k ad^k/k!, integrality checked
    t.xpow_.assign(nr, {});
    for (int i = 0; i < nr; ++i) {
        std::vector<Mat64> powers;
        Mat64 id = zero_mat(t.dim_);
        for (int d = 0; d < t.dim_; ++d) id[d][d] = 1;
        powers.push_back(id);
        Mat64 adk = t.ad_[i];
        int64_t kfact = 1;
        for (int k = 1; !mat_is_zero(adk); ++k) {
            kfact = checked_mul(kfact, k);
            Mat64 dp = adk;
            for (auto& row : dp)
                for (auto& v : row) {
                    if (v % kfact != 0) throw Error("divided power not integral");
                    v /= kfact;
                }
            powers.push_back(dp);
            adk = mat_mul(adk, t.ad_[i]);
            if (k > 8) throw Error("ad nilpotency bound exceeded");
        }
        t.xpow_[i] = std::move(powers);
    }
    return t;
}

std::vector<int64_t> StructureTable::bracket(int sa, int sb) const {
    std::vector<int64_t> out(dim_, 0);
    int ra = slot_root_[sa], rb = slot_root_[sb];
    if (ra >= 0 && rb >= 0) {
        if (rs_->negative(ra) == rb) {
            for (int i = 0; i < rs_->rank(); ++i) out[cartan_slot_[i]] = coroot_[ra][i];
            return out;
        }
        int s = rs_->root_sum(ra, rb);
        if (s >= 0) out[root_slot_[s]] = n_[ra][rb];
        return out;
    }
    if (ra >= 0 && rb < 0) {
        int i = -1;
        for (int k = 0; k < rs_->rank(); ++k)
            if (cartan_slot_[k] == sb) i = k;
        out[sa] = -rs_->pairing(ra, i);  // [e_a, h_i] = -<a, alpha_i^vee> e_a
        return out;
    }
    if (ra < 0 && rb >= 0) {
        int i = -1;
        for (int k = 0; k < rs_->rank(); ++k)
            if (cartan_slot_[k] == sa) i = k;
        out[sb] = rs_->pairing(rb, i);
        return out;
    }
    return out;  // [h,h] = 0
}

const StructureTable& StructureTable::get(RootLabel label) {
    static std::mutex mu;
    static std::map<RootLabel, std::unique_ptr<StructureTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(label);
    if (it == cache.end()) {
        auto t = std::make_unique<StructureTable>(build(label));
        it = cache.emplace(label, std::move(t)).first;
    }
    return *it->second;
}

// --------------------------------------------------------------------------
// group context

GroupContext::GroupContext(RootLabel label) : label_(label), table_(&StructureTable::get(label)) {}

const GroupContext& GroupContext::get(RootLabel label) {
    static std::mutex mu;
    static std::map<RootLabel, std::unique_ptr<GroupContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(label);
    if (it == cache.end())
        it = cache.emplace(label, std::unique_ptr<GroupContext>(new GroupContext(label))).first;
    return *it->second;
}

GroupElement GroupContext::identity(const Ring& r) const {
    RingMatrix id = RingMatrix::identity(r, dim());
    return GroupElement(id, id);
}

GroupElement GroupContext::x_elem(const Ring& r, int rootidx, const RingElement& t) const {
    if (t.ring() != r) throw MixedRingsError("parameter not in the given ring");
    const auto& powers = table_->x_powers(rootidx);
    RingMatrix m(r, dim()), mi(r, dim());
    RingElement tp = r.one();
    RingElement tn = r.one();
    for (size_t k = 0; k < powers.size(); ++k) {
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j) {
                int64_t c = powers[k][i][j];
                if (c == 0) continue;
                RingElement cc = r.from_int(c);
                m.at(i, j) = m.at(i, j) + cc * tp;
                mi.at(i, j) = mi.at(i, j) + cc * tn;
            }
        tp = tp * t;
        tn = tn * (-t);
    }
    return GroupElement(m, mi);
}

GroupElement GroupContext::w_elem(const Ring& r, int rootidx, const RingElement& eps) const {
    if (!eps.is_unit()) throw NotAUnitError("w_elem requires a unit parameter");
    RingElement ei = eps.inv();
    int nr = table_->roots().negative(rootidx);
    return x_elem(r, rootidx, eps) * x_elem(r, nr, -ei) * x_elem(r, rootidx, eps);
}

GroupElement GroupContext::h_elem(const Ring& r, int rootidx, const RingElement& eps) const {
    return w_elem(r, rootidx, eps) * w_elem(r, rootidx, r.one()).inverse();
}

GroupElement GroupContext::weyl_rep(const Ring& r, const WeylElement& w) const {
    Ring z = Ring::integers();
    GroupElement acc = identity(z);
    RingElement one = z.one();
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
        acc = acc * w_elem(z, table_->roots().simple_root(*it), one);
    return acc.mapped(r);
}

std::pair<int, int> GroupContext::conj_root(const WeylElement& w, int rootidx) const {
    Ring z = Ring::integers();
    GroupElement W = weyl_rep(z, w);
    int col = table_->root_slot(rootidx);
    int target = -1;
    int sign = 0;
    for (int row = 0; row < dim(); ++row) {
        int64_t v = W.inv_mat().at(row, col).int_value();
        if (v == 0) continue;
        if (target >= 0 || !table_->slot_is_root(row) || (v != 1 && v != -1))
            throw Error("weyl representative does not permute root spaces");
        target = table_->slot_root(row);
        sign = static_cast<int>(v);
    }
    if (target < 0) throw Error("conj_root: zero column");
    return {target, sign};
}

std::vector<int> GroupContext::positive_roots() const {
    const RootSystem& rs = table_->roots();
    std::vector<int> out;
    for (int i = 0; i < rs.num_roots(); ++i)
        if (rs.is_positive(i)) out.push_back(i);
    std::sort(out.begin(), out.end(), [&rs](int a, int b) {
        if (rs.height(a) != rs.height(b)) return rs.height(a) < rs.height(b);
        return a < b;
    });
    return out;
}

std::vector<int> GroupContext::negative_roots() const {
    std::vector<int> out = positive_roots();
    for (auto& i : out) i = table_->roots().negative(i);
    return out;
}

std::vector<int> GroupContext::order_rootset(std::vector<int> rootset) const {
    if (rootset.empty()) return rootset;
    const RootSystem& rs = table_->roots();
    const int l = rs.rank();
    // find an integer functional positive on the whole set
    std::vector<int> v(l, 0);
    std::vector<int> best;
    const int B = 6;
    std::vector<int> probe(l, -B);
    for (;;) {
        bool ok = true;
        for (int r : rootset) {
            int64_t dot = 0;
            for (int i = 0; i < l; ++i) dot += static_cast<int64_t>(probe[i]) * rs.root(r)[i];
            if (dot <= 0) { ok = false; break; }
        }
        if (ok) { best = probe; break; }
        int i = 0;
        for (; i < l; ++i) {
            if (probe[i] < B) { ++probe[i]; break; }
            probe[i] = -B;
        }
        if (i == l) throw Error("no positive functional for root subset");
    }
    auto lam = [&](int r) {
        int64_t dot = 0;
        for (int i = 0; i < l; ++i) dot += static_cast<int64_t>(best[i]) * rs.root(r)[i];
        return dot;
    };
    std::sort(rootset.begin(), rootset.end(), [&](int a, int b) {
        if (lam(a) != lam(b)) return lam(a) < lam(b);
        return a < b;
    });
    return rootset;
}

std::vector<std::pair<int, RingElement>> GroupContext::peel(
    const GroupElement& m, const std::vector<int>& ordered_roots) const {
    const Ring& r = m.ring();
    const RootSystem& rs = table_->roots();
    GroupElement cur = m;
    std::vector<std::pair<int, RingElement>> out;
    for (int g : ordered_roots) {
        int col = table_->root_slot(rs.negative(g));
        const auto& bez = table_->coroot_bezout(g);
        RingElement t = r.zero();
        for (int i = 0; i < rs.rank(); ++i) {
            if (bez[i] == 0) continue;
            t = t + r.from_int(bez[i]) * cur.mat().at(table_->cartan_slot(i), col);
        }
        if (!t.is_zero()) {
            cur = x_elem(r, g, -t) * cur;
            out.emplace_back(g, t);
        }
    }
    if (!cur.is_identity()) throw NotUnipotentError();
    return out;
}

const std::vector<CommTerm>& GroupContext::commutator_terms(int a, int b) const {
    const RootSystem& rs = table_->roots();
    if (a == b || rs.negative(a) == b) throw OppositeRootsError();
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(a, b);
    auto it = comm_cache_.find(key);
    if (it != comm_cache_.end()) return it->second;

    // roots i*a + j*b, i,j >= 1
    std::vector<int> sset;
    std::vector<std::pair<int, int>> ij;
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) {
            RootVec v(rs.rank(), 0);
            for (int k = 0; k < rs.rank(); ++k) v[k] = i * rs.root(a)[k] + j * rs.root(b)[k];
            int idx = rs.index_of(v);
            if (idx >= 0) { sset.push_back(idx); ij.emplace_back(i, j); }
        }
    std::vector<CommTerm> terms;
    if (!sset.empty()) {
        Ring tu = Ring::poly_quot({"t", "u"}, {});
        RingElement t = tu.var(0), u = tu.var(1);
        GroupElement comm = x_elem(tu, a, t).comm(x_elem(tu, b, u));
        std::vector<int> ordered = order_rootset(sset);
        auto params = peel(comm, ordered);
        for (auto& [g, param] : params) {
            // locate (i,j) with g = i*a + j*b
            int I = -1, J = -1;
            for (size_t k = 0; k < sset.size(); ++k)
                if (sset[k] == g) { I = ij[k].first; J = ij[k].second; }
            if (I < 0) throw Error("commutator support outside expected root set");
            const Poly& p = param.poly_value();
            if (p.term_count() != 1) throw Error("commutator parameter is not a monomial");
            const PolyTerm& pt = p.terms()[0];
            if (pt.e[0] != I || pt.e[1] != J) throw Error("commutator parameter has wrong degrees");
            terms.push_back({I, J, g, pt.c});
        }
    }
    auto res = comm_cache_.emplace(key, std::move(terms));
    return res.first->second;
}

bool GroupContext::is_central(const GroupElement& x) const {
    const Ring& r = x.ring();
    const RootSystem& rs = table_->roots();
    if (r.kind() == RingKind::Integers || r.is_finite()) {
        // x_a(1) generates x_a(t) for every t in these rings
        for (int a = 0; a < rs.num_roots(); ++a) {
            GroupElement g = x_elem(r, a, r.one());
            if (x.mat() * g.mat() != g.mat() * x.mat()) return false;
        }
        return true;
    }
    throw UnsupportedError("is_central undecidable without an enumerable parameter set");
}

int GroupContext::unipotent_class() const {
    const RootSystem& rs = table_->roots();
    int h = 0;
    for (int i = 0; i < rs.num_roots(); ++i) h = std::max(h, rs.height(i));
    return h;
}

}  // namespace chevalley
