#include "chevalley/parabolic.hpp"

#include <algorithm>
#include <sstream>

namespace chevalley {

Parabolic::Parabolic(RootLabel label, std::vector<int> subset, WeylElement conj, bool opposite)
    : label_(label), subset_(std::move(subset)), conj_(std::move(conj)), opposite_(opposite) {
    std::sort(subset_.begin(), subset_.end());
    subset_.erase(std::unique(subset_.begin(), subset_.end()), subset_.end());
    const RootSystem& rs = RootSystem::get(label_);
    for (int s : subset_)
        if (s < 0 || s >= rs.rank()) throw Error("bad simple subset");
    build_mask();
}

Parabolic Parabolic::standard(RootLabel label, std::vector<int> subset) {
    return Parabolic(label, std::move(subset), RootSystem::get(label).identity_weyl(), false);
}

Parabolic Parabolic::standard_opposite(RootLabel label, std::vector<int> subset) {
    return Parabolic(label, std::move(subset), RootSystem::get(label).identity_weyl(), true);
}

Parabolic Parabolic::borel(RootLabel label) { return standard(label, {}); }
Parabolic Parabolic::borel_opposite(RootLabel label) { return standard_opposite(label, {}); }

Parabolic Parabolic::maximal(RootLabel label, int excluded) {
    std::vector<int> s;
    for (int i = 0; i < rank_of(label); ++i)
        if (i != excluded) s.push_back(i);
    return standard(label, s);
}

Parabolic Parabolic::maximal_opposite(RootLabel label, int excluded) {
    std::vector<int> s;
    for (int i = 0; i < rank_of(label); ++i)
        if (i != excluded) s.push_back(i);
    return standard_opposite(label, s);
}

void Parabolic::build_mask() {
    const RootSystem& rs = RootSystem::get(label_);
    mask_.assign(rs.num_roots(), false);
    for (int i = 0; i < rs.num_roots(); ++i) {
        int lvl = parabolic_level(rs, subset_, i);
        bool base = opposite_ ? lvl <= 0 : lvl >= 0;
        if (base) mask_[rs.act(conj_, i)] = true;
    }
}

bool Parabolic::is_proper() const {
    for (bool b : mask_)
        if (!b) return true;
    return false;
}

Parabolic Parabolic::conjugated(const WeylElement& w) const {
    const RootSystem& rs = RootSystem::get(label_);
    return Parabolic(label_, subset_, rs.compose(w, conj_), opposite_);
}

Parabolic Parabolic::opposite_parabolic() const {
    return Parabolic(label_, subset_, conj_, !opposite_);
}

Parabolic Parabolic::enlarged_to_maximal() const {
    const RootSystem& rs = RootSystem::get(label_);
    if (static_cast<int>(subset_.size()) + 1 == rs.rank()) return *this;
    std::vector<int> s = subset_;
    for (int i = 0; i < rs.rank(); ++i) {
        if (std::find(s.begin(), s.end(), i) == s.end() &&
            static_cast<int>(s.size()) + 1 < rs.rank()) {
            s.push_back(i);
        }
    }
    std::sort(s.begin(), s.end());
    return Parabolic(label_, s, conj_, opposite_);
}

Parabolic Parabolic::borel_inside() const {
    return Parabolic(label_, {}, conj_, opposite_);
}

std::vector<int> Parabolic::roots_of() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(mask_.size()); ++i)
        if (mask_[i]) out.push_back(i);
    return out;
}

std::vector<int> Parabolic::radical_roots() const {
    std::vector<int> out;
    const RootSystem& rs = RootSystem::get(label_);
    for (int i = 0; i < rs.num_roots(); ++i)
        if (mask_[i] && !mask_[rs.negative(i)]) out.push_back(i);
    return out;
}

std::vector<int> Parabolic::levi_roots() const {
    std::vector<int> out;
    const RootSystem& rs = RootSystem::get(label_);
    for (int i = 0; i < rs.num_roots(); ++i)
        if (mask_[i] && mask_[rs.negative(i)]) out.push_back(i);
    return out;
}

bool Parabolic::has_root(int rootidx) const { return mask_[rootidx]; }

GroupWord Parabolic::transport_word(const GroupContext& ctx) const {
    const RootSystem& rs = ctx.roots();
    GroupWord w = weyl_rep_word(ctx, rs.inverse(conj_));
    if (opposite_) w.append(weyl_rep_word(ctx, rs.longest()));
    return w;
}

std::vector<int> Parabolic::transported_subset() const {
    if (!opposite_) return subset_;
    const RootSystem& rs = RootSystem::get(label_);
    std::vector<int> out;
    for (int s : subset_) {
        int img = rs.negative(rs.act(rs.longest(), rs.simple_root(s)));
        // -w0(alpha_s) is again simple
        for (int j = 0; j < rs.rank(); ++j)
            if (rs.simple_root(j) == img) out.push_back(j);
    }
    std::sort(out.begin(), out.end());
    if (out.size() != subset_.size()) throw Error("w0 did not permute the simple subset");
    return out;
}

bool Parabolic::contains(const GroupContext& ctx, const GroupElement& x) const {
    GroupWord t = transport_word(ctx);
    GroupElement y = t.empty() ? x : x.conj(t.evaluate(ctx, x.ring()));
    return standard_contains(ctx, transported_subset(), y);
}

bool Parabolic::radical_contains(const GroupContext& ctx, const GroupElement& x) const {
    GroupWord t = transport_word(ctx);
    GroupElement y = t.empty() ? x : x.conj(t.evaluate(ctx, x.ring()));
    return standard_radical_contains(ctx, transported_subset(), y);
}

bool Parabolic::levi_contains(const GroupContext& ctx, const GroupElement& x) const {
    GroupWord t = transport_word(ctx);
    GroupElement y = t.empty() ? x : x.conj(t.evaluate(ctx, x.ring()));
    return standard_levi_contains(ctx, transported_subset(), y);
}

std::string Parabolic::str() const {
    std::ostringstream os;
    os << (opposite_ ? "P-" : "P") << "{";
    for (size_t i = 0; i < subset_.size(); ++i) {
        if (i) os << ",";
        os << subset_[i];
    }
    os << "}";
    if (!conj_.is_identity()) {
        os << "^w[";
        for (size_t i = 0; i < conj_.word.size(); ++i) {
            if (i) os << " ";
            os << conj_.word[i];
        }
        os << "]";
    }
    return os.str();
}

bool Parabolic::same_root_set(const Parabolic& o) const { return mask_ == o.mask_; }

int parabolic_level(const RootSystem& rs, const std::vector<int>& subset, int rootidx) {
    int lvl = 0;
    for (int i = 0; i < rs.rank(); ++i) {
        if (std::find(subset.begin(), subset.end(), i) != subset.end()) continue;
        lvl += rs.root(rootidx)[i];
    }
    return lvl;
}

namespace {

// level of a basis slot's weight
int slot_level(const GroupContext& ctx, const std::vector<int>& subset, int slot) {
    const auto& t = ctx.table();
    if (!t.slot_is_root(slot)) return 0;
    return parabolic_level(ctx.roots(), subset, t.slot_root(slot));
}

}  // namespace

bool standard_contains(const GroupContext& ctx, const std::vector<int>& subset,
                       const GroupElement& x) {
    int n = ctx.dim();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (slot_level(ctx, subset, r) < slot_level(ctx, subset, c) &&
                !x.mat().at(r, c).is_zero())
                return false;
    return true;
}

bool standard_radical_contains(const GroupContext& ctx, const std::vector<int>& subset,
                               const GroupElement& x) {
    int n = ctx.dim();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            int lr = slot_level(ctx, subset, r), lc = slot_level(ctx, subset, c);
            if (lr < lc && !x.mat().at(r, c).is_zero()) return false;
            if (lr == lc) {
                const RingElement& v = x.mat().at(r, c);
                if (r == c ? !v.is_one() : !v.is_zero()) return false;
            }
        }
    return true;
}

bool standard_levi_contains(const GroupContext& ctx, const std::vector<int>& subset,
                            const GroupElement& x) {
    int n = ctx.dim();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (slot_level(ctx, subset, r) != slot_level(ctx, subset, c) &&
                !x.mat().at(r, c).is_zero())
                return false;
    return true;
}

LeviSplit levi_split_standard(const GroupContext& ctx, const std::vector<int>& subset,
                              const GroupElement& x) {
    if (!standard_contains(ctx, subset, x))
        throw Error("levi_split: element not in the standard parabolic");
    const Ring& r = x.ring();
    int n = ctx.dim();
    RingMatrix lm(r, n), li(r, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (slot_level(ctx, subset, i) != slot_level(ctx, subset, j)) continue;
            lm.at(i, j) = x.mat().at(i, j);
            li.at(i, j) = x.inv_mat().at(i, j);
        }
    GroupElement l(lm, li);
    if (l.mat() * l.inv_mat() != RingMatrix::identity(r, n))
        throw Error("levi projection is not invertible");
    GroupElement u = x * l.inverse();
    if (!standard_radical_contains(ctx, subset, u) || !standard_levi_contains(ctx, subset, l))
        throw Error("levi split failed");
    return {u, l};
}

std::vector<Parabolic> proper_parabolics(RootLabel label) {
    const RootSystem& rs = RootSystem::get(label);
    const int l = rs.rank();
    std::vector<std::vector<int>> subsets;
    for (int m = 0; m < (1 << l); ++m) {
        std::vector<int> s;
        for (int i = 0; i < l; ++i)
            if (m & (1 << i)) s.push_back(i);
        if (static_cast<int>(s.size()) < l) subsets.push_back(s);
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    std::vector<Parabolic> out;
    auto push_unique = [&out](Parabolic p) {
        for (auto& q : out)
            if (q.same_root_set(p)) return;
        out.push_back(std::move(p));
    };
    for (auto& s : subsets)
        for (const auto& w : rs.weyl_elements()) {
            push_unique(Parabolic(label, s, w, false));
            push_unique(Parabolic(label, s, w, true));
        }
    return out;
}

GroupWord weyl_rep_word(const GroupContext& ctx, const WeylElement& w) {
    GroupWord out;
    Ring z = Ring::integers();
    const RootSystem& rs = ctx.roots();
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
        out.push_w(rs.simple_root(*it), z.one());
    return out;
}

}  // namespace chevalley
