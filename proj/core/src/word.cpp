#include "chevalley/word.hpp"

#include <map>

namespace chevalley {

void GroupWord::append(const GroupWord& o) {
    letters_.insert(letters_.end(), o.letters_.begin(), o.letters_.end());
}

GroupWord GroupWord::inverse() const {
    GroupWord out;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        Generator g = *it;
        g.inverted = !g.inverted;
        out.letters_.push_back(g);
    }
    return out;
}

GroupWord GroupWord::conjugated_letters(const GroupWord& by) const {
    // word for this^{by} = by^-1 . this . by
    GroupWord out = by.inverse();
    out.append(*this);
    out.append(by);
    return out;
}

GroupElement GroupWord::evaluate(const GroupContext& ctx, const Ring& r) const {
    GroupElement acc = ctx.identity(r);
    for (const auto& g : letters_) {
        RingElement param = g.param.ring() == r ? g.param : map_into(g.param, r);
        GroupElement e;
        switch (g.kind) {
            case GenKind::X: e = ctx.x_elem(r, g.rootidx, param); break;
            case GenKind::H: e = ctx.h_elem(r, g.rootidx, param); break;
            case GenKind::W: e = ctx.w_elem(r, g.rootidx, param); break;
        }
        if (g.inverted) e = e.inverse();
        acc = acc * e;
    }
    return acc;
}

// ---------------------------------------------------------------------------

Certificate::Ptr Certificate::seed() {
    auto c = std::shared_ptr<Certificate>(new Certificate());
    c->node_ = CertNode::Seed;
    c->has_seed_ = true;
    return c;
}

Certificate::Ptr Certificate::elementary(GroupWord w) {
    auto c = std::shared_ptr<Certificate>(new Certificate());
    c->node_ = CertNode::Elementary;
    c->word_ = std::move(w);
    c->has_seed_ = false;
    return c;
}

Certificate::Ptr Certificate::product(std::vector<Ptr> args) {
    auto c = std::shared_ptr<Certificate>(new Certificate());
    c->node_ = CertNode::Product;
    c->has_seed_ = false;
    for (auto& a : args) c->has_seed_ = c->has_seed_ || a->contains_seed();
    c->kids_ = std::move(args);
    return c;
}

Certificate::Ptr Certificate::inverse(Ptr a) {
    auto c = std::shared_ptr<Certificate>(new Certificate());
    c->node_ = CertNode::Inverse;
    c->has_seed_ = a->contains_seed();
    c->kids_ = {std::move(a)};
    return c;
}

Certificate::Ptr Certificate::conjugate(Ptr a, Ptr by) {
    auto c = std::shared_ptr<Certificate>(new Certificate());
    c->node_ = CertNode::Conjugate;
    c->has_seed_ = a->contains_seed() || by->contains_seed();
    c->kids_ = {std::move(a), std::move(by)};
    return c;
}

Certificate::Ptr Certificate::commutator(Ptr left, Ptr right) {
    auto c = std::shared_ptr<Certificate>(new Certificate());
    c->node_ = CertNode::Commutator;
    c->has_seed_ = left->contains_seed() || right->contains_seed();
    c->kids_ = {std::move(left), std::move(right)};
    return c;
}

Certificate::Ptr Certificate::conjugate_by_closure(Ptr a, Ptr by) {
    if (!by->contains_seed()) return conjugate(std::move(a), std::move(by));
    // a^b = b^-1 a b stays in the closure when b does
    return product({inverse(by), std::move(a), by});
}

bool Certificate::normal_closure_shape() const {
    switch (node_) {
        case CertNode::Seed:
        case CertNode::Elementary:
            return true;
        case CertNode::Product:
        case CertNode::Inverse: {
            for (auto& k : kids_)
                if (!k->normal_closure_shape()) return false;
            return true;
        }
        case CertNode::Conjugate:
            if (kids_[1]->contains_seed()) return false;
            return kids_[0]->normal_closure_shape();
        case CertNode::Commutator:
            if (kids_[0]->contains_seed() && kids_[1]->contains_seed()) return false;
            return kids_[0]->normal_closure_shape() && kids_[1]->normal_closure_shape();
    }
    return false;
}

size_t Certificate::tree_size() const {
    size_t n = 1;
    for (auto& k : kids_) n += k->tree_size();
    return n;
}

namespace {
GroupElement eval_rec(const Certificate* c, const GroupContext& ctx, const Ring& r,
                      const GroupElement* seed,
                      std::map<const Certificate*, GroupElement>& memo) {
    auto it = memo.find(c);
    if (it != memo.end()) return it->second;
    GroupElement out;
    switch (c->node()) {
        case CertNode::Seed:
            if (!seed) throw Error("certificate contains Seed but no seed element given");
            out = *seed;
            break;
        case CertNode::Elementary:
            out = c->word().evaluate(ctx, r);
            break;
        case CertNode::Product: {
            out = ctx.identity(r);
            for (auto& k : c->children()) out = out * eval_rec(k.get(), ctx, r, seed, memo);
            break;
        }
        case CertNode::Inverse:
            out = eval_rec(c->children()[0].get(), ctx, r, seed, memo).inverse();
            break;
        case CertNode::Conjugate: {
            GroupElement a = eval_rec(c->children()[0].get(), ctx, r, seed, memo);
            GroupElement b = eval_rec(c->children()[1].get(), ctx, r, seed, memo);
            out = a.conj(b);
            break;
        }
        case CertNode::Commutator: {
            GroupElement a = eval_rec(c->children()[0].get(), ctx, r, seed, memo);
            GroupElement b = eval_rec(c->children()[1].get(), ctx, r, seed, memo);
            out = a.comm(b);
            break;
        }
    }
    memo.emplace(c, out);
    return out;
}
}  // namespace

GroupElement evaluate(const Certificate::Ptr& cert, const GroupContext& ctx, const Ring& r,
                      const GroupElement* seed) {
    std::map<const Certificate*, GroupElement> memo;
    return eval_rec(cert.get(), ctx, r, seed, memo);
}

bool check_certificate(const Certificate::Ptr& cert, const GroupContext& ctx,
                       const GroupElement& seed, const GroupElement& claimed) {
    if (!cert->normal_closure_shape()) throw NotNormalClosureShapeError();
    return evaluate(cert, ctx, seed.ring(), &seed) == claimed;
}

}  // namespace chevalley
