#pragma once

#include <memory>
#include <string>
#include <vector>

#include "chevalley/chevalley.hpp"

namespace chevalley {

enum class GenKind { X, H, W };

/// One formal generator letter x_a(t), h_a(eps) or w_a(eps), possibly inverted.
struct Generator {
    GenKind kind = GenKind::X;
    int rootidx = 0;
    RingElement param;
    bool inverted = false;
};

/// Formal product of generator letters.
class GroupWord {
public:
    GroupWord() = default;
    explicit GroupWord(std::vector<Generator> letters) : letters_(std::move(letters)) {}

    const std::vector<Generator>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    size_t size() const { return letters_.size(); }

    void push_x(int rootidx, const RingElement& t) { letters_.push_back({GenKind::X, rootidx, t, false}); }
    void push_h(int rootidx, const RingElement& e) { letters_.push_back({GenKind::H, rootidx, e, false}); }
    void push_w(int rootidx, const RingElement& e) { letters_.push_back({GenKind::W, rootidx, e, false}); }
    void append(const GroupWord& o);

    GroupWord inverse() const;
    GroupWord conjugated_letters(const GroupWord& by) const;  // by . this . by^-1 ... see impl

    GroupElement evaluate(const GroupContext& ctx, const Ring& r) const;

private:
    std::vector<Generator> letters_;
};

enum class CertNode { Seed, Elementary, Product, Inverse, Conjugate, Commutator };

/// Expression tree proving membership of its value in the normal closure
/// <seed>^{E(R)}.  Shared subtrees are allowed (DAG).
class Certificate {
public:
    using Ptr = std::shared_ptr<const Certificate>;

    static Ptr seed();
    static Ptr elementary(GroupWord w);
    static Ptr product(std::vector<Ptr> args);
    static Ptr inverse(Ptr a);
    static Ptr conjugate(Ptr a, Ptr by);
    static Ptr commutator(Ptr left, Ptr right);

    /// Conjugation a^b where b itself contains the seed: rewritten as
    /// b^-1 * a * b so the certificate stays in normal-closure shape.
    static Ptr conjugate_by_closure(Ptr a, Ptr by);

    CertNode node() const { return node_; }
    const GroupWord& word() const { return word_; }
    const std::vector<Ptr>& children() const { return kids_; }

    bool contains_seed() const { return has_seed_; }

    /// True iff every path from the root to a Seed leaf passes only through
    /// Product / Inverse / Conjugate-by-elementary / Commutator-with-elementary
    /// nodes (with the "by"/other side free of Seed leaves).
    bool normal_closure_shape() const;

    size_t tree_size() const;

private:
    CertNode node_ = CertNode::Seed;
    GroupWord word_;  // Elementary only
    std::vector<Ptr> kids_;
    bool has_seed_ = true;
    Certificate() = default;
};

/// Homomorphic evaluation; `seed` is required iff the tree contains Seed
/// leaves.  Evaluation memoizes shared subtrees.
GroupElement evaluate(const Certificate::Ptr& cert, const GroupContext& ctx, const Ring& r,
                      const GroupElement* seed);

/// Shape check + evaluation comparison; returns true iff the certificate
/// has normal-closure shape and evaluates to `claimed`.
bool check_certificate(const Certificate::Ptr& cert, const GroupContext& ctx,
                       const GroupElement& seed, const GroupElement& claimed);

}  // namespace chevalley
