#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "chevalley/matrix.hpp"
#include "chevalley/ring.hpp"
#include "chevalley/root_system.hpp"

namespace chevalley {

using Mat64 = std::vector<std::vector<int64_t>>;

/// Chevalley basis of the simple Lie algebra over Z together with the
/// adjoint representation.  Basis: root vectors ordered by decreasing
/// height, with the Cartan generators h_1..h_l between the positive and
/// negative parts, so ad-exponentials of positive roots are upper
/// unitriangular.  Signs are fixed by the extraspecial-pair convention
/// (N > 0 on extraspecial pairs); the builder verifies antisymmetry,
/// |N(a,b)| = p+1 and the Jacobi identity exhaustively.
class StructureTable {
public:
    static const StructureTable& get(RootLabel label);

    const RootSystem& roots() const { return *rs_; }
    int dim() const { return dim_; }
    int num_pos() const { return npos_; }

    int root_slot(int rootidx) const { return root_slot_[rootidx]; }
    int cartan_slot(int i) const { return cartan_slot_[i]; }
    bool slot_is_root(int s) const { return slot_root_[s] >= 0; }
    int slot_root(int s) const { return slot_root_[s]; }

    /// N(a,b) for roots with root_sum(a,b) a root; 0 otherwise.
    int64_t structure_constant(int a, int b) const;
    const std::vector<int64_t>& coroot_coords(int rootidx) const { return coroot_[rootidx]; }
    const std::vector<int64_t>& coroot_bezout(int rootidx) const { return bezout_[rootidx]; }

    const Mat64& ad_matrix(int rootidx) const { return ad_[rootidx]; }
    /// Divided powers: x_root(t) = sum_k t^k * x_power(root)[k].
    const std::vector<Mat64>& x_powers(int rootidx) const { return xpow_[rootidx]; }

    /// Pairing <root, alpha_i^vee> (eigenvalue of h_i on e_root).
    int weight(int rootidx, int i) const { return rs_->pairing(rootidx, i); }

private:
    const RootSystem* rs_ = nullptr;
    int dim_ = 0, npos_ = 0;
    std::vector<int> root_slot_, cartan_slot_, slot_root_;
    std::vector<std::vector<int64_t>> n_;  // structure constants, 0 = unset/none
    std::vector<std::vector<int64_t>> coroot_, bezout_;
    std::vector<Mat64> ad_;
    std::vector<std::vector<Mat64>> xpow_;

    static StructureTable build(RootLabel label);
    int64_t lookup(int a, int b) const;
    std::vector<int64_t> bracket(int slotA, int slotB) const;
    friend class TableBuilder;
};

/// Group element in the adjoint representation; the inverse matrix is
/// carried along so that inversion is free (all constructors produce
/// products of generators whose inverses are known in closed form).
class GroupElement {
public:
    GroupElement() = default;
    GroupElement(RingMatrix m, RingMatrix minv) : m_(std::move(m)), mi_(std::move(minv)) {}

    const Ring& ring() const { return m_.ring(); }
    int n() const { return m_.n(); }
    const RingMatrix& mat() const { return m_; }
    const RingMatrix& inv_mat() const { return mi_; }

    GroupElement operator*(const GroupElement& o) const {
        return GroupElement(m_ * o.m_, o.mi_ * mi_);
    }
    GroupElement inverse() const { return GroupElement(mi_, m_); }
    /// a.conj(b) = b^-1 a b
    GroupElement conj(const GroupElement& b) const {
        return GroupElement(b.mi_ * m_ * b.m_, b.mi_ * mi_ * b.m_);
    }
    /// a.comm(b) = a^-1 b^-1 a b
    GroupElement comm(const GroupElement& b) const { return inverse() * b.inverse() * *this * b; }

    bool operator==(const GroupElement& o) const { return m_ == o.m_; }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }
    bool is_identity() const { return m_.is_identity(); }
    size_t hash() const { return m_.hash(); }
    GroupElement mapped(const Ring& target) const {
        return GroupElement(m_.mapped(target), mi_.mapped(target));
    }

private:
    RingMatrix m_, mi_;
};

/// One term x_{i a + j b}(C t^i u^j) of the commutator expansion.
struct CommTerm {
    int i, j;
    int rootidx;
    int64_t coeff;
};

/// Generator factory and group-level operations for one type, ring-agnostic.
class GroupContext {
public:
    static const GroupContext& get(RootLabel label);

    RootLabel label() const { return label_; }
    const RootSystem& roots() const { return table_->roots(); }
    const StructureTable& table() const { return *table_; }
    int dim() const { return table_->dim(); }

    GroupElement identity(const Ring& r) const;
    GroupElement x_elem(const Ring& r, int rootidx, const RingElement& t) const;
    GroupElement w_elem(const Ring& r, int rootidx, const RingElement& eps) const;
    GroupElement h_elem(const Ring& r, int rootidx, const RingElement& eps) const;
    /// Representative built over Z from w_alpha(1) letters (reversed
    /// reduced word, so conjugation acts on roots by w itself).
    GroupElement weyl_rep(const Ring& r, const WeylElement& w) const;

    /// Image root and sign with x_alpha(r)^{weyl_rep(w)} = x_{w(alpha)}(sign r).
    std::pair<int, int> conj_root(const WeylElement& w, int rootidx) const;

    /// Inverse of the product map over the given closed root subset in the
    /// given order: m = prod x_{roots[k]}(t_k).  Throws NotUnipotentError.
    std::vector<std::pair<int, RingElement>> peel(const GroupElement& m,
                                                  const std::vector<int>& ordered_roots) const;
    /// All positive roots ordered by (height, index) — the standard peel
    /// order for U.
    std::vector<int> positive_roots() const;
    std::vector<int> negative_roots() const;
    /// Orders an arbitrary half-space root subset by a positive linear
    /// functional (found by search) so that peel applies.
    std::vector<int> order_rootset(std::vector<int> roots) const;

    const std::vector<CommTerm>& commutator_terms(int a, int b) const;

    /// Centralizes every x_alpha(t), t in R; exhaustive over finite rings.
    bool is_central(const GroupElement& x) const;

    /// Nilpotency class of U (= max root height).
    int unipotent_class() const;

private:
    explicit GroupContext(RootLabel label);
    RootLabel label_;
    const StructureTable* table_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<int, int>, std::vector<CommTerm>> comm_cache_;
};

}  // namespace chevalley
