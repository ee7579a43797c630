#pragma once

#include <string>
#include <vector>

#include "chevalley/matrix.hpp"
#include "chevalley/ring.hpp"
#include "chevalley/root_system.hpp"
#include "chevalley/word.hpp"

namespace chevalley {

/// Symbolic layer for simply connected type A_l in the defining
/// representation: the affine algebra A = Z[x_ij]/(det - 1), the generic
/// matrix g, cell denominators, good elements and the commutator
/// c = [g^-1, a], all with exact polynomial arithmetic over localizations
/// A_s represented as num / s^pow.
class GenericLayer {
public:
    explicit GenericLayer(int l = 2);

    int l() const { return l_; }
    int n() const { return l_ + 1; }
    const Ring& algebra() const { return a_; }
    const RootSystem& root_system() const { return *rs_; }
    RingMatrix generic_matrix() const;  // g

    /// Substitution homomorphism A -> R at an SL_n(R) point.
    RingElement eval_at(const RingElement& v, const RingMatrix& point) const;
    RingMatrix eval_matrix_at(const RingMatrix& m, const RingMatrix& point) const;

    /// Root index <-> matrix position (i, j), 0-based.
    std::pair<int, int> root_position(int rootidx) const;
    int position_root(int i, int j) const;

    /// Defining-representation generators over an arbitrary ring.
    RingMatrix x_def(const Ring& r, int rootidx, const RingElement& t) const;
    RingMatrix w_def(const Ring& r, int rootidx, const RingElement& eps) const;
    RingMatrix weyl_def(const Ring& r, const WeylElement& w) const;

    /// Denominator of the cell: the product of the reversed leading
    /// principal minors of g * wrep^-1, sign-normalized so the proof point
    /// maps it to +1.
    RingElement cell_denominator(const WeylElement& w) const;

    /// Membership of a concrete point in the cell U B^- wrep.
    bool in_cell(const RingMatrix& point, const WeylElement& w) const;

    /// The integer proof point: x_{-alpha}(1) wrep when w(alpha) = alpha,
    /// else wrep.
    RingMatrix proof_point(const WeylElement& w, int alpha, const Ring& r) const;

    struct GoodElement {
        int k = 0;            // denominator-clearing exponent, s^k
        GroupWord word;       // X letters with parameters in A
        RingMatrix a;         // n x n over A
        RingElement s;        // the (sign-normalized) cell denominator
        int alpha;            // the root
        WeylElement w;
    };
    /// a = x_alpha(s^k)^{u^-1} in U(A), with minimal k <= kmax.
    GoodElement good_element(const WeylElement& w, int alpha, int kmax = 4) const;

    struct CElement {
        GoodElement good;
        RingMatrix c;  // [g^-1, a] over A
        Certificate::Ptr certificate;
        // witness: c = (p u')^{a g^-1} with p = x_alpha(s^k)^{b wrep} in
        // P^-(A_s)^{wrep} and u' = a^-1 in U(A)
        bool witness_product_ok = false;
        bool witness_p_in_parabolic = false;
        bool witness_u_in_unipotent = false;
        PitReport pit;        // forced identity-testing report
        bool exact_equal = false;  // normal-form comparison
    };
    CElement c_element(const WeylElement& w, int alpha, int levi_excluded_simple) const;

    /// Operational noncentrality in SL_n over a finite ring.
    bool defining_noncentral(const RingMatrix& m) const;

    /// Bridge into the adjoint layer: the conjugation action on sl_n in
    /// the Chevalley basis.
    GroupElement adjoint_of(const GroupContext& ctx, const RingMatrix& m) const;

    struct Frac {  // value num / s^pow for a fixed s
        RingElement num;
        int pow = 0;
    };
    using FMat = std::vector<std::vector<Frac>>;

private:
    int l_;
    Ring a_;
    const RootSystem* rs_;
    Poly det_poly() const;
    struct CellData {
        WeylElement w;
        RingMatrix wrep_z;               // over the integers
        RingElement s;                   // sign-normalized denominator
        std::vector<RingElement> delta;  // reversed leading minors of g wrep^-1
        FMat u;                          // upper-uni factor of g wrep^-1
        FMat d;                          // diagonal factor
        FMat v;                          // lower-uni factor
    };
    /// Factorization data of g over A_s, with s sign-normalized at the
    /// proof point for alpha.
    CellData cell_data(const WeylElement& w, int alpha) const;

    friend struct GenericTestAccess;
};

struct GenericRingVerdict {
    std::string ring;
    bool noncentral_defining = false;
    bool noncentral_adjoint = false;
};

struct GenericReport {
    int k = 0;
    bool fixed_alpha_case = false;  // w(alpha) = alpha branch
    int64_t h_s = 0;                // value of s at the proof point
    bool h_a_is_x_alpha_1 = false;
    bool h_c_matches_commutator = false;
    bool witness_product_ok = false;
    bool witness_p_in_parabolic = false;
    bool witness_u_in_unipotent = false;
    bool exact_equal = false;
    PitReport pit;
    std::vector<GenericRingVerdict> rings;
    bool ok() const;
};

/// Full verification run: witness checks plus noncentrality of the
/// proof-point image over each test ring.
GenericReport verify_generic_lemma(const GenericLayer& gl, const WeylElement& w, int alpha,
                                   int levi_excluded_simple, const std::vector<Ring>& test_rings);

}  // namespace chevalley
