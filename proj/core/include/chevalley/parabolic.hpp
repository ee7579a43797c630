#pragma once

#include <vector>

#include "chevalley/word.hpp"

namespace chevalley {

/// Parabolic subgroup containing the split torus: a standard parabolic
/// (given by a set of simple roots, positive or opposite) moved by a Weyl
/// element.  Membership is tested by the block pattern in the weight basis
/// after transport to standard position.
class Parabolic {
public:
    Parabolic(RootLabel label, std::vector<int> simple_subset, WeylElement conj, bool opposite);
    static Parabolic standard(RootLabel label, std::vector<int> subset);
    static Parabolic standard_opposite(RootLabel label, std::vector<int> subset);
    static Parabolic borel(RootLabel label);
    static Parabolic borel_opposite(RootLabel label);
    /// Maximal standard parabolic whose Levi omits nothing but
    /// `excluded_simple`; its radical contains X_{alpha_excluded}.
    static Parabolic maximal(RootLabel label, int excluded_simple);
    static Parabolic maximal_opposite(RootLabel label, int excluded_simple);

    RootLabel type_label() const { return label_; }
    const std::vector<int>& simple_subset() const { return subset_; }
    const WeylElement& conjugator() const { return conj_; }
    bool opposite() const { return opposite_; }
    bool is_proper() const;

    Parabolic conjugated(const WeylElement& w) const;  // move by a further w
    Parabolic opposite_parabolic() const;
    Parabolic enlarged_to_maximal() const;  // any maximal parabolic containing this one
    Parabolic borel_inside() const;         // Borel of the same position

    /// Root index sets.
    std::vector<int> roots_of() const;
    std::vector<int> radical_roots() const;
    std::vector<int> levi_roots() const;
    bool has_root(int rootidx) const;

    bool contains(const GroupContext& ctx, const GroupElement& x) const;
    bool radical_contains(const GroupContext& ctx, const GroupElement& x) const;
    bool levi_contains(const GroupContext& ctx, const GroupElement& x) const;

    /// Elementary word c with x^c in standard position, plus the standard
    /// subset after transport.
    GroupWord transport_word(const GroupContext& ctx) const;
    std::vector<int> transported_subset() const;

    std::string str() const;
    bool same_root_set(const Parabolic& o) const;

private:
    RootLabel label_;
    std::vector<int> subset_;  // simple indices, sorted
    WeylElement conj_;
    bool opposite_;
    std::vector<bool> mask_;  // root membership
    void build_mask();
};

/// Levi decomposition u * l of an element of a standard parabolic.
struct LeviSplit {
    GroupElement u;  // in U_P
    GroupElement l;  // in L_P
};

/// P-level of a root for the standard parabolic on `subset`: the sum of
/// coordinates at simple roots outside the subset.
int parabolic_level(const RootSystem& rs, const std::vector<int>& subset, int rootidx);

bool standard_contains(const GroupContext& ctx, const std::vector<int>& subset,
                       const GroupElement& x);
bool standard_radical_contains(const GroupContext& ctx, const std::vector<int>& subset,
                               const GroupElement& x);
bool standard_levi_contains(const GroupContext& ctx, const std::vector<int>& subset,
                            const GroupElement& x);
LeviSplit levi_split_standard(const GroupContext& ctx, const std::vector<int>& subset,
                              const GroupElement& x);

/// All parabolics containing T with distinct root sets, proper ones only,
/// scanned maximal-first (|subset| descending, then subset lex, then
/// conjugator word); standard-position ones come before moved ones.
std::vector<Parabolic> proper_parabolics(RootLabel label);

GroupWord weyl_rep_word(const GroupContext& ctx, const WeylElement& w);

}  // namespace chevalley
