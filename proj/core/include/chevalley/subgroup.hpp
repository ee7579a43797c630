#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "chevalley/chevalley.hpp"
#include "chevalley/ring.hpp"

namespace chevalley {

/// Subgroup of the group over a finite ring, either as a lazily enumerated
/// closure of generators (optionally normalized by all root elements) or
/// as a membership predicate (congruence-type subgroups).
class SubgroupHandle {
public:
    static SubgroupHandle generated(const GroupContext& ctx, Ring ring,
                                    std::vector<GroupElement> gens, bool normalized_by_e);
    static SubgroupHandle predicate(const GroupContext& ctx, Ring ring, std::string name,
                                    std::function<bool(const GroupElement&)> pred);

    const Ring& ring() const { return ring_; }
    const GroupContext& context() const { return *ctx_; }
    bool is_enumerated() const { return !pred_; }

    size_t size() const;                          // forces the closure
    bool contains(const GroupElement& x) const;   // closure lookup or predicate
    void for_each(const std::function<void(const GroupElement&)>& fn) const;
    /// Packed closure keys (enumerated handles only).
    const std::unordered_map<std::string, std::string>& closure_keys() const;

    /// True iff every element of this (enumerated) handle satisfies `fn`.
    bool all_of(const std::function<bool(const GroupElement&)>& fn) const;
    /// True iff every element of this (enumerated) handle lies in `other`.
    bool subset_of(const SubgroupHandle& other) const;

    static constexpr size_t kClosureCap = 1u << 20;

private:
    const GroupContext* ctx_ = nullptr;
    Ring ring_;
    std::vector<GroupElement> gens_;
    bool normalized_ = false;
    std::string name_;
    std::function<bool(const GroupElement&)> pred_;
    struct Closure;
    mutable std::shared_ptr<Closure> closure_;
    void force() const;
};

/// The elementary subgroup E(R): closure of all root elements.
SubgroupHandle elementary_subgroup(const GroupContext& ctx, const Ring& r);

/// Relative elementary subgroup E(R, a): normal closure in E(R) of the
/// root elements with parameters in the ideal.
SubgroupHandle relative_elementary(const GroupContext& ctx, const Ring& r, const Ideal& a);

struct LevelData {
    std::map<int, std::vector<int64_t>> q_alpha;  // root index -> sorted parameter set
    Ideal level;
};

/// Level of an E-normalized subgroup; verifies root-independence and the
/// ideal property (LevelInconsistentError would falsify them).
LevelData level(const SubgroupHandle& h);

struct CongruencePair {
    SubgroupHandle principal;  // G(R, a): kernel of reduction
    SubgroupHandle full;       // C(R, a): preimage of the center
};

CongruencePair congruence(const GroupContext& ctx, const Ring& r, const Ideal& a);

struct SandwichReport {
    Ideal level;
    bool lower_ok = false;   // E(R, q) <= H
    bool upper_ok = false;   // H <= C(R, q)
    bool unique = false;     // no other ideal admits the sandwich
    bool ok() const { return lower_ok && upper_ok && unique; }
    std::string detail;
};

/// Sandwich E(R,a) <= H <= C(R,a) with a = level(H), checked by
/// enumeration, plus uniqueness over the ideal lattice of the ring.
SandwichReport sandwich_check(const SubgroupHandle& h);

struct PerfectnessReport {
    bool perfect = false;       // E = [E,E]
    size_t e_size = 0;
    size_t commutant_size = 0;
};

/// E(R) = [E(R), E(R)] by enumeration.  HypothesisViolatedError when the
/// type is C2 = B2 and the ring has a residue field of 2 elements.
PerfectnessReport perfectness(const GroupContext& ctx, const Ring& r);

/// [[H, E], E] = [H, E] as enumerated sets.
bool hall_witt_check(const SubgroupHandle& h);

/// [E(R), G(R,q)] = E(R, q) as enumerated sets.
bool commutation_formula_check(const GroupContext& ctx, const Ring& r, const Ideal& q);

/// Mutual commutant [A, E(R)] as an enumerated handle (A enumerated).
SubgroupHandle mutual_commutant_with_e(const SubgroupHandle& a);

}  // namespace chevalley
