#pragma once

#include <string>
#include <vector>

#include "chevalley/decompose.hpp"
#include "chevalley/parabolic.hpp"
#include "chevalley/ring.hpp"
#include "chevalley/word.hpp"

namespace chevalley {

/// A certified nontrivial root unipotent inside <seed>^{E(R)}.
struct ExtractionResult {
    int rootidx = -1;
    RingElement t;
    Certificate::Ptr certificate;
    std::vector<std::string> trace;
};

/// Finds a proper parabolic containing `a`, assuming [a, X_alpha(R)] is
/// central (verified; HypothesisFailsError otherwise).  The scan runs over
/// standard parabolics maximal-first, then their Weyl conjugates.
Parabolic escape_centralizer(const GroupContext& ctx, const GroupElement& a, int rootidx);

ExtractionResult extract_from_parabolic(const GroupContext& ctx, const GroupElement& seed,
                                        const Parabolic& p);

/// seed = a * b with a in the unipotent radical of `pu` and b in `ppar`.
ExtractionResult extract_from_puq(const GroupContext& ctx, const GroupElement& seed,
                                  const GroupElement& a, const GroupElement& b,
                                  const Parabolic& pu, const Parabolic& ppar);

/// seed = v * b * wrep per the given U^-Bw factorization.
ExtractionResult extract_from_cell(const GroupContext& ctx, const GroupElement& seed,
                                   const GaussFactorization& f);

/// seed noncentral but central modulo the Jacobson radical.
ExtractionResult extract_under_radical(const GroupContext& ctx, const GroupElement& seed);

/// Full pipeline over a field satisfying the structure-constant condition.
ExtractionResult extract_over_field(const GroupContext& ctx, const GroupElement& seed);

}  // namespace chevalley
