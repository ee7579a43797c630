#pragma once

#include <optional>
#include <vector>

#include "chevalley/word.hpp"

namespace chevalley {

/// Cell orientation: UBw means x = u b w with u in U and b in B^- (torus
/// times U^-); UmBw means x = v b w with v in U^- and b in B = T U.
enum class CellOrientation { UBw, UmBw };

struct GaussFactorization {
    WeylElement w;
    GroupElement wrep;
    CellOrientation orientation = CellOrientation::UBw;
    GroupElement first;  // the leading unipotent factor (U or U^-)
    GroupWord first_word;
    GroupElement torus;
    std::vector<RingElement> torus_values;  // at the simple roots
    GroupElement second;  // the trailing unipotent factor inside b
    GroupWord second_word;

    GroupElement b() const { return torus * second; }
    GroupElement product() const { return first * torus * second * wrep; }
};

/// Big-cell membership x in U T U^- (R): block-LU over the weight-ordered
/// basis with unit pivot blocks.  Works over any ring.
bool in_big_cell(const GroupContext& ctx, const GroupElement& x);

/// Factorization of x as (unipotent, torus, opposite unipotent) in the
/// given orientation; throws NotInBigCellError when a pivot is not a unit.
GaussFactorization big_cell_factor(const GroupContext& ctx, const GroupElement& x,
                                   CellOrientation orientation);

/// Gauss decomposition over a field: scans W for a cell containing x.
GaussFactorization gauss_decompose(const GroupContext& ctx, const GroupElement& x,
                                   CellOrientation orientation);

/// Inverse of the product map U = prod X_alpha in height order.
std::vector<std::pair<int, RingElement>> peel_unipotent(const GroupContext& ctx,
                                                        const GroupElement& m);

/// The unique w with x in B(F) w B(F), over a field.
WeylElement bruhat_cell(const GroupContext& ctx, const GroupElement& x);

}  // namespace chevalley
