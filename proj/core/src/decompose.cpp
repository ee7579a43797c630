#include "chevalley/decompose.hpp"

#include <algorithm>

namespace chevalley {

namespace {

// small determinant and adjugate-based inverse for the Cartan pivot block
RingElement small_det(const std::vector<std::vector<RingElement>>& m) {
    int n = static_cast<int>(m.size());
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (n == 3)
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    throw UnsupportedError("pivot blocks larger than 3x3");
}

std::vector<std::vector<RingElement>> small_inverse(
    const std::vector<std::vector<RingElement>>& m, const RingElement& det) {
    int n = static_cast<int>(m.size());
    const Ring& r = det.ring();
    RingElement dinv = det.inv();
    std::vector<std::vector<RingElement>> adj(n, std::vector<RingElement>(n, r.zero()));
    if (n == 1) {
        adj[0][0] = r.one();
    } else if (n == 2) {
        adj[0][0] = m[1][1];
        adj[0][1] = -m[0][1];
        adj[1][0] = -m[1][0];
        adj[1][1] = m[0][0];
    } else {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
                // adjugate entry (j,i) = cofactor(i,j); cyclic indices
                // absorb the checkerboard sign
                adj[j][i] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
            }
    }
    for (auto& row : adj)
        for (auto& v : row) v = v * dinv;
    return adj;
}

struct Ldu {
    bool ok = false;
    RingMatrix l, d, u;
};

// positions blocked by the (possibly reversed) basis: roots are 1x1 blocks,
// the Cartan slots form one block
std::vector<int> block_sizes(const GroupContext& ctx, bool flip) {
    const auto& t = ctx.table();
    int n = ctx.dim();
    std::vector<int> sizes;
    int pos = 0;
    while (pos < n) {
        int orig = flip ? n - 1 - pos : pos;
        if (t.slot_is_root(orig)) {
            sizes.push_back(1);
            pos += 1;
        } else {
            sizes.push_back(t.roots().rank());
            pos += t.roots().rank();
        }
    }
    return sizes;
}

// L D U factorization with unit block pivots; returns ok=false when a
// pivot block is not invertible
Ldu block_ldu(const Ring& r, RingMatrix m, const std::vector<int>& sizes) {
    int n = m.n();
    Ldu out;
    out.l = RingMatrix::identity(r, n);
    out.d = RingMatrix(r, n);
    out.u = RingMatrix::identity(r, n);
    int pos = 0;
    for (int bs : sizes) {
        std::vector<std::vector<RingElement>> piv(bs, std::vector<RingElement>(bs, r.zero()));
        for (int i = 0; i < bs; ++i)
            for (int j = 0; j < bs; ++j) piv[i][j] = m.at(pos + i, pos + j);
        RingElement det = small_det(piv);
        if (!det.is_unit()) return out;
        auto pinv = small_inverse(piv, det);
        for (int i = 0; i < bs; ++i)
            for (int j = 0; j < bs; ++j) out.d.at(pos + i, pos + j) = piv[i][j];
        // L column block and U row block
        for (int i = pos + bs; i < n; ++i)
            for (int j = 0; j < bs; ++j) {
                RingElement acc = r.zero();
                for (int k = 0; k < bs; ++k) acc = acc + m.at(i, pos + k) * pinv[k][j];
                out.l.at(i, pos + j) = acc;
            }
        for (int j = pos + bs; j < n; ++j)
            for (int i = 0; i < bs; ++i) {
                RingElement acc = r.zero();
                for (int k = 0; k < bs; ++k) acc = acc + pinv[i][k] * m.at(pos + k, j);
                out.u.at(pos + i, j) = acc;
            }
        // Schur complement update
        for (int i = pos + bs; i < n; ++i)
            for (int j = pos + bs; j < n; ++j) {
                RingElement acc = r.zero();
                for (int a = 0; a < bs; ++a) acc = acc + out.l.at(i, pos + a) * m.at(pos + a, j);
                m.at(i, j) = m.at(i, j) - acc;
            }
        pos += bs;
    }
    out.ok = true;
    return out;
}

RingMatrix flipped(const RingMatrix& m) {
    int n = m.n();
    RingMatrix out(m.ring(), n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = m.at(n - 1 - i, n - 1 - j);
    return out;
}

// tests / factors x as (upper uni)(torus)(lower uni) when flip, else
// (lower uni)(torus)(upper uni)
std::optional<Ldu> corner_factor(const GroupContext& ctx, const GroupElement& x, bool flip) {
    const Ring& r = x.ring();
    RingMatrix m = flip ? flipped(x.mat()) : x.mat();
    Ldu ldu = block_ldu(r, std::move(m), block_sizes(ctx, flip));
    if (!ldu.ok) return std::nullopt;
    if (flip) {
        ldu.l = flipped(ldu.l);
        ldu.d = flipped(ldu.d);
        ldu.u = flipped(ldu.u);
    }
    return ldu;
}

// group-level reconstruction of the torus factor from its diagonal action
// on the simple root spaces; validates the matrix is a torus point
std::pair<GroupElement, std::vector<RingElement>> torus_from_matrix(const GroupContext& ctx,
                                                                    const RingMatrix& d) {
    const auto& t = ctx.table();
    const auto& rs = ctx.roots();
    const Ring& r = d.ring();
    std::vector<RingElement> eps;
    for (int i = 0; i < rs.rank(); ++i) {
        int s = t.root_slot(rs.simple_root(i));
        eps.push_back(d.at(s, s));
        if (!eps.back().is_unit()) throw Error("torus value is not a unit");
    }
    RingMatrix tm(r, ctx.dim()), ti(r, ctx.dim());
    for (int s = 0; s < ctx.dim(); ++s) {
        if (!t.slot_is_root(s)) {
            tm.at(s, s) = r.one();
            ti.at(s, s) = r.one();
            continue;
        }
        int root = t.slot_root(s);
        RingElement v = r.one();
        for (int i = 0; i < rs.rank(); ++i) {
            int c = rs.root(root)[i];
            v = v * eps[i].pow(c);
        }
        tm.at(s, s) = v;
        ti.at(s, s) = v.inv();
    }
    GroupElement tor(tm, ti);
    if (tor.mat() != d) throw Error("diagonal factor is not a torus point");
    return {tor, eps};
}

GroupElement unipotent_from_matrix(const GroupContext& ctx, const RingMatrix& m,
                                   const std::vector<int>& ordered_roots, GroupWord* word_out) {
    const Ring& r = m.ring();
    // the matrix of a unipotent factor is its own certificate: peel needs a
    // GroupElement, and the tracked inverse is rebuilt from the word
    GroupElement probe(m, m);  // inverse slot unused by peel
    auto params = ctx.peel(probe, ordered_roots);
    GroupWord w;
    GroupElement acc = ctx.identity(r);
    for (auto& [root, t] : params) {
        w.push_x(root, t);
        acc = acc * ctx.x_elem(r, root, t);
    }
    if (acc.mat() != m) throw Error("unipotent peel did not reproduce the factor");
    if (word_out) *word_out = w;
    return acc;
}

}  // namespace

bool in_big_cell(const GroupContext& ctx, const GroupElement& x) {
    return corner_factor(ctx, x, /*flip=*/true).has_value();
}

GaussFactorization big_cell_factor(const GroupContext& ctx, const GroupElement& x,
                                   CellOrientation orientation) {
    bool flip = orientation == CellOrientation::UBw;
    auto ldu = corner_factor(ctx, x, flip);
    if (!ldu) throw NotInBigCellError();
    GaussFactorization f;
    f.w = ctx.roots().identity_weyl();
    f.wrep = ctx.identity(x.ring());
    f.orientation = orientation;
    auto [tor, eps] = torus_from_matrix(ctx, ldu->d);
    f.torus = tor;
    f.torus_values = eps;
    auto pos = ctx.positive_roots();
    auto neg = ctx.negative_roots();
    // x = ldu.l * d * ldu.u; after the flip-back ldu.l is the U part for
    // UBw, and the U^- part for UmBw
    if (orientation == CellOrientation::UBw) {
        f.first = unipotent_from_matrix(ctx, ldu->l, pos, &f.first_word);
        f.second = unipotent_from_matrix(ctx, ldu->u, neg, &f.second_word);
    } else {
        f.first = unipotent_from_matrix(ctx, ldu->l, neg, &f.first_word);
        f.second = unipotent_from_matrix(ctx, ldu->u, pos, &f.second_word);
    }
    if (f.first.mat() * f.torus.mat() * f.second.mat() != x.mat())
        throw Error("big cell factorization mismatch");
    return f;
}

GaussFactorization gauss_decompose(const GroupContext& ctx, const GroupElement& x,
                                   CellOrientation orientation) {
    if (!x.ring().is_field())
        throw NotAFieldError("gauss_decompose is only guaranteed over fields");
    for (const auto& w : ctx.roots().weyl_elements()) {
        GroupElement wrep = ctx.weyl_rep(x.ring(), w);
        GroupElement y = x * wrep.inverse();
        bool flip = orientation == CellOrientation::UBw;
        if (!corner_factor(ctx, y, flip).has_value()) continue;
        GaussFactorization f = big_cell_factor(ctx, y, orientation);
        f.w = w;
        f.wrep = wrep;
        if (f.product().mat() != x.mat()) throw Error("gauss decomposition mismatch");
        return f;
    }
    throw Error("gauss cells failed to cover a field point");
}

std::vector<std::pair<int, RingElement>> peel_unipotent(const GroupContext& ctx,
                                                        const GroupElement& m) {
    return ctx.peel(m, ctx.positive_roots());
}

WeylElement bruhat_cell(const GroupContext& ctx, const GroupElement& x) {
    if (!x.ring().is_field()) throw NotAFieldError("bruhat_cell requires a field");
    const RootSystem& rs = ctx.roots();
    std::optional<WeylElement> found;
    for (const auto& w : rs.weyl_elements()) {
        GroupElement wrep = ctx.weyl_rep(x.ring(), w);
        GroupElement y = x * wrep.inverse();
        if (!corner_factor(ctx, y, /*flip=*/true).has_value()) continue;
        GaussFactorization f = big_cell_factor(ctx, y, CellOrientation::UBw);
        // x in BwB iff the U^- part of x w^-1 = u t v is supported on
        // {beta < 0 : w^-1(beta) > 0}
        WeylElement winv = rs.inverse(w);
        bool ok = true;
        for (auto& [root, t] : ctx.peel(f.second, ctx.negative_roots())) {
            (void)t;
            if (!rs.is_positive(rs.act(winv, root))) { ok = false; break; }
        }
        if (ok) {
            if (found) throw Error("element lies in two Bruhat cells");
            found = w;
        }
    }
    if (!found) throw Error("element lies in no Bruhat cell");
    return *found;
}

}  // namespace chevalley
