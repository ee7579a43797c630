#include "chevalley/verify.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <map>
#include <sstream>

#include "chevalley/extract.hpp"
#include "chevalley/generic.hpp"
#include "chevalley/subgroup.hpp"
#include "json.hpp"

namespace chevalley {

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<RootLabel> kDeskTypes = {RootLabel::A2, RootLabel::B2, RootLabel::G2};

std::string fmt_count(size_t n, const char* what) {
    return std::to_string(n) + " " + what;
}

// enumerated elements of E(R) = G(R) at desk scale, as group elements
std::vector<GroupElement> group_elements(const GroupContext& ctx, const Ring& r) {
    std::vector<GroupElement> out;
    elementary_subgroup(ctx, r).for_each([&](const GroupElement& g) { out.push_back(g); });
    return out;
}

int w_index(const GroupContext& ctx, const WeylElement& w) {
    const auto& all = ctx.roots().weyl_elements();
    for (int i = 0; i < static_cast<int>(all.size()); ++i)
        if (all[i].perm == w.perm) return i;
    throw Error("weyl element not enumerated");
}

// 1. Steinberg identities: additivity, commutator formula, Weyl action
CriterionResult criterion1(const VerifyOptions&) {
    CriterionResult res{1, "steinberg-identities", true, "", 0};
    std::ostringstream detail;
    size_t checks = 0;
    for (RootLabel label : kDeskTypes) {
        const GroupContext& ctx = GroupContext::get(label);
        const RootSystem& rs = ctx.roots();
        for (Ring r : {Ring::prime_field(5), Ring::integers_mod(9)}) {
            auto elems = r.elements();
            // additivity
            for (int a = 0; a < rs.num_roots(); ++a)
                for (auto& t : elems)
                    for (auto& u : elems) {
                        if (ctx.x_elem(r, a, t) * ctx.x_elem(r, a, u) != ctx.x_elem(r, a, t + u)) {
                            res.pass = false;
                            detail << "additivity fails " << to_string(label) << " " << r.str();
                        }
                        ++checks;
                    }
            // commutator formula against the expansion table
            for (int a = 0; a < rs.num_roots(); ++a)
                for (int b = 0; b < rs.num_roots(); ++b) {
                    if (a == b || rs.negative(a) == b) continue;
                    for (auto& t : elems)
                        for (auto& u : elems) {
                            GroupElement lhs = ctx.x_elem(r, a, t).comm(ctx.x_elem(r, b, u));
                            GroupElement rhs = ctx.identity(r);
                            for (const auto& term : ctx.commutator_terms(a, b)) {
                                RingElement param =
                                    r.from_int(term.coeff) * t.pow(term.i) * u.pow(term.j);
                                rhs = rhs * ctx.x_elem(r, term.rootidx, param);
                            }
                            if (lhs != rhs) {
                                res.pass = false;
                                detail << "commutator formula fails " << to_string(label) << " "
                                       << r.str() << ";";
                            }
                            ++checks;
                        }
                }
            // Weyl action signs
            for (const auto& w : rs.weyl_elements()) {
                GroupElement wrep = ctx.weyl_rep(r, w);
                for (int a = 0; a < rs.num_roots(); ++a) {
                    auto [img, sign] = ctx.conj_root(w, a);
                    if (img != rs.act(w, a)) {
                        res.pass = false;
                        detail << "conj_root image mismatch;";
                    }
                    for (auto& t : elems) {
                        GroupElement lhs = ctx.x_elem(r, a, t).conj(wrep);
                        GroupElement rhs = ctx.x_elem(r, img, r.from_int(sign) * t);
                        if (lhs != rhs) {
                            res.pass = false;
                            detail << "weyl action fails " << to_string(label) << ";";
                        }
                        ++checks;
                    }
                }
            }
        }
    }
    res.detail = res.pass ? fmt_count(checks, "identities") : detail.str();
    return res;
}

// 2. [x,yz]^{z^-1} = [z^-1,x][x,y] over random triples
CriterionResult criterion2(const VerifyOptions& opts) {
    CriterionResult res{2, "commutator-identity", true, "", 0};
    int trials = opts.quick ? 100 : 1000;
    size_t checks = 0;
    for (RootLabel label : kDeskTypes) {
        const GroupContext& ctx = GroupContext::get(label);
        Ring r = Ring::prime_field(5);
        WordSampler ws(ctx, r, opts.seed + static_cast<int>(label));
        for (int i = 0; i < trials; ++i) {
            GroupElement x = ws.random_element_of_group();
            GroupElement y = ws.random_element_of_group();
            GroupElement z = ws.random_element_of_group();
            GroupElement lhs = x.comm(y * z).conj(z.inverse());
            GroupElement rhs = z.inverse().comm(x) * x.comm(y);
            if (lhs != rhs) res.pass = false;
            ++checks;
        }
    }
    res.detail = fmt_count(checks, "triples");
    return res;
}

// 3. Gauss covering and Bruhat partition of the 168-element group
CriterionResult criterion3(const VerifyOptions&) {
    CriterionResult res{3, "gauss-bruhat-gf2", true, "", 0};
    const GroupContext& ctx = GroupContext::get(RootLabel::A2);
    Ring r = Ring::prime_field(2);
    auto elems = group_elements(ctx, r);
    if (elems.size() != 168) {
        res.pass = false;
        res.detail = "group size " + std::to_string(elems.size());
        return res;
    }
    std::map<int, size_t> cell_sizes;
    for (auto& g : elems) {
        GaussFactorization f = gauss_decompose(ctx, g, CellOrientation::UmBw);
        if (f.product() != g) res.pass = false;
        GaussFactorization f2 = gauss_decompose(ctx, g, CellOrientation::UBw);
        if (f2.product() != g) res.pass = false;
        WeylElement w = bruhat_cell(ctx, g);  // throws if not in exactly one cell
        cell_sizes[w_index(ctx, w)] += 1;
    }
    // |BwB| = 2^{l(w)} * 8, summing to 168
    size_t total = 0;
    for (const auto& w : ctx.roots().weyl_elements()) {
        size_t expect = (1u << w.length) * 8;
        size_t got = cell_sizes[w_index(ctx, w)];
        if (got != expect) {
            res.pass = false;
            res.detail += "cell size mismatch at length " + std::to_string(w.length) + ";";
        }
        total += got;
    }
    if (total != 168) res.pass = false;
    if (res.pass) res.detail = "168 elements, 6 cells, partition exact";
    return res;
}

// 4. decompose round trips on random words over GF(5)
CriterionResult criterion4(const VerifyOptions& opts) {
    CriterionResult res{4, "gauss-roundtrip", true, "", 0};
    int trials = opts.quick ? 100 : 1000;
    size_t checks = 0;
    for (RootLabel label : kDeskTypes) {
        const GroupContext& ctx = GroupContext::get(label);
        Ring r = Ring::prime_field(5);
        WordSampler ws(ctx, r, opts.seed + 41 + static_cast<int>(label));
        for (int i = 0; i < trials; ++i) {
            GroupElement g = ws.random_element_of_group();
            CellOrientation o = i % 2 == 0 ? CellOrientation::UmBw : CellOrientation::UBw;
            GaussFactorization f = gauss_decompose(ctx, g, o);
            if (f.product() != g) res.pass = false;
            ++checks;
        }
    }
    res.detail = fmt_count(checks, "round trips");
    return res;
}

// 5. extraction over GF(2) and GF(3): every noncentral element yields a
// certified root element
CriterionResult criterion5(const VerifyOptions& opts) {
    CriterionResult res{5, "extraction-fields", true, "", 0};
    std::vector<int64_t> primes = opts.quick ? std::vector<int64_t>{2}
                                             : std::vector<int64_t>{2, 3};
    size_t done = 0, central = 0;
    for (int64_t p : primes) {
        const GroupContext& ctx = GroupContext::get(RootLabel::A2);
        Ring r = Ring::prime_field(p);
        for (auto& g : group_elements(ctx, r)) {
            if (ctx.is_central(g)) {
                ++central;
                continue;
            }
            try {
                ExtractionResult er = extract_over_field(ctx, g);
                (void)er;
                ++done;
            } catch (const SearchExhaustedError& e) {
                res.pass = false;
                res.detail += std::string("search exhausted: ") + e.what() + ";";
            }
        }
    }
    res.detail = fmt_count(done, "extractions") + ", " + fmt_count(central, "central skipped");
    return res;
}

// 6. congruence kernel mod 2 in Z/4: big cell + extraction
CriterionResult criterion6(const VerifyOptions&) {
    CriterionResult res{6, "under-radical-z4", true, "", 0};
    const GroupContext& ctx = GroupContext::get(RootLabel::A2);
    Ring r = Ring::integers_mod(4);
    Ring r2 = Ring::integers_mod(2);
    size_t kernel = 0, extracted = 0;
    for (auto& g : group_elements(ctx, r)) {
        if (!g.mapped(r2).is_identity()) continue;
        ++kernel;
        if (!in_big_cell(ctx, g)) {
            res.pass = false;
            res.detail += "kernel element outside the big cell;";
        }
        if (ctx.is_central(g)) continue;
        try {
            extract_under_radical(ctx, g);
            ++extracted;
        } catch (const Error& e) {
            res.pass = false;
            res.detail += std::string(e.what()) + ";";
        }
    }
    if (kernel != 256) {
        res.pass = false;
        res.detail += "kernel size " + std::to_string(kernel) + " != 256;";
    }
    if (res.pass)
        res.detail = "256 kernel elements in the big cell, " + fmt_count(extracted, "extracted");
    return res;
}

// 7. generic-element construction at rank 2
CriterionResult criterion7(const VerifyOptions&) {
    CriterionResult res{7, "generic-element", true, "", 0};
    GenericLayer gl(2);
    const RootSystem& rs = gl.root_system();
    std::vector<Ring> rings = {Ring::prime_field(2), Ring::prime_field(3), Ring::integers_mod(4)};
    // fixed case: w = e
    GenericReport r1 = verify_generic_lemma(gl, rs.identity_weyl(), rs.simple_root(0), 0, rings);
    // moved case: w = s_beta
    GenericReport r2 =
        verify_generic_lemma(gl, rs.simple_reflection(1), rs.simple_root(0), 0, rings);
    if (!r1.ok() || !r1.fixed_alpha_case) {
        res.pass = false;
        res.detail += "fixed-alpha case failed;";
    }
    if (!r2.ok() || r2.fixed_alpha_case) {
        res.pass = false;
        res.detail += "moved-alpha case failed;";
    }
    if (res.pass) {
        std::ostringstream os;
        os << "k=" << r1.k << "," << r2.k << " pit_bound<=" << std::scientific
           << std::max(r1.pit.failure_bound, r2.pit.failure_bound);
        res.detail = os.str();
    }
    return res;
}

// 8. sandwich sampling
CriterionResult criterion8(const VerifyOptions& opts) {
    CriterionResult res{8, "sandwich-sampling", true, "", 0};
    struct Batch {
        RootLabel label;
        Ring ring;
        int count;
    };
    std::vector<Batch> batches = {
        {RootLabel::A2, Ring::integers_mod(4), opts.quick ? 6 : 80},
        {RootLabel::A2, Ring::prime_field(3), opts.quick ? 6 : 80},
        {RootLabel::B2, Ring::prime_field(3), opts.quick ? 3 : 40},
    };
    size_t done = 0;
    for (auto& batch : batches) {
        const GroupContext& ctx = GroupContext::get(batch.label);
        WordSampler ws(ctx, batch.ring, opts.seed + 97 + static_cast<int>(batch.label));
        for (int i = 0; i < batch.count; ++i) {
            GroupElement h = ws.random_element_of_group();
            SubgroupHandle hh =
                SubgroupHandle::generated(ctx, batch.ring, {h}, /*normalized_by_e=*/true);
            SandwichReport rep = sandwich_check(hh);
            if (!rep.ok()) {
                res.pass = false;
                res.detail += to_string(batch.label) + "/" + batch.ring.str() + " sample " +
                              std::to_string(i) + " failed: " + rep.detail + ";";
            }
            ++done;
        }
    }
    if (res.pass) res.detail = fmt_count(done, "sandwiches");
    return res;
}

// 9. perfectness and the double-commutator identity
CriterionResult criterion9(const VerifyOptions& opts) {
    CriterionResult res{9, "perfectness-hall-witt", true, "", 0};
    const GroupContext& ctx = GroupContext::get(RootLabel::A2);
    Ring r = Ring::prime_field(3);
    PerfectnessReport pr = perfectness(ctx, r);
    if (!pr.perfect) {
        res.pass = false;
        res.detail += "E not perfect;";
    }
    int samples = opts.quick ? 3 : 20;
    WordSampler ws(ctx, r, opts.seed + 271);
    for (int i = 0; i < samples; ++i) {
        GroupElement h = ws.random_element_of_group();
        SubgroupHandle hh = SubgroupHandle::generated(ctx, r, {h}, true);
        if (!hall_witt_check(hh)) {
            res.pass = false;
            res.detail += "double commutator fails at sample " + std::to_string(i) + ";";
        }
    }
    if (res.pass)
        res.detail = "|E|=" + std::to_string(pr.e_size) + ", " + std::to_string(samples) +
                     " double-commutator samples";
    return res;
}

// 10. [E(R), G(R,q)] = E(R,q) at Z/4, q = (2)
CriterionResult criterion10(const VerifyOptions&) {
    CriterionResult res{10, "commutation-formula", true, "", 0};
    const GroupContext& ctx = GroupContext::get(RootLabel::A2);
    Ring r = Ring::integers_mod(4);
    Ideal q(r, {r.from_int(2)});
    res.pass = commutation_formula_check(ctx, r, q);
    res.detail = res.pass ? "set equality holds" : "set equality fails";
    return res;
}

}  // namespace

CriterionResult run_criterion(int id, const VerifyOptions& opts) {
    auto t0 = Clock::now();
    CriterionResult res;
    switch (id) {
        case 1: res = criterion1(opts); break;
        case 2: res = criterion2(opts); break;
        case 3: res = criterion3(opts); break;
        case 4: res = criterion4(opts); break;
        case 5: res = criterion5(opts); break;
        case 6: res = criterion6(opts); break;
        case 7: res = criterion7(opts); break;
        case 8: res = criterion8(opts); break;
        case 9: res = criterion9(opts); break;
        case 10: res = criterion10(opts); break;
        default: throw Error("no such criterion");
    }
    res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return res;
}

std::vector<CriterionResult> run_verification(const VerifyOptions& opts) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= 10; ++id) out.push_back(run_criterion(id, opts));
    return out;
}

std::string verification_json(const std::vector<CriterionResult>& results, uint64_t seed,
                              bool with_timestamp) {
    nlohmann::json o;
    o["seed"] = seed;
    if (with_timestamp) o["timestamp"] = static_cast<int64_t>(std::time(nullptr));
    nlohmann::json arr = nlohmann::json::array();
    bool all = true;
    for (auto& r : results) {
        arr.push_back({{"id", r.id},
                       {"name", r.name},
                       {"pass", r.pass},
                       {"detail", r.detail},
                       {"seconds", r.seconds}});
        all = all && r.pass;
    }
    o["criteria"] = arr;
    o["pass"] = all;
    return o.dump(2);
}

}  // namespace chevalley
