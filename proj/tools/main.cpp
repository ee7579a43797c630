// chevalley: exact computations in Chevalley groups over small
// commutative rings.  Subcommands cover root data, structure constants,
// word evaluation, Gauss/Bruhat decomposition, certified extraction of
// root unipotents, the generic-element construction, subgroup levels and
// the normal-structure sandwich, plus the full verification suite.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "chevalley/generic.hpp"
#include "chevalley/json_io.hpp"
#include "chevalley/subgroup.hpp"
#include "chevalley/verify.hpp"

using namespace chevalley;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(out_path);
        out << text << "\n";
    }
}

int parse_root_arg(const GroupContext& ctx, const std::string& s) {
    RootVec v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(std::stoi(item));
    int idx = ctx.roots().index_of(v);
    if (idx < 0) throw ParseError("not a root: " + s);
    return idx;
}

WeylElement parse_word_arg(const GroupContext& ctx, const std::string& s) {
    std::vector<int> word;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ' '))
        if (!item.empty()) word.push_back(std::stoi(item));
    return ctx.roots().from_word(word);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Chevalley group computations over small rings"};
    app.require_subcommand(1);

    std::string type_str = "A2", ring_str = "gf:5", in_path, out_path, w_str, alpha_str = "1,0";
    std::string seed_path, orientation = "u-bw";
    uint64_t seed = kDefaultSeed;
    bool quick = false, with_timestamp = false;

    auto add_common = [&](CLI::App* cmd, bool ring_opt) {
        cmd->add_option("--type", type_str, "root system label (A2, A3, B2, B3, C3, G2)");
        if (ring_opt) cmd->add_option("--ring", ring_str, "ring spec: int, mod:N or gf:P");
        cmd->add_option("--out", out_path, "write the JSON report to a file");
    };

    auto* roots_cmd = app.add_subcommand("roots", "root system data as JSON");
    add_common(roots_cmd, false);

    auto* table_cmd = app.add_subcommand("table", "structure constants and commutator table");
    add_common(table_cmd, false);

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a generator word");
    add_common(eval_cmd, true);
    eval_cmd->add_option("--in", in_path, "word JSON file")->required();

    auto* dec_cmd = app.add_subcommand("decompose", "Gauss decomposition of a word value");
    add_common(dec_cmd, true);
    dec_cmd->add_option("--in", in_path, "word JSON file")->required();
    dec_cmd->add_option("--orientation", orientation, "ubw or u-bw");

    auto* ext_cmd = app.add_subcommand("extract", "certified extraction of a root unipotent");
    add_common(ext_cmd, true);
    ext_cmd->add_option("--in", in_path, "seed word JSON file")->required();

    auto* gen_cmd = app.add_subcommand("generic-check", "generic-element verification at rank 2");
    add_common(gen_cmd, false);
    gen_cmd->add_option("--w", w_str, "reduced word, e.g. \"0 1\" (default identity)");
    gen_cmd->add_option("--alpha", alpha_str, "root coordinates, e.g. 1,0");

    auto* lvl_cmd = app.add_subcommand("level", "level of the E-normalized closure of a seed");
    add_common(lvl_cmd, true);
    lvl_cmd->add_option("--seed", seed_path, "seed word JSON file")->required();

    auto* sw_cmd = app.add_subcommand("sandwich", "normal-structure sandwich for a seed closure");
    add_common(sw_cmd, true);
    sw_cmd->add_option("--seed", seed_path, "seed word JSON file")->required();

    auto* va_cmd = app.add_subcommand("verify-all", "run the full verification suite");
    va_cmd->add_option("--out", out_path, "write the JSON report to a file");
    va_cmd->add_option("--seed", seed, "RNG seed");
    va_cmd->add_flag("--quick", quick, "reduced sample counts");
    va_cmd->add_flag("--timestamp", with_timestamp, "include a timestamp in the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (roots_cmd->parsed()) {
            const RootSystem& rs = RootSystem::get(parse_label(type_str));
            emit(rs.json(), out_path);
            return 0;
        }
        if (table_cmd->parsed()) {
            const GroupContext& ctx = GroupContext::get(parse_label(type_str));
            const RootSystem& rs = ctx.roots();
            json o;
            o["type"] = type_str;
            json nmat = json::array();
            for (int a = 0; a < rs.num_roots(); ++a)
                for (int b = 0; b < rs.num_roots(); ++b) {
                    if (rs.root_sum(a, b) < 0) continue;
                    nmat.push_back({{"a", rs.root(a)}, {"b", rs.root(b)},
                                    {"n", ctx.table().structure_constant(a, b)}});
                }
            o["structure_constants"] = nmat;
            json comm = json::array();
            for (int a = 0; a < rs.num_roots(); ++a)
                for (int b = 0; b < rs.num_roots(); ++b) {
                    if (a == b || rs.negative(a) == b) continue;
                    json terms = json::array();
                    for (auto& term : ctx.commutator_terms(a, b))
                        terms.push_back({{"i", term.i},
                                         {"j", term.j},
                                         {"root", rs.root(term.rootidx)},
                                         {"c", term.coeff}});
                    if (!terms.empty())
                        comm.push_back({{"a", rs.root(a)}, {"b", rs.root(b)}, {"terms", terms}});
                }
            o["commutator_terms"] = comm;
            emit(o.dump(), out_path);
            return 0;
        }

        const GroupContext& ctx = GroupContext::get(parse_label(type_str));
        if (eval_cmd->parsed()) {
            Ring r = ring_from_spec(ring_str);
            GroupWord w = word_from_json(ctx, r, slurp(in_path));
            GroupElement g = w.evaluate(ctx, r);
            json o = json::parse(element_json(g));
            o["is_central"] = ctx.is_central(g);
            emit(o.dump(), out_path);
            return 0;
        }
        if (dec_cmd->parsed()) {
            Ring r = ring_from_spec(ring_str);
            GroupWord w = word_from_json(ctx, r, slurp(in_path));
            GroupElement g = w.evaluate(ctx, r);
            CellOrientation o =
                orientation == "ubw" ? CellOrientation::UBw : CellOrientation::UmBw;
            GaussFactorization f = gauss_decompose(ctx, g, o);
            json rep = json::parse(gauss_json(ctx, f));
            rep["roundtrip"] = f.product() == g;
            emit(rep.dump(), out_path);
            return rep["roundtrip"].get<bool>() ? 0 : 1;
        }
        if (ext_cmd->parsed()) {
            Ring r = ring_from_spec(ring_str);
            GroupWord w = word_from_json(ctx, r, slurp(in_path));
            GroupElement g = w.evaluate(ctx, r);
            ExtractionResult res = r.is_field() ? extract_over_field(ctx, g)
                                                : extract_under_radical(ctx, g);
            json rep = json::parse(extraction_json(ctx, res));
            rep["checked"] = true;  // construction re-checks every certificate
            emit(rep.dump(), out_path);
            return 0;
        }
        if (gen_cmd->parsed()) {
            GenericLayer gl(rank_of(parse_label(type_str)));
            WeylElement w = w_str.empty() ? gl.root_system().identity_weyl()
                                          : parse_word_arg(ctx, w_str);
            int alpha = parse_root_arg(ctx, alpha_str);
            std::vector<Ring> rings = {Ring::prime_field(2), Ring::prime_field(3),
                                       Ring::integers_mod(4)};
            GenericReport rep = verify_generic_lemma(gl, w, alpha, 0, rings);
            json o;
            o["k"] = rep.k;
            o["h_s"] = rep.h_s;
            o["fixed_alpha_case"] = rep.fixed_alpha_case;
            o["h_a_is_x_alpha_1"] = rep.h_a_is_x_alpha_1;
            o["h_c_matches_commutator"] = rep.h_c_matches_commutator;
            o["witness_product_ok"] = rep.witness_product_ok;
            o["witness_p_in_parabolic"] = rep.witness_p_in_parabolic;
            o["witness_u_in_unipotent"] = rep.witness_u_in_unipotent;
            o["pit"] = {{"points", rep.pit.points},
                        {"prime", rep.pit.prime},
                        {"failure_bound", rep.pit.failure_bound},
                        {"path", rep.pit.path}};
            json rings_arr = json::array();
            for (auto& v : rep.rings)
                rings_arr.push_back({{"ring", v.ring},
                                     {"noncentral_defining", v.noncentral_defining},
                                     {"noncentral_adjoint", v.noncentral_adjoint}});
            o["rings"] = rings_arr;
            o["ok"] = rep.ok();
            emit(o.dump(2), out_path);
            return rep.ok() ? 0 : 1;
        }
        if (lvl_cmd->parsed() || sw_cmd->parsed()) {
            Ring r = ring_from_spec(ring_str);
            GroupWord w = word_from_json(ctx, r, slurp(seed_path));
            GroupElement g = w.evaluate(ctx, r);
            SubgroupHandle h = SubgroupHandle::generated(ctx, r, {g}, true);
            if (lvl_cmd->parsed()) {
                LevelData lv = level(h);
                json o;
                o["level"] = lv.level.str();
                o["closure_size"] = h.size();
                emit(o.dump(), out_path);
                return 0;
            }
            SandwichReport rep = sandwich_check(h);
            json o;
            o["level"] = rep.level.str();
            o["lower_ok"] = rep.lower_ok;
            o["upper_ok"] = rep.upper_ok;
            o["unique"] = rep.unique;
            o["ok"] = rep.ok();
            if (!rep.detail.empty()) o["detail"] = rep.detail;
            emit(o.dump(), out_path);
            return rep.ok() ? 0 : 1;
        }
        if (va_cmd->parsed()) {
            VerifyOptions opts;
            opts.seed = seed;
            opts.quick = quick;
            auto results = run_verification(opts);
            bool all = true;
            for (auto& res : results) {
                std::cerr << (res.pass ? "[PASS] " : "[FAIL] ") << res.id << " " << res.name
                          << " (" << res.detail << ", " << res.seconds << "s)\n";
                all = all && res.pass;
            }
            emit(verification_json(results, seed, with_timestamp), out_path);
            return all ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
