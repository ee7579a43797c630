#include "chevalley/json_io.hpp"

#include "json.hpp"

namespace chevalley {

using nlohmann::json;

namespace {

json ring_to_obj(const Ring& r) {
    switch (r.kind()) {
        case RingKind::Integers: return {{"kind", "int"}};
        case RingKind::IntegersMod: return {{"kind", "mod"}, {"n", r.modulus()}};
        case RingKind::PrimeField: return {{"kind", "gf"}, {"p", r.modulus()}};
        case RingKind::PolyQuot: {
            json o{{"kind", "polyquot"}};
            o["vars"] = r.var_names();
            return o;
        }
    }
    throw Error("unreachable");
}

Ring ring_from_obj(const json& o) {
    std::string kind = o.at("kind");
    if (kind == "int") return Ring::integers();
    if (kind == "mod") return Ring::integers_mod(o.at("n").get<int64_t>());
    if (kind == "gf") return Ring::prime_field(o.at("p").get<int64_t>());
    throw ParseError("unsupported ring kind in JSON: " + kind);
}

json root_to_obj(const GroupContext& ctx, int rootidx) {
    json arr = json::array();
    for (int c : ctx.roots().root(rootidx)) arr.push_back(c);
    return arr;
}

int root_from_obj(const GroupContext& ctx, const json& arr) {
    RootVec v;
    for (auto& c : arr) v.push_back(c.get<int>());
    int idx = ctx.roots().index_of(v);
    if (idx < 0) throw ParseError("unknown root in JSON");
    return idx;
}

json word_to_obj(const GroupContext& ctx, const GroupWord& w) {
    json arr = json::array();
    for (const auto& g : w.letters()) {
        json o;
        o["g"] = g.kind == GenKind::X ? "x" : (g.kind == GenKind::H ? "h" : "w");
        o["root"] = root_to_obj(ctx, g.rootidx);
        if (g.kind == GenKind::X)
            o["t"] = g.param.str();
        else
            o["eps"] = g.param.str();
        if (g.inverted) o["inv"] = true;
        arr.push_back(o);
    }
    return arr;
}

RingElement param_from_string(const Ring& r, const std::string& s) {
    try {
        size_t pos = 0;
        int64_t v = std::stoll(s, &pos);
        if (pos != s.size()) throw ParseError("trailing characters in parameter: " + s);
        return r.from_int(v);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad ring element literal: " + s);
    } catch (const std::out_of_range&) {
        throw ParseError("ring element literal out of range: " + s);
    }
}

GroupWord word_from_obj(const GroupContext& ctx, const Ring& r, const json& arr) {
    std::vector<Generator> letters;
    for (auto& o : arr) {
        Generator g;
        std::string kind = o.at("g");
        if (kind == "x")
            g.kind = GenKind::X;
        else if (kind == "h")
            g.kind = GenKind::H;
        else if (kind == "w")
            g.kind = GenKind::W;
        else
            throw ParseError("unknown generator kind: " + kind);
        g.rootidx = root_from_obj(ctx, o.at("root"));
        std::string p = o.contains("t") ? o.at("t").get<std::string>()
                                        : o.at("eps").get<std::string>();
        g.param = param_from_string(r, p);
        g.inverted = o.value("inv", false);
        letters.push_back(std::move(g));
    }
    return GroupWord(std::move(letters));
}

json cert_to_obj(const GroupContext& ctx, const Certificate::Ptr& c) {
    json o;
    switch (c->node()) {
        case CertNode::Seed: o["node"] = "seed"; break;
        case CertNode::Elementary:
            o["node"] = "elem";
            o["word"] = word_to_obj(ctx, c->word());
            break;
        case CertNode::Product: {
            o["node"] = "prod";
            json args = json::array();
            for (auto& k : c->children()) args.push_back(cert_to_obj(ctx, k));
            o["args"] = args;
            break;
        }
        case CertNode::Inverse:
            o["node"] = "inv";
            o["arg"] = cert_to_obj(ctx, c->children()[0]);
            break;
        case CertNode::Conjugate:
            o["node"] = "conj";
            o["arg"] = cert_to_obj(ctx, c->children()[0]);
            o["by"] = cert_to_obj(ctx, c->children()[1]);
            break;
        case CertNode::Commutator:
            o["node"] = "comm";
            o["left"] = cert_to_obj(ctx, c->children()[0]);
            o["right"] = cert_to_obj(ctx, c->children()[1]);
            break;
    }
    return o;
}

Certificate::Ptr cert_from_obj(const GroupContext& ctx, const Ring& r, const json& o) {
    std::string node = o.at("node");
    if (node == "seed") return Certificate::seed();
    if (node == "elem") return Certificate::elementary(word_from_obj(ctx, r, o.at("word")));
    if (node == "prod") {
        std::vector<Certificate::Ptr> args;
        for (auto& a : o.at("args")) args.push_back(cert_from_obj(ctx, r, a));
        return Certificate::product(std::move(args));
    }
    if (node == "inv") return Certificate::inverse(cert_from_obj(ctx, r, o.at("arg")));
    if (node == "conj")
        return Certificate::conjugate(cert_from_obj(ctx, r, o.at("arg")),
                                      cert_from_obj(ctx, r, o.at("by")));
    if (node == "comm")
        return Certificate::commutator(cert_from_obj(ctx, r, o.at("left")),
                                       cert_from_obj(ctx, r, o.at("right")));
    throw ParseError("unknown certificate node: " + node);
}

json element_to_obj(const GroupElement& g) {
    json o;
    o["ring"] = ring_to_obj(g.ring());
    o["n"] = g.n();
    json entries = json::array();
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j) entries.push_back(g.mat().at(i, j).str());
    o["entries"] = entries;
    return o;
}

}  // namespace

std::string ring_json(const Ring& r) { return ring_to_obj(r).dump(); }

Ring ring_from_json(const std::string& text) { return ring_from_obj(json::parse(text)); }

Ring ring_from_spec(const std::string& spec) {
    if (spec == "int") return Ring::integers();
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        std::string kind = spec.substr(0, colon);
        int64_t v = std::stoll(spec.substr(colon + 1));
        if (kind == "mod") return Ring::integers_mod(v);
        if (kind == "gf") return Ring::prime_field(v);
    }
    throw ParseError("bad ring spec (expected int, mod:N or gf:P): " + spec);
}

std::string word_json(const GroupContext& ctx, const GroupWord& w) {
    return word_to_obj(ctx, w).dump();
}

GroupWord word_from_json(const GroupContext& ctx, const Ring& r, const std::string& text) {
    json o = json::parse(text);
    if (o.is_object() && o.contains("word")) o = o.at("word");
    return word_from_obj(ctx, r, o);
}

std::string certificate_json(const GroupContext& ctx, const Certificate::Ptr& cert) {
    return cert_to_obj(ctx, cert).dump();
}

Certificate::Ptr certificate_from_json(const GroupContext& ctx, const Ring& r,
                                       const std::string& text) {
    return cert_from_obj(ctx, r, json::parse(text));
}

std::string element_json(const GroupElement& g) { return element_to_obj(g).dump(); }

std::string gauss_json(const GroupContext& ctx, const GaussFactorization& f) {
    json o;
    o["w"] = f.w.word;
    o["orientation"] = f.orientation == CellOrientation::UBw ? "UBw" : "U-Bw";
    o["u"] = word_to_obj(ctx, f.first_word);
    json tv = json::array();
    for (auto& e : f.torus_values) tv.push_back(e.str());
    o["torus"] = tv;
    o["u_opposite"] = word_to_obj(ctx, f.second_word);
    return o.dump();
}

std::string extraction_json(const GroupContext& ctx, const ExtractionResult& res) {
    json o;
    o["root"] = root_to_obj(ctx, res.rootidx);
    o["t"] = res.t.str();
    o["certificate"] = cert_to_obj(ctx, res.certificate);
    o["trace"] = res.trace;
    return o.dump();
}

}  // namespace chevalley
