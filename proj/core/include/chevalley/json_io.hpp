#pragma once

#include <string>

#include "chevalley/decompose.hpp"
#include "chevalley/extract.hpp"
#include "chevalley/ring.hpp"
#include "chevalley/word.hpp"

namespace chevalley {

/// Ring descriptors: {"kind":"int"} | {"kind":"mod","n":9} | {"kind":"gf","p":5}.
std::string ring_json(const Ring& r);
Ring ring_from_json(const std::string& text);
/// CLI shorthand: "int", "mod:9", "gf:5".
Ring ring_from_spec(const std::string& spec);

/// Word letters: [{"g":"x","root":[1,0],"t":"2"}, {"g":"w","root":[0,1],"eps":"1"}].
std::string word_json(const GroupContext& ctx, const GroupWord& w);
GroupWord word_from_json(const GroupContext& ctx, const Ring& r, const std::string& text);

/// Certificates with node tags {"prod","inv","conj","comm","seed","elem"}.
std::string certificate_json(const GroupContext& ctx, const Certificate::Ptr& cert);
Certificate::Ptr certificate_from_json(const GroupContext& ctx, const Ring& r,
                                       const std::string& text);

std::string element_json(const GroupElement& g);
std::string gauss_json(const GroupContext& ctx, const GaussFactorization& f);
std::string extraction_json(const GroupContext& ctx, const ExtractionResult& res);

}  // namespace chevalley
