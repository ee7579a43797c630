#pragma once

#include <string>

#include "chevalley/errors.hpp"

namespace chevalley {

/// Irreducible reduced type labels known to the library. F4 is recognized
/// by the structure-constant condition checker but has no desk-scale data.
enum class RootLabel { A2, A3, B2, B3, C3, G2, F4 };

inline int rank_of(RootLabel l) {
    switch (l) {
        case RootLabel::A2:
        case RootLabel::B2:
        case RootLabel::G2: return 2;
        case RootLabel::A3:
        case RootLabel::B3:
        case RootLabel::C3: return 3;
        case RootLabel::F4: return 4;
    }
    throw Error("bad label");
}

inline bool doubly_laced(RootLabel l) {
    return l == RootLabel::B2 || l == RootLabel::B3 || l == RootLabel::C3 || l == RootLabel::F4;
}

inline bool simply_laced(RootLabel l) {
    return l == RootLabel::A2 || l == RootLabel::A3;
}

inline std::string to_string(RootLabel l) {
    switch (l) {
        case RootLabel::A2: return "A2";
        case RootLabel::A3: return "A3";
        case RootLabel::B2: return "B2";
        case RootLabel::B3: return "B3";
        case RootLabel::C3: return "C3";
        case RootLabel::G2: return "G2";
        case RootLabel::F4: return "F4";
    }
    throw Error("bad label");
}

inline RootLabel parse_label(const std::string& s) {
    if (s == "A2") return RootLabel::A2;
    if (s == "A3") return RootLabel::A3;
    if (s == "B2" || s == "C2") return RootLabel::B2;
    if (s == "B3") return RootLabel::B3;
    if (s == "C3") return RootLabel::C3;
    if (s == "G2") return RootLabel::G2;
    if (s == "F4") return RootLabel::F4;
    throw ParseError("unknown type label: " + s);
}

}  // namespace chevalley
