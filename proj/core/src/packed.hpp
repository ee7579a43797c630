#pragma once

// Internal fast path: matrices over Z/m (m < 256) packed one byte per
// entry, used by the closure enumerators and the certified search.

#include <cstdint>
#include <string>

#include "chevalley/matrix.hpp"

namespace chevalley::packed {

struct Engine {
    int n = 0;
    int64_t mod = 0;

    using Key = std::string;  // n*n bytes

    explicit Engine(int n_, int64_t mod_) : n(n_), mod(mod_) {
        if (mod < 2 || mod > 255) throw Error("packed engine needs 2 <= mod <= 255");
    }

    Key pack(const RingMatrix& m) const {
        Key k(static_cast<size_t>(n) * n, '\0');
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                k[i * n + j] = static_cast<char>(static_cast<uint8_t>(m.at(i, j).int_value()));
        return k;
    }

    RingMatrix unpack(const Key& k, const Ring& r) const {
        RingMatrix m(r, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.at(i, j) = r.from_int(static_cast<uint8_t>(k[i * n + j]));
        return m;
    }

    Key mul(const Key& a, const Key& b) const {
        Key c(static_cast<size_t>(n) * n, '\0');
        const uint8_t* pa = reinterpret_cast<const uint8_t*>(a.data());
        const uint8_t* pb = reinterpret_cast<const uint8_t*>(b.data());
        uint8_t* pc = reinterpret_cast<uint8_t*>(c.data());
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                uint32_t v = pa[i * n + k];
                if (!v) continue;
                const uint8_t* rowb = pb + k * n;
                for (int j = 0; j < n; ++j) {
                    uint32_t acc = pc[i * n + j] + v * rowb[j];
                    pc[i * n + j] = static_cast<uint8_t>(acc % mod);
                }
            }
        }
        return c;
    }

    Key identity() const {
        Key k(static_cast<size_t>(n) * n, '\0');
        for (int i = 0; i < n; ++i) k[i * n + i] = 1;
        return k;
    }

    bool is_identity(const Key& k) const { return k == identity(); }
};

}  // namespace chevalley::packed
