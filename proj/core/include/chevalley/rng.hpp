#pragma once

#include <cstdint>
#include <random>

#include "chevalley/word.hpp"

namespace chevalley {

constexpr uint64_t kDefaultSeed = 20240917ull;

/// Seeded word generator: all randomness in the verification suites flows
/// through one of these.
class WordSampler {
public:
    WordSampler(const GroupContext& ctx, Ring ring, uint64_t seed)
        : ctx_(&ctx), ring_(std::move(ring)), rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }

    RingElement random_element() {
        std::uniform_int_distribution<int64_t> d(0, ring_.modulus() - 1);
        return ring_.from_int(d(rng_));
    }
    RingElement random_nonzero() {
        for (;;) {
            RingElement t = random_element();
            if (!t.is_zero()) return t;
        }
    }
    RingElement random_unit() {
        for (;;) {
            RingElement t = random_element();
            if (t.is_unit()) return t;
        }
    }
    int random_root() {
        std::uniform_int_distribution<int> d(0, ctx_->roots().num_roots() - 1);
        return d(rng_);
    }

    GroupWord random_word(int min_len = 4, int max_len = 10) {
        std::uniform_int_distribution<int> len_d(min_len, max_len);
        std::uniform_int_distribution<int> kind_d(0, 5);
        GroupWord w;
        int len = len_d(rng_);
        for (int i = 0; i < len; ++i) {
            int k = kind_d(rng_);
            if (k <= 3) {
                w.push_x(random_root(), random_nonzero());
            } else if (k == 4) {
                w.push_h(random_root(), random_unit());
            } else {
                w.push_w(random_root(), random_unit());
            }
        }
        return w;
    }

    GroupElement random_element_of_group(int min_len = 4, int max_len = 10) {
        return random_word(min_len, max_len).evaluate(*ctx_, ring_);
    }

private:
    const GroupContext* ctx_;
    Ring ring_;
    std::mt19937_64 rng_;
};

}  // namespace chevalley
