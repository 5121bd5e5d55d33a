#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace lexcoh {

// Deterministic random stream.  All randomness in the library flows from one
// master seed through named sub-streams, so results are reproducible and
// independent of evaluation order.  mt19937_64 output is fixed by the
// standard; bounded sampling is done by rejection to stay portable
// (std::uniform_int_distribution is not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    static std::uint64_t label_hash(std::string_view label) {
        std::uint64_t h = 1469598103934665603ull;  // FNV-1a
        for (unsigned char c : label) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return h;
    }

    static Rng stream(std::uint64_t master, std::string_view label,
                      std::uint64_t index = 0) {
        std::seed_seq seq{master, label_hash(label), index};
        Rng r(0);
        r.eng_.seed(seq);
        return r;
    }

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, n), n >= 1.
    std::uint64_t uniform(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return v % n;
    }

    // Uniform in [lo, hi], inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        uniform(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace lexcoh
