#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

#include "lexcoh/errors.hpp"
#include "lexcoh/rng.hpp"

namespace lexcoh {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Field of rationals.  Stateless; elements are exact.
struct QQ {
    using Elem = Rat;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(std::int64_t v) const { return Elem(v); }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw InputError("division by zero in QQ");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    // Wide integer range keeps random coordinate changes generic in practice.
    Elem sample(Rng& rng) const { return Elem(rng.range(-32000, 32000)); }
};

// Prime field F_p with word-sized p.  Elements normalized to [0, p).
class GFp {
public:
    using Elem = std::int64_t;

    explicit GFp(std::int64_t p) : p_(p) {
        if (p < 2 || !is_prime(p) || p > (1ll << 30))
            throw InputError("field modulus must be a prime below 2^30");
    }

    std::int64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(std::int64_t v) const {
        Elem r = v % p_;
        return r < 0 ? r + p_ : r;
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    Elem add(const Elem& a, const Elem& b) const {
        Elem r = a + b;
        return r >= p_ ? r - p_ : r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r = a - b;
        return r < 0 ? r + p_ : r;
    }
    Elem mul(const Elem& a, const Elem& b) const { return a * b % p_; }
    Elem neg(const Elem& a) const { return a == 0 ? 0 : p_ - a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw InputError("division by zero in GFp");
        // Extended Euclid; p prime so every nonzero element is invertible.
        Elem r0 = p_, r1 = a, s0 = 0, s1 = 1;
        while (r1 != 0) {
            Elem q = r0 / r1;
            Elem r2 = r0 - q * r1;
            r0 = r1;
            r1 = r2;
            Elem s2 = s0 - q * s1;
            s0 = s1;
            s1 = s2;
        }
        return from_int(s0);
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    Elem sample(Rng& rng) const {
        return static_cast<Elem>(rng.uniform(static_cast<std::uint64_t>(p_)));
    }

    static bool is_prime(std::int64_t p) {
        if (p < 2) return false;
        for (std::int64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

private:
    std::int64_t p_;
};

inline constexpr std::int64_t kDefaultPrime = 32003;

}  // namespace lexcoh
