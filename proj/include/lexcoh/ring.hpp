#pragma once

#include <cstdint>
#include <string>

#include "lexcoh/errors.hpp"
#include "lexcoh/field.hpp"
#include "lexcoh/monomial.hpp"

namespace lexcoh {

enum class FieldKind { rationals, prime };

// Standard-graded polynomial ring K[X1..Xn], deg X_i = 1, with the
// coefficient field recorded.  Value type; everything operating on ideals
// takes the context along.
struct RingContext {
    int n = 0;
    FieldKind field = FieldKind::prime;
    std::int64_t p = kDefaultPrime;  // meaningful when field == prime

    static RingContext rationals(int n) {
        RingContext c;
        c.n = n;
        c.field = FieldKind::rationals;
        c.p = 0;
        validate(c);
        return c;
    }
    static RingContext fp(int n, std::int64_t p = kDefaultPrime) {
        RingContext c;
        c.n = n;
        c.field = FieldKind::prime;
        c.p = p;
        validate(c);
        return c;
    }

    static void validate(const RingContext& c) {
        if (c.n < 1 || c.n > kMaxVars)
            throw InputError("ring arity must be between 1 and " +
                             std::to_string(kMaxVars));
        if (c.field == FieldKind::prime) (void)GFp(c.p);
    }

    RingContext restricted(int j) const {
        if (j < 1 || j > n) throw InputError("bad restriction arity");
        RingContext c = *this;
        c.n = j;
        return c;
    }

    std::string var(int i) const { return "X" + std::to_string(i); }

    bool operator==(const RingContext& o) const {
        if (n != o.n || field != o.field) return false;
        return field == FieldKind::rationals || p == o.p;
    }
};

inline void require_same_ctx(const RingContext& a, const RingContext& b,
                             const char* where) {
    if (!(a == b))
        throw InputError(std::string("ring context mismatch in ") + where);
}

}  // namespace lexcoh
