#include "lexcoh/groebner.hpp"

namespace lexcoh {

MonomialIdeal generic_initial_ideal(const MonomialIdeal& I, TermOrder ord,
                                    std::uint64_t seed, int trials) {
    const RingContext& ctx = I.ctx();
    if (ctx.field == FieldKind::rationals) {
        QQ K;
        return generic_initial_ideal(K, monomial_generators(K, I, ord), ord,
                                     seed, trials);
    }
    GFp K(ctx.p);
    return generic_initial_ideal(K, monomial_generators(K, I, ord), ord, seed,
                                 trials);
}

}  // namespace lexcoh
