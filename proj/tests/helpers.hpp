#pragma once

#include <initializer_list>
#include <vector>

#include "lexcoh/monomial_ideal.hpp"

namespace lexcoh::testing {

inline Monomial mono(std::initializer_list<int> exps) {
    std::vector<int> e(exps);
    return Monomial::from_exponents(e);
}

inline MonomialIdeal ideal(const RingContext& ctx,
                           std::initializer_list<std::initializer_list<int>>
                               gens) {
    std::vector<Monomial> ms;
    for (const auto& g : gens) ms.push_back(mono(g));
    return MonomialIdeal(ctx, std::move(ms));
}

// Count of degree-d standard monomials by direct enumeration; the reference
// for every Hilbert function test.
inline Int brute_hf(const MonomialIdeal& I, int d) {
    if (I.is_unit()) return 0;
    int n = I.ctx().n;
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    Int count = 0;
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == n) {
            if (left == 0 && !I.contains(Monomial::from_exponents(e)))
                ++count;
            return;
        }
        for (int a = 0; a <= left; ++a) {
            e[static_cast<std::size_t>(var)] = a;
            self(self, var + 1, left - a);
        }
        e[static_cast<std::size_t>(var)] = 0;
    };
    rec(rec, 0, d);
    return count;
}

// Smallest stable ideal containing I: add the single-step exchange monomials
// X_j * u / X_m until the stable test closes.
inline MonomialIdeal stable_closure(const MonomialIdeal& I) {
    MonomialIdeal J = I;
    for (;;) {
        std::vector<Monomial> add;
        for (const auto& u : J.gens()) {
            int m = u.m_index();
            if (m <= 1) continue;
            Monomial v = u.divide(Monomial::variable(J.ctx().n, m));
            for (int j = 1; j < m; ++j) {
                Monomial w = v.times(Monomial::variable(J.ctx().n, j));
                if (!J.contains(w)) add.push_back(w);
            }
        }
        if (add.empty()) return J;
        std::vector<Monomial> gens = J.gens();
        gens.insert(gens.end(), add.begin(), add.end());
        J = MonomialIdeal(J.ctx(), std::move(gens));
    }
}

}  // namespace lexcoh::testing
