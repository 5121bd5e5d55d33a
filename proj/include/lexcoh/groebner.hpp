#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lexcoh/errors.hpp"
#include "lexcoh/monomial_ideal.hpp"
#include "lexcoh/poly.hpp"
#include "lexcoh/rng.hpp"

namespace lexcoh {

// Ideal of K[X1..Xn] given by arbitrary polynomial generators.
template <class F>
struct PolyIdeal {
    RingContext ctx;
    std::vector<Poly<F>> gens;

    bool homogeneous() const {
        for (const auto& g : gens)
            if (!g.homogeneous()) return false;
        return true;
    }
};

template <class F>
PolyIdeal<F> monomial_generators(const F& K, const MonomialIdeal& I,
                                 TermOrder ord = TermOrder::degrevlex) {
    PolyIdeal<F> P;
    P.ctx = I.ctx();
    if (I.is_zero()) return P;
    for (const auto& m : I.gens())
        P.gens.push_back(poly_from_monomial(K, m, ord));
    return P;
}

// Reduced monic Groebner basis, sorted with descending lead terms.
// Buchberger with normal pair selection; pairs with coprime leads are
// skipped, everything else goes through a full normal form.
template <class F>
std::vector<Poly<F>> groebner_basis(const F& K, const RingContext& ctx,
                                    std::vector<Poly<F>> input,
                                    TermOrder ord) {
    (void)ctx;
    std::vector<Poly<F>> basis;
    for (auto& f : input) {
        Poly<F> g = poly_normalize(K, std::move(f.terms), ord);
        if (!g.is_zero()) basis.push_back(std::move(g));
    }
    struct SPair {
        std::size_t i, j;
        Monomial lcm;
    };
    std::vector<SPair> pairs;
    auto add_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            pairs.push_back({i, j, basis[i].lead().m.lcm(basis[j].lead().m)});
    };
    for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

    while (!pairs.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            const Monomial& a = pairs[k].lcm;
            const Monomial& b = pairs[best].lcm;
            if (a.degree() < b.degree() ||
                (a.degree() == b.degree() &&
                 compare(a, b, ord) == std::strong_ordering::less))
                best = k;
        }
        SPair pr = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
        const Poly<F>& fi = basis[pr.i];
        const Poly<F>& fj = basis[pr.j];
        if (fi.lead().m.coprime(fj.lead().m)) continue;
        Poly<F> s = poly_sub(
            K,
            poly_term_mul(K, fi, pr.lcm.divide(fi.lead().m),
                          K.inv(fi.lead().c)),
            poly_term_mul(K, fj, pr.lcm.divide(fj.lead().m),
                          K.inv(fj.lead().c)));
        Poly<F> rem = poly_normal_form<F>(K, std::move(s),
                                          std::span<const Poly<F>>(basis));
        if (!rem.is_zero()) {
            basis.push_back(std::move(rem));
            add_pairs_for(basis.size() - 1);
        }
    }

    // Minimalize: ascending leads, so proper divisors come first.
    std::sort(basis.begin(), basis.end(), [&](const Poly<F>& a, const Poly<F>& b) {
        return compare(a.lead().m, b.lead().m, ord) ==
               std::strong_ordering::less;
    });
    std::vector<Poly<F>> minimal;
    for (auto& g : basis) {
        bool covered = false;
        for (const auto& h : minimal)
            if (h.lead().m.divides(g.lead().m)) {
                covered = true;
                break;
            }
        if (!covered) minimal.push_back(std::move(g));
    }
    // Tail-reduce each element against the rest; leads are pairwise
    // non-divisible so they survive.
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly<F>> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        minimal[i] = poly_normal_form<F>(K, std::move(minimal[i]),
                                         std::span<const Poly<F>>(others));
        minimal[i] = poly_monic(K, minimal[i]);
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const Poly<F>& a, const Poly<F>& b) {
                  return compare(a.lead().m, b.lead().m, ord) ==
                         std::strong_ordering::greater;
              });
    return minimal;
}

// in_ord(I): the monomial ideal of lead terms.
template <class F>
MonomialIdeal initial_ideal(const F& K, const RingContext& ctx,
                            std::vector<Poly<F>> gens, TermOrder ord) {
    auto gb = groebner_basis(K, ctx, std::move(gens), ord);
    std::vector<Monomial> leads;
    leads.reserve(gb.size());
    for (const auto& g : gb) leads.push_back(g.lead().m);
    return MonomialIdeal(ctx, std::move(leads));
}

// Generic initial ideal: the initial ideal after a random invertible change
// of coordinates.  Independent trials must agree, otherwise the run refuses
// to certify the answer.
template <class F>
MonomialIdeal generic_initial_ideal(const F& K, const PolyIdeal<F>& I,
                                    TermOrder ord, std::uint64_t seed,
                                    int trials = 2) {
    if (trials < 2) trials = 2;
    if (!I.homogeneous())
        throw InputError("generic initial ideals need homogeneous generators");
    MonomialIdeal result = MonomialIdeal::zero(I.ctx);
    for (int t = 0; t < trials; ++t) {
        Rng rng = Rng::stream(seed, "generic-change", t);
        LinearChange<F> g = random_linear_change(K, I.ctx.n, rng);
        std::vector<Poly<F>> moved;
        moved.reserve(I.gens.size());
        for (const auto& f : I.gens) moved.push_back(apply_change(K, f, g));
        MonomialIdeal J = initial_ideal(K, I.ctx, std::move(moved), ord);
        if (t == 0)
            result = std::move(J);
        else if (!(J == result))
            throw GinCertificationError(
                "independent coordinate changes gave different initial ideals");
    }
    return result;
}

// Field dispatch on the ring context of a monomial ideal.
MonomialIdeal generic_initial_ideal(const MonomialIdeal& I, TermOrder ord,
                                    std::uint64_t seed, int trials = 2);

}  // namespace lexcoh
