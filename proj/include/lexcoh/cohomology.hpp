#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lexcoh/groebner.hpp"
#include "lexcoh/hilbert.hpp"
#include "lexcoh/resolution.hpp"

namespace lexcoh {

enum class CohomologyRoute { automatic, layers, ext };

// Graded local cohomology of R/I at the irrelevant ideal, one closed form
// per cohomological row.  Row k is the rational function whose expansion in
// descending powers of t lists dim H^k(R/I)_j; rows are exact for every j,
// so equality of tables is equality of the forms.
struct CohomologyTable {
    int n = 0;
    std::vector<LaurentRational> forms;  // size n + 1
    std::string route;                   // "layers" or "ext"

    Int entry(int k, long long j) const;
    bool row_zero(int k) const;
    // Smallest k with a nonzero row (n + 1 when all rows vanish) and the
    // largest (-1 when all vanish); these are depth and dimension.
    int depth() const;
    int dim() const;
    bool rows_equal_from(const CohomologyTable& o, int i) const;
    bool operator==(const CohomologyTable& o) const {
        return n == o.n && forms == o.forms;
    }
    // Window derived from the row numerators: covers every top coefficient
    // and reaches far enough down to show the stabilized tails.
    std::pair<long long, long long> default_window() const;
};

// Generator cap for the resolution-based route; LEXCOH_MAX_GENS overrides
// the default of 10, hard limit 16.
int max_generators_cap();

// Hilbert series of the dimension filtration quotients: entry k is the
// series of the layer of dimension k, zero when the layer is empty.
std::vector<HilbertSeries> layer_series(const MonomialIdeal& I);

// Table with row k = (-1)^k times the k-th layer series.  Exact precisely
// for sequentially Cohen-Macaulay quotients (weakly stable ideals included).
CohomologyTable cohomology_by_layers(const MonomialIdeal& I);

// Ext route: free resolution, dualize, image Hilbert functions per level,
// graded duality.  Exact for every input within the generator cap.
CohomologyTable cohomology_by_ext(const MonomialIdeal& I);

CohomologyTable local_cohomology(const MonomialIdeal& I,
                                 CohomologyRoute route = CohomologyRoute::automatic);

// Alternating row sum against the Hilbert series: the rows must satisfy
// sum_k (-1)^k h^k_j = HF(j) - P(j) for every j, which in closed form says
// the alternating form sum equals the reduced series.
bool serre_formula_check(const CohomologyTable& T, const HilbertSeries& s);

// sum_k w^k N_k(t) with N_k the reduced numerator of the k-th layer series.
struct BWPolynomial {
    std::vector<LaurentPoly> wk;

    BWPolynomial truncated(int i) const;  // keep w^k for k >= i
    bool operator==(const BWPolynomial& o) const { return wk == o.wk; }
    std::string str() const;
};

BWPolynomial bw_polynomial(const MonomialIdeal& I);

// Partial sequential Cohen-Macaulay test: cohomology rows k >= i of R/I
// agree with those of R/gin(I).  Monomial inputs are cross-checked against
// the layer-series rows; a disagreement between the two criteria throws.
bool is_partially_scm(const MonomialIdeal& I, int i, std::uint64_t seed,
                      int trials = 2);
bool is_sequentially_cm(const MonomialIdeal& I, std::uint64_t seed,
                        int trials = 2);

namespace detail {
CohomologyTable table_from_ext_series(const RingContext& ctx,
                                      std::vector<LaurentRational> ext,
                                      const HilbertSeries& hs);
}

// E_p = Hilbert series of Ext^p(R/I, R), p = 0..length, from the image
// Hilbert functions of the dualized differentials.  Each image rank is read
// off a module Groebner basis once per level: the initial module decomposes
// per component into monomial ideals whose numerators assemble the series.
template <class F>
std::vector<LaurentRational> ext_series(const F& K,
                                        const FreeResolution<F>& R) {
    int n = R.ctx.n;
    int L = R.length();
    int pmax = std::min(L, n);
    std::vector<LaurentRational> G(static_cast<std::size_t>(L) + 2);
    ModOrder o(TermOrder::degrevlex);
    for (int p = 1; p <= std::min(L, pmax + 1); ++p) {
        int rlow = R.rank(p - 1);
        int rhigh = R.rank(p);
        std::vector<std::vector<ModTerm<F>>> rows(
            static_cast<std::size_t>(rlow));
        const auto& cols = R.diff[static_cast<std::size_t>(p)];
        for (int j = 0; j < rhigh; ++j)
            for (const auto& t : cols[static_cast<std::size_t>(j)].terms)
                rows[static_cast<std::size_t>(t.comp)].push_back(
                    ModTerm<F>{t.m, j, t.c});
        std::vector<ModPoly<F>> input;
        for (auto& r : rows)
            if (!r.empty()) input.push_back(mod_normalize(K, std::move(r), o));
        auto gb = module_groebner(K, std::move(input), o);
        auto lm = lead_module(gb, rhigh);
        LaurentPoly num;
        for (int i = 0; i < rhigh; ++i) {
            MonomialIdeal Li(R.ctx, std::move(lm[static_cast<std::size_t>(i)]));
            LaurentPoly part = LaurentPoly::monomial(0, Int(1));
            part = part.sub(LaurentPoly::from_dense(hilbert_numerator(Li)));
            num = num.add(
                part.shifted(R.twists[static_cast<std::size_t>(p)]
                                     [static_cast<std::size_t>(i)]));
        }
        G[static_cast<std::size_t>(p)] = LaurentRational(num, n);
    }
    std::vector<LaurentRational> E(static_cast<std::size_t>(L) + 1);
    for (int p = 0; p <= pmax; ++p) {
        LaurentPoly vnum;
        for (auto a : R.twists[static_cast<std::size_t>(p)])
            vnum = vnum.add(LaurentPoly::monomial(a, Int(1)));
        LaurentRational V(vnum, n);
        E[static_cast<std::size_t>(p)] =
            V.sub(G[static_cast<std::size_t>(p)])
                .sub(G[static_cast<std::size_t>(p) + 1]);
    }
    return E;
}

template <class F>
CohomologyTable cohomology_by_ext(const F& K, const PolyIdeal<F>& I) {
    FreeResolution<F> R = schreyer_resolution(K, I);
    std::vector<Monomial> in_leads;
    if (R.length() >= 1)
        for (const auto& col : R.diff[1]) in_leads.push_back(col.lead().m);
    HilbertSeries hs =
        HilbertSeries::quotient(MonomialIdeal(I.ctx, std::move(in_leads)));
    R = minimize_resolution(K, std::move(R));
    if (!(alternating_twist_sum(R) == LaurentPoly::from_dense(hs.num)))
        throw ConsistencyError(
            "resolution twists disagree with the Hilbert numerator");
    return detail::table_from_ext_series(I.ctx, ext_series(K, R), hs);
}

template <class F>
bool is_partially_scm(const F& K, const PolyIdeal<F>& I, int i,
                      std::uint64_t seed, int trials = 2) {
    CohomologyTable TI = cohomology_by_ext(K, I);
    MonomialIdeal g =
        generic_initial_ideal(K, I, TermOrder::degrevlex, seed, trials);
    if (!is_weakly_stable(g))
        throw ConsistencyError("generic initial ideal fails the stability test");
    return TI.rows_equal_from(cohomology_by_layers(g), i);
}

}  // namespace lexcoh
