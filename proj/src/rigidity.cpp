#include "lexcoh/rigidity.hpp"

#include <span>
#include <utility>

#include "lexcoh/poly.hpp"

namespace lexcoh {

namespace detail {

InstanceData finish_instance(RingContext ctx, std::string label,
                             std::uint64_t seed, int trials, bool monomial,
                             MonomialIdeal in_ideal, HilbertSeries hs,
                             CohomologyTable table,
                             std::optional<CohomologyTable> in_table,
                             MonomialIdeal gin, MonomialIdeal lex) {
    if (!is_weakly_stable(gin))
        throw ConsistencyError(
            "generic initial ideal fails the stability test");
    if (!is_weakly_stable(lex))
        throw ConsistencyError("lex ideal fails the stability test");
    if (!HilbertSeries::quotient(gin).same_function(hs))
        throw ConsistencyError(
            "generic initial ideal changed the Hilbert function");
    if (!HilbertSeries::quotient(lex).same_function(hs))
        throw ConsistencyError("lex ideal changed the Hilbert function");
    CohomologyTable gin_table = cohomology_by_layers(gin);
    CohomologyTable lex_table = cohomology_by_layers(lex);
    std::optional<CohomologyTable> lay;
    if (monomial) lay = cohomology_by_layers(in_ideal);
    return InstanceData{std::move(ctx),      std::move(label),
                        seed,                trials,
                        monomial,            std::move(in_ideal),
                        std::move(hs),       std::move(table),
                        std::move(in_table), std::move(gin),
                        std::move(lex),      std::move(gin_table),
                        std::move(lex_table), std::move(lay)};
}

}  // namespace detail

InstanceData build_instance(const MonomialIdeal& I, std::uint64_t seed,
                            int trials, std::string label) {
    HilbertSeries hs = HilbertSeries::quotient(I);
    CohomologyTable table = local_cohomology(I);
    std::optional<CohomologyTable> in_table(table);
    MonomialIdeal gin =
        generic_initial_ideal(I, TermOrder::degrevlex, seed, trials);
    MonomialIdeal lex = lex_ideal(I);
    return detail::finish_instance(I.ctx(), std::move(label), seed, trials,
                                   true, I, std::move(hs), std::move(table),
                                   std::move(in_table), std::move(gin),
                                   std::move(lex));
}

namespace {

// Lex ideal of the saturation.  Monomial inputs saturate directly; for
// polynomial inputs Hilb(R/I^sat) = Hilb(R/I) minus the depth-0 row, which
// is a polynomial, so the series subtraction is exact.
MonomialIdeal lex_of_saturation(const InstanceData& D) {
    if (D.monomial) return lex_ideal(saturate(D.in_ideal));
    const LaurentRational& h0 = D.table.forms[0];
    if (h0.pole() != 0)
        throw ConsistencyError("depth-0 row must be a polynomial");
    LaurentPoly num = LaurentPoly::from_dense(D.hs.num);
    LaurentPoly f = h0.num();
    LaurentPoly onemt = LaurentPoly::from_dense({Int(1), Int(-1)});
    for (int i = 0; i < D.ctx.n; ++i) f = f.mul(onemt);
    num = num.sub(f);
    std::vector<Int> dense;
    if (!num.is_zero()) {
        if (num.lo() < 0)
            throw ConsistencyError("saturated series numerator out of range");
        dense.assign(static_cast<std::size_t>(num.hi()) + 1, Int(0));
        for (long long e = num.lo(); e <= num.hi(); ++e)
            dense[static_cast<std::size_t>(e)] = num.coeff(e);
    }
    return lex_ideal_from_series(
        D.ctx, HilbertSeries::from_numerator(D.ctx.n, std::move(dense)));
}

bool universal_if_saturated_lex(const MonomialIdeal& L) {
    return L.is_unit() || is_universal_lex(L);
}

}  // namespace

EquivalenceReport rigidity_check(const InstanceData& D) {
    EquivalenceReport r;
    r.check = "rigidity-equivalence";
    r.instance = D.label;
    MonomialIdeal satlex = saturate(D.lex);
    bool c1 = lex_of_saturation(D) == satlex;
    bool c2 = D.table.forms[0] == D.lex_table.forms[0];
    bool c3 = D.table == D.lex_table;
    bool c4 = saturate(D.gin) == satlex;
    r.conditions = {{"sat-lex-commute", c1},
                    {"row0-equal", c2},
                    {"rows-equal", c3},
                    {"gin-sat-equal", c4}};
    r.all_equal = c1 == c2 && c2 == c3 && c3 == c4;
    r.all_true = c1 && c2 && c3 && c4;
    r.side_checks.push_back(
        {"saturated-lex-universal", universal_if_saturated_lex(satlex)});
    return r;
}

EquivalenceReport bw_rigidity_check(const InstanceData& D) {
    if (!D.monomial)
        throw InputError("the BW comparison needs a monomial ideal");
    EquivalenceReport base = rigidity_check(D);
    BWPolynomial bI = bw_polynomial(D.in_ideal);
    BWPolynomial bL = bw_polynomial(D.lex);
    bool beq = bI == bL;
    EquivalenceReport r;
    r.check = "bw-rigidity";
    r.instance = D.label;
    r.conditions = {{"bw-equal", beq},
                    {"equivalence-conditions", base.all_true}};
    r.all_equal = beq == base.all_true;
    r.all_true = beq && base.all_true;
    r.side_checks = base.side_checks;
    if (beq) {
        // Filtration ideals of gin and lex agree from level 0 up; at -1 they
        // are the ideals themselves, which need not coincide.
        bool filt = true;
        for (int i = 0; i <= D.ctx.n && filt; ++i)
            filt = filtration_ideal(D.gin, i) == filtration_ideal(D.lex, i);
        r.side_checks.push_back({"gin-lex-filtration-equal", filt});
        r.side_checks.push_back({"gin-bw-equal", bw_polynomial(D.gin) == bI});
        r.side_checks.push_back({"scm", partial_scm_profile(D)[0]});
    }
    return r;
}

ColonRestrictionPair build_colon_restriction_pair(const InstanceData& D,
                                                  int i) {
    int n = D.ctx.n;
    if (i < 1 || i > n - 1)
        throw InputError("level must satisfy 1 <= i <= n-1");
    const MonomialIdeal& A =
        (D.monomial && is_weakly_stable(D.in_ideal)) ? D.in_ideal : D.gin;
    auto build = [&](const MonomialIdeal& M) {
        return restrict_to(
            colon_var_sat(restrict_to(M, n - i + 1), n - i + 1), n - i);
    };
    return ColonRestrictionPair{i, build(A), build(D.lex)};
}

EquivalenceReport row_rigidity_check(const InstanceData& D, int i) {
    ColonRestrictionPair pr = build_colon_restriction_pair(D, i);
    auto k = static_cast<std::size_t>(i);
    bool c1 = D.gin_table.forms[k] == D.lex_table.forms[k];
    bool c2 = D.table.forms[k] == D.lex_table.forms[k];
    bool c3 = D.table.rows_equal_from(D.lex_table, i);
    bool c4 = HilbertSeries::quotient(pr.J).same_function(
        HilbertSeries::quotient(pr.Jp));
    bool c5 = is_critical(pr.J);
    MonomialIdeal ginJ = generic_initial_ideal(
        pr.J, TermOrder::degrevlex,
        detail::sub_seed(D.seed, "gin-colon", static_cast<std::uint64_t>(i)),
        D.trials);
    bool c6 = ginJ == pr.Jp;
    EquivalenceReport r;
    r.check = "row-rigidity";
    r.instance = D.label;
    r.note = "level " + std::to_string(i);
    r.conditions = {{"level-row-gin-lex", c1}, {"level-row-equal", c2},
                    {"tail-rows-equal", c3},   {"pair-hilbert-equal", c4},
                    {"pair-critical", c5},     {"pair-gin-is-lex", c6}};
    r.all_equal = true;
    for (const auto& c : r.conditions) r.all_equal = r.all_equal && c.second == c1;
    r.all_true = c1 && c2 && c3 && c4 && c5 && c6;
    return r;
}

TransferReport tail_transfer_check(const InstanceData& D) {
    TransferReport r;
    r.check = "tail-transfer";
    r.instance = D.label;
    for (int i = 0; i <= D.ctx.n; ++i) {
        auto k = static_cast<std::size_t>(i);
        if (!(D.gin_table.forms[k] == D.lex_table.forms[k])) continue;
        r.hypothesis_at.push_back(i);
        if (!D.table.rows_equal_from(D.lex_table, i)) r.violations.push_back(i);
    }
    bool full = D.gin_table == D.lex_table;
    EquivalenceReport base = rigidity_check(D);
    r.side_checks.push_back(
        {"full-hypothesis-matches-conditions", full == base.all_true});
    r.ok = r.violations.empty();
    for (const auto& s : r.side_checks) r.ok = r.ok && s.second;
    return r;
}

TransferReport row_transfer_check(const InstanceData& D) {
    TransferReport r;
    r.check = "row-transfer";
    r.instance = D.label;
    for (int i = 0; i <= D.ctx.n; ++i) {
        auto k = static_cast<std::size_t>(i);
        if (!(D.gin_table.forms[k] == D.lex_table.forms[k])) continue;
        r.hypothesis_at.push_back(i);
        if (!(D.table.forms[k] == D.lex_table.forms[k]))
            r.violations.push_back(i);
    }
    r.ok = r.violations.empty();
    return r;
}

bool restricted_hilbert_check(const MonomialIdeal& A, const MonomialIdeal& B) {
    require_same_ctx(A.ctx(), B.ctx(), "restricted Hilbert check");
    if (!is_weakly_stable(A) || !is_weakly_stable(B))
        throw InputError(
            "restricted Hilbert comparisons need weakly stable inputs");
    int n = A.ctx().n;
    auto hp = [](const MonomialIdeal& M) {
        return hilbert_polynomial(HilbertSeries::quotient(M));
    };
    if (!(hp(A) == hp(B)))
        throw InputError("inputs must share a Hilbert polynomial");
    for (int i = 1; i <= n - 1; ++i)
        if (!(hp(restrict_to(A, n - i)) == hp(restrict_to(B, n - i))))
            return false;
    for (int i = 1; i <= n - 1; ++i) {
        auto pair_of = [&](const MonomialIdeal& M) {
            return restrict_to(
                colon_var_sat(restrict_to(M, n - i + 1), n - i + 1), n - i);
        };
        if (!(hp(pair_of(A)) == hp(pair_of(B)))) return false;
    }
    return true;
}

CancellationWitness cancellation_witness(const CohomologyTable& A,
                                         const CohomologyTable& B) {
    if (A.n != B.n) throw InputError("tables live over different rings");
    auto [alo, ahi] = A.default_window();
    auto [blo, bhi] = B.default_window();
    CancellationWitness w;
    w.jlo = std::min(alo, blo);
    w.jhi = std::max(ahi, bhi);
    w.ok = true;
    for (long long j = w.jlo; j <= w.jhi; ++j) {
        std::vector<Int> e(static_cast<std::size_t>(A.n) + 2, Int(0));
        bool bad = false;
        for (int k = 0; k <= A.n; ++k) {
            Int d = B.entry(k, j) - A.entry(k, j);
            e[static_cast<std::size_t>(k) + 1] =
                d - e[static_cast<std::size_t>(k)];
            if (e[static_cast<std::size_t>(k) + 1] < 0) bad = true;
        }
        if (e[static_cast<std::size_t>(A.n) + 1] != 0) bad = true;
        if (bad && w.ok) {
            w.ok = false;
            w.bad_j = j;
        }
        w.cols.push_back(std::move(e));
    }
    return w;
}

bool tables_leq(const CohomologyTable& A, const CohomologyTable& B) {
    if (A.n != B.n) throw InputError("tables live over different rings");
    auto [alo, ahi] = A.default_window();
    auto [blo, bhi] = B.default_window();
    long long lo = std::min(alo, blo), hi = std::max(ahi, bhi);
    for (int k = 0; k <= A.n; ++k)
        for (long long j = lo; j <= hi; ++j)
            if (A.entry(k, j) > B.entry(k, j)) return false;
    return true;
}

std::vector<bool> partial_scm_profile(const InstanceData& D) {
    int n = D.ctx.n;
    std::vector<bool> out(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        bool va = D.table.rows_equal_from(D.gin_table, i);
        if (D.lay_table) {
            bool vb = D.table.rows_equal_from(*D.lay_table, i);
            if (va != vb)
                throw ConsistencyError("partial depth criteria disagree");
        }
        out[static_cast<std::size_t>(i)] = va;
    }
    return out;
}

namespace {

template <class F>
bool hyperplane_check_impl(const F& K, const InstanceData& D) {
    int n = D.ctx.n;
    PolyIdeal<F> P = monomial_generators(K, D.in_ideal);
    Rng rng = Rng::stream(D.seed, "hyperplane-section", 0);
    std::vector<typename F::Elem> c(static_cast<std::size_t>(n - 1));
    for (auto& x : c) x = K.sample(rng);
    PolyIdeal<F> Q;
    Q.ctx = D.ctx.restricted(n - 1);
    for (const auto& f : P.gens) {
        Poly<F> g = specialize_last(
            K, f, n, std::span<const typename F::Elem>(c));
        if (!g.is_zero()) Q.gens.push_back(std::move(g));
    }
    MonomialIdeal gs = generic_initial_ideal(
        K, Q, TermOrder::degrevlex, detail::sub_seed(D.seed, "gin-section"),
        D.trials);
    return gs == restrict_to(D.gin, n - 1);
}

}  // namespace

GinStructureReport gin_structure_check(const InstanceData& D) {
    GinStructureReport r;
    r.instance = D.label;
    r.idempotent =
        generic_initial_ideal(D.gin, TermOrder::degrevlex,
                              detail::sub_seed(D.seed, "gin-idem"),
                              D.trials) == D.gin;
    r.weakly_stable_output = is_weakly_stable(D.gin);
    if (D.monomial) {
        r.saturation_commutes =
            saturate(D.gin) ==
            generic_initial_ideal(saturate(D.in_ideal), TermOrder::degrevlex,
                                  detail::sub_seed(D.seed, "gin-sat"),
                                  D.trials);
        if (D.ctx.n >= 2)
            r.hyperplane_restriction =
                D.ctx.field == FieldKind::rationals
                    ? hyperplane_check_impl(QQ{}, D)
                    : hyperplane_check_impl(GFp(D.ctx.p), D);
    } else {
        r.note = "saturation and hyperplane checks need a monomial input";
    }
    r.critical_instance = is_universal_lex(D.lex);
    if (r.critical_instance) r.critical_gin_is_lex = D.gin == D.lex;
    return r;
}

}  // namespace lexcoh
