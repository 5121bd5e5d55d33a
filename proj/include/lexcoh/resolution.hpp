#pragma once

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "lexcoh/groebner.hpp"
#include "lexcoh/laurent.hpp"
#include "lexcoh/monomial_ideal.hpp"
#include "lexcoh/poly.hpp"

namespace lexcoh {

// Term u * eps_comp of a free module, with coefficient.
template <class F>
struct ModTerm {
    Monomial m;
    int comp = 0;
    typename F::Elem c{};
};

// Element of a free module; terms strictly descending under the governing
// ModOrder, which is supplied externally to every operation that needs it.
template <class F>
struct ModPoly {
    std::vector<ModTerm<F>> terms;

    bool is_zero() const { return terms.empty(); }
    const ModTerm<F>& lead() const { return terms.front(); }
};

struct ModImage {
    Monomial m;
    int comp = 0;
};

// Order on module monomials.  The plain form compares monomials in the ring
// order and breaks ties toward the smaller component.  The induced form
// compares images u * lead(g_comp) in the order one level down, recursively,
// with the same component tie-break.
class ModOrder {
public:
    explicit ModOrder(TermOrder ring_ord) : ring_(ring_ord) {}
    ModOrder(TermOrder ring_ord, std::vector<ModImage> images,
             const ModOrder* lower)
        : ring_(ring_ord), images_(std::move(images)), lower_(lower) {}

    std::strong_ordering cmp(const Monomial& ma, int ca, const Monomial& mb,
                             int cb) const;

private:
    TermOrder ring_;
    std::vector<ModImage> images_;
    const ModOrder* lower_ = nullptr;
};

template <class F>
ModPoly<F> mod_normalize(const F& K, std::vector<ModTerm<F>> terms,
                         const ModOrder& o) {
    std::sort(terms.begin(), terms.end(),
              [&](const ModTerm<F>& a, const ModTerm<F>& b) {
                  return o.cmp(a.m, a.comp, b.m, b.comp) ==
                         std::strong_ordering::greater;
              });
    ModPoly<F> r;
    for (auto& t : terms) {
        if (!r.terms.empty() && r.terms.back().m == t.m &&
            r.terms.back().comp == t.comp)
            r.terms.back().c = K.add(r.terms.back().c, t.c);
        else
            r.terms.push_back(std::move(t));
        if (!r.terms.empty() && K.is_zero(r.terms.back().c)) r.terms.pop_back();
    }
    return r;
}

template <class F>
ModPoly<F> mod_neg(const F& K, ModPoly<F> a) {
    for (auto& t : a.terms) t.c = K.neg(t.c);
    return a;
}

// a * (c * m); multiplication by a term preserves the term order.
template <class F>
ModPoly<F> mod_term_mul(const F& K, const ModPoly<F>& a, const Monomial& m,
                        const typename F::Elem& c) {
    ModPoly<F> r;
    if (K.is_zero(c)) return r;
    r.terms.reserve(a.terms.size());
    for (const auto& t : a.terms)
        r.terms.push_back(ModTerm<F>{t.m.times(m), t.comp, K.mul(t.c, c)});
    return r;
}

template <class F>
ModPoly<F> mod_add(const F& K, const ModPoly<F>& a, const ModPoly<F>& b,
                   const ModOrder& o) {
    std::vector<ModTerm<F>> t = a.terms;
    t.insert(t.end(), b.terms.begin(), b.terms.end());
    return mod_normalize(K, std::move(t), o);
}

template <class F>
ModPoly<F> mod_sub(const F& K, const ModPoly<F>& a, const ModPoly<F>& b,
                   const ModOrder& o) {
    return mod_add(K, a, mod_neg(K, b), o);
}

// p * a for a ring polynomial p.
template <class F>
ModPoly<F> mod_poly_mul(const F& K, const Poly<F>& p, const ModPoly<F>& a,
                        const ModOrder& o) {
    std::vector<ModTerm<F>> t;
    t.reserve(p.terms.size() * a.terms.size());
    for (const auto& x : p.terms)
        for (const auto& y : a.terms)
            t.push_back(ModTerm<F>{y.m.times(x.m), y.comp, K.mul(x.c, y.c)});
    return mod_normalize(K, std::move(t), o);
}

// Full normal form against basis; quotients (one ring polynomial per basis
// element, f = sum q_i g_i + remainder) on request.
template <class F>
ModPoly<F> mod_normal_form(const F& K, ModPoly<F> f,
                           std::span<const ModPoly<F>> basis, const ModOrder& o,
                           std::vector<Poly<F>>* quotients = nullptr) {
    std::vector<std::vector<Term<F>>> qt;
    if (quotients) qt.assign(basis.size(), {});
    ModPoly<F> rem;
    while (!f.is_zero()) {
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const ModPoly<F>& g = basis[i];
            if (g.is_zero()) continue;
            if (g.lead().comp == f.lead().comp &&
                g.lead().m.divides(f.lead().m)) {
                Monomial q = f.lead().m.divide(g.lead().m);
                typename F::Elem c = K.div(f.lead().c, g.lead().c);
                f = mod_sub(K, f, mod_term_mul(K, g, q, c), o);
                if (quotients) qt[i].push_back(Term<F>{q, c});
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.terms.push_back(f.lead());
            f.terms.erase(f.terms.begin());
        }
    }
    if (quotients) {
        quotients->clear();
        for (auto& t : qt)
            quotients->push_back(
                poly_normalize(K, std::move(t), TermOrder::degrevlex));
    }
    return rem;
}

// Buchberger at module level: S-pairs only exist between elements with the
// same lead component, and every pair goes through a full normal form.
template <class F>
std::vector<ModPoly<F>> module_groebner(const F& K,
                                        std::vector<ModPoly<F>> input,
                                        const ModOrder& o) {
    std::vector<ModPoly<F>> basis;
    for (auto& f : input) {
        ModPoly<F> g = mod_normalize(K, std::move(f.terms), o);
        if (!g.is_zero()) basis.push_back(std::move(g));
    }
    struct SPair {
        std::size_t i, j;
        Monomial lcm;
    };
    std::vector<SPair> pairs;
    auto add_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            if (basis[i].lead().comp == basis[j].lead().comp)
                pairs.push_back(
                    {i, j, basis[i].lead().m.lcm(basis[j].lead().m)});
    };
    for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);
    while (!pairs.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            const Monomial& a = pairs[k].lcm;
            const Monomial& b = pairs[best].lcm;
            if (a.degree() < b.degree() ||
                (a.degree() == b.degree() &&
                 compare(a, b, TermOrder::degrevlex) ==
                     std::strong_ordering::less))
                best = k;
        }
        SPair pr = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
        const ModPoly<F>& fi = basis[pr.i];
        const ModPoly<F>& fj = basis[pr.j];
        ModPoly<F> s = mod_sub(
            K,
            mod_term_mul(K, fi, pr.lcm.divide(fi.lead().m),
                         K.inv(fi.lead().c)),
            mod_term_mul(K, fj, pr.lcm.divide(fj.lead().m),
                         K.inv(fj.lead().c)),
            o);
        ModPoly<F> rem =
            mod_normal_form<F>(K, std::move(s),
                               std::span<const ModPoly<F>>(basis), o);
        if (!rem.is_zero()) {
            basis.push_back(std::move(rem));
            add_pairs_for(basis.size() - 1);
        }
    }
    return basis;
}

// Lead monomials of a module GB, bucketed by component.
template <class F>
std::vector<std::vector<Monomial>> lead_module(
    const std::vector<ModPoly<F>>& gb, int rank) {
    std::vector<std::vector<Monomial>> out(static_cast<std::size_t>(rank));
    for (const auto& g : gb)
        out[static_cast<std::size_t>(g.lead().comp)].push_back(g.lead().m);
    return out;
}

// Graded free resolution of R/I:
//   0 <- R/I <- F_0 <- F_1 <- ... <- F_L <- 0,  F_k = (+)_i R(twists[k][i]),
// twists nonpositive, twists[0] = {0}.  diff[k][j] is the image of the j-th
// basis vector of F_k inside F_{k-1} (component indices refer to level k-1);
// diff[0] is empty.  Every column is homogeneous of degree -twists[k][j].
template <class F>
struct FreeResolution {
    RingContext ctx;
    std::vector<std::vector<long long>> twists;
    std::vector<std::vector<ModPoly<F>>> diff;

    int length() const { return static_cast<int>(twists.size()) - 1; }
    int rank(int k) const {
        return static_cast<int>(twists[static_cast<std::size_t>(k)].size());
    }
};

// Checks homogeneity of every column and d о d = 0; throws on failure.
template <class F>
void verify_resolution(const F& K, const FreeResolution<F>& R) {
    ModOrder o(TermOrder::degrevlex);
    for (int k = 1; k <= R.length(); ++k) {
        const auto& tw = R.twists[static_cast<std::size_t>(k)];
        const auto& low = R.twists[static_cast<std::size_t>(k - 1)];
        const auto& cols = R.diff[static_cast<std::size_t>(k)];
        if (cols.size() != tw.size())
            throw ConsistencyError("resolution rank mismatch");
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (const auto& t : cols[j]. terms) {
                if (t.comp < 0 || t.comp >= static_cast<int>(low.size()))
                    throw ConsistencyError("resolution component out of range");
                if (t.m.degree() - low[static_cast<std::size_t>(t.comp)] !=
                    -tw[j])
                    throw ConsistencyError("resolution column not homogeneous");
            }
        if (k >= 2) {
            const auto& prev = R.diff[static_cast<std::size_t>(k - 1)];
            for (const auto& col : cols) {
                std::vector<ModTerm<F>> acc;
                for (const auto& t : col.terms)
                    for (const auto& s :
                         prev[static_cast<std::size_t>(t.comp)].terms)
                        acc.push_back(ModTerm<F>{t.m.times(s.m), s.comp,
                                                 K.mul(t.c, s.c)});
                if (!mod_normalize(K, std::move(acc), o).is_zero())
                    throw ConsistencyError(
                        "resolution differentials do not compose to zero");
            }
        }
    }
}

// Taylor complex of a monomial ideal: one basis vector per nonempty subset
// of the generators, twisted by the lcm degree.  Exact, usually far from
// minimal.  Hard generator cap of 16 keeps the subset lattice in range.
template <class F>
FreeResolution<F> taylor_resolution(const F& K, const MonomialIdeal& I) {
    const RingContext& ctx = I.ctx();
    FreeResolution<F> R;
    R.ctx = ctx;
    R.twists.push_back({0});
    R.diff.emplace_back();
    if (I.is_zero()) return R;
    int g = static_cast<int>(I.gens().size());
    if (g > 16)
        throw ResourceError(
            "subset resolution needs at most 16 generators; set "
            "LEXCOH_MAX_GENS only up to that");
    const auto& gens = I.gens();
    unsigned full = 1u << g;
    std::vector<Monomial> lcm_of(full, Monomial::unit(ctx.n));
    for (unsigned mask = 1; mask < full; ++mask) {
        unsigned low = mask & (mask - 1);
        int bit = __builtin_ctz(mask);
        lcm_of[mask] = lcm_of[low].lcm(gens[static_cast<std::size_t>(bit)]);
    }
    std::vector<std::vector<unsigned>> level_sets(
        static_cast<std::size_t>(g) + 1);
    for (unsigned mask = 1; mask < full; ++mask)
        level_sets[static_cast<std::size_t>(__builtin_popcount(mask))]
            .push_back(mask);
    std::vector<int> index_of(full, -1);
    index_of[0] = 0;
    for (int k = 1; k <= g; ++k) {
        std::vector<long long> tw;
        const auto& sets = level_sets[static_cast<std::size_t>(k)];
        for (std::size_t idx = 0; idx < sets.size(); ++idx) {
            index_of[sets[idx]] = static_cast<int>(idx);
            tw.push_back(-lcm_of[sets[idx]].degree());
        }
        R.twists.push_back(std::move(tw));
    }
    ModOrder o(TermOrder::degrevlex);
    for (int k = 1; k <= g; ++k) {
        std::vector<ModPoly<F>> cols;
        for (unsigned mask : level_sets[static_cast<std::size_t>(k)]) {
            std::vector<ModTerm<F>> terms;
            int pos = 0;
            for (int i = 0; i < g; ++i) {
                if (!((mask >> i) & 1u)) continue;
                unsigned sub = mask ^ (1u << i);
                Monomial q = lcm_of[mask].divide(lcm_of[sub]);
                typename F::Elem c = pos % 2 ? K.neg(K.one()) : K.one();
                terms.push_back(ModTerm<F>{q, index_of[sub], c});
                ++pos;
            }
            cols.push_back(mod_normalize(K, std::move(terms), o));
        }
        R.diff.push_back(std::move(cols));
    }
    verify_resolution(K, R);
    return R;
}

// Iterated syzygies under induced orders.  Each level is minimalized (leads
// pairwise non-divisible within a component) and arranged with components
// ascending and lead monomials lex-descending inside a component, which
// forces every syzygy level to shed the lowest lead variable and bounds the
// length by n + 2.
template <class F>
FreeResolution<F> schreyer_resolution(const F& K, const PolyIdeal<F>& I,
                                      TermOrder ord = TermOrder::degrevlex) {
    const RingContext& ctx = I.ctx;
    for (const auto& f : I.gens)
        if (!f.homogeneous())
            throw InputError("resolution needs homogeneous generators");
    FreeResolution<F> R;
    R.ctx = ctx;
    R.twists.push_back({0});
    R.diff.emplace_back();
    auto gb = groebner_basis(K, ctx, I.gens, ord);
    if (gb.empty()) return R;

    std::vector<std::unique_ptr<ModOrder>> orders;
    orders.push_back(std::make_unique<ModOrder>(ord));
    std::vector<ModPoly<F>> cur;
    std::vector<long long> cur_deg;
    for (const auto& f : gb) {
        ModPoly<F> m;
        for (const auto& t : f.terms)
            m.terms.push_back(ModTerm<F>{t.m, 0, t.c});
        cur.push_back(std::move(m));
        cur_deg.push_back(f.lead().m.degree());
    }
    auto arrange = [](std::vector<ModPoly<F>>& v, std::vector<long long>& d) {
        std::vector<std::size_t> idx(v.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            const auto& la = v[a].lead();
            const auto& lb = v[b].lead();
            if (la.comp != lb.comp) return la.comp < lb.comp;
            return compare(la.m, lb.m, TermOrder::lex) ==
                   std::strong_ordering::greater;
        });
        std::vector<ModPoly<F>> v2;
        std::vector<long long> d2;
        for (auto i : idx) {
            v2.push_back(std::move(v[i]));
            d2.push_back(d[i]);
        }
        v = std::move(v2);
        d = std::move(d2);
    };
    arrange(cur, cur_deg);

    int level = 1;
    while (!cur.empty()) {
        if (level > ctx.n + 2)
            throw ConsistencyError("syzygy levels exceeded the variable bound");
        if (cur.size() > 20000)
            throw ResourceError("resolution grew past the desk-scale cap");
        std::vector<long long> tw;
        for (auto d : cur_deg) tw.push_back(-d);
        R.twists.push_back(std::move(tw));
        R.diff.push_back(cur);

        std::vector<ModImage> images;
        for (const auto& e : cur)
            images.push_back(ModImage{e.lead().m, e.lead().comp});
        orders.push_back(std::make_unique<ModOrder>(
            ord, std::move(images), orders[static_cast<std::size_t>(level - 1)].get()));
        const ModOrder& newo = *orders[static_cast<std::size_t>(level)];
        const ModOrder& curo = *orders[static_cast<std::size_t>(level - 1)];

        std::vector<ModPoly<F>> syz;
        std::vector<long long> syz_deg;
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j) {
                if (cur[i].lead().comp != cur[j].lead().comp) continue;
                const Monomial& mi = cur[i].lead().m;
                const Monomial& mj = cur[j].lead().m;
                Monomial l = mi.lcm(mj);
                ModPoly<F> s = mod_sub(
                    K,
                    mod_term_mul(K, cur[i], l.divide(mi),
                                 K.inv(cur[i].lead().c)),
                    mod_term_mul(K, cur[j], l.divide(mj),
                                 K.inv(cur[j].lead().c)),
                    curo);
                std::vector<Poly<F>> q;
                ModPoly<F> rem = mod_normal_form<F>(
                    K, std::move(s), std::span<const ModPoly<F>>(cur), curo,
                    &q);
                if (!rem.is_zero())
                    throw ConsistencyError(
                        "syzygy reduction left a nonzero remainder");
                std::vector<ModTerm<F>> terms;
                terms.push_back(ModTerm<F>{l.divide(mi), static_cast<int>(i),
                                           K.inv(cur[i].lead().c)});
                terms.push_back(ModTerm<F>{l.divide(mj), static_cast<int>(j),
                                           K.neg(K.inv(cur[j].lead().c))});
                for (std::size_t k = 0; k < q.size(); ++k)
                    for (const auto& t : q[k].terms)
                        terms.push_back(ModTerm<F>{t.m, static_cast<int>(k),
                                                   K.neg(t.c)});
                ModPoly<F> sig = mod_normalize(K, std::move(terms), newo);
                if (sig.is_zero() || sig.lead().comp != static_cast<int>(i) ||
                    !(sig.lead().m == l.divide(mi)))
                    throw ConsistencyError(
                        "syzygy head departed from the induced order");
                syz.push_back(std::move(sig));
                syz_deg.push_back(l.degree() - mi.degree() +
                                  cur_deg[i]);
            }
        // Minimalize the syzygy generators by lead divisibility.
        std::vector<char> drop(syz.size(), 0);
        for (std::size_t a = 0; a < syz.size(); ++a)
            for (std::size_t b = 0; b < syz.size(); ++b) {
                if (a == b || drop[b]) continue;
                if (syz[b].lead().comp == syz[a].lead().comp &&
                    syz[b].lead().m.divides(syz[a].lead().m) &&
                    (!(syz[b].lead().m == syz[a].lead().m) || b < a)) {
                    drop[a] = 1;
                    break;
                }
            }
        std::vector<ModPoly<F>> kept;
        std::vector<long long> kept_deg;
        for (std::size_t a = 0; a < syz.size(); ++a)
            if (!drop[a]) {
                kept.push_back(std::move(syz[a]));
                kept_deg.push_back(syz_deg[a]);
            }
        arrange(kept, kept_deg);
        cur = std::move(kept);
        cur_deg = std::move(kept_deg);
        ++level;
    }
    verify_resolution(K, R);
    return R;
}

// Gaussian cancellation of constant entries; preserves homology and yields
// the minimal graded resolution.
template <class F>
FreeResolution<F> minimize_resolution(const F& K, FreeResolution<F> R) {
    ModOrder o(TermOrder::degrevlex);
    auto find_unit = [&](int& k, int& col, int& row) -> bool {
        for (k = 1; k <= R.length(); ++k) {
            const auto& cols = R.diff[static_cast<std::size_t>(k)];
            for (col = 0; col < static_cast<int>(cols.size()); ++col)
                for (const auto& t :
                     cols[static_cast<std::size_t>(col)].terms)
                    if (t.m.is_unit()) {
                        row = t.comp;
                        return true;
                    }
        }
        return false;
    };
    int k = 0, c = 0, r = 0;
    while (find_unit(k, c, r)) {
        auto& cols = R.diff[static_cast<std::size_t>(k)];
        ModPoly<F> pivot = cols[static_cast<std::size_t>(c)];
        typename F::Elem u{};
        for (const auto& t : pivot.terms)
            if (t.comp == r && t.m.is_unit()) u = t.c;
        // Clear component r from the other columns with the pivot column.
        for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
            if (j == c) continue;
            std::vector<Term<F>> entry;
            for (const auto& t : cols[static_cast<std::size_t>(j)].terms)
                if (t.comp == r) entry.push_back(Term<F>{t.m, t.c});
            if (entry.empty()) continue;
            Poly<F> e =
                poly_normalize(K, std::move(entry), TermOrder::degrevlex);
            e = poly_scale(K, e, K.neg(K.inv(u)));
            cols[static_cast<std::size_t>(j)] =
                mod_add(K, cols[static_cast<std::size_t>(j)],
                        mod_poly_mul(K, e, pivot, o), o);
        }
        // Drop column c of d_k and basis vector r of level k-1.
        cols.erase(cols.begin() + c);
        R.twists[static_cast<std::size_t>(k)].erase(
            R.twists[static_cast<std::size_t>(k)].begin() + c);
        R.twists[static_cast<std::size_t>(k - 1)].erase(
            R.twists[static_cast<std::size_t>(k - 1)].begin() + r);
        for (auto& col : cols) {
            std::vector<ModTerm<F>> ts;
            for (auto& t : col.terms) {
                if (t.comp == r) continue;  // cleared above
                ts.push_back(ModTerm<F>{t.m, t.comp > r ? t.comp - 1 : t.comp,
                                        t.c});
            }
            col = mod_normalize(K, std::move(ts), o);
        }
        // Drop the level-k component from the differential one level up.
        if (k + 1 <= R.length()) {
            for (auto& col : R.diff[static_cast<std::size_t>(k + 1)]) {
                std::vector<ModTerm<F>> ts;
                for (auto& t : col.terms) {
                    if (t.comp == c) continue;
                    ts.push_back(ModTerm<F>{
                        t.m, t.comp > c ? t.comp - 1 : t.comp, t.c});
                }
                col = mod_normalize(K, std::move(ts), o);
            }
        }
        // Drop the image of the lost level-(k-1) vector one level down.
        if (k >= 2) {
            auto& below = R.diff[static_cast<std::size_t>(k - 1)];
            below.erase(below.begin() + r);
        }
    }
    while (R.length() >= 1 && R.twists.back().empty()) {
        R.twists.pop_back();
        R.diff.pop_back();
    }
    verify_resolution(K, R);
    return R;
}

// Graded Betti numbers beta_{k,j} read off a minimal resolution.
struct GradedBetti {
    // by_level[k] lists (total degree j, count), degree-ascending.
    std::vector<std::vector<std::pair<long long, long long>>> by_level;

    bool operator==(const GradedBetti& o) const {
        return by_level == o.by_level;
    }
};

template <class F>
GradedBetti graded_betti(const F& K, const FreeResolution<F>& R) {
    FreeResolution<F> M = minimize_resolution(K, R);
    GradedBetti b;
    for (const auto& tw : M.twists) {
        std::vector<std::pair<long long, long long>> row;
        std::vector<long long> degs;
        for (auto a : tw) degs.push_back(-a);
        std::sort(degs.begin(), degs.end());
        for (auto d : degs) {
            if (!row.empty() && row.back().first == d)
                ++row.back().second;
            else
                row.emplace_back(d, 1);
        }
        b.by_level.push_back(std::move(row));
    }
    return b;
}

// Graded Betti numbers of R/I for a monomial ideal.  Stable ideals go
// through the closed formula beta_{k+1, deg(u)+k}(R/I) += C(m(u)-1, k) over
// the minimal generators u; everything else through a minimized subset
// resolution, so the 16-generator cap applies there.
GradedBetti monomial_betti(const MonomialIdeal& I);

// Alternating sum sum_k (-1)^k sum_i t^(-twists[k][i]); equals the Hilbert
// numerator of the resolved quotient, which makes a sharp cross-check.
template <class F>
LaurentPoly alternating_twist_sum(const FreeResolution<F>& R) {
    LaurentPoly p;
    for (std::size_t k = 0; k < R.twists.size(); ++k)
        for (auto a : R.twists[k]) {
            LaurentPoly term = LaurentPoly::monomial(-a, Int(k % 2 ? -1 : 1));
            p = p.add(term);
        }
    return p;
}

}  // namespace lexcoh
