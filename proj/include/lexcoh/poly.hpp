#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "lexcoh/field.hpp"
#include "lexcoh/monomial.hpp"
#include "lexcoh/ring.hpp"

namespace lexcoh {

template <class F>
struct Term {
    Monomial m;
    typename F::Elem c;
};

// Polynomial with terms kept strictly descending under its term order.
template <class F>
struct Poly {
    std::vector<Term<F>> terms;
    TermOrder ord = TermOrder::degrevlex;

    bool is_zero() const { return terms.empty(); }
    const Term<F>& lead() const { return terms.front(); }
    int max_degree() const {
        int d = -1;
        for (const auto& t : terms) d = std::max(d, t.m.degree());
        return d;
    }
    bool homogeneous() const {
        for (const auto& t : terms)
            if (t.m.degree() != terms.front().m.degree()) return false;
        return true;
    }
};

// Sort, merge equal monomials, drop zero coefficients.
template <class F>
Poly<F> poly_normalize(const F& K, std::vector<Term<F>> terms, TermOrder ord) {
    std::sort(terms.begin(), terms.end(),
              [&](const Term<F>& a, const Term<F>& b) {
                  return compare(a.m, b.m, ord) == std::strong_ordering::greater;
              });
    Poly<F> r;
    r.ord = ord;
    for (auto& t : terms) {
        if (!r.terms.empty() && r.terms.back().m == t.m)
            r.terms.back().c = K.add(r.terms.back().c, t.c);
        else
            r.terms.push_back(std::move(t));
        if (!r.terms.empty() && K.is_zero(r.terms.back().c)) r.terms.pop_back();
    }
    return r;
}

template <class F>
Poly<F> poly_zero(TermOrder ord = TermOrder::degrevlex) {
    Poly<F> r;
    r.ord = ord;
    return r;
}

template <class F>
Poly<F> poly_from_monomial(const F& K, const Monomial& m,
                           TermOrder ord = TermOrder::degrevlex) {
    Poly<F> r;
    r.ord = ord;
    r.terms.push_back(Term<F>{m, K.one()});
    return r;
}

template <class F>
Poly<F> poly_add(const F& K, const Poly<F>& a, const Poly<F>& b) {
    std::vector<Term<F>> t = a.terms;
    t.insert(t.end(), b.terms.begin(), b.terms.end());
    return poly_normalize(K, std::move(t), a.ord);
}

template <class F>
Poly<F> poly_neg(const F& K, const Poly<F>& a) {
    Poly<F> r = a;
    for (auto& t : r.terms) t.c = K.neg(t.c);
    return r;
}

template <class F>
Poly<F> poly_sub(const F& K, const Poly<F>& a, const Poly<F>& b) {
    return poly_add(K, a, poly_neg(K, b));
}

template <class F>
Poly<F> poly_scale(const F& K, const Poly<F>& a, const typename F::Elem& c) {
    if (K.is_zero(c)) return poly_zero<F>(a.ord);
    Poly<F> r = a;
    for (auto& t : r.terms) t.c = K.mul(t.c, c);
    return r;
}

// a * (c * m) for a term (m, c).
template <class F>
Poly<F> poly_term_mul(const F& K, const Poly<F>& a, const Monomial& m,
                      const typename F::Elem& c) {
    Poly<F> r;
    r.ord = a.ord;
    if (K.is_zero(c)) return r;
    r.terms.reserve(a.terms.size());
    for (const auto& t : a.terms)
        r.terms.push_back(Term<F>{t.m.times(m), K.mul(t.c, c)});
    // Multiplication by a monomial preserves relative term order.
    return r;
}

template <class F>
Poly<F> poly_mul(const F& K, const Poly<F>& a, const Poly<F>& b) {
    std::vector<Term<F>> t;
    t.reserve(a.terms.size() * b.terms.size());
    for (const auto& x : a.terms)
        for (const auto& y : b.terms)
            t.push_back(Term<F>{x.m.times(y.m), K.mul(x.c, y.c)});
    return poly_normalize(K, std::move(t), a.ord);
}

template <class F>
Poly<F> poly_monic(const F& K, const Poly<F>& a) {
    if (a.is_zero()) return a;
    return poly_scale(K, a, K.inv(a.lead().c));
}

// Full normal form: every term of the remainder is reduced against every
// divisor lead.  When quotients is non-null it receives one polynomial per
// divisor with f = sum q_i g_i + remainder.
template <class F>
Poly<F> poly_normal_form(const F& K, Poly<F> f, std::span<const Poly<F>> basis,
                         std::vector<Poly<F>>* quotients = nullptr) {
    if (quotients) {
        quotients->assign(basis.size(), poly_zero<F>(f.ord));
    }
    Poly<F> rem = poly_zero<F>(f.ord);
    while (!f.is_zero()) {
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const Poly<F>& g = basis[i];
            if (g.is_zero()) continue;
            if (g.lead().m.divides(f.lead().m)) {
                Monomial q = f.lead().m.divide(g.lead().m);
                typename F::Elem c = K.div(f.lead().c, g.lead().c);
                f = poly_sub(K, f, poly_term_mul(K, g, q, c));
                if (quotients) {
                    (*quotients)[i].terms.push_back(Term<F>{q, c});
                    (*quotients)[i] =
                        poly_normalize(K, std::move((*quotients)[i].terms), f.ord);
                }
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.terms.push_back(f.lead());
            f.terms.erase(f.terms.begin());
        }
    }
    return rem;  // terms were appended in descending order
}

// Invertible linear change of coordinates; column j holds the image of X_j.
template <class F>
struct LinearChange {
    int n = 0;
    std::vector<std::vector<typename F::Elem>> a;  // a[i][j], row i = X_i coeff

    static LinearChange identity(const F& K, int n) {
        LinearChange g;
        g.n = n;
        g.a.assign(n, std::vector<typename F::Elem>(n, K.zero()));
        for (int i = 0; i < n; ++i) g.a[i][i] = K.one();
        return g;
    }
};

template <class F>
bool linear_change_invertible(const F& K, const LinearChange<F>& g) {
    auto m = g.a;
    int n = g.n;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!K.is_zero(m[r][col])) {
                piv = r;
                break;
            }
        if (piv < 0) return false;
        std::swap(m[piv], m[col]);
        for (int r = col + 1; r < n; ++r) {
            if (K.is_zero(m[r][col])) continue;
            typename F::Elem f = K.div(m[r][col], m[col][col]);
            for (int c = col; c < n; ++c)
                m[r][c] = K.sub(m[r][c], K.mul(f, m[col][c]));
        }
    }
    return true;
}

template <class F>
LinearChange<F> random_linear_change(const F& K, int n, Rng& rng) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        LinearChange<F> g;
        g.n = n;
        g.a.assign(n, std::vector<typename F::Elem>(n, K.zero()));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g.a[i][j] = K.sample(rng);
        if (linear_change_invertible(K, g)) return g;
    }
    throw Error("failed to sample an invertible coordinate change");
}

// Linear form sum_i c[i] X_i as a polynomial in an nvars-variable ring.
template <class F>
Poly<F> linear_form(const F& K, int nvars,
                    std::span<const typename F::Elem> c,
                    TermOrder ord = TermOrder::degrevlex) {
    std::vector<Term<F>> t;
    for (int i = 0; i < static_cast<int>(c.size()); ++i)
        if (!K.is_zero(c[i]))
            t.push_back(Term<F>{Monomial::variable(nvars, i + 1), c[i]});
    return poly_normalize(K, std::move(t), ord);
}

// Substitute X_j -> sum_i a[i][j] X_i throughout f.
template <class F>
Poly<F> apply_change(const F& K, const Poly<F>& f, const LinearChange<F>& g) {
    int n = g.n;
    // Per-variable power cache for the images.
    std::vector<std::vector<Poly<F>>> pow(n);
    std::vector<Poly<F>> images(n, poly_zero<F>(f.ord));
    for (int j = 0; j < n; ++j) {
        std::vector<typename F::Elem> col(n);
        for (int i = 0; i < n; ++i) col[i] = g.a[i][j];
        images[j] = linear_form<F>(K, n, col, f.ord);
        pow[j].push_back(poly_from_monomial(K, Monomial::unit(n), f.ord));
    }
    auto power_of = [&](int j, int e) -> const Poly<F>& {
        while (static_cast<int>(pow[j].size()) <= e)
            pow[j].push_back(poly_mul(K, pow[j].back(), images[j]));
        return pow[j][e];
    };
    Poly<F> out = poly_zero<F>(f.ord);
    for (const auto& t : f.terms) {
        Poly<F> acc = poly_from_monomial(K, Monomial::unit(n), f.ord);
        acc = poly_scale(K, acc, t.c);
        for (int j = 1; j <= n; ++j) {
            int e = t.m.exponent(j);
            if (e > 0) acc = poly_mul(K, acc, power_of(j - 1, e));
        }
        out = poly_add(K, out, acc);
    }
    return out;
}

// Substitute X_n -> sum_{i<n} c[i] X_i; the result lives in one fewer
// variable.  c has n-1 entries.
template <class F>
Poly<F> specialize_last(const F& K, const Poly<F>& f, int n,
                        std::span<const typename F::Elem> c) {
    Poly<F> out = poly_zero<F>(f.ord);
    Poly<F> ell = linear_form<F>(K, n - 1, c, f.ord);
    std::vector<Poly<F>> pow;
    pow.push_back(poly_from_monomial(K, Monomial::unit(n - 1), f.ord));
    auto power_of = [&](int e) -> const Poly<F>& {
        while (static_cast<int>(pow.size()) <= e)
            pow.push_back(poly_mul(K, pow.back(), ell));
        return pow[e];
    };
    for (const auto& t : f.terms) {
        int e = t.m.exponent(n);
        Monomial base = t.m.strip_var(n).restricted(n - 1);
        Poly<F> piece = poly_term_mul(K, power_of(e), base, t.c);
        out = poly_add(K, out, piece);
    }
    return out;
}

}  // namespace lexcoh
