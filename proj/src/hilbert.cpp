#include "lexcoh/hilbert.hpp"

#include <algorithm>

#include "lexcoh/errors.hpp"

namespace lexcoh {

namespace {

// C(a, b) for arbitrary-precision a >= 0.
Int binom_int(const Int& a, long long b) {
    if (b < 0 || a < b) return 0;
    Int num = 1, den = 1;
    for (long long i = 0; i < b; ++i) {
        num *= a - i;
        den *= i + 1;
    }
    return num / den;
}

// Dense polynomial product by (1 - t^d).
std::vector<Int> mul_one_minus_power(std::vector<Int> a, int d) {
    std::vector<Int> r(a.size() + static_cast<std::size_t>(d), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] += a[i];
        r[i + static_cast<std::size_t>(d)] -= a[i];
    }
    return r;
}

std::vector<Int> poly_add_shift(std::vector<Int> a, const std::vector<Int>& b,
                                int shift) {
    if (a.size() < b.size() + static_cast<std::size_t>(shift))
        a.resize(b.size() + static_cast<std::size_t>(shift), Int(0));
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i + static_cast<std::size_t>(shift)] += b[i];
    return a;
}

bool pairwise_coprime(const std::vector<Monomial>& gens) {
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!gens[i].coprime(gens[j])) return false;
    return true;
}

std::vector<Int> numerator_rec(const RingContext& ctx,
                               std::vector<Monomial> gens, int depth) {
    if (depth > 10000) throw ResourceError("Hilbert recursion too deep");
    gens = minimalize(std::move(gens), TermOrder::degrevlex);
    if (gens.empty()) return {Int(1)};
    if (gens.front().is_unit()) return {};
    if (pairwise_coprime(gens)) {
        std::vector<Int> num{Int(1)};
        for (const auto& g : gens)
            num = mul_one_minus_power(std::move(num), g.degree());
        return num;
    }
    // Pivot: a power of the most shared variable, exponent the median of the
    // positive exponents it carries.
    int best_var = 1, best_count = -1;
    for (int v = 1; v <= ctx.n; ++v) {
        int count = 0;
        for (const auto& g : gens)
            if (g.exponent(v) > 0) ++count;
        if (count > best_count) {
            best_count = count;
            best_var = v;
        }
    }
    std::vector<int> exps;
    for (const auto& g : gens)
        if (g.exponent(best_var) > 0) exps.push_back(g.exponent(best_var));
    std::sort(exps.begin(), exps.end());
    int a = exps[exps.size() / 2];
    // A pure power X_v^e among the generators forces the pivot below e, so
    // the sum side drops a generator; minimality gives e >= 2 here.
    for (const auto& g : gens)
        if (g.exponent(best_var) == g.degree() && g.degree() <= a)
            a = g.degree() - 1;
    Monomial p = Monomial::variable(ctx.n, best_var).power(a);

    std::vector<Monomial> sum = gens;
    sum.push_back(p);
    std::vector<Monomial> quot;
    quot.reserve(gens.size());
    for (const auto& g : gens) quot.push_back(g.divide(g.gcd(p)));

    std::vector<Int> left = numerator_rec(ctx, std::move(sum), depth + 1);
    std::vector<Int> right = numerator_rec(ctx, std::move(quot), depth + 1);
    return poly_add_shift(std::move(left), right, a);
}

std::vector<Int> trim_poly(std::vector<Int> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

// Count of degree-d monomials in n variables.
Int ring_piece_dim(int n, long long d) {
    if (d < 0) return 0;
    return binom(d + n - 1, n - 1);
}

}  // namespace

std::vector<Int> hilbert_numerator(const MonomialIdeal& I) {
    return trim_poly(numerator_rec(I.ctx(), I.gens(), 0));
}

HilbertSeries HilbertSeries::from_numerator(int n, std::vector<Int> num) {
    HilbertSeries s;
    s.n = n;
    s.num = trim_poly(std::move(num));
    LaurentRational r(LaurentPoly::from_dense(s.num), n);
    s.pole = r.pole();
    s.rnum.clear();
    if (!r.is_zero()) {
        // Numerators here always live in nonnegative powers of t; keep the
        // dense reduced form anchored at t^0.
        s.rnum.assign(static_cast<std::size_t>(r.num().hi()) + 1, Int(0));
        for (long long e = r.num().lo(); e <= r.num().hi(); ++e)
            s.rnum[static_cast<std::size_t>(e)] = r.num().coeff(e);
    }
    return s;
}

HilbertSeries HilbertSeries::quotient(const MonomialIdeal& I) {
    HilbertSeries s = from_numerator(I.ctx().n, hilbert_numerator(I));
    if (!I.is_unit() && (s.num.empty() || s.num.front() != 1))
        throw ConsistencyError(
            "Hilbert numerator of a proper ideal must have constant term 1");
    return s;
}

Int HilbertSeries::hf(long long j) const {
    if (j < 0) return 0;
    Int s = 0;
    for (std::size_t m = 0; m < num.size() && static_cast<long long>(m) <= j;
         ++m)
        s += num[m] * binom(j - static_cast<long long>(m) + n - 1, n - 1);
    return s;
}

std::vector<Int> HilbertSeries::hf_window(long long a, long long b) const {
    std::vector<Int> v;
    for (long long j = a; j <= b; ++j) v.push_back(hf(j));
    return v;
}

HilbertSeries HilbertSeries::sub(const HilbertSeries& o) const {
    if (n != o.n) throw InputError("Hilbert series arity mismatch");
    std::vector<Int> d = num;
    if (d.size() < o.num.size()) d.resize(o.num.size(), Int(0));
    for (std::size_t i = 0; i < o.num.size(); ++i) d[i] -= o.num[i];
    return from_numerator(n, std::move(d));
}

LaurentRational HilbertSeries::to_rational() const {
    return LaurentRational(LaurentPoly::from_dense(rnum), pole);
}

Int HilbertSeries::multiplicity() const {
    Int s = 0;
    for (const auto& c : rnum) s += c;
    return s;
}

Int HilbertPolynomial::eval(long long j) const {
    // C(j + i, i) in the polynomial sense: exact for every integer j.
    Int s = 0;
    for (int i = 0; i < dim; ++i) {
        Int num = 1, den = 1;
        for (int k = 1; k <= i; ++k) {
            num *= Int(j + k);
            den *= k;
        }
        s += b[static_cast<std::size_t>(i)] * (num / den);
    }
    return s;
}

int HilbertPolynomial::degree() const {
    for (int i = dim - 1; i >= 0; --i)
        if (b[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

bool HilbertPolynomial::operator==(const HilbertPolynomial& o) const {
    int da = degree(), db = o.degree();
    if (da != db) return false;
    for (int i = 0; i <= da; ++i)
        if (b[static_cast<std::size_t>(i)] != o.b[static_cast<std::size_t>(i)])
            return false;
    return true;
}

HilbertPolynomial hilbert_polynomial(const HilbertSeries& s) {
    HilbertPolynomial p;
    p.dim = s.pole;
    p.b.assign(static_cast<std::size_t>(std::max(0, s.pole)), Int(0));
    if (s.pole == 0) return p;
    // P(j) = sum_m rnum[m] C(j - m + pole - 1, pole - 1), evaluated in the
    // polynomial sense; the binomial-basis coefficients are the backward
    // differences at j = -1.
    auto eval_p = [&](long long j) {
        Int acc = 0;
        for (std::size_t m = 0; m < s.rnum.size(); ++m) {
            if (s.rnum[m] == 0) continue;
            long long top = j - static_cast<long long>(m) + s.pole - 1;
            Int num = 1, den = 1;
            for (int k = 0; k < s.pole - 1; ++k) {
                num *= Int(top - k);
                den *= k + 1;
            }
            acc += s.rnum[m] * (num / den);
        }
        return acc;
    };
    std::vector<Int> vals;  // P(-1), P(-2), ..., P(-pole)
    for (int i = 0; i < s.pole; ++i) vals.push_back(eval_p(-1 - i));
    for (int k = 0; k < s.pole; ++k) {
        Int c = 0;
        for (int i = 0; i <= k; ++i) {
            Int term = binom(k, i) * vals[static_cast<std::size_t>(i)];
            c += (i % 2) ? -term : term;
        }
        p.b[static_cast<std::size_t>(k)] = c;
    }
    return p;
}

long long agreement_degree(const HilbertSeries& s, const HilbertPolynomial& p) {
    // The function and the polynomial agree from deg(rnum) - pole + 1 on.
    long long bound = static_cast<long long>(s.rnum.size()) - 1 - s.pole + 1;
    bound = std::max(bound, 0ll);
    if (s.hf(bound) != p.eval(bound))
        throw ConsistencyError(
            "Hilbert function must meet its polynomial at the tail bound");
    long long j = bound;
    while (j > 0 && s.hf(j - 1) == p.eval(j - 1)) --j;
    return j;
}

namespace {

// Largest k with C(k, i) <= a, for a >= 1, by doubling plus bisection.
Int macaulay_top(const Int& a, long long i) {
    Int lo = i - 1, hi = i;
    while (binom_int(hi, i) <= a) {
        lo = hi;
        hi *= 2;
    }
    while (lo + 1 < hi) {
        Int mid = (lo + hi) / 2;
        if (binom_int(mid, i) <= a)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

std::vector<std::pair<Int, long long>> macaulay_rep_int(Int a, long long d) {
    if (a < 0 || d < 1)
        throw InputError("Macaulay representation needs a >= 0, d >= 1");
    std::vector<std::pair<Int, long long>> rep;
    long long i = d;
    while (a > 0) {
        if (i < 1)
            throw ConsistencyError("Macaulay representation ran out of indices");
        Int k = macaulay_top(a, i);
        rep.emplace_back(k, i);
        a -= binom_int(k, i);
        --i;
    }
    return rep;
}

Int growth_int(const Int& a, long long d) {
    if (a == 0) return 0;
    Int g = 0;
    for (const auto& [k, i] : macaulay_rep_int(a, d))
        g += binom_int(k + 1, i + 1);
    return g;
}

}  // namespace

std::vector<std::pair<long long, long long>> macaulay_rep(long long a,
                                                          long long d) {
    std::vector<std::pair<long long, long long>> rep;
    for (const auto& [k, i] : macaulay_rep_int(Int(a), d))
        rep.emplace_back(static_cast<long long>(k), i);
    return rep;
}

long long growth_bound(long long a, long long d) {
    return static_cast<long long>(growth_int(Int(a), d));
}

namespace {

// Dense rational polynomials in j, used by the Gotzmann peeling.
using RatPoly = std::vector<Rat>;

RatPoly rp_trim(RatPoly v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

RatPoly rp_sub(RatPoly a, const RatPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return rp_trim(std::move(a));
}

// C(j + shift, k) as a polynomial in j.
RatPoly rp_binomial(long long shift, long long k) {
    RatPoly p{Rat(1)};
    for (long long i = 0; i < k; ++i) {
        RatPoly q(p.size() + 1, Rat(0));
        for (std::size_t m = 0; m < p.size(); ++m) {
            q[m + 1] += p[m];
            q[m] += p[m] * Rat(shift - i);
        }
        p = std::move(q);
    }
    Rat fact = 1;
    for (long long i = 2; i <= k; ++i) fact *= i;
    for (auto& c : p) c /= fact;
    return rp_trim(std::move(p));
}

}  // namespace

long long gotzmann_number(const HilbertPolynomial& p) {
    if (p.degree() < 0) return 0;
    // Express p in powers of j, then greedily peel C(j + a_i - (i-1), a_i)
    // with a_1 >= a_2 >= ... >= 0; the number of peels is the answer.
    RatPoly cur;
    for (int i = 0; i < p.dim; ++i) {
        if (p.b[static_cast<std::size_t>(i)] == 0) continue;
        RatPoly base = rp_binomial(i, i);
        for (auto& c : base) c *= Rat(p.b[static_cast<std::size_t>(i)]);
        if (cur.size() < base.size()) cur.resize(base.size(), Rat(0));
        for (std::size_t m = 0; m < base.size(); ++m) cur[m] += base[m];
    }
    cur = rp_trim(std::move(cur));
    long long s = 0;
    long long last_a = -1;
    while (!cur.empty()) {
        if (s > 200000)
            throw ResourceError("Gotzmann number exceeds the desk-scale cap");
        long long a = static_cast<long long>(cur.size()) - 1;
        if (last_a >= 0 && a > last_a)
            throw InputError("not a Hilbert polynomial: peel degree grew");
        Rat lead = cur.back();
        for (long long i = 2; i <= a; ++i) lead *= i;
        if (lead <= 0 || boost::multiprecision::denominator(lead) != 1)
            throw InputError("not a Hilbert polynomial: bad leading term");
        cur = rp_sub(std::move(cur), rp_binomial(a - s, a));
        last_a = a;
        ++s;
    }
    return s;
}

namespace {

// The degree-d monomial at 0-indexed position r of the descending lex order.
Monomial monomial_at_lex_rank(int n, int d, Int r) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    int rem = d;
    for (int i = 1; i < n; ++i) {
        for (int a = rem; a >= 0; --a) {
            Int cnt = ring_piece_dim(n - i, rem - a);
            if (r < cnt) {
                e[static_cast<std::size_t>(i - 1)] = a;
                rem -= a;
                break;
            }
            r -= cnt;
        }
    }
    e[static_cast<std::size_t>(n - 1)] = rem;
    if (r != 0) throw ConsistencyError("lex rank out of range");
    return Monomial::from_exponents(e);
}

}  // namespace

MonomialIdeal lex_ideal_from_series(const RingContext& ctx,
                                    const HilbertSeries& s) {
    if (s.n != ctx.n) throw InputError("Hilbert series arity mismatch");
    if (s.is_zero()) return MonomialIdeal::unit(ctx);
    if (s.hf(0) != 1)
        throw InputError("not the Hilbert function of a graded quotient");
    HilbertPolynomial p = hilbert_polynomial(s);
    long long g = gotzmann_number(p);
    long long d0 = agreement_degree(s, p);
    long long stop = std::max(g, d0) + 1;
    if (stop > 4000)
        throw ResourceError("lex construction degree exceeds the desk-scale cap");

    // Degree by degree the ideal side of the lex quotient is the descending
    // lex segment whose length is the codimension of the degree piece.  The
    // shadow of the previous segment is itself a segment, of the length
    // forced by Macaulay growth, so the new generators are exactly the
    // positions between the shadow length and the target length.
    std::vector<Monomial> gens;
    for (long long d = 1; d <= stop; ++d) {
        Int hd = s.hf(d);
        Int full = ring_piece_dim(ctx.n, d);
        if (hd < 0 || hd > full)
            throw InputError("Hilbert function value outside the ring piece");
        Int target = full - hd;
        Int covered = 0;
        if (d >= 2) covered = full - growth_int(s.hf(d - 1), d - 1);
        if (target < covered) throw InputError("series violates Macaulay growth");
        if (target == covered) continue;
        if (d == stop)
            throw ConsistencyError(
                "lex construction produced a generator past the stopping degree");
        Monomial m = monomial_at_lex_rank(ctx.n, static_cast<int>(d), covered);
        for (Int r = covered;;) {
            gens.push_back(m);
            if (++r == target) break;
            if (!next_lex_desc(m))
                throw ConsistencyError("lex segment exceeded the degree piece");
        }
    }
    return MonomialIdeal(ctx, std::move(gens));
}

MonomialIdeal lex_ideal(const MonomialIdeal& I) {
    return lex_ideal_from_series(I.ctx(), HilbertSeries::quotient(I));
}

bool is_universal_lex(const MonomialIdeal& L) {
    return is_lex_segment(L) && static_cast<int>(L.gens().size()) <= L.ctx().n;
}

bool is_critical_series(const RingContext& ctx, const HilbertSeries& s) {
    return is_universal_lex(lex_ideal_from_series(ctx, s));
}

bool is_critical(const MonomialIdeal& I) {
    return is_universal_lex(lex_ideal(I));
}

}  // namespace lexcoh
