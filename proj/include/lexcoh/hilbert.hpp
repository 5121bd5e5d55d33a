#pragma once

#include <utility>
#include <vector>

#include "lexcoh/laurent.hpp"
#include "lexcoh/monomial_ideal.hpp"

namespace lexcoh {

// Hilbert series of a graded module over K[X1..Xn] with denominator
// (1-t)^n.  Stores the full numerator plus the reduced form; the reduced
// pole order of R/I equals dim R/I.
struct HilbertSeries {
    int n = 0;
    std::vector<Int> num;   // dense from t^0; empty = zero module
    std::vector<Int> rnum;  // reduced numerator
    int pole = 0;           // reduced pole order

    static HilbertSeries quotient(const MonomialIdeal& I);  // R/I
    static HilbertSeries from_numerator(int n, std::vector<Int> num);

    bool is_zero() const { return rnum.empty(); }
    Int hf(long long j) const;  // dim of the degree-j piece
    std::vector<Int> hf_window(long long a, long long b) const;
    HilbertSeries sub(const HilbertSeries& o) const;
    LaurentRational to_rational() const;  // reduced form
    // Evaluation of the reduced numerator at 1: the multiplicity.
    Int multiplicity() const;

    bool operator==(const HilbertSeries& o) const {
        return n == o.n && num == o.num;
    }
    // Same Hilbert function (compares reduced forms, so numerators padded
    // differently still match).
    bool same_function(const HilbertSeries& o) const {
        return n == o.n && pole == o.pole && rnum == o.rnum;
    }
};

// Numerator of Hilb(R/I) by pivot splitting on a most-shared variable.
std::vector<Int> hilbert_numerator(const MonomialIdeal& I);

// Hilbert polynomial in the binomial basis C(j+i, i), i = 0..dim-1.
struct HilbertPolynomial {
    int dim = 0;          // 0 encodes the zero polynomial
    std::vector<Int> b;   // size dim
    Int eval(long long j) const;
    int degree() const;   // -1 for the zero polynomial
    bool operator==(const HilbertPolynomial& o) const;
};

HilbertPolynomial hilbert_polynomial(const HilbertSeries& s);

// Smallest j0 >= 0 such that the Hilbert function agrees with the Hilbert
// polynomial for every j >= j0.
long long agreement_degree(const HilbertSeries& s, const HilbertPolynomial& p);

// Macaulay representation a = C(k_d, d) + C(k_{d-1}, d-1) + ... with
// k_d > k_{d-1} > ... >= lowest index >= 1; returned as (k_i, i) pairs.
std::vector<std::pair<long long, long long>> macaulay_rep(long long a,
                                                          long long d);
// Macaulay growth bound a^<d>.
long long growth_bound(long long a, long long d);

// Gotzmann number of a Hilbert polynomial, by greedy binomial peeling.
// Throws InputError when p is not of the admissible form.
long long gotzmann_number(const HilbertPolynomial& p);

// The lex ideal with the same Hilbert function.  Built degree by degree up to
// a stopping degree derived from the Gotzmann number and the polynomial
// agreement degree, with a no-new-generator certificate one degree past it.
MonomialIdeal lex_ideal_from_series(const RingContext& ctx,
                                    const HilbertSeries& s);
MonomialIdeal lex_ideal(const MonomialIdeal& I);

// Lex ideal with at most n minimal generators.
bool is_universal_lex(const MonomialIdeal& L);
// The lex ideal of I is universal.
bool is_critical_series(const RingContext& ctx, const HilbertSeries& s);
bool is_critical(const MonomialIdeal& I);

}  // namespace lexcoh
