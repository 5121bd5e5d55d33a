#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lexcoh/cohomology.hpp"
#include "lexcoh/groebner.hpp"
#include "lexcoh/hilbert.hpp"
#include "lexcoh/monomial_ideal.hpp"
#include "lexcoh/rigidity.hpp"

namespace lexcoh {

using Json = nlohmann::json;

// One signed term of a parsed generator.  Coefficients are kept as exact
// rationals regardless of the target field; reduction mod p happens when the
// file is turned into a PolyIdeal over a prime field.
struct ParsedTerm {
    Rat c;
    Monomial m;

    bool operator==(const ParsedTerm& o) const = default;
};

using ParsedPoly = std::vector<ParsedTerm>;

namespace detail {

template <class F>
typename F::Elem elem_from_rat(const F& K, const Rat& c) {
    if constexpr (std::is_same_v<F, QQ>) {
        (void)K;
        return c;
    } else {
        Int p(K.modulus());
        Int num = boost::multiprecision::numerator(c) % p;
        Int den = boost::multiprecision::denominator(c) % p;
        if (den == 0) throw InputError("coefficient denominator vanishes mod p");
        auto lift = [&](const Int& v) {
            return K.from_int(v.template convert_to<std::int64_t>());
        };
        return K.div(lift(num), lift(den));
    }
}

}  // namespace detail

// In-memory image of an ideal file: ring header, optional label, generator
// list.  parse/print round-trips on canonical forms.
struct IdealFile {
    RingContext ctx = RingContext::rationals(1);
    std::string label;
    std::vector<ParsedPoly> gens;

    bool operator==(const IdealFile& o) const = default;

    // True when every generator is a single term (usable as a MonomialIdeal).
    bool is_monomial() const;

    MonomialIdeal monomial_ideal() const;  // InputError unless is_monomial()

    template <class F>
    PolyIdeal<F> poly_ideal(const F& K,
                            TermOrder ord = TermOrder::degrevlex) const {
        PolyIdeal<F> P;
        P.ctx = ctx;
        for (const auto& g : gens) {
            std::vector<Term<F>> terms;
            for (const auto& t : g)
                terms.push_back(Term<F>{t.m, detail::elem_from_rat(K, t.c)});
            Poly<F> f = poly_normalize(K, std::move(terms), ord);
            if (!f.is_zero()) P.gens.push_back(std::move(f));
        }
        return P;
    }
};

// Grammar: a `ring <n> rationals|fp <p>` header, an optional `label <text>`
// line, then `ideal(g1, g2, ...)` where each generator is a +/- separated
// term list with `X1^2*X3` monomials and integer or a/b coefficients.
// `#` starts a comment.  InputError on anything malformed.
IdealFile parse_ideal_file(const std::string& text);
IdealFile load_ideal_file(const std::string& path);

std::string print_ideal_file(const IdealFile& f);

IdealFile ideal_file(const MonomialIdeal& I, std::string label = "");

template <class F>
IdealFile ideal_file(const F& K, const PolyIdeal<F>& P,
                     std::string label = "") {
    IdealFile f;
    f.ctx = P.ctx;
    f.label = std::move(label);
    for (const auto& g : P.gens) {
        ParsedPoly q;
        for (const auto& t : g.terms) {
            if constexpr (std::is_same_v<F, QQ>)
                q.push_back(ParsedTerm{t.c, t.m});
            else
                q.push_back(ParsedTerm{Rat(t.c), t.m});
        }
        f.gens.push_back(std::move(q));
    }
    return f;
}

// "a:b" -> [a, b]; InputError on anything else or a > b.
std::pair<long long, long long> parse_window(const std::string& text);

// Numerator as "1-2*t^2+t^3"; the full series as "1-2*t^2+t^3 / (1-t)^n".
std::string numerator_str(const std::vector<Int>& num);
std::string series_str(const HilbertSeries& s);

// "2*C(j+1,1)-1" style rendering of the binomial-basis coefficients.
std::string polynomial_str(const HilbertPolynomial& p);
Json polynomial_json(const HilbertPolynomial& p);

Json ideal_json(const MonomialIdeal& I);

// Hilbert function window as CSV rows "j,value" with a header line.
std::string hf_csv(const HilbertSeries& s, long long jlo, long long jhi);

// {"window":[a,b],"rows":{"k":{"j":h}}} with zero entries omitted.
Json table_json(const CohomologyTable& T,
                std::pair<long long, long long> window);
// Columns k,j,h over the full window rectangle, zeros included.
std::string table_csv(const CohomologyTable& T,
                      std::pair<long long, long long> window);

// Number when it fits in 64 bits, decimal string otherwise.
Json json_int(const Int& v);

Json series_json(const HilbertSeries& s);
Json bw_json(const BWPolynomial& B);
Json report_json(const EquivalenceReport& r);
Json report_json(const TransferReport& r);
Json report_json(const GinStructureReport& r);
Json witness_json(const CancellationWitness& w);

}  // namespace lexcoh
