#include <doctest.h>

#include <span>
#include <vector>

#include "helpers.hpp"
#include "lexcoh/groebner.hpp"
#include "lexcoh/hilbert.hpp"

using namespace lexcoh;
using lexcoh::testing::ideal;
using lexcoh::testing::mono;

namespace {

Poly<QQ> qpoly(const QQ& K,
               std::vector<std::pair<std::vector<int>, int>> spec,
               TermOrder ord = TermOrder::degrevlex) {
    std::vector<Term<QQ>> t;
    for (auto& [e, c] : spec)
        t.push_back({Monomial::from_exponents(e), K.from_int(c)});
    return poly_normalize(K, std::move(t), ord);
}

}  // namespace

TEST_CASE("groebner basis frozen example") {
    QQ K;
    RingContext ctx = RingContext::rationals(2);
    TermOrder ord = TermOrder::degrevlex;
    // (X1^2 - X2^2, X1*X2): the S-pair adds X2^3.
    std::vector<Poly<QQ>> gens = {qpoly(K, {{{2, 0}, 1}, {{0, 2}, -1}}),
                                  qpoly(K, {{{1, 1}, 1}})};
    auto gb = groebner_basis(K, ctx, gens, ord);
    REQUIRE(gb.size() == 3);
    // Basis members arrive with descending leads: X2^3, X1^2, X1*X2.
    CHECK(gb[0].lead().m == mono({0, 3}));
    CHECK(gb[0].terms.size() == 1);
    CHECK(gb[1].lead().m == mono({2, 0}));
    CHECK(gb[1].terms.size() == 2);
    CHECK(gb[2].lead().m == mono({1, 1}));
    CHECK(gb[2].terms.size() == 1);

    CHECK(initial_ideal(K, ctx, gens, ord) ==
          ideal(ctx, {{2, 0}, {1, 1}, {0, 3}}));

    // X1^3 = X1*(X1^2 - X2^2) + X2*(X1*X2) reduces to zero.
    auto nf = poly_normal_form<QQ>(K, qpoly(K, {{{3, 0}, 1}}),
                                   std::span<const Poly<QQ>>(gb));
    CHECK(nf.is_zero());
    // X2^2 is a standard monomial.
    auto nf2 = poly_normal_form<QQ>(K, qpoly(K, {{{0, 2}, 1}}),
                                    std::span<const Poly<QQ>>(gb));
    CHECK(nf2.terms.size() == 1);
}

TEST_CASE("groebner basis of monomial input is itself") {
    QQ K;
    RingContext ctx = RingContext::rationals(3);
    MonomialIdeal I = ideal(ctx, {{2, 0, 0}, {0, 1, 1}});
    auto P = monomial_generators(K, I);
    auto gb = groebner_basis(K, ctx, P.gens, TermOrder::degrevlex);
    REQUIRE(gb.size() == 2);
    CHECK(gb[0].lead().m == mono({2, 0, 0}));
    CHECK(gb[1].lead().m == mono({0, 1, 1}));
    CHECK(initial_ideal(K, ctx, P.gens, TermOrder::degrevlex) == I);
}

TEST_CASE("initial ideal respects the term order") {
    QQ K;
    // X2^2 - X1*X3 has degrevlex lead X2^2 but lex lead X1*X3.
    RingContext c3 = RingContext::rationals(3);
    auto f = qpoly(K, {{{0, 2, 0}, 1}, {{1, 0, 1}, -1}});
    CHECK(initial_ideal(K, c3, {f}, TermOrder::degrevlex) ==
          ideal(c3, {{0, 2, 0}}));
    auto flex = qpoly(K, {{{0, 2, 0}, 1}, {{1, 0, 1}, -1}}, TermOrder::lex);
    CHECK(initial_ideal(K, c3, {flex}, TermOrder::lex) ==
          ideal(c3, {{1, 0, 1}}));
}

TEST_CASE("generic initial ideal frozen examples") {
    QQ K;
    RingContext ctx = RingContext::rationals(2);
    // gin of (X1^2, X2^3) in degrevlex: (X1^2, X1*X2^2, X2^4).
    PolyIdeal<QQ> P;
    P.ctx = ctx;
    P.gens = {qpoly(K, {{{2, 0}, 1}}), qpoly(K, {{{0, 3}, 1}})};
    MonomialIdeal G =
        generic_initial_ideal(K, P, TermOrder::degrevlex, 12345, 2);
    CHECK(G == ideal(ctx, {{2, 0}, {1, 2}, {0, 4}}));

    // Same answer over a big prime field.
    GFp F(32003);
    PolyIdeal<GFp> Pf;
    Pf.ctx = RingContext::fp(2);
    Pf.gens = {poly_from_monomial(F, mono({2, 0}), TermOrder::degrevlex),
               poly_from_monomial(F, mono({0, 3}), TermOrder::degrevlex)};
    CHECK(generic_initial_ideal(F, Pf, TermOrder::degrevlex, 999, 2) ==
          MonomialIdeal(Pf.ctx, {mono({2, 0}), mono({1, 2}), mono({0, 4})}));

    // A principal degree-3 ideal in three variables: gin = (X1^3) = lex.
    RingContext c3 = RingContext::rationals(3);
    PolyIdeal<QQ> Q;
    Q.ctx = c3;
    Q.gens = {qpoly(K, {{{1, 1, 1}, 1}, {{3, 0, 0}, 2}})};
    CHECK(generic_initial_ideal(K, Q, TermOrder::degrevlex, 5, 2) ==
          ideal(c3, {{3, 0, 0}}));
}

TEST_CASE("generic initial ideal determinism and dispatch") {
    RingContext ctx = RingContext::rationals(2);
    MonomialIdeal I = ideal(ctx, {{1, 1}});
    MonomialIdeal a = generic_initial_ideal(I, TermOrder::degrevlex, 7, 2);
    MonomialIdeal b = generic_initial_ideal(I, TermOrder::degrevlex, 7, 2);
    CHECK(a == b);
    CHECK(a == ideal(ctx, {{2, 0}}));  // gin(X1*X2) = (X1^2)
    // Different seed, same certified answer.
    CHECK(generic_initial_ideal(I, TermOrder::degrevlex, 8, 3) == a);

    // Monomial dispatch works over a prime-field context too.
    RingContext fctx = RingContext::fp(2);
    MonomialIdeal If(fctx, {mono({1, 1})});
    MonomialIdeal g = generic_initial_ideal(If, TermOrder::degrevlex, 7, 2);
    CHECK(g.gens() == std::vector<Monomial>{mono({2, 0})});
}

TEST_CASE("gin output is weakly stable with the same hilbert function") {
    RingContext ctx = RingContext::rationals(3);
    std::vector<MonomialIdeal> samples = {
        ideal(ctx, {{1, 1, 0}, {0, 0, 2}}),
        ideal(ctx, {{2, 0, 0}, {0, 1, 1}}),
        ideal(ctx, {{1, 0, 1}, {0, 2, 0}, {1, 1, 0}}),
    };
    for (const auto& I : samples) {
        MonomialIdeal G = generic_initial_ideal(I, TermOrder::degrevlex, 21, 2);
        CHECK(is_weakly_stable(G));
        CHECK(HilbertSeries::quotient(G).same_function(
            HilbertSeries::quotient(I)));
    }
}

TEST_CASE("gin rejects inhomogeneous input") {
    QQ K;
    PolyIdeal<QQ> P;
    P.ctx = RingContext::rationals(2);
    P.gens = {qpoly(K, {{{2, 0}, 1}, {{0, 1}, 1}})};
    CHECK_THROWS_AS(
        generic_initial_ideal(K, P, TermOrder::degrevlex, 1, 2),
        InputError);
}
