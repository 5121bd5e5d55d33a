#include <doctest.h>

#include <algorithm>
#include <vector>

#include "helpers.hpp"
#include "lexcoh/monomial_ideal.hpp"

using namespace lexcoh;
using lexcoh::testing::ideal;
using lexcoh::testing::mono;

TEST_CASE("generator canonicalization") {
    RingContext ctx = RingContext::rationals(2);
    // Redundant and duplicated generators collapse to the minimal set,
    // sorted degrevlex descending.
    MonomialIdeal I(ctx, {mono({1, 1}), mono({2, 1}), mono({2, 0}),
                          mono({2, 0})});
    CHECK(I.gens() == std::vector<Monomial>{mono({2, 0}), mono({1, 1})});
    CHECK(I == ideal(ctx, {{2, 0}, {1, 1}}));
    CHECK(I.max_gen_degree() == 2);
    CHECK(I.str() == "ideal(X1^2, X1*X2)");

    MonomialIdeal Z = MonomialIdeal::zero(ctx);
    CHECK(Z.is_zero());
    CHECK(Z.max_gen_degree() == -1);
    CHECK(Z.str() == "ideal(0)");
    MonomialIdeal U = MonomialIdeal::unit(ctx);
    CHECK(U.is_unit());
    // 1 swallows everything else.
    CHECK(MonomialIdeal(ctx, {mono({2, 0}), Monomial::unit(2)}) == U);

    CHECK(I.contains(mono({2, 3})));
    CHECK_FALSE(I.contains(mono({0, 2})));
    CHECK(U.contains(Z));
    CHECK(I.contains(ideal(ctx, {{2, 1}})));
    CHECK_FALSE(ideal(ctx, {{2, 1}}).contains(I));
}

TEST_CASE("colon and saturation") {
    RingContext ctx = RingContext::rationals(2);
    MonomialIdeal I = ideal(ctx, {{2, 0}, {1, 1}});
    CHECK(colon(I, mono({1, 0})) == ideal(ctx, {{1, 0}, {0, 1}}));
    CHECK(colon(I, mono({0, 1})) == ideal(ctx, {{1, 0}}));
    CHECK(colon(I, Monomial::unit(2)) == I);

    CHECK(colon_var_sat(I, 1) == MonomialIdeal::unit(ctx));
    CHECK(colon_var_sat(I, 2) == ideal(ctx, {{1, 0}}));
    CHECK(saturate(I) == ideal(ctx, {{1, 0}}));

    // Saturated ideals are fixed points.
    MonomialIdeal e = ideal(RingContext::rationals(3), {{1, 1, 0}, {0, 0, 2}});
    CHECK(saturate(saturate(e)) == saturate(e));
    CHECK(saturate(MonomialIdeal::zero(ctx)) == MonomialIdeal::zero(ctx));
    // m-primary ideals saturate to the unit ideal.
    CHECK(saturate(ideal(ctx, {{2, 0}, {0, 2}})) == MonomialIdeal::unit(ctx));
}

TEST_CASE("intersection and restriction") {
    RingContext ctx = RingContext::rationals(2);
    CHECK(intersect(ideal(ctx, {{1, 0}}), ideal(ctx, {{0, 1}})) ==
          ideal(ctx, {{1, 1}}));
    MonomialIdeal I = ideal(ctx, {{2, 0}, {1, 1}});
    CHECK(intersect(I, MonomialIdeal::unit(ctx)) == I);
    CHECK(intersect(I, MonomialIdeal::zero(ctx)).is_zero());

    RingContext c3 = RingContext::rationals(3);
    MonomialIdeal J = ideal(c3, {{2, 0, 0}, {0, 1, 1}});
    MonomialIdeal R = restrict_to(J, 2);
    CHECK(R.ctx().n == 2);
    // X2*X3 involves X3 and is discarded; X1^2 survives.
    CHECK(R == ideal(RingContext::rationals(2), {{2, 0}}));
}

TEST_CASE("lex segments") {
    RingContext ctx = RingContext::rationals(2);
    CHECK(is_lex_segment(ideal(ctx, {{2, 0}})));
    CHECK(is_lex_segment(ideal(ctx, {{2, 0}, {1, 2}, {0, 4}})));
    CHECK_FALSE(is_lex_segment(ideal(ctx, {{1, 1}})));
    CHECK_FALSE(is_lex_segment(ideal(ctx, {{2, 0}, {0, 2}})));
    CHECK(is_lex_segment(MonomialIdeal::zero(ctx)));
    CHECK(is_lex_segment(MonomialIdeal::unit(ctx)));

    RingContext c3 = RingContext::rationals(3);
    CHECK(is_lex_segment(ideal(c3, {{1, 0, 0}, {0, 2, 0}, {0, 1, 1}})));
    CHECK_FALSE(is_lex_segment(ideal(c3, {{1, 0, 0}, {0, 1, 1}})));
}

TEST_CASE("stability classes") {
    RingContext ctx = RingContext::rationals(2);
    // (X1*X2) is not weakly stable: stripping X2 leaves X1, which is not
    // in (I : X1^infty) = (X2).
    CHECK_FALSE(is_weakly_stable(ideal(ctx, {{1, 1}})));
    CHECK(is_weakly_stable(ideal(ctx, {{2, 0}, {1, 1}})));
    CHECK(is_stable(ideal(ctx, {{2, 0}, {1, 1}})));
    // Weakly stable but not stable: exchanging one X2 of X2^2 for X1
    // gives X1*X2, which is missing.
    CHECK(is_weakly_stable(ideal(ctx, {{2, 0}, {0, 2}})));
    CHECK_FALSE(is_stable(ideal(ctx, {{2, 0}, {0, 2}})));

    CHECK(is_weakly_stable(MonomialIdeal::zero(ctx)));
    CHECK(is_stable(MonomialIdeal::unit(ctx)));
    // Stable implies weakly stable on a closure sample.
    RingContext c3 = RingContext::rationals(3);
    MonomialIdeal S = lexcoh::testing::stable_closure(
        ideal(c3, {{0, 2, 1}, {1, 0, 2}}));
    CHECK(is_stable(S));
    CHECK(is_weakly_stable(S));
    // Lex segments are stable.
    CHECK(is_stable(ideal(c3, {{1, 0, 0}, {0, 2, 0}, {0, 1, 1}})));
}

TEST_CASE("irreducible decomposition") {
    RingContext ctx = RingContext::rationals(2);
    auto comps = irreducible_decomposition(ideal(ctx, {{1, 1}}));
    REQUIRE(comps.size() == 2);
    // Equal dimension, so the exponent vectors decide: (X2) before (X1).
    CHECK(comps[0].power == std::vector<int>{0, 1});
    CHECK(comps[1].power == std::vector<int>{1, 0});
    CHECK(comps[0].dim(2) == 1);
    CHECK(component_ideal(ctx, comps[1]) == ideal(ctx, {{1, 0}}));

    auto comps2 = irreducible_decomposition(ideal(ctx, {{2, 0}, {1, 1}}));
    REQUIRE(comps2.size() == 2);
    // (X1) and (X1^2, X2), in that canonical order.
    CHECK(comps2[0].power == std::vector<int>{1, 0});
    CHECK(comps2[1].power == std::vector<int>{2, 1});

    // Intersecting the components recovers the ideal.
    RingContext c3 = RingContext::rationals(3);
    MonomialIdeal I = ideal(c3, {{2, 1, 0}, {0, 1, 2}, {1, 0, 1}});
    MonomialIdeal meet = MonomialIdeal::unit(c3);
    for (const auto& c : irreducible_decomposition(I))
        meet = intersect(meet, component_ideal(c3, c));
    CHECK(meet == I);

    CHECK(irreducible_decomposition(MonomialIdeal::unit(ctx)).empty());
    CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal::zero(ctx)),
                    InputError);
}

TEST_CASE("dimension") {
    RingContext ctx = RingContext::rationals(2);
    CHECK(dimension(MonomialIdeal::zero(ctx)) == 2);
    CHECK(dimension(MonomialIdeal::unit(ctx)) == -1);
    CHECK(dimension(ideal(ctx, {{1, 1}})) == 1);
    CHECK(dimension(ideal(ctx, {{2, 0}, {1, 1}})) == 1);
    CHECK(dimension(ideal(ctx, {{2, 0}, {0, 2}})) == 0);

    RingContext c4 = RingContext::rationals(4);
    MonomialIdeal segre =
        ideal(c4, {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}});
    CHECK(dimension(segre) == 2);
    // Weakly stable shortcut agrees with the component route.
    RingContext c3 = RingContext::rationals(3);
    CHECK(dimension(ideal(c3, {{2, 0, 0}, {1, 1, 0}})) == 2);
    CHECK(dimension(ideal(c3, {{1, 0, 0}})) == 2);
}

TEST_CASE("dimension filtration") {
    RingContext ctx = RingContext::rationals(2);
    MonomialIdeal I = ideal(ctx, {{1, 1}});
    auto filt = dimension_filtration(I);
    // [I^<-1>, I^<0>, I^<1>] with dim I = 1.
    REQUIRE(filt.size() == 3);
    CHECK(filt[0] == I);
    CHECK(filt[1] == I);
    CHECK(filt[2] == MonomialIdeal::unit(ctx));

    MonomialIdeal J = ideal(ctx, {{2, 0}, {1, 1}});
    auto fj = dimension_filtration(J);
    REQUIRE(fj.size() == 3);
    CHECK(fj[0] == J);
    CHECK(fj[1] == ideal(ctx, {{1, 0}}));
    CHECK(fj[2] == MonomialIdeal::unit(ctx));
    CHECK(filtration_ideal(J, 0) == ideal(ctx, {{1, 0}}));
    CHECK(filtration_ideal(J, -1) == J);

    // Each step contains the previous one.
    RingContext c4 = RingContext::rationals(4);
    MonomialIdeal M =
        ideal(c4, {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}});
    auto fm = dimension_filtration(M);
    REQUIRE(fm.size() == static_cast<std::size_t>(dimension(M)) + 2);
    for (std::size_t i = 0; i + 1 < fm.size(); ++i)
        CHECK(fm[i + 1].contains(fm[i]));
    CHECK(fm.back() == MonomialIdeal::unit(c4));
}
