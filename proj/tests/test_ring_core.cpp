#include <doctest.h>

#include <span>
#include <vector>

#include "helpers.hpp"
#include "lexcoh/field.hpp"
#include "lexcoh/monomial.hpp"
#include "lexcoh/poly.hpp"
#include "lexcoh/ring.hpp"
#include "lexcoh/rng.hpp"

using namespace lexcoh;
using lexcoh::testing::mono;

TEST_CASE("ring context") {
    RingContext q = RingContext::rationals(3);
    CHECK(q.n == 3);
    CHECK(q.field == FieldKind::rationals);
    CHECK(q.var(2) == "X2");

    RingContext f = RingContext::fp(4);
    CHECK(f.p == kDefaultPrime);
    CHECK(f == RingContext::fp(4, 32003));
    CHECK_FALSE(f == q);
    CHECK_FALSE(f == RingContext::fp(3));

    RingContext r = f.restricted(2);
    CHECK(r.n == 2);
    CHECK(r.p == f.p);
    CHECK_THROWS_AS(f.restricted(0), InputError);
    CHECK_THROWS_AS(f.restricted(5), InputError);

    CHECK_THROWS_AS(RingContext::rationals(0), InputError);
    CHECK_THROWS_AS(RingContext::rationals(kMaxVars + 1), InputError);
    CHECK_THROWS_AS(RingContext::fp(2, 4), InputError);

    CHECK_NOTHROW(require_same_ctx(q, RingContext::rationals(3), "test"));
    CHECK_THROWS_AS(require_same_ctx(q, f, "test"), InputError);
}

TEST_CASE("prime field arithmetic") {
    CHECK_THROWS_AS(GFp(4), InputError);
    CHECK_THROWS_AS(GFp(1), InputError);
    CHECK_THROWS_AS(GFp(std::int64_t(1) << 31), InputError);
    CHECK(GFp::is_prime(32003));
    CHECK_FALSE(GFp::is_prime(32001));

    GFp K(7);
    CHECK(K.is_zero(K.zero()));
    CHECK(K.is_one(K.one()));
    CHECK(K.add(K.from_int(3), K.from_int(5)) == K.from_int(1));
    CHECK(K.sub(K.from_int(2), K.from_int(5)) == K.from_int(4));
    CHECK(K.mul(K.from_int(3), K.from_int(5)) == K.from_int(1));
    CHECK(K.neg(K.from_int(3)) == K.from_int(4));
    CHECK(K.from_int(-1) == K.from_int(6));
    // a * a^{-1} = 1 across the whole group
    for (int a = 1; a < 7; ++a)
        CHECK(K.is_one(K.mul(K.from_int(a), K.inv(K.from_int(a)))));
    CHECK_THROWS_AS(K.inv(K.zero()), InputError);

    GFp big(32003);
    CHECK(big.is_one(big.mul(big.from_int(31337), big.inv(big.from_int(31337)))));

    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        auto x = K.sample(rng);
        CHECK(x >= 0);
        CHECK(x < 7);
    }
}

TEST_CASE("rational field arithmetic") {
    QQ K;
    CHECK(K.is_zero(K.zero()));
    CHECK(K.is_one(K.one()));
    Rat half = K.div(K.from_int(1), K.from_int(2));
    CHECK(K.add(half, half) == K.one());
    CHECK(K.mul(K.from_int(6), half) == K.from_int(3));
    CHECK(K.neg(K.from_int(2)) == K.from_int(-2));
    CHECK(K.inv(half) == K.from_int(2));
    CHECK_THROWS_AS(K.inv(K.zero()), InputError);
}

TEST_CASE("monomial basics") {
    Monomial u = Monomial::unit(3);
    CHECK(u.is_unit());
    CHECK(u.degree() == 0);
    CHECK(u.str() == "1");
    CHECK(u.m_index() == 0);

    Monomial x2 = Monomial::variable(3, 2);
    CHECK(x2.degree() == 1);
    CHECK(x2.exponent(2) == 1);
    CHECK(x2.m_index() == 2);

    Monomial m = mono({2, 0, 1});
    CHECK(m.degree() == 3);
    CHECK(m.str() == "X1^2*X3");
    CHECK(m.m_index() == 3);
    CHECK(m.within_first(3));
    CHECK_FALSE(m.within_first(2));
    CHECK(m.exponents() == std::vector<int>{2, 0, 1});

    CHECK(mono({1, 1, 0}).times(mono({0, 1, 1})) == mono({1, 2, 1}));
    CHECK(mono({1, 1, 0}).divides(mono({1, 2, 1})));
    CHECK_FALSE(mono({1, 1, 0}).divides(mono({0, 2, 1})));
    CHECK(mono({1, 2, 1}).divide(mono({1, 1, 0})) == mono({0, 1, 1}));
    CHECK(mono({2, 1, 0}).gcd(mono({1, 2, 0})) == mono({1, 1, 0}));
    CHECK(mono({2, 1, 0}).lcm(mono({1, 2, 0})) == mono({2, 2, 0}));
    CHECK(mono({1, 0, 0}).coprime(mono({0, 1, 1})));
    CHECK_FALSE(mono({1, 1, 0}).coprime(mono({0, 1, 0})));
    CHECK(mono({1, 1, 0}).power(3) == mono({3, 3, 0}));

    CHECK(mono({2, 1, 0}).strip_var(1) == mono({0, 1, 0}));
    CHECK(mono({2, 1, 0}).restricted(2).nvars() == 2);
    CHECK_THROWS_AS(mono({2, 0, 1}).restricted(2), InputError);
    CHECK(mono({2, 1, 0}).restricted(2).extended(3) == mono({2, 1, 0}));
}

TEST_CASE("term orders") {
    // Frozen degrevlex comparisons in three variables.
    Monomial a = mono({0, 2, 0});  // X2^2
    Monomial b = mono({1, 0, 1});  // X1*X3
    CHECK(compare(a, b, TermOrder::degrevlex) == std::strong_ordering::greater);
    CHECK(compare(b, a, TermOrder::lex) == std::strong_ordering::greater);
    CHECK(compare(a, a, TermOrder::degrevlex) == std::strong_ordering::equal);
    // Degree dominates degrevlex; lex reads exponents left to right.
    CHECK(compare(mono({0, 0, 3}), mono({2, 0, 0}), TermOrder::degrevlex) ==
          std::strong_ordering::greater);
    CHECK(compare(mono({1, 0, 0}), mono({0, 5, 0}), TermOrder::lex) ==
          std::strong_ordering::greater);

    // Lex-descending enumeration of all monomials of a fixed degree.
    Monomial m = first_of_degree(2, 2);
    CHECK(m == mono({2, 0}));
    CHECK(next_lex_desc(m));
    CHECK(m == mono({1, 1}));
    CHECK(next_lex_desc(m));
    CHECK(m == mono({0, 2}));
    CHECK_FALSE(next_lex_desc(m));

    int count = 0;
    Monomial w = first_of_degree(3, 4);
    do {
        ++count;
    } while (next_lex_desc(w));
    CHECK(count == 15);  // C(4+2,2)
}

TEST_CASE("polynomial arithmetic") {
    QQ K;
    auto x1 = poly_from_monomial(K, mono({1, 0}), TermOrder::degrevlex);
    auto x2 = poly_from_monomial(K, mono({0, 1}), TermOrder::degrevlex);
    auto s = poly_add(K, x1, x2);
    CHECK(s.terms.size() == 2);
    CHECK(s.lead().m == mono({1, 0}));

    auto sq = poly_mul(K, s, s);  // (X1+X2)^2
    CHECK(sq.terms.size() == 3);
    CHECK(sq.terms[1].m == mono({1, 1}));
    CHECK(sq.terms[1].c == K.from_int(2));
    CHECK(sq.max_degree() == 2);
    CHECK(sq.homogeneous());

    CHECK(poly_sub(K, s, s).is_zero());
    auto tripled = poly_scale(K, s, K.from_int(3));
    CHECK(poly_monic(K, tripled).lead().c == K.one());
    CHECK_FALSE(poly_add(K, sq, x1).homogeneous());

    // Normalization merges duplicates and drops zero terms.
    std::vector<Term<QQ>> raw = {{mono({1, 0}), K.from_int(2)},
                                 {mono({1, 0}), K.from_int(-2)},
                                 {mono({0, 1}), K.one()}};
    auto norm = poly_normalize(K, std::move(raw), TermOrder::degrevlex);
    CHECK(norm.terms.size() == 1);
    CHECK(norm.lead().m == mono({0, 1}));
}

TEST_CASE("normal form with division identity") {
    QQ K;
    TermOrder ord = TermOrder::degrevlex;
    // f = X1^2*X2 + X2^2 against {X1^2 - X2, X1*X2}
    auto gen = [&](std::vector<std::pair<std::vector<int>, int>> spec) {
        std::vector<Term<QQ>> t;
        for (auto& [e, c] : spec)
            t.push_back({Monomial::from_exponents(e), K.from_int(c)});
        return poly_normalize(K, std::move(t), ord);
    };
    std::vector<Poly<QQ>> basis = {gen({{{2, 0}, 1}, {{0, 1}, -1}}),
                                   gen({{{1, 1}, 1}})};
    Poly<QQ> f = gen({{{2, 1}, 1}, {{0, 2}, 1}});
    std::vector<Poly<QQ>> q;
    Poly<QQ> rem = poly_normal_form<QQ>(K, f, basis, &q);
    // Remainder has no term divisible by a basis lead.
    for (const auto& t : rem.terms) {
        CHECK_FALSE(basis[0].lead().m.divides(t.m));
        CHECK_FALSE(basis[1].lead().m.divides(t.m));
    }
    // f = q0*g0 + q1*g1 + rem
    Poly<QQ> back = rem;
    back = poly_add(K, back, poly_mul(K, q[0], basis[0]));
    back = poly_add(K, back, poly_mul(K, q[1], basis[1]));
    CHECK(poly_sub(K, back, f).is_zero());
}

TEST_CASE("linear coordinate changes") {
    QQ K;
    TermOrder ord = TermOrder::degrevlex;
    auto id = LinearChange<QQ>::identity(K, 2);
    CHECK(linear_change_invertible(K, id));

    auto x2sq = poly_from_monomial(K, mono({0, 2}), ord);
    CHECK(poly_sub(K, apply_change(K, x2sq, id), x2sq).is_zero());

    // X2 -> X1 + X2: X2^2 becomes (X1+X2)^2.
    LinearChange<QQ> g = id;
    g.a[0][1] = K.one();
    CHECK(linear_change_invertible(K, g));
    auto img = apply_change(K, x2sq, g);
    CHECK(img.terms.size() == 3);
    CHECK(img.terms[1].c == K.from_int(2));

    LinearChange<QQ> sing = LinearChange<QQ>::identity(K, 2);
    sing.a[1][1] = K.zero();
    CHECK_FALSE(linear_change_invertible(K, sing));

    Rng rng(11);
    GFp F(32003);
    for (int i = 0; i < 5; ++i)
        CHECK(linear_change_invertible(F, random_linear_change(F, 3, rng)));

    // Substituting X2 -> X1 sends X1*X2 + X2^2 to 2*X1^2.
    auto f = poly_add(K, poly_from_monomial(K, mono({1, 1}), ord), x2sq);
    std::vector<Rat> c = {K.one()};
    auto sp = specialize_last<QQ>(K, f, 2, c);
    CHECK(sp.terms.size() == 1);
    CHECK(sp.lead().m == mono({2}));
    CHECK(sp.lead().c == K.from_int(2));
}

TEST_CASE("rng streams") {
    Rng a = Rng::stream(42, "alpha", 0);
    Rng b = Rng::stream(42, "alpha", 0);
    Rng c = Rng::stream(42, "beta", 0);
    Rng d = Rng::stream(43, "alpha", 0);
    bool all_same_c = true, all_same_d = true;
    for (int i = 0; i < 32; ++i) {
        auto x = a.uniform(1000000);
        CHECK(x == b.uniform(1000000));
        if (x != c.uniform(1000000)) all_same_c = false;
        if (x != d.uniform(1000000)) all_same_d = false;
    }
    CHECK_FALSE(all_same_c);
    CHECK_FALSE(all_same_d);

    Rng r(7);
    bool lo_seen = false, hi_seen = false;
    for (int i = 0; i < 200; ++i) {
        long long v = r.range(3, 5);
        CHECK(v >= 3);
        CHECK(v <= 5);
        if (v == 3) lo_seen = true;
        if (v == 5) hi_seen = true;
    }
    CHECK(lo_seen);
    CHECK(hi_seen);
}
