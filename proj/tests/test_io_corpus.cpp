#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "lexcoh/corpus.hpp"
#include "lexcoh/io.hpp"
#include "lexcoh/rigidity.hpp"

using namespace lexcoh;
using lexcoh::testing::ideal;
using lexcoh::testing::mono;

TEST_CASE("ideal file round trip for monomial input") {
    RingContext ctx = RingContext::rationals(3);
    IdealFile F = ideal_file(ideal(ctx, {{2, 0, 1}, {0, 1, 1}}), "sample");
    CHECK(F.is_monomial());
    std::string text = print_ideal_file(F);
    IdealFile G = parse_ideal_file(text);
    CHECK(G == F);
    CHECK(G.label == "sample");
    CHECK(G.monomial_ideal() == ideal(ctx, {{2, 0, 1}, {0, 1, 1}}));

    // Comments and blank lines are transparent.
    IdealFile H = parse_ideal_file("# header\nring 2 rationals\n\n"
                                   "ideal(X1^2, X1*X2)  # tail\n");
    CHECK(H.monomial_ideal() ==
          ideal(RingContext::rationals(2), {{2, 0}, {1, 1}}));
}

TEST_CASE("ideal file round trip for polynomial input") {
    std::string text =
        "ring 2 rationals\n"
        "label quadric pencil\n"
        "ideal(X1^2 - 1/2*X2^2, X1*X2 + X2^2)\n";
    IdealFile F = parse_ideal_file(text);
    CHECK(F.ctx == RingContext::rationals(2));
    CHECK(F.label == "quadric pencil");
    CHECK_FALSE(F.is_monomial());
    REQUIRE(F.gens.size() == 2);
    CHECK(F.gens[0].size() == 2);
    CHECK(F.gens[0][1].c == Rat(-1) / 2);
    CHECK(parse_ideal_file(print_ideal_file(F)) == F);

    QQ K;
    auto P = F.poly_ideal(K);
    CHECK(P.gens.size() == 2);
    CHECK(P.homogeneous());

    // Prime field headers reduce coefficients on conversion only.
    IdealFile Fp = parse_ideal_file("ring 2 fp 7\nideal(3*X1^2, X2^2)\n");
    CHECK(Fp.ctx == RingContext::fp(2, 7));
    GFp F7(7);
    auto Pf = Fp.poly_ideal(F7);
    CHECK(Pf.gens[0].lead().c == F7.from_int(3));
}

TEST_CASE("ideal file corner cases") {
    IdealFile Z = parse_ideal_file("ring 2 rationals\nideal(0)\n");
    CHECK(Z.gens.empty());
    CHECK(Z.monomial_ideal().is_zero());
    IdealFile U = parse_ideal_file("ring 2 rationals\nideal(1)\n");
    CHECK(U.monomial_ideal().is_unit());
    // Multi-line bodies concatenate.
    IdealFile M = parse_ideal_file("ring 3 rationals\nideal(\n  X1*X2,\n"
                                   "  X3^2\n)\n");
    CHECK(M.gens.size() == 2);
}

TEST_CASE("ideal file parse errors") {
    CHECK_THROWS_AS(parse_ideal_file(""), InputError);
    CHECK_THROWS_AS(parse_ideal_file("ring 0 rationals\nideal(X1)\n"),
                    InputError);
    CHECK_THROWS_AS(parse_ideal_file("ring 2 reals\nideal(X1)\n"), InputError);
    CHECK_THROWS_AS(parse_ideal_file("ring 2 fp 6\nideal(X1)\n"), InputError);
    CHECK_THROWS_AS(parse_ideal_file("ring 2 rationals junk\nideal(X1)\n"),
                    InputError);
    CHECK_THROWS_AS(parse_ideal_file("ring 2 rationals\nideal(X3)\n"),
                    InputError);
    CHECK_THROWS_AS(parse_ideal_file("ring 2 rationals\nideal(X1^)\n"),
                    InputError);
    CHECK_THROWS_AS(parse_ideal_file("ring 2 rationals\nideal(1/0*X1)\n"),
                    InputError);
    CHECK_THROWS_AS(parse_ideal_file("ring 2 rationals\nideal(X1 X2)\n"),
                    InputError);
    CHECK_THROWS_AS(parse_ideal_file("ring 2 rationals\nX1^2\n"), InputError);
}

TEST_CASE("series and table formatting") {
    RingContext ctx = RingContext::rationals(2);
    MonomialIdeal I = ideal(ctx, {{2, 0}, {1, 1}});
    HilbertSeries s = HilbertSeries::quotient(I);
    CHECK(numerator_str(s.num) == "1-2*t^2+t^3");
    CHECK(series_str(s) == "1-2*t^2+t^3 / (1-t)^2");
    CHECK(numerator_str({}) == "0");

    Json sj = series_json(s);
    CHECK(sj["text"] == "1-2*t^2+t^3 / (1-t)^2");
    CHECK(sj["n"] == 2);

    auto T = local_cohomology(I);
    Json tj = table_json(T, {-2, 1});
    CHECK(tj["window"] == Json::array({-2, 1}));
    CHECK(tj["rows"]["0"]["1"] == 1);
    CHECK(tj["rows"]["1"]["-1"] == 1);
    // Zero entries stay out of the JSON rows.
    CHECK_FALSE(tj["rows"]["1"].contains("1"));

    std::string csv = table_csv(T, {-1, 0});
    CHECK(csv.substr(0, 6) == "k,j,h\n");
    CHECK(csv.find("1,-1,1\n") != std::string::npos);
    CHECK(csv.find("2,0,0\n") != std::string::npos);

    CHECK(hf_csv(s, 0, 2) == "j,value\n0,1\n1,2\n2,1\n");

    HilbertPolynomial p = hilbert_polynomial(s);
    CHECK(polynomial_str(p) == "1");
    CHECK(polynomial_str(hilbert_polynomial(
              HilbertSeries::quotient(MonomialIdeal::zero(ctx)))) ==
          "C(j+1,1)");
}

TEST_CASE("window parsing") {
    CHECK(parse_window("-3:2") == std::pair<long long, long long>{-3, 2});
    CHECK(parse_window(" 0 : 0 ") == std::pair<long long, long long>{0, 0});
    CHECK_THROWS_AS(parse_window("5"), InputError);
    CHECK_THROWS_AS(parse_window("a:b"), InputError);
    CHECK_THROWS_AS(parse_window("2:-2"), InputError);
}

TEST_CASE("report serialization") {
    RingContext ctx = RingContext::rationals(2);
    InstanceData D = build_instance(ideal(ctx, {{1, 1}}), 5, 2, "edge");
    Json r = report_json(rigidity_check(D));
    CHECK(r["check"] == "rigidity-equivalence");
    CHECK(r["instance"] == "edge");
    CHECK(r["ok"] == true);
    REQUIRE(r["conditions"].is_array());
    CHECK(r["conditions"].size() == 4);
    CHECK(r["conditions"][0].contains("name"));
    CHECK(r["conditions"][0]["ok"] == true);

    Json w = witness_json(cancellation_witness(D.table, D.lex_table));
    CHECK(w["ok"] == true);
    CHECK(w["columns"].is_array());
}

TEST_CASE("corpus specs") {
    CorpusSpec spec = corpus_spec_from_json(Json{{"family", "weakly-stable"},
                                                 {"n", 3},
                                                 {"max_degree", 4},
                                                 {"max_generators", 6},
                                                 {"count", 4},
                                                 {"seed", 9}});
    CHECK(spec.family == CorpusFamily::weakly_stable);
    CHECK(spec.n == 3);
    CHECK(corpus_spec_json(spec)["family"] == "weakly-stable");
    CHECK(corpus_spec_from_json(corpus_spec_json(spec)).seed == 9);

    CHECK_THROWS_AS(corpus_spec_from_json(Json{{"family", "nope"}}),
                    InputError);
    CHECK_THROWS_AS(corpus_spec_from_json(Json{{"family", "monomial"},
                                               {"n", 0}}),
                    InputError);
    CHECK(corpus_family_name(CorpusFamily::homogeneous_sparse) ==
          "homogeneous-sparse");
}

TEST_CASE("corpus generation is deterministic") {
    CorpusSpec spec;
    spec.family = CorpusFamily::monomial;
    spec.n = 3;
    spec.max_degree = 4;
    spec.max_generators = 5;
    spec.count = 6;
    spec.seed = 13;
    auto a = generate_corpus(spec);
    auto b = generate_corpus(spec);
    REQUIRE(a.size() == 6);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(print_ideal_file(a[i]) == print_ideal_file(b[i]));
        CHECK(a[i].is_monomial());
        CHECK(a[i].ctx.field == FieldKind::prime);
    }
    spec.seed = 14;
    auto c = generate_corpus(spec);
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(print_ideal_file(a[i]) == print_ideal_file(c[i])))
            differs = true;
    CHECK(differs);

    spec.count = 0;
    CHECK(generate_corpus(spec).empty());
}

TEST_CASE("weakly stable corpus family") {
    CorpusSpec spec;
    spec.family = CorpusFamily::weakly_stable;
    spec.n = 3;
    spec.max_degree = 4;
    spec.max_generators = 6;
    spec.count = 8;
    spec.seed = 21;
    for (const auto& f : generate_corpus(spec)) {
        MonomialIdeal I = f.monomial_ideal();
        CHECK(is_weakly_stable(I));
        CHECK(static_cast<int>(I.gens().size()) <= 6);
        CHECK(I.max_gen_degree() <= 4);
    }

    // The closure operator itself: fixes weakly stable inputs, produces
    // weakly stable outputs containing the input.
    RingContext ctx = RingContext::rationals(3);
    MonomialIdeal J = ideal(ctx, {{0, 1, 1}});
    MonomialIdeal W = weakly_stable_closure(J);
    CHECK(is_weakly_stable(W));
    CHECK(W.contains(J));
    CHECK(weakly_stable_closure(W) == W);
}

TEST_CASE("sparse corpus family") {
    CorpusSpec spec;
    spec.family = CorpusFamily::homogeneous_sparse;
    spec.n = 3;
    spec.max_degree = 3;
    spec.max_generators = 4;
    spec.count = 5;
    spec.seed = 33;
    auto files = generate_corpus(spec);
    REQUIRE(files.size() == 5);
    GFp K(default_prime());
    for (const auto& f : files) {
        CHECK_FALSE(f.is_monomial());
        CHECK(f.ctx == RingContext::fp(3, default_prime()));
        auto P = f.poly_ideal(K);
        CHECK(P.homogeneous());
        CHECK_FALSE(P.gens.empty());
    }
}

TEST_CASE("universal lex instances") {
    auto ideals = universal_lex_instances(3, 5, 10, 7);
    REQUIRE(ideals.size() == 10);
    for (const auto& L : ideals) {
        CHECK(is_lex_segment(L));
        CHECK(is_universal_lex(L));
        CHECK(is_critical(L));
        CHECK(L.ctx().field == FieldKind::prime);
    }
}

TEST_CASE("instance checks on a rigid example") {
    RingContext ctx = RingContext::rationals(2);
    IdealFile F = ideal_file(ideal(ctx, {{1, 1}}), "edge");
    auto records = run_instance_checks(F, 3, 2);
    CHECK(records.size() >= 8);
    for (const auto& r : records) {
        CAPTURE(r.check);
        CHECK(r.ok);
    }
    Json j = record_json(records.front());
    CHECK(j.contains("instance"));
    CHECK(j.contains("check"));
    CHECK(j.contains("ok"));
}

TEST_CASE("corpus run streams one record per line") {
    CorpusSpec spec;
    spec.family = CorpusFamily::weakly_stable;
    spec.n = 2;
    spec.max_degree = 3;
    spec.max_generators = 4;
    spec.count = 2;
    spec.seed = 5;
    std::ostringstream out;
    auto records = run_corpus(spec, out, 2);
    CHECK_FALSE(records.empty());
    std::istringstream in(out.str());
    std::string line;
    std::size_t lines = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Json j = Json::parse(line);
        CHECK(j.contains("check"));
        ++lines;
    }
    CHECK(lines == records.size());
    for (const auto& r : records) {
        CAPTURE(r.instance);
        CAPTURE(r.check);
        CHECK(r.ok);
    }
}
