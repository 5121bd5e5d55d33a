#include "lexcoh/corpus.hpp"

#include <atomic>
#include <optional>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "lexcoh/cohomology.hpp"
#include "lexcoh/groebner.hpp"

namespace lexcoh {

namespace {

Monomial random_monomial(Rng& rng, int n, int lo_deg, int hi_deg) {
    int d = static_cast<int>(rng.range(lo_deg, hi_deg));
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int t = 0; t < d; ++t) ++e[rng.uniform(static_cast<std::uint64_t>(n))];
    return Monomial::from_exponents(e);
}

constexpr int kMaxAttempts = 20000;

[[noreturn]] void give_up(const char* family) {
    throw ConsistencyError(std::string("corpus generation for the ") + family +
                           " family exhausted its rejection budget");
}

}  // namespace

CorpusFamily corpus_family_from_name(const std::string& name) {
    if (name == "weakly-stable") return CorpusFamily::weakly_stable;
    if (name == "monomial") return CorpusFamily::monomial;
    if (name == "homogeneous-sparse") return CorpusFamily::homogeneous_sparse;
    throw InputError("unknown corpus family '" + name + "'");
}

std::string corpus_family_name(CorpusFamily f) {
    switch (f) {
        case CorpusFamily::weakly_stable: return "weakly-stable";
        case CorpusFamily::monomial: return "monomial";
        case CorpusFamily::homogeneous_sparse: return "homogeneous-sparse";
    }
    throw InputError("bad corpus family");
}

CorpusSpec corpus_spec_from_json(const Json& j) {
    CorpusSpec spec;
    try {
        spec.family = corpus_family_from_name(j.at("family").get<std::string>());
        spec.n = j.at("n").get<int>();
        spec.max_degree = j.value("max_degree", 4);
        spec.max_generators = j.value("max_generators", 5);
        spec.count = j.at("count").get<int>();
        spec.seed = j.value("seed", std::uint64_t{1});
    } catch (const Json::exception& e) {
        throw InputError(std::string("bad corpus spec: ") + e.what());
    }
    if (spec.n < 1 || spec.n > kMaxVars)
        throw InputError("corpus spec: n out of range");
    if (spec.max_degree < 1 || spec.max_generators < 1 || spec.count < 0)
        throw InputError("corpus spec: degree, generator and count bounds "
                         "must be positive");
    return spec;
}

Json corpus_spec_json(const CorpusSpec& spec) {
    return Json{{"family", corpus_family_name(spec.family)},
                {"n", spec.n},
                {"max_degree", spec.max_degree},
                {"max_generators", spec.max_generators},
                {"count", spec.count},
                {"seed", spec.seed}};
}

CorpusSpec load_corpus_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read corpus spec '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw InputError(std::string("corpus spec is not valid JSON: ") +
                         e.what());
    }
    return corpus_spec_from_json(j);
}

std::int64_t default_prime() {
    if (const char* env = std::getenv("LEXCOH_PRIME")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end == env || *end != '\0' || !GFp::is_prime(v) ||
            v > (1ll << 30))
            throw InputError("LEXCOH_PRIME must be a prime below 2^30");
        return v;
    }
    return kDefaultPrime;
}

MonomialIdeal weakly_stable_closure(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit()) return I;
    int n = I.ctx().n;
    MonomialIdeal J = I;
    for (;;) {
        std::vector<MonomialIdeal> sat;
        sat.reserve(static_cast<std::size_t>(n));
        for (int j = 1; j <= n; ++j) sat.push_back(colon_var_sat(J, j));
        std::vector<Monomial> add;
        for (const auto& u : J.gens()) {
            int m = u.m_index();
            if (m <= 1) continue;
            Monomial v = u.strip_var(m);
            int l = u.exponents()[static_cast<std::size_t>(m - 1)];
            for (int j = 1; j < m; ++j)
                if (!sat[static_cast<std::size_t>(j - 1)].contains(v))
                    add.push_back(v.times(Monomial::variable(n, j).power(l)));
        }
        if (add.empty()) return J;
        std::vector<Monomial> gens = J.gens();
        gens.insert(gens.end(), add.begin(), add.end());
        J = MonomialIdeal(J.ctx(), std::move(gens));
    }
}

std::vector<IdealFile> generate_corpus(const CorpusSpec& spec) {
    std::vector<IdealFile> out;
    out.reserve(static_cast<std::size_t>(spec.count));
    std::string family = corpus_family_name(spec.family);
    RingContext ctx = RingContext::fp(spec.n, default_prime());
    std::uint64_t attempt = 0;

    auto next_label = [&] {
        return family + "-" + std::to_string(out.size());
    };

    while (static_cast<int>(out.size()) < spec.count) {
        if (attempt > static_cast<std::uint64_t>(kMaxAttempts))
            give_up(family.c_str());
        Rng rng = Rng::stream(spec.seed, "corpus-" + family, attempt++);
        int k = static_cast<int>(rng.range(1, spec.max_generators));

        if (spec.family == CorpusFamily::homogeneous_sparse) {
            GFp K(ctx.p);
            IdealFile f;
            f.ctx = ctx;
            for (int g = 0; g < k; ++g) {
                int d = static_cast<int>(rng.range(1, spec.max_degree));
                int nterms = static_cast<int>(rng.range(2, 3));
                ParsedPoly poly;
                for (int t = 0; t < nterms; ++t)
                    poly.push_back(ParsedTerm{
                        Rat(rng.range(1, ctx.p - 1)),
                        random_monomial(rng, spec.n, d, d)});
                f.gens.push_back(std::move(poly));
            }
            PolyIdeal<GFp> P = f.poly_ideal(K);
            if (P.gens.empty()) continue;
            // The run needs the full table of R/in(I) as well, so the
            // initial ideal must stay inside the resolution cap.
            MonomialIdeal in =
                initial_ideal(K, ctx, P.gens, TermOrder::degrevlex);
            if (static_cast<int>(in.gens().size()) > max_generators_cap())
                continue;
            f.label = next_label();
            out.push_back(std::move(f));
            continue;
        }

        std::vector<Monomial> gens;
        gens.reserve(static_cast<std::size_t>(k));
        for (int g = 0; g < k; ++g)
            gens.push_back(random_monomial(rng, spec.n, 1, spec.max_degree));
        MonomialIdeal I(ctx, std::move(gens));
        if (spec.family == CorpusFamily::weakly_stable) {
            I = weakly_stable_closure(I);
            if (static_cast<int>(I.gens().size()) > spec.max_generators)
                continue;
            if (!is_weakly_stable(I))
                throw ConsistencyError(
                    "weak-stability closure failed its own test");
        }
        out.push_back(ideal_file(I, next_label()));
    }
    return out;
}

std::vector<MonomialIdeal> universal_lex_instances(int n, int max_degree,
                                                   int count,
                                                   std::uint64_t seed) {
    if (n < 1 || n > kMaxVars) throw InputError("variable count out of range");
    std::vector<MonomialIdeal> out;
    out.reserve(static_cast<std::size_t>(count));
    RingContext ctx = RingContext::fp(n, default_prime());
    std::uint64_t attempt = 0;
    while (static_cast<int>(out.size()) < count) {
        if (attempt > static_cast<std::uint64_t>(kMaxAttempts))
            give_up("universal-lex");
        Rng rng = Rng::stream(seed, "corpus-critical", attempt++);
        int r = static_cast<int>(rng.range(1, n));
        std::vector<Monomial> gens;
        Monomial prefix = Monomial::unit(n);
        bool fits = true;
        for (int i = 1; i <= r; ++i) {
            int a = static_cast<int>(rng.range(1, max_degree));
            Monomial g = prefix.times(Monomial::variable(n, i).power(a));
            if (g.degree() > max_degree) {
                fits = false;
                break;
            }
            gens.push_back(g);
            prefix = prefix.times(Monomial::variable(n, i).power(a - 1));
        }
        if (!fits) continue;
        MonomialIdeal I(ctx, std::move(gens));
        if (!is_lex_segment(I) || !is_critical(I))
            throw ConsistencyError(
                "universal lex construction produced a non-critical ideal");
        out.push_back(std::move(I));
    }
    return out;
}

Json record_json(const CorpusRecord& r) {
    return Json{{"instance", r.instance},
                {"check", r.check},
                {"ok", r.ok},
                {"detail", r.detail}};
}

namespace {

Json compact_witness(const CancellationWitness& w) {
    Json d{{"window", {w.jlo, w.jhi}}, {"ok", w.ok}};
    if (!w.ok) d["bad_j"] = w.bad_j;
    return d;
}

template <class Fn>
void add_record(std::vector<CorpusRecord>& out, const std::string& instance,
                const std::string& check, Fn&& fn) {
    CorpusRecord rec{instance, check, false, Json::object()};
    try {
        rec.ok = fn(rec.detail);
    } catch (const GinCertificationError& e) {
        rec.detail = Json{{"error", e.what()},
                          {"error_kind", "gin-certification"}};
    } catch (const Error& e) {
        rec.detail = Json{{"error", e.what()}};
    } catch (const std::exception& e) {
        rec.detail = Json{{"error", e.what()}};
    }
    out.push_back(std::move(rec));
}

}  // namespace

std::vector<CorpusRecord> run_instance_checks(const IdealFile& file,
                                              std::uint64_t seed, int trials) {
    std::string label = file.label.empty() ? "instance" : file.label;
    std::vector<CorpusRecord> out;

    std::optional<InstanceData> built;
    try {
        if (file.is_monomial()) {
            built = build_instance(file.monomial_ideal(), seed, trials, label);
        } else if (file.ctx.field == FieldKind::rationals) {
            built = build_instance(QQ{}, file.poly_ideal(QQ{}), seed, trials,
                                   label);
        } else {
            GFp K(file.ctx.p);
            built = build_instance(K, file.poly_ideal(K), seed, trials, label);
        }
    } catch (const GinCertificationError& e) {
        out.push_back(CorpusRecord{
            label, "build", false,
            Json{{"error", e.what()}, {"error_kind", "gin-certification"}}});
        return out;
    } catch (const std::exception& e) {
        out.push_back(
            CorpusRecord{label, "build", false, Json{{"error", e.what()}}});
        return out;
    }
    const InstanceData& D = *built;

    add_record(out, label, "t14", [&](Json& d) {
        EquivalenceReport r = rigidity_check(D);
        d = report_json(r);
        return r.ok();
    });
    if (D.monomial)
        add_record(out, label, "bw", [&](Json& d) {
            EquivalenceReport r = bw_rigidity_check(D);
            d = report_json(r);
            return r.ok();
        });
    add_record(out, label, "chain", [&](Json& d) {
        bool le_gin = tables_leq(D.table, D.gin_table);
        bool le_lex = tables_leq(D.gin_table, D.lex_table);
        d = Json{{"le_gin", le_gin}, {"le_lex", le_lex}};
        return le_gin && le_lex;
    });
    if (D.in_table)
        add_record(out, label, "cancel-in", [&](Json& d) {
            CancellationWitness w = cancellation_witness(D.table, *D.in_table);
            d = compact_witness(w);
            return w.ok;
        });
    add_record(out, label, "cancel-lex", [&](Json& d) {
        CancellationWitness w = cancellation_witness(D.table, D.lex_table);
        d = compact_witness(w);
        return w.ok;
    });
    add_record(out, label, "pscm", [&](Json& d) {
        std::vector<bool> profile = partial_scm_profile(D);
        bool upward = true;
        for (std::size_t i = 1; i < profile.size(); ++i)
            if (profile[i - 1] && !profile[i]) upward = false;
        d = Json{{"profile", profile}, {"upward_closed", upward}};
        return upward;
    });
    add_record(out, label, "t44", [&](Json& d) {
        TransferReport r = tail_transfer_check(D);
        d = report_json(r);
        return r.ok;
    });
    add_record(out, label, "r46a", [&](Json& d) {
        TransferReport r = row_transfer_check(D);
        d = report_json(r);
        return r.ok;
    });
    for (int i = 1; i < D.ctx.n; ++i)
        add_record(out, label, "c45-" + std::to_string(i), [&](Json& d) {
            EquivalenceReport r = row_rigidity_check(D, i);
            d = report_json(r);
            return r.ok();
        });
    add_record(out, label, "gin-structure", [&](Json& d) {
        GinStructureReport r = gin_structure_check(D);
        d = report_json(r);
        return r.ok();
    });
    if (D.monomial && is_weakly_stable(D.in_ideal) &&
        static_cast<int>(D.in_ideal.gens().size()) <= max_generators_cap())
        add_record(out, label, "route-agreement", [&](Json& d) {
            CohomologyTable E = cohomology_by_ext(D.in_ideal);
            bool same = E == D.table;
            d = Json{{"equal", same}};
            return same;
        });
    add_record(out, label, "serre", [&](Json& d) {
        bool self = serre_formula_check(D.table, D.hs);
        bool gin = serre_formula_check(D.gin_table, HilbertSeries::quotient(D.gin));
        bool lex = serre_formula_check(D.lex_table, HilbertSeries::quotient(D.lex));
        bool pole = D.hs.pole == dimension(D.in_ideal);
        d = Json{{"serre_self", self},
                 {"serre_gin", gin},
                 {"serre_lex", lex},
                 {"pole_matches_dimension", pole}};
        return self && gin && lex && pole;
    });
    return out;
}

std::vector<CorpusRecord> run_corpus(const CorpusSpec& spec, std::ostream& out,
                                     int trials) {
    std::vector<IdealFile> files = generate_corpus(spec);
    std::vector<std::vector<CorpusRecord>> results(files.size());

    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(
        workers, static_cast<unsigned>(std::max<std::size_t>(files.size(), 1)));
    std::atomic<std::size_t> cursor{0};
    auto work = [&] {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= files.size()) break;
            std::uint64_t sub = detail::sub_seed(spec.seed, "corpus-instance",
                                                 i);
            try {
                results[i] = run_instance_checks(files[i], sub, trials);
            } catch (const std::exception& e) {
                results[i] = {CorpusRecord{files[i].label, "run", false,
                                           Json{{"error", e.what()}}}};
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    std::vector<CorpusRecord> flat;
    for (auto& batch : results)
        for (auto& rec : batch) {
            out << record_json(rec).dump() << "\n";
            flat.push_back(std::move(rec));
        }
    return flat;
}

}  // namespace lexcoh
