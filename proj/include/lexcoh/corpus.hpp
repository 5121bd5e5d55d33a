#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lexcoh/io.hpp"
#include "lexcoh/rigidity.hpp"

namespace lexcoh {

enum class CorpusFamily { weakly_stable, monomial, homogeneous_sparse };

CorpusFamily corpus_family_from_name(const std::string& name);
std::string corpus_family_name(CorpusFamily f);

// Random-instance generator parameters.  Generation is a pure function of
// the spec: the same spec always yields the same corpus.
struct CorpusSpec {
    CorpusFamily family = CorpusFamily::monomial;
    int n = 3;
    int max_degree = 4;
    int max_generators = 5;
    int count = 10;
    std::uint64_t seed = 1;
};

CorpusSpec corpus_spec_from_json(const Json& j);
Json corpus_spec_json(const CorpusSpec& spec);
CorpusSpec load_corpus_spec(const std::string& path);

// Default prime modulus for corpus instances over a finite field; honors the
// LEXCOH_PRIME override.
std::int64_t default_prime();

// Smallest weakly stable ideal containing I: repeatedly add the missing
// exchange monomials X_j^l * u / X_m^l (m = m_index(u), l the full X_m
// exponent) until the stability test passes.
MonomialIdeal weakly_stable_closure(const MonomialIdeal& I);

std::vector<IdealFile> generate_corpus(const CorpusSpec& spec);

// Lex ideals with at most n minimal generators; every Hilbert function they
// realize is critical by construction.
std::vector<MonomialIdeal> universal_lex_instances(int n, int max_degree,
                                                   int count,
                                                   std::uint64_t seed);

// One line of a JSONL results file.
struct CorpusRecord {
    std::string instance;
    std::string check;
    bool ok = false;
    Json detail;
};

Json record_json(const CorpusRecord& r);

// Every checker on one parsed instance; deterministic given (file, seed,
// trials).  A check that throws is recorded as failed, not rethrown.
std::vector<CorpusRecord> run_instance_checks(const IdealFile& file,
                                              std::uint64_t seed,
                                              int trials = 2);

// Generate the corpus, run all checkers per instance on a small worker pool,
// and append one JSON record per (instance, check) to out in instance order.
// The flat record list comes back for exit-code decisions and aggregation.
std::vector<CorpusRecord> run_corpus(const CorpusSpec& spec, std::ostream& out,
                                     int trials = 2);

}  // namespace lexcoh
