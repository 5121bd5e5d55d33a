#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lexcoh/cohomology.hpp"
#include "lexcoh/groebner.hpp"
#include "lexcoh/hilbert.hpp"
#include "lexcoh/monomial_ideal.hpp"

namespace lexcoh {

// Everything the equivalence checkers consume, computed once per instance:
// the exact cohomology table of R/I, the certified generic initial ideal,
// the lex ideal of the Hilbert function, and layer-route tables of the
// weakly stable companions.  Checkers never read anything else, so every
// comparison below is between independently computed objects.
struct InstanceData {
    RingContext ctx;
    std::string label;
    std::uint64_t seed = 0;
    int trials = 2;
    bool monomial = false;
    MonomialIdeal in_ideal;  // I itself when monomial, in(I) otherwise
    HilbertSeries hs;        // Hilb(R/I)
    CohomologyTable table;   // exact rows of R/I
    // Exact rows of R/in(I); same object as table for monomial instances,
    // absent when in(I) falls outside both route preconditions.
    std::optional<CohomologyTable> in_table;
    MonomialIdeal gin;
    MonomialIdeal lex;
    CohomologyTable gin_table;  // layer route
    CohomologyTable lex_table;  // layer route
    // Layer route applied to I itself; meaningful for monomial instances,
    // exact precisely when R/I is sequentially Cohen-Macaulay.
    std::optional<CohomologyTable> lay_table;
};

namespace detail {

inline std::uint64_t sub_seed(std::uint64_t master, std::string_view label,
                              std::uint64_t index = 0) {
    return Rng::stream(master, label, index).next();
}

InstanceData finish_instance(RingContext ctx, std::string label,
                             std::uint64_t seed, int trials, bool monomial,
                             MonomialIdeal in_ideal, HilbertSeries hs,
                             CohomologyTable table,
                             std::optional<CohomologyTable> in_table,
                             MonomialIdeal gin, MonomialIdeal lex);

}  // namespace detail

InstanceData build_instance(const MonomialIdeal& I, std::uint64_t seed,
                            int trials = 2, std::string label = "");

template <class F>
InstanceData build_instance(const F& K, const PolyIdeal<F>& I,
                            std::uint64_t seed, int trials = 2,
                            std::string label = "") {
    if (!I.homogeneous())
        throw InputError("instance checks need homogeneous generators");
    MonomialIdeal in =
        initial_ideal(K, I.ctx, I.gens, TermOrder::degrevlex);
    HilbertSeries hs = HilbertSeries::quotient(in);
    CohomologyTable table = cohomology_by_ext(K, I);
    std::optional<CohomologyTable> in_table;
    try {
        in_table = local_cohomology(in);
    } catch (const ResourceError&) {
        // in(I) outside both route preconditions; pair checks that need its
        // rows will refuse later.
    }
    MonomialIdeal gin =
        generic_initial_ideal(K, I, TermOrder::degrevlex, seed, trials);
    MonomialIdeal lex = lex_ideal_from_series(I.ctx, hs);
    return detail::finish_instance(I.ctx, std::move(label), seed, trials,
                                   false, std::move(in), std::move(hs),
                                   std::move(table), std::move(in_table),
                                   std::move(gin), std::move(lex));
}

// A report over a set of conditions asserted equivalent.  all_equal is the
// verdict; side_checks are one-sided assertions that must each hold.
struct EquivalenceReport {
    std::string check;
    std::string instance;
    std::vector<std::pair<std::string, bool>> conditions;
    std::vector<std::pair<std::string, bool>> side_checks;
    bool all_equal = false;
    bool all_true = false;
    std::string note;

    bool ok() const {
        if (!all_equal) return false;
        for (const auto& s : side_checks)
            if (!s.second) return false;
        return true;
    }
};

// The four-way equivalence: (1) lex of the saturation equals the saturation
// of the lex ideal; (2) depth-0 rows of R/I and R/I^lex agree; (3) all rows
// agree; (4) saturations of gin and lex agree.  Side check: any proper
// saturated lex ideal constructed here must be universal (at most n minimal
// generators).
EquivalenceReport rigidity_check(const InstanceData& D);

// BW polynomial equality against the four-way equivalence; when the BW
// polynomials agree, the dimension filtrations of gin and lex must match
// levelwise, gin must have the BW polynomial of I, and R/I must be
// sequentially Cohen-Macaulay.
EquivalenceReport bw_rigidity_check(const InstanceData& D);

// J = (A_[n-i+1] : X_{n-i+1}^inf)_[n-i] with A = I for weakly stable
// monomial instances and A = gin otherwise; Jp is the same recipe applied
// to the lex ideal.
struct ColonRestrictionPair {
    int i = 0;
    MonomialIdeal J, Jp;
};

ColonRestrictionPair build_colon_restriction_pair(const InstanceData& D,
                                                  int i);

// Six-way equivalence at level i (1 <= i <= n-1): row i of gin vs lex, row
// i of I vs lex, rows >= i of I vs lex, and for the colon-restriction pair:
// equal Hilbert functions, criticality of J, gin(J) = Jp.
EquivalenceReport row_rigidity_check(const InstanceData& D, int i);

// Row-transfer reports: for every i where a hypothesis row equality holds
// between gin and lex, a conclusion about the rows of R/I must follow.
struct TransferReport {
    std::string check;
    std::string instance;
    std::vector<int> hypothesis_at;
    std::vector<int> violations;
    std::vector<std::pair<std::string, bool>> side_checks;
    bool ok = false;
};

// Hypothesis: row i of gin equals row i of lex.  Conclusion: rows k >= i of
// R/I all equal those of R/I^lex.  Side check: the full-table hypothesis is
// equivalent to the four-way equivalence holding.
TransferReport tail_transfer_check(const InstanceData& D);

// Same hypothesis; conclusion restricted to row i alone.
TransferReport row_transfer_check(const InstanceData& D);

// For weakly stable A, B with the same Hilbert polynomial: restrictions to
// n-i variables share a Hilbert polynomial for every i, and so do the
// colon-restriction ideals.
bool restricted_hilbert_check(const MonomialIdeal& A, const MonomialIdeal& B);

// Per degree j, the sequence e_k >= 0 with d_k = e_k + e_{k+1}, e_0 = 0,
// final term zero, where d = B - A entrywise on the union window.  Exists
// iff B is reachable from A by consecutive cancellations.
struct CancellationWitness {
    long long jlo = 0, jhi = 0;
    std::vector<std::vector<Int>> cols;  // e_0..e_{n+1} per degree
    bool ok = false;
    long long bad_j = 0;  // first infeasible degree when !ok
};

CancellationWitness cancellation_witness(const CohomologyTable& A,
                                         const CohomologyTable& B);

// Entrywise A <= B over the union of the default windows.
bool tables_leq(const CohomologyTable& A, const CohomologyTable& B);

// Verdicts for the partial sequential Cohen-Macaulay property at i = 0..n;
// rows >= i of the exact table against gin, cross-checked against the layer
// predictions when available.  Always ascending (monotone in i).
std::vector<bool> partial_scm_profile(const InstanceData& D);

// Structural properties of the gin operator on this instance: idempotence,
// commutation with saturation, weak stability of the output, compatibility
// with a generic hyperplane section, and gin = lex on critical instances.
struct GinStructureReport {
    std::string instance;
    bool idempotent = false;
    bool saturation_commutes = true;    // monomial instances only
    bool weakly_stable_output = false;
    bool hyperplane_restriction = true;  // needs n >= 2 and a monomial input
    bool critical_instance = false;
    bool critical_gin_is_lex = true;     // binding when critical_instance
    std::string note;

    bool ok() const {
        return idempotent && saturation_commutes && weakly_stable_output &&
               hyperplane_restriction && critical_gin_is_lex;
    }
};

GinStructureReport gin_structure_check(const InstanceData& D);

}  // namespace lexcoh
