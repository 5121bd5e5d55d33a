#pragma once

#include <string>
#include <vector>

#include "lexcoh/monomial.hpp"
#include "lexcoh/ring.hpp"

namespace lexcoh {

// Monomial ideal held by its minimal generators, sorted degrevlex-descending.
// The zero ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
public:
    MonomialIdeal(RingContext ctx, std::vector<Monomial> gens);
    static MonomialIdeal zero(RingContext ctx) { return {ctx, {}}; }
    static MonomialIdeal unit(RingContext ctx) {
        return {ctx, {Monomial::unit(ctx.n)}};
    }

    const RingContext& ctx() const { return ctx_; }
    const std::vector<Monomial>& gens() const { return g_; }
    bool is_zero() const { return g_.empty(); }
    bool is_unit() const { return !g_.empty() && g_.front().is_unit(); }
    int max_gen_degree() const;  // -1 for the zero ideal

    bool contains(const Monomial& m) const;
    bool contains(const MonomialIdeal& other) const;
    bool operator==(const MonomialIdeal& o) const {
        return ctx_ == o.ctx_ && g_ == o.g_;
    }
    std::string str() const;  // canonical "ideal(...)" form

private:
    RingContext ctx_;
    std::vector<Monomial> g_;
};

// Remove generators divisible by another; sort canonically.
std::vector<Monomial> minimalize(std::vector<Monomial> gens, TermOrder ord);

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& u);  // (I : u)
// (I : X_j^inf), by stripping X_j from every generator.
MonomialIdeal colon_var_sat(const MonomialIdeal& I, int j);
// (I : m^inf), the intersection of all variable saturations.
MonomialIdeal saturate(const MonomialIdeal& I);
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);
// I with K[X1..Xj]: generators not involving later variables.
MonomialIdeal restrict_to(const MonomialIdeal& I, int j);

// Top-of-degree lex-segment test, degree by degree through the generators.
bool is_lex_segment(const MonomialIdeal& I);
// Borel-type condition: for every generator u with m = m_index(u) and every
// j < m, u with X_m stripped lies in (I : X_j^inf).
bool is_weakly_stable(const MonomialIdeal& I);
// Stability proper: X_j * u / X_m in I for every generator u, j < m.
bool is_stable(const MonomialIdeal& I);

// Irreducible component: for each variable in the support, a pure-power
// exponent.  Encoded by the exponent vector (0 = variable absent).
struct IrreducibleComponent {
    std::vector<int> power;  // size n
    int dim(int n) const;
    bool contains_component(const IrreducibleComponent& o) const;  // o subset of this
    bool operator==(const IrreducibleComponent& o) const { return power == o.power; }
};

MonomialIdeal component_ideal(const RingContext& ctx,
                              const IrreducibleComponent& c);

// Irredundant irreducible decomposition by coprime splitting of generators.
// Requires a nonzero ideal; the unit ideal decomposes into no components.
std::vector<IrreducibleComponent> irreducible_decomposition(
    const MonomialIdeal& I);

// Krull dimension of R/I: n for the zero ideal, -1 for the unit ideal.
int dimension(const MonomialIdeal& I);

// I^<i>: intersection of the irreducible components of dimension > i.
// i = -1 gives I, i >= dim gives the unit ideal.  For weakly stable ideals
// this is (I : X_{n-i}^inf) and is computed that way.
MonomialIdeal filtration_ideal(const MonomialIdeal& I, int i);

// Chain [I^<-1>, I^<0>, ..., I^<dim>], ascending.
std::vector<MonomialIdeal> dimension_filtration(const MonomialIdeal& I);

}  // namespace lexcoh
