#include "lexcoh/monomial_ideal.hpp"

#include <algorithm>
#include <map>

#include "lexcoh/errors.hpp"

namespace lexcoh {

std::vector<Monomial> minimalize(std::vector<Monomial> gens, TermOrder ord) {
    std::vector<Monomial> out;
    // Ascending degree makes the divisibility sweep one-directional.
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        return a.degree() < b.degree();
    });
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : out)
            if (h.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(g);
    }
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return compare(a, b, ord) == std::strong_ordering::greater;
    });
    return out;
}

MonomialIdeal::MonomialIdeal(RingContext ctx, std::vector<Monomial> gens)
    : ctx_(ctx) {
    RingContext::validate(ctx);
    for (const auto& g : gens)
        if (g.nvars() != ctx.n)
            throw InputError("generator arity does not match the ring");
    g_ = minimalize(std::move(gens), TermOrder::degrevlex);
}

int MonomialIdeal::max_gen_degree() const {
    int d = -1;
    for (const auto& g : g_) d = std::max(d, g.degree());
    return d;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const auto& g : g_)
        if (g.divides(m)) return true;
    return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    for (const auto& g : other.g_)
        if (!contains(g)) return false;
    return true;
}

std::string MonomialIdeal::str() const {
    if (g_.empty()) return "ideal(0)";
    std::string s = "ideal(";
    for (std::size_t i = 0; i < g_.size(); ++i) {
        if (i) s += ", ";
        s += g_[i].str();
    }
    s += ")";
    return s;
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& u) {
    if (u.nvars() != I.ctx().n) throw InputError("colon arity mismatch");
    std::vector<Monomial> gens;
    gens.reserve(I.gens().size());
    for (const auto& g : I.gens()) gens.push_back(g.divide(g.gcd(u)));
    return MonomialIdeal(I.ctx(), std::move(gens));
}

MonomialIdeal colon_var_sat(const MonomialIdeal& I, int j) {
    std::vector<Monomial> gens;
    gens.reserve(I.gens().size());
    for (const auto& g : I.gens()) gens.push_back(g.strip_var(j));
    return MonomialIdeal(I.ctx(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ctx(I.ctx(), J.ctx(), "intersect");
    if (I.is_zero() || J.is_zero()) return MonomialIdeal::zero(I.ctx());
    std::vector<Monomial> gens;
    gens.reserve(I.gens().size() * J.gens().size());
    for (const auto& a : I.gens())
        for (const auto& b : J.gens()) gens.push_back(a.lcm(b));
    return MonomialIdeal(I.ctx(), std::move(gens));
}

MonomialIdeal saturate(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit()) return I;
    MonomialIdeal acc = colon_var_sat(I, 1);
    for (int j = 2; j <= I.ctx().n; ++j)
        acc = intersect(acc, colon_var_sat(I, j));
    return acc;
}

MonomialIdeal restrict_to(const MonomialIdeal& I, int j) {
    // A monomial of K[X1..Xj] lies in I exactly when a generator within the
    // subring divides it, so the restriction keeps those generators.
    std::vector<Monomial> gens;
    for (const auto& g : I.gens())
        if (g.within_first(j)) gens.push_back(g.restricted(j));
    return MonomialIdeal(I.ctx().restricted(j), std::move(gens));
}

bool is_lex_segment(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit()) return true;
    // Only generator degrees need the prefix walk: the lex shadow of a lex
    // segment is again a top segment.
    std::vector<int> degrees;
    for (const auto& g : I.gens()) degrees.push_back(g.degree());
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    for (int d : degrees) {
        Monomial m = first_of_degree(I.ctx().n, d);
        bool seen_gap = false;
        do {
            bool in = I.contains(m);
            if (in && seen_gap) return false;
            if (!in) seen_gap = true;
        } while (next_lex_desc(m));
    }
    return true;
}

bool is_weakly_stable(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit()) return true;
    int n = I.ctx().n;
    std::vector<MonomialIdeal> sat;  // sat[j-1] = (I : X_j^inf)
    sat.reserve(n);
    for (int j = 1; j <= n; ++j) sat.push_back(colon_var_sat(I, j));
    for (const auto& u : I.gens()) {
        int m = u.m_index();
        Monomial v = u.strip_var(m);
        for (int j = 1; j < m; ++j)
            if (!sat[j - 1].contains(v)) return false;
    }
    return true;
}

bool is_stable(const MonomialIdeal& I) {
    int n = I.ctx().n;
    for (const auto& u : I.gens()) {
        int m = u.m_index();
        if (m <= 1) continue;
        Monomial v = u.divide(Monomial::variable(n, m));
        for (int j = 1; j < m; ++j)
            if (!I.contains(v.times(Monomial::variable(n, j)))) return false;
    }
    return true;
}

int IrreducibleComponent::dim(int n) const {
    int support = 0;
    for (int e : power)
        if (e > 0) ++support;
    return n - support;
}

bool IrreducibleComponent::contains_component(
    const IrreducibleComponent& o) const {
    // o subset of this: every generator X_i^{b_i} of o lies in this, i.e.
    // this has X_i^{a_i} with a_i <= b_i.
    for (std::size_t i = 0; i < power.size(); ++i) {
        if (o.power[i] == 0) continue;
        if (power[i] == 0 || power[i] > o.power[i]) return false;
    }
    return true;
}

MonomialIdeal component_ideal(const RingContext& ctx,
                              const IrreducibleComponent& c) {
    std::vector<Monomial> gens;
    for (int i = 0; i < ctx.n; ++i)
        if (c.power[i] > 0)
            gens.push_back(Monomial::variable(ctx.n, i + 1).power(c.power[i]));
    return MonomialIdeal(ctx, std::move(gens));
}

namespace {

void prune_components(std::vector<IrreducibleComponent>& comps) {
    // Drop duplicates and any component containing another: an irreducible
    // superset is redundant in an intersection.
    std::vector<IrreducibleComponent> out;
    for (const auto& c : comps) {
        bool drop = false;
        for (const auto& o : comps) {
            if (&o == &c) continue;
            if (c.contains_component(o) && !(o == c)) {
                drop = true;  // c strictly contains o
                break;
            }
        }
        if (drop) continue;
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
    comps = std::move(out);
}

void decompose_rec(const RingContext& ctx, std::vector<Monomial> gens,
                   std::vector<IrreducibleComponent>& out, int depth) {
    if (depth > 4096) throw ResourceError("decomposition recursion too deep");
    gens = minimalize(std::move(gens), TermOrder::degrevlex);
    if (!gens.empty() && gens.front().is_unit()) return;  // unit branch: empty
    // Split the lex-first generator with mixed support.
    int split = -1;
    {
        Monomial best = Monomial::unit(ctx.n);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const Monomial& g = gens[i];
            bool mixed = g.strip_var(g.m_index()).degree() > 0;
            if (!mixed) continue;
            if (split < 0 ||
                compare(g, best, TermOrder::lex) == std::strong_ordering::greater) {
                split = static_cast<int>(i);
                best = g;
            }
        }
    }
    if (split < 0) {
        // All generators are pure powers: one irreducible component.
        IrreducibleComponent c;
        c.power.assign(ctx.n, 0);
        for (const auto& g : gens) {
            int m = g.m_index();
            c.power[m - 1] = g.exponent(m);
        }
        out.push_back(c);
        return;
    }
    Monomial u = gens[split];
    int m = u.m_index();
    Monomial u1 = Monomial::variable(ctx.n, m).power(u.exponent(m));
    Monomial u2 = u.strip_var(m);
    std::vector<Monomial> left = gens, right = gens;
    left[split] = u1;
    right[split] = u2;
    decompose_rec(ctx, std::move(left), out, depth + 1);
    decompose_rec(ctx, std::move(right), out, depth + 1);
    prune_components(out);
}

}  // namespace

namespace {

bool witness_in_component(const std::vector<int>& w,
                          const IrreducibleComponent& q) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (q.power[i] > 0 && w[i] >= q.power[i]) return true;
    return false;
}

// Remove components containing the intersection of the remaining ones.  The
// corner of Q(a, S), exponents a_v - 1 on S and a large exponent elsewhere,
// lies outside Q; it lies in every other component exactly when the
// intersection of the others escapes Q, so Q is redundant exactly when the
// corner misses one of them.
void drop_fully_redundant(std::vector<IrreducibleComponent>& comps, int n) {
    int big = 1;
    for (const auto& c : comps)
        for (int e : c.power) big = std::max(big, e + 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            std::vector<int> w(n, big);
            for (int v = 0; v < n; ++v)
                if (comps[i].power[v] > 0) w[v] = comps[i].power[v] - 1;
            bool redundant = false;
            for (std::size_t j = 0; j < comps.size() && !redundant; ++j)
                if (j != i && !witness_in_component(w, comps[j]))
                    redundant = true;
            if (redundant) {
                comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
}

}  // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(
    const MonomialIdeal& I) {
    if (I.is_zero())
        throw InputError("the zero ideal has no irreducible decomposition");
    std::vector<IrreducibleComponent> out;
    decompose_rec(I.ctx(), I.gens(), out, 0);
    prune_components(out);
    drop_fully_redundant(out, I.ctx().n);
    // Deterministic order: by dimension, then exponent vector.
    std::sort(out.begin(), out.end(),
              [&](const IrreducibleComponent& a, const IrreducibleComponent& b) {
                  int da = a.dim(I.ctx().n), db = b.dim(I.ctx().n);
                  if (da != db) return da > db;
                  return a.power < b.power;
              });
    return out;
}

int dimension(const MonomialIdeal& I) {
    if (I.is_zero()) return I.ctx().n;
    if (I.is_unit()) return -1;
    if (is_weakly_stable(I)) {
        // The minimal prime is the initial segment (X1..Xc) where c is the
        // largest index at which a generator's support starts.
        int c = 0;
        for (const auto& m : I.gens())
            for (int j = 1; j <= I.ctx().n; ++j)
                if (m.exponent(j) > 0) {
                    c = std::max(c, j);
                    break;
                }
        return I.ctx().n - c;
    }
    int d = -1;
    for (const auto& c : irreducible_decomposition(I))
        d = std::max(d, c.dim(I.ctx().n));
    return d;
}

MonomialIdeal filtration_ideal(const MonomialIdeal& I, int i) {
    if (i <= -1) return I;
    if (I.is_unit()) return I;
    if (I.is_zero())
        return i >= I.ctx().n ? MonomialIdeal::unit(I.ctx()) : I;
    if (i >= I.ctx().n) return MonomialIdeal::unit(I.ctx());
    if (is_weakly_stable(I)) return colon_var_sat(I, I.ctx().n - i);
    auto comps = irreducible_decomposition(I);
    MonomialIdeal acc = MonomialIdeal::unit(I.ctx());
    for (const auto& c : comps)
        if (c.dim(I.ctx().n) > i) acc = intersect(acc, component_ideal(I.ctx(), c));
    return acc;
}

std::vector<MonomialIdeal> dimension_filtration(const MonomialIdeal& I) {
    int d = dimension(I);
    std::vector<MonomialIdeal> chain;
    chain.push_back(I);
    for (int i = 0; i <= d; ++i) chain.push_back(filtration_ideal(I, i));
    return chain;
}

}  // namespace lexcoh
