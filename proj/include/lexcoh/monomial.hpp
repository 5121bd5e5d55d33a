#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lexcoh {

inline constexpr int kMaxVars = 16;
inline constexpr int kMaxExponent = 60000;

enum class TermOrder { degrevlex, lex };

// A monomial in X1..Xn.  Exponents are fixed-width with overflow checks;
// the total degree is cached.
class Monomial {
public:
    explicit Monomial(int nvars);
    static Monomial unit(int nvars) { return Monomial(nvars); }
    static Monomial variable(int nvars, int i);  // X_i, 1-based
    static Monomial from_exponents(std::span<const int> exps);

    int nvars() const { return n_; }
    int degree() const { return deg_; }
    int exponent(int i) const;  // 1-based
    bool is_unit() const { return deg_ == 0; }

    // Largest index of a variable dividing the monomial; 0 for the unit.
    int m_index() const;
    // True when no variable of index > j occurs.
    bool within_first(int j) const;

    Monomial times(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial divide(const Monomial& o) const;  // this / o, must be exact
    Monomial gcd(const Monomial& o) const;
    Monomial lcm(const Monomial& o) const;
    bool coprime(const Monomial& o) const;

    Monomial power(int e) const;
    // Exponent of X_i set to zero.
    Monomial strip_var(int i) const;
    // Reinterpret in K[X1..Xj]; requires within_first(j).
    Monomial restricted(int j) const;
    // Embed into a ring with more variables.
    Monomial extended(int nvars) const;

    std::vector<int> exponents() const;
    std::string str() const;  // "X1^2*X3", "1" for the unit

    bool operator==(const Monomial& o) const;
    std::size_t hash() const;

private:
    std::array<std::uint16_t, kMaxVars> e_{};
    std::int16_t n_ = 0;
    std::int32_t deg_ = 0;
    friend std::strong_ordering compare(const Monomial&, const Monomial&,
                                        TermOrder);
};

// Total order on monomials of one ring.  degrevlex: higher degree wins; on
// ties the smaller exponent at the last differing variable wins.  lex: larger
// exponent at the first differing variable wins.
std::strong_ordering compare(const Monomial& a, const Monomial& b,
                             TermOrder ord);

// In-place enumeration of all monomials of fixed degree in lex-descending
// order.  first_of_degree writes X1^d; next_lex_desc steps down, returning
// false after the last one (Xn^d).
Monomial first_of_degree(int nvars, int degree);
bool next_lex_desc(Monomial& m);

}  // namespace lexcoh
