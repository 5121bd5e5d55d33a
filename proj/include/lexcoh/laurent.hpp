#pragma once

#include <vector>

#include "lexcoh/field.hpp"

namespace lexcoh {

// Binomial coefficient C(a, b) for integer a (possibly negative in the
// polynomial sense is NOT used here: a < 0 or b < 0 gives 0).
Int binom(long long a, long long b);

// Integer Laurent polynomial, dense over its support.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly monomial(long long e, Int c);
    static LaurentPoly from_dense(std::vector<Int> c, long long lo = 0);

    bool is_zero() const { return c_.empty(); }
    long long lo() const { return lo_; }
    long long hi() const { return lo_ + static_cast<long long>(c_.size()) - 1; }
    Int coeff(long long e) const;
    const std::vector<Int>& raw() const { return c_; }

    LaurentPoly add(const LaurentPoly& o) const;
    LaurentPoly sub(const LaurentPoly& o) const;
    LaurentPoly neg() const;
    LaurentPoly shifted(long long k) const;  // * t^k
    LaurentPoly scaled(const Int& s) const;
    LaurentPoly mul(const LaurentPoly& o) const;
    Int eval_one() const;
    LaurentPoly reversed() const;  // t -> 1/t
    // Exact division by (1 - t); false when the remainder is nonzero.
    bool div_one_minus_t(LaurentPoly& out) const;

    bool operator==(const LaurentPoly& o) const;

private:
    void trim();
    long long lo_ = 0;
    std::vector<Int> c_;  // c_[i] = coefficient of t^(lo_ + i); empty = 0
};

// num / (1-t)^e, kept with e minimal (num(1) != 0 unless num = 0).  One type
// serves both expansion directions: ascending (Hilbert-function style) and
// descending (local cohomology rows read toward -infinity).
class LaurentRational {
public:
    LaurentRational() = default;
    LaurentRational(LaurentPoly num, int pole);

    bool is_zero() const { return num_.is_zero(); }
    const LaurentPoly& num() const { return num_; }
    int pole() const { return e_; }

    LaurentRational add(const LaurentRational& o) const;
    LaurentRational sub(const LaurentRational& o) const;
    LaurentRational neg() const;
    LaurentRational scaled(const Int& s) const;
    LaurentRational shifted(long long k) const;  // * t^k
    // f(t) -> f(1/t), again as num/(1-t)^e.
    LaurentRational reciprocal() const;

    // Coefficient of t^j in the expansion at 0 (ascending powers).
    Int ascending_coeff(long long j) const;
    // Coefficient of t^j in the expansion at infinity (descending powers).
    Int descending_coeff(long long j) const;
    std::vector<Int> ascending_window(long long jlo, long long jhi) const;
    std::vector<Int> descending_window(long long jlo, long long jhi) const;

    bool operator==(const LaurentRational& o) const {
        return e_ == o.e_ && num_ == o.num_;
    }

private:
    LaurentPoly num_;
    int e_ = 0;
};

}  // namespace lexcoh
