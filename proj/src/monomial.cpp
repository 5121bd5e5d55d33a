#include "lexcoh/monomial.hpp"

#include <functional>

#include "lexcoh/errors.hpp"

namespace lexcoh {

Monomial::Monomial(int nvars) {
    if (nvars < 1 || nvars > kMaxVars)
        throw InputError("monomial arity out of range");
    n_ = static_cast<std::int16_t>(nvars);
}

Monomial Monomial::variable(int nvars, int i) {
    Monomial m(nvars);
    if (i < 1 || i > nvars) throw InputError("variable index out of range");
    m.e_[i - 1] = 1;
    m.deg_ = 1;
    return m;
}

Monomial Monomial::from_exponents(std::span<const int> exps) {
    Monomial m(static_cast<int>(exps.size()));
    std::int64_t deg = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0 || exps[i] > kMaxExponent)
            throw InputError("exponent out of range");
        m.e_[i] = static_cast<std::uint16_t>(exps[i]);
        deg += exps[i];
    }
    if (deg > kMaxExponent) throw InputError("monomial degree out of range");
    m.deg_ = static_cast<std::int32_t>(deg);
    return m;
}

int Monomial::exponent(int i) const {
    if (i < 1 || i > n_) throw InputError("variable index out of range");
    return e_[i - 1];
}

int Monomial::m_index() const {
    for (int i = n_; i >= 1; --i)
        if (e_[i - 1] > 0) return i;
    return 0;
}

bool Monomial::within_first(int j) const { return m_index() <= j; }

Monomial Monomial::times(const Monomial& o) const {
    Monomial r(n_);
    if (n_ != o.n_) throw InputError("monomial arity mismatch");
    std::int64_t deg = 0;
    for (int i = 0; i < n_; ++i) {
        std::int64_t e = std::int64_t(e_[i]) + o.e_[i];
        if (e > kMaxExponent) throw ResourceError("exponent overflow");
        r.e_[i] = static_cast<std::uint16_t>(e);
        deg += e;
    }
    if (deg > kMaxExponent) throw ResourceError("degree overflow");
    r.deg_ = static_cast<std::int32_t>(deg);
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (n_ != o.n_) throw InputError("monomial arity mismatch");
    for (int i = 0; i < n_; ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::divide(const Monomial& o) const {
    if (!o.divides(*this)) throw Error("inexact monomial division");
    Monomial r(n_);
    for (int i = 0; i < n_; ++i)
        r.e_[i] = static_cast<std::uint16_t>(e_[i] - o.e_[i]);
    r.deg_ = deg_ - o.deg_;
    return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
    if (n_ != o.n_) throw InputError("monomial arity mismatch");
    Monomial r(n_);
    std::int32_t deg = 0;
    for (int i = 0; i < n_; ++i) {
        r.e_[i] = std::min(e_[i], o.e_[i]);
        deg += r.e_[i];
    }
    r.deg_ = deg;
    return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
    if (n_ != o.n_) throw InputError("monomial arity mismatch");
    Monomial r(n_);
    std::int64_t deg = 0;
    for (int i = 0; i < n_; ++i) {
        r.e_[i] = std::max(e_[i], o.e_[i]);
        deg += r.e_[i];
    }
    if (deg > kMaxExponent) throw ResourceError("degree overflow");
    r.deg_ = static_cast<std::int32_t>(deg);
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    if (n_ != o.n_) throw InputError("monomial arity mismatch");
    for (int i = 0; i < n_; ++i)
        if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
}

Monomial Monomial::power(int e) const {
    if (e < 0) throw InputError("negative power");
    Monomial r(n_);
    std::int64_t deg = 0;
    for (int i = 0; i < n_; ++i) {
        std::int64_t x = std::int64_t(e_[i]) * e;
        if (x > kMaxExponent) throw ResourceError("exponent overflow");
        r.e_[i] = static_cast<std::uint16_t>(x);
        deg += x;
    }
    if (deg > kMaxExponent) throw ResourceError("degree overflow");
    r.deg_ = static_cast<std::int32_t>(deg);
    return r;
}

Monomial Monomial::strip_var(int i) const {
    if (i < 1 || i > n_) throw InputError("variable index out of range");
    Monomial r = *this;
    r.deg_ -= r.e_[i - 1];
    r.e_[i - 1] = 0;
    return r;
}

Monomial Monomial::restricted(int j) const {
    if (!within_first(j)) throw InputError("monomial involves stripped variables");
    Monomial r(j);
    for (int i = 0; i < j; ++i) r.e_[i] = e_[i];
    r.deg_ = deg_;
    return r;
}

Monomial Monomial::extended(int nvars) const {
    if (nvars < n_) throw InputError("extension must not shrink the ring");
    Monomial r(nvars);
    for (int i = 0; i < n_; ++i) r.e_[i] = e_[i];
    r.deg_ = deg_;
    return r;
}

std::vector<int> Monomial::exponents() const {
    std::vector<int> v(n_);
    for (int i = 0; i < n_; ++i) v[i] = e_[i];
    return v;
}

std::string Monomial::str() const {
    if (deg_ == 0) return "1";
    std::string s;
    for (int i = 0; i < n_; ++i) {
        if (e_[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "X" + std::to_string(i + 1);
        if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
    }
    return s;
}

bool Monomial::operator==(const Monomial& o) const {
    if (n_ != o.n_ || deg_ != o.deg_) return false;
    for (int i = 0; i < n_; ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

std::size_t Monomial::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (int i = 0; i < n_; ++i) {
        h ^= e_[i];
        h *= 1099511628211ull;
    }
    h ^= static_cast<std::size_t>(n_);
    return h;
}

std::strong_ordering compare(const Monomial& a, const Monomial& b,
                             TermOrder ord) {
    if (a.n_ != b.n_) throw InputError("monomial arity mismatch");
    if (ord == TermOrder::degrevlex) {
        if (a.deg_ != b.deg_)
            return a.deg_ < b.deg_ ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
        for (int i = a.n_ - 1; i >= 0; --i) {
            if (a.e_[i] != b.e_[i])
                return a.e_[i] > b.e_[i] ? std::strong_ordering::less
                                         : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }
    for (int i = 0; i < a.n_; ++i) {
        if (a.e_[i] != b.e_[i])
            return a.e_[i] < b.e_[i] ? std::strong_ordering::less
                                     : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

Monomial first_of_degree(int nvars, int degree) {
    if (degree < 0 || degree > kMaxExponent)
        throw InputError("degree out of range");
    Monomial m(nvars);
    std::vector<int> e(nvars, 0);
    e[0] = degree;
    return Monomial::from_exponents(e);
}

bool next_lex_desc(Monomial& m) {
    // Move one unit off the last positive slot before Xn, dump the tail one
    // position right.  Ends at Xn^d.
    std::vector<int> e = m.exponents();
    int n = static_cast<int>(e.size());
    int j = -1;
    for (int i = n - 2; i >= 0; --i) {
        if (e[i] > 0) {
            j = i;
            break;
        }
    }
    if (j < 0) return false;
    int tail = 0;
    for (int i = j + 1; i < n; ++i) {
        tail += e[i];
        e[i] = 0;
    }
    e[j] -= 1;
    e[j + 1] = tail + 1;
    m = Monomial::from_exponents(e);
    return true;
}

}  // namespace lexcoh
