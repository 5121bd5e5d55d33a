#include "lexcoh/laurent.hpp"

#include <algorithm>

#include "lexcoh/errors.hpp"

namespace lexcoh {

Int binom(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    b = std::min(b, a - b);
    Int r = 1;
    for (long long i = 1; i <= b; ++i) {
        r *= (a - b + i);
        r /= i;
    }
    return r;
}

void LaurentPoly::trim() {
    std::size_t front = 0;
    while (front < c_.size() && c_[front] == 0) ++front;
    if (front == c_.size()) {
        c_.clear();
        lo_ = 0;
        return;
    }
    std::size_t back = c_.size();
    while (back > 0 && c_[back - 1] == 0) --back;
    c_.erase(c_.begin() + static_cast<std::ptrdiff_t>(back), c_.end());
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(front));
    lo_ += static_cast<long long>(front);
}

LaurentPoly LaurentPoly::monomial(long long e, Int c) {
    LaurentPoly p;
    p.lo_ = e;
    p.c_ = {std::move(c)};
    p.trim();
    return p;
}

LaurentPoly LaurentPoly::from_dense(std::vector<Int> c, long long lo) {
    LaurentPoly p;
    p.lo_ = lo;
    p.c_ = std::move(c);
    p.trim();
    return p;
}

Int LaurentPoly::coeff(long long e) const {
    if (is_zero() || e < lo_ || e > hi()) return 0;
    return c_[static_cast<std::size_t>(e - lo_)];
}

LaurentPoly LaurentPoly::add(const LaurentPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    long long lo = std::min(lo_, o.lo_), hi_e = std::max(hi(), o.hi());
    std::vector<Int> c(static_cast<std::size_t>(hi_e - lo + 1), Int(0));
    for (long long e = lo; e <= hi_e; ++e)
        c[static_cast<std::size_t>(e - lo)] = coeff(e) + o.coeff(e);
    return from_dense(std::move(c), lo);
}

LaurentPoly LaurentPoly::sub(const LaurentPoly& o) const { return add(o.neg()); }

LaurentPoly LaurentPoly::neg() const {
    LaurentPoly p = *this;
    for (auto& x : p.c_) x = -x;
    return p;
}

LaurentPoly LaurentPoly::shifted(long long k) const {
    LaurentPoly p = *this;
    if (!p.is_zero()) p.lo_ += k;
    return p;
}

LaurentPoly LaurentPoly::scaled(const Int& s) const {
    if (s == 0) return LaurentPoly();
    LaurentPoly p = *this;
    for (auto& x : p.c_) x *= s;
    return p;
}

LaurentPoly LaurentPoly::mul(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return LaurentPoly();
    std::vector<Int> c(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return from_dense(std::move(c), lo_ + o.lo_);
}

Int LaurentPoly::eval_one() const {
    Int s = 0;
    for (const auto& x : c_) s += x;
    return s;
}

LaurentPoly LaurentPoly::reversed() const {
    if (is_zero()) return *this;
    std::vector<Int> c(c_.rbegin(), c_.rend());
    return from_dense(std::move(c), -hi());
}

bool LaurentPoly::div_one_minus_t(LaurentPoly& out) const {
    // num = q * (1 - t): synthetic division from the low end.
    if (is_zero()) {
        out = LaurentPoly();
        return true;
    }
    std::vector<Int> q(c_.size() - 1, Int(0));
    Int carry = 0;
    // coefficients: c_k = q_k - q_{k-1}  =>  q_k = c_k + q_{k-1}
    for (std::size_t k = 0; k + 1 < c_.size(); ++k) {
        carry += c_[k];
        q[k] = carry;
    }
    if (carry + c_.back() != 0) return false;
    out = from_dense(std::move(q), lo_);
    return true;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    return lo_ == o.lo_ && c_ == o.c_;
}

LaurentRational::LaurentRational(LaurentPoly num, int pole)
    : num_(std::move(num)), e_(pole) {
    if (pole < 0) throw Error("negative pole order");
    if (num_.is_zero()) {
        e_ = 0;
        return;
    }
    LaurentPoly q;
    while (e_ > 0 && num_.eval_one() == 0 && num_.div_one_minus_t(q)) {
        num_ = q;
        --e_;
    }
}

LaurentRational LaurentRational::add(const LaurentRational& o) const {
    int e = std::max(e_, o.e_);
    LaurentPoly a = num_, b = o.num_;
    LaurentPoly one_minus_t =
        LaurentPoly::from_dense({Int(1), Int(-1)}, 0);
    for (int i = e_; i < e; ++i) a = a.mul(one_minus_t);
    for (int i = o.e_; i < e; ++i) b = b.mul(one_minus_t);
    return LaurentRational(a.add(b), e);
}

LaurentRational LaurentRational::sub(const LaurentRational& o) const {
    return add(o.neg());
}

LaurentRational LaurentRational::neg() const {
    LaurentRational r = *this;
    r.num_ = r.num_.neg();
    return r;
}

LaurentRational LaurentRational::scaled(const Int& s) const {
    return LaurentRational(num_.scaled(s), e_);
}

LaurentRational LaurentRational::shifted(long long k) const {
    return LaurentRational(num_.shifted(k), e_);
}

LaurentRational LaurentRational::reciprocal() const {
    // f(1/t) = N(1/t) / (1 - 1/t)^e = (-1)^e t^e N(1/t) / (1-t)^e.
    LaurentPoly n = num_.reversed().shifted(e_);
    if (e_ % 2) n = n.neg();
    return LaurentRational(n, e_);
}

Int LaurentRational::ascending_coeff(long long j) const {
    if (e_ == 0) return num_.coeff(j);
    Int s = 0;
    for (long long m = num_.lo(); m <= std::min(num_.hi(), j); ++m)
        s += num_.coeff(m) * binom(j - m + e_ - 1, e_ - 1);
    return s;
}

Int LaurentRational::descending_coeff(long long j) const {
    if (e_ == 0) return num_.coeff(j);
    // 1/(1-t)^e at infinity: (-1)^e sum_r C(r+e-1, e-1) t^(-e-r).
    Int s = 0;
    for (long long m = std::max(num_.lo(), j + e_); m <= num_.hi(); ++m)
        s += num_.coeff(m) * binom(m - j - 1, e_ - 1);
    if (e_ % 2) s = -s;
    return s;
}

std::vector<Int> LaurentRational::ascending_window(long long jlo,
                                                   long long jhi) const {
    std::vector<Int> v;
    for (long long j = jlo; j <= jhi; ++j) v.push_back(ascending_coeff(j));
    return v;
}

std::vector<Int> LaurentRational::descending_window(long long jlo,
                                                    long long jhi) const {
    std::vector<Int> v;
    for (long long j = jlo; j <= jhi; ++j) v.push_back(descending_coeff(j));
    return v;
}

}  // namespace lexcoh
