#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "sylv/errors.hpp"

namespace sylv {

using Int = mpz_class;

/// Exact rational scalar, the ground field for everything in this library.
/// Invariants: always in lowest terms, denominator > 0, zero stored as 0/1.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) { v_ = Int(n); }
    Rat(const Int& n) : v_(n) {}
    Rat(const Int& num, const Int& den);

    /// Accepts: optional leading '-', decimal integer, optional
    /// '/<positive decimal integer>'.  E.g. "-3/4", "7".
    static Rat parse(std::string_view text);

    Int numerator() const { return v_.get_num(); }
    Int denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
    friend Rat operator/(const Rat& a, const Rat& b) { Rat r(a); r /= b; return r; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    /// "num" when the denominator is 1, otherwise "num/den".
    std::string str() const;

private:
    explicit Rat(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_; // kept canonical by gmp
};

/// C(n, k), exact.  Returns 0 for k < 0 or k > n; n < 0 is a domain error.
Int binomial(long n, long k);

/// (-1)^e for any integer e, including negative exponents.
inline Rat sign_pow(long long e) { return (e % 2 != 0) ? Rat(-1) : Rat(1); }

} // namespace sylv
