#pragma once

#include <vector>

#include "sylv/unipoly.hpp"

namespace sylv {

/// Polynomial in x and T over Rat, stored as the list of coefficients of
/// T^0, T^1, ... where each coefficient is a UniPoly in x.  Canonical form:
/// no trailing zero entry.
class BiPoly {
public:
    BiPoly() = default;
    BiPoly(const UniPoly& x_part);
    BiPoly(const Rat& constant) : BiPoly(UniPoly(constant)) {}
    BiPoly(int constant) : BiPoly(UniPoly(constant)) {}
    explicit BiPoly(std::vector<UniPoly> t_coeffs);

    static BiPoly zero() { return BiPoly(); }
    static BiPoly one() { return BiPoly(UniPoly::one()); }
    /// The monomial T.
    static BiPoly t() { return t_monomial(1); }
    /// c(x) * T^j.
    static BiPoly t_monomial(int j, const UniPoly& c = UniPoly::one());

    int deg_t() const { return tc_.empty() ? UniPoly::kZeroDegree : static_cast<int>(tc_.size()) - 1; }
    int deg_x() const;
    bool is_zero() const { return tc_.empty(); }
    bool is_one() const { return tc_.size() == 1 && tc_[0].is_one(); }

    /// Coefficient of T^j as a polynomial in x; zero beyond the T-degree.
    const UniPoly& t_coeff(int j) const;
    const std::vector<UniPoly>& t_coeffs() const { return tc_; }

    /// Coefficient of x^k, a polynomial in T (constant in x).
    BiPoly x_coeff(int k) const;
    /// x_coeff at deg_x; zero polynomial for zero input.
    BiPoly x_leading() const;

    /// Substitute T = t; result is a polynomial in x.
    UniPoly eval_t(const Rat& t) const;
    /// Substitute x = v; the returned UniPoly's coefficients are in powers of T.
    UniPoly eval_x(const Rat& v) const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { a += b; return a; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { a -= b; return a; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const Rat& c, const BiPoly& p);
    friend BiPoly operator*(const BiPoly& p, const Rat& c) { return c * p; }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.tc_ == b.tc_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    /// Exact quotient a/b in Q[x,T]; throws DomainError if b does not
    /// divide a, DivisionByZero for b = 0.
    static BiPoly divide_exact(const BiPoly& a, const BiPoly& b);

private:
    void normalize();

    std::vector<UniPoly> tc_;
};

BiPoly pow(const BiPoly& p, int e);

} // namespace sylv
