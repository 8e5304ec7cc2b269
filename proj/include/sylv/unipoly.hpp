#pragma once

#include <limits>
#include <span>
#include <vector>

#include "sylv/rational.hpp"
#include "sylv/rootlist.hpp"

namespace sylv {

/// Dense univariate polynomial over Rat, coefficients in ascending powers.
/// Canonical form: no trailing zero coefficient; the zero polynomial is the
/// empty list.
class UniPoly {
public:
    /// degree() of the zero polynomial: sentinel below every real degree, so
    /// degree-bound assertions are vacuously satisfied by 0.
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    UniPoly() = default;
    UniPoly(const Rat& constant);
    UniPoly(int constant) : UniPoly(Rat(constant)) {}
    explicit UniPoly(std::vector<Rat> coeffs);

    static UniPoly zero() { return UniPoly(); }
    static UniPoly one() { return UniPoly(Rat(1)); }
    static UniPoly x() { return monomial(1); }
    static UniPoly monomial(int k, const Rat& c = Rat(1));

    /// Monic product of (x - r) over the list; 1 for the empty list.
    static UniPoly from_roots(std::span<const Rat> roots);
    static UniPoly from_roots(const RootList& roots) {
        return from_roots(std::span<const Rat>(roots.values()));
    }

    int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

    /// Coefficient of x^k; zero outside the stored range.
    Rat coeff(int k) const;
    Rat leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Rat eval(const Rat& v) const;

    /// Multiplication by x^k.
    UniPoly shifted(int k) const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { a += b; return a; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { a -= b; return a; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rat& c, const UniPoly& p);
    friend UniPoly operator*(const UniPoly& p, const Rat& c) { return c * p; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    /// Exact quotient a/b; throws DomainError if b does not divide a,
    /// DivisionByZero for b = 0.
    static UniPoly divide_exact(const UniPoly& a, const UniPoly& b);

private:
    void normalize();

    std::vector<Rat> coeffs_;
};

UniPoly pow(const UniPoly& p, int e);

} // namespace sylv
