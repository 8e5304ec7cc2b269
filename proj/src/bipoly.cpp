#include "sylv/bipoly.hpp"

#include <algorithm>

namespace sylv {

namespace {
const UniPoly kZeroUni;
}

BiPoly::BiPoly(const UniPoly& x_part) {
    if (!x_part.is_zero())
        tc_.push_back(x_part);
}

BiPoly::BiPoly(std::vector<UniPoly> t_coeffs) : tc_(std::move(t_coeffs)) {
    normalize();
}

void BiPoly::normalize() {
    while (!tc_.empty() && tc_.back().is_zero())
        tc_.pop_back();
}

BiPoly BiPoly::t_monomial(int j, const UniPoly& c) {
    if (j < 0)
        throw DomainError("monomial exponent must be nonnegative");
    if (c.is_zero())
        return BiPoly();
    BiPoly p;
    p.tc_.assign(static_cast<size_t>(j) + 1, UniPoly());
    p.tc_.back() = c;
    return p;
}

int BiPoly::deg_x() const {
    int d = UniPoly::kZeroDegree;
    for (const UniPoly& c : tc_)
        d = std::max(d, c.degree());
    return d;
}

const UniPoly& BiPoly::t_coeff(int j) const {
    if (j < 0 || j >= static_cast<int>(tc_.size()))
        return kZeroUni;
    return tc_[static_cast<size_t>(j)];
}

BiPoly BiPoly::x_coeff(int k) const {
    std::vector<UniPoly> out;
    out.reserve(tc_.size());
    for (const UniPoly& c : tc_)
        out.push_back(UniPoly(c.coeff(k)));
    return BiPoly(std::move(out));
}

BiPoly BiPoly::x_leading() const {
    if (is_zero())
        return BiPoly();
    return x_coeff(deg_x());
}

UniPoly BiPoly::eval_t(const Rat& t) const {
    UniPoly acc;
    for (auto it = tc_.rbegin(); it != tc_.rend(); ++it)
        acc = t * acc + *it;
    return acc;
}

UniPoly BiPoly::eval_x(const Rat& v) const {
    std::vector<Rat> out;
    out.reserve(tc_.size());
    for (const UniPoly& c : tc_)
        out.push_back(c.eval(v));
    return UniPoly(std::move(out));
}

BiPoly BiPoly::operator-() const {
    BiPoly p(*this);
    for (UniPoly& c : p.tc_)
        c = -c;
    return p;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    if (tc_.size() < o.tc_.size())
        tc_.resize(o.tc_.size());
    for (size_t i = 0; i < o.tc_.size(); ++i)
        tc_[i] += o.tc_[i];
    normalize();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    if (tc_.size() < o.tc_.size())
        tc_.resize(o.tc_.size());
    for (size_t i = 0; i < o.tc_.size(); ++i)
        tc_[i] -= o.tc_[i];
    normalize();
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero())
        return BiPoly();
    BiPoly p;
    p.tc_.assign(a.tc_.size() + b.tc_.size() - 1, UniPoly());
    for (size_t i = 0; i < a.tc_.size(); ++i) {
        if (a.tc_[i].is_zero())
            continue;
        for (size_t j = 0; j < b.tc_.size(); ++j) {
            if (b.tc_[j].is_zero())
                continue;
            p.tc_[i + j] += a.tc_[i] * b.tc_[j];
        }
    }
    p.normalize();
    return p;
}

BiPoly operator*(const Rat& c, const BiPoly& p) {
    if (c.is_zero())
        return BiPoly();
    BiPoly r(p);
    for (UniPoly& u : r.tc_)
        u = c * u;
    return r;
}

BiPoly BiPoly::divide_exact(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero())
        throw DivisionByZero("polynomial division by zero");
    if (a.is_zero())
        return BiPoly();

    // Classical division in T; each leading-coefficient division is exact in
    // Q[x] whenever b divides a, because Q[x,T] has no zero divisors.
    BiPoly rem = a;
    const int db = b.deg_t();
    const UniPoly& blead = b.tc_.back();
    std::vector<UniPoly> quot;
    if (rem.deg_t() < db)
        throw DomainError("exact polynomial division with nonzero remainder");
    quot.assign(static_cast<size_t>(rem.deg_t() - db) + 1, UniPoly());
    while (!rem.is_zero() && rem.deg_t() >= db) {
        int shift = rem.deg_t() - db;
        UniPoly c = UniPoly::divide_exact(rem.tc_.back(), blead);
        quot[static_cast<size_t>(shift)] = c;
        rem -= t_monomial(shift, c) * b;
    }
    if (!rem.is_zero())
        throw DomainError("exact polynomial division with nonzero remainder");
    return BiPoly(std::move(quot));
}

BiPoly pow(const BiPoly& p, int e) {
    if (e < 0)
        throw DomainError("polynomial power must be nonnegative");
    BiPoly r = BiPoly::one();
    for (int i = 0; i < e; ++i)
        r = r * p;
    return r;
}

} // namespace sylv
