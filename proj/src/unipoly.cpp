#include "sylv/unipoly.hpp"

#include <algorithm>

namespace sylv {

UniPoly::UniPoly(const Rat& constant) {
    if (!constant.is_zero())
        coeffs_.push_back(constant);
}

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

void UniPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

UniPoly UniPoly::monomial(int k, const Rat& c) {
    if (k < 0)
        throw DomainError("monomial exponent must be nonnegative");
    if (c.is_zero())
        return UniPoly();
    UniPoly p;
    p.coeffs_.assign(static_cast<size_t>(k) + 1, Rat(0));
    p.coeffs_.back() = c;
    return p;
}

UniPoly UniPoly::from_roots(std::span<const Rat> roots) {
    UniPoly p = one();
    for (const Rat& r : roots) {
        // multiply in place by (x - r)
        std::vector<Rat> next(p.coeffs_.size() + 1, Rat(0));
        for (size_t i = 0; i < p.coeffs_.size(); ++i) {
            next[i + 1] += p.coeffs_[i];
            next[i] -= r * p.coeffs_[i];
        }
        p.coeffs_ = std::move(next);
    }
    p.normalize();
    return p;
}

Rat UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size()))
        return Rat(0);
    return coeffs_[static_cast<size_t>(k)];
}

Rat UniPoly::eval(const Rat& v) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * v + *it;
    return acc;
}

UniPoly UniPoly::shifted(int k) const {
    if (k < 0)
        throw DomainError("shift exponent must be nonnegative");
    if (is_zero() || k == 0)
        return *this;
    UniPoly p;
    p.coeffs_.assign(static_cast<size_t>(k), Rat(0));
    p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return p;
}

UniPoly UniPoly::operator-() const {
    UniPoly p(*this);
    for (Rat& c : p.coeffs_)
        c = -c;
    return p;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero())
        return UniPoly();
    UniPoly p;
    p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    p.normalize();
    return p;
}

UniPoly operator*(const Rat& c, const UniPoly& p) {
    if (c.is_zero())
        return UniPoly();
    UniPoly r(p);
    for (Rat& x : r.coeffs_)
        x *= c;
    return r;
}

UniPoly UniPoly::divide_exact(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero())
        throw DivisionByZero("polynomial division by zero");
    if (a.is_zero())
        return UniPoly();
    if (a.degree() < b.degree())
        throw DomainError("exact polynomial division with nonzero remainder");

    std::vector<Rat> rem = a.coeffs_;
    std::vector<Rat> quot(rem.size() - b.coeffs_.size() + 1, Rat(0));
    const Rat& lead = b.coeffs_.back();
    for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
        Rat q = rem[static_cast<size_t>(i) + b.coeffs_.size() - 1] / lead;
        quot[static_cast<size_t>(i)] = q;
        if (q.is_zero())
            continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            rem[static_cast<size_t>(i) + j] -= q * b.coeffs_[j];
    }
    for (const Rat& c : rem)
        if (!c.is_zero())
            throw DomainError("exact polynomial division with nonzero remainder");
    return UniPoly(std::move(quot));
}

UniPoly pow(const UniPoly& p, int e) {
    if (e < 0)
        throw DomainError("polynomial power must be nonnegative");
    UniPoly r = UniPoly::one();
    for (int i = 0; i < e; ++i)
        r = r * p;
    return r;
}

} // namespace sylv
