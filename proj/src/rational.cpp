#include "sylv/rational.hpp"

#include <cctype>

namespace sylv {

Rat::Rat(const Int& num, const Int& den) {
    if (sgn(den) == 0)
        throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero())
        throw DivisionByZero("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rat::str() const {
    if (v_.get_den() == 1)
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rat Rat::parse(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && s.front() == '-') {
        negative = true;
        s.remove_prefix(1);
    }
    std::string_view num = s, den;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
        if (!all_digits(den))
            throw DomainError("invalid rational literal: '" + std::string(text) + "'");
    }
    if (!all_digits(num))
        throw DomainError("invalid rational literal: '" + std::string(text) + "'");

    Int n(std::string(num), 10);
    if (negative)
        n = -n;
    if (den.empty())
        return Rat(n);
    Int d(std::string(den), 10);
    if (sgn(d) == 0)
        throw DomainError("invalid rational literal (zero denominator): '" + std::string(text) + "'");
    return Rat(n, d);
}

Int binomial(long n, long k) {
    if (n < 0)
        throw DomainError("binomial requires n >= 0");
    if (k < 0 || k > n)
        return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace sylv
