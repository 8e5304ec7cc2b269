#include "sylv/doublesum.hpp"

#include <string>

#include "sylv/errors.hpp"
#include "sylv/matrix.hpp"

namespace sylv {

SubsetEnumerator::SubsetEnumerator(RootList parent, int size) : parent_(std::move(parent)) {
    if (size < 0 || size > parent_.size())
        throw DomainError("subset size " + std::to_string(size) + " out of range for list of " +
                          std::to_string(parent_.size()));
    indices_.resize(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i)
        indices_[static_cast<size_t>(i)] = i;
}

std::optional<SubsetSelection> SubsetEnumerator::next() {
    if (done_)
        return std::nullopt;

    SubsetSelection sel;
    long transpositions = 0;
    size_t pos = 0;
    for (int i = 0; i < parent_.size(); ++i) {
        if (pos < indices_.size() && indices_[pos] == i) {
            sel.chosen.push_back(parent_[i]);
            transpositions += i - static_cast<long>(pos);
            ++pos;
        } else {
            sel.complement.push_back(parent_[i]);
        }
    }
    sel.sign = (transpositions % 2 != 0) ? -1 : 1;

    // advance to the next combination in lexicographic order
    const int n = parent_.size();
    const int k = static_cast<int>(indices_.size());
    int i = k - 1;
    while (i >= 0 && indices_[static_cast<size_t>(i)] == n - k + i)
        --i;
    if (i < 0) {
        done_ = true;
    } else {
        ++indices_[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            indices_[static_cast<size_t>(j)] = indices_[static_cast<size_t>(j - 1)] + 1;
    }
    return sel;
}

UniPoly sylvester_double_sum(const RootList& a, const RootList& b, int p, int q) {
    const int m = a.size(), n = b.size();
    if (m < 1 || n < 1)
        throw DomainError("double sum requires nonempty root lists");
    if (p < 0 || p > m)
        throw DomainError("double sum index p=" + std::to_string(p) + " out of [0, " +
                          std::to_string(m) + "]");
    if (q < 0 || q > n)
        throw DomainError("double sum index q=" + std::to_string(q) + " out of [0, " +
                          std::to_string(n) + "]");

    UniPoly total;
    SubsetEnumerator a_sel(a, p);
    while (auto sa = a_sel.next()) {
        SubsetEnumerator b_sel(b, q);
        while (auto sb = b_sel.next()) {
            const Rat numer = r_product(sa->chosen, sb->chosen) *
                              r_product(sa->complement, sb->complement);
            const Rat denom = r_product(sa->chosen, sa->complement) *
                              r_product(sb->chosen, sb->complement);
            if (denom.is_zero())
                throw DomainError("corrupted input: zero denominator in double sum");
            if (numer.is_zero())
                continue;
            UniPoly term = UniPoly::from_roots(std::span<const Rat>(sa->chosen)) *
                           UniPoly::from_roots(std::span<const Rat>(sb->chosen));
            total += term * (numer / denom);
        }
    }
    return total;
}

} // namespace sylv
