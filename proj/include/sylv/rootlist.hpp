#pragma once

#include <initializer_list>
#include <vector>

#include "sylv/rational.hpp"

namespace sylv {

/// Ordered list of pairwise-distinct rationals.  Distinctness is validated
/// at construction: the double-sum denominators divide by within-list
/// differences, so a repeated value would be a silent division by zero.
class RootList {
public:
    RootList() = default;
    explicit RootList(std::vector<Rat> values);
    RootList(std::initializer_list<Rat> values) : RootList(std::vector<Rat>(values)) {}

    int size() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }
    const Rat& operator[](int i) const { return values_[static_cast<size_t>(i)]; }
    const std::vector<Rat>& values() const { return values_; }

    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

    friend bool operator==(const RootList& a, const RootList& b) { return a.values_ == b.values_; }

private:
    std::vector<Rat> values_;
};

} // namespace sylv
