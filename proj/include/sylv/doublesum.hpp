#pragma once

#include <optional>
#include <vector>

#include "sylv/rootlist.hpp"
#include "sylv/unipoly.hpp"

namespace sylv {

/// One subset choice out of an ordered parent list.  chosen and complement
/// partition the parent, each preserving parent order; sign is (-1)^j where
/// j is the transposition count taking the parent to chosen + complement.
struct SubsetSelection {
    std::vector<Rat> chosen;
    std::vector<Rat> complement;
    int sign = 1;
};

/// Streams all C(|parent|, size) selections in lexicographic order of the
/// chosen index set.
class SubsetEnumerator {
public:
    SubsetEnumerator(RootList parent, int size);

    std::optional<SubsetSelection> next();

private:
    RootList parent_;
    std::vector<int> indices_;
    bool done_ = false;
};

/// Sylvester's double sum Sylv^{p,q}(A, B; x): the sum over all subset
/// pairs A' of A (|A'| = p) and B' of B (|B'| = q) of
///   R(x,A') R(x,B') R(A',B') R(A'',B'') / (R(A',A'') R(B',B''))
/// with A'' = A \ A', B'' = B \ B'.  Result degree <= p+q.
UniPoly sylvester_double_sum(const RootList& a, const RootList& b, int p, int q);

} // namespace sylv
