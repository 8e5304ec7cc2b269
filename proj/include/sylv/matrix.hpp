#pragma once

#include <span>
#include <vector>

#include "sylv/bipoly.hpp"
#include "sylv/rootlist.hpp"

namespace sylv {

/// Rectangular matrix with BiPoly entries, row-major.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols);

    static PolyMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BiPoly& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const BiPoly& at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }

    /// Exact matrix product; ShapeError on inner-dimension mismatch.
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<BiPoly> entries_;
};

/// Evaluation kernels h(t) for the block builder.
enum class Kernel {
    One,        // h = 1
    T,          // h = T
    XMinusRoot, // h = x - t
};

/// The v x |gamma| matrix with entry (i,j) = gamma_j^{i-1} * h(gamma_j),
/// 1-based.  For h = x - t the entry is gamma_j^{i-1}*x - gamma_j^i; for
/// h = T it is T * gamma_j^{i-1}.
PolyMatrix block(Kernel h, const RootList& gamma, int v);
/// Same with h given by a polynomial evaluated at each root.
PolyMatrix block(const UniPoly& h, const RootList& gamma, int v);

/// Exact determinant.  Laplace expansion for dimension <= 4, fraction-free
/// Bareiss above.  The 0x0 determinant is 1.  ShapeError if non-square.
BiPoly det(const PolyMatrix& m);
/// Minor expansion along the last row, each minor computed once.
BiPoly det_laplace(const PolyMatrix& m);
/// Fraction-free elimination with exact polynomial division.  A zero pivot
/// is swapped with the first lower row having a nonzero entry in its column
/// (negating the sign); if none exists the determinant is zero.
BiPoly det_bareiss(const PolyMatrix& m);

/// det(gamma_j^{i-1}) computed through the determinant engine.
Rat vandermonde(const RootList& gamma);

/// Product of (y - z) over all pairs; 1 when either list is empty.
Rat r_product(std::span<const Rat> y, std::span<const Rat> z);
inline Rat r_product(const RootList& y, const RootList& z) {
    return r_product(std::span<const Rat>(y.values()), std::span<const Rat>(z.values()));
}

} // namespace sylv
