#include "sylv/matrix.hpp"

#include <bit>
#include <cstdint>

#include "sylv/errors.hpp"

namespace sylv {

PolyMatrix::PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw ShapeError("negative matrix dimension");
    entries_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), BiPoly());
}

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = BiPoly::one();
    return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows())
        throw ShapeError("matrix product dimension mismatch");
    PolyMatrix p(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const BiPoly& aik = a.at(i, k);
            if (aik.is_zero())
                continue;
            for (int j = 0; j < b.cols(); ++j) {
                if (b.at(k, j).is_zero())
                    continue;
                p.at(i, j) += aik * b.at(k, j);
            }
        }
    return p;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

PolyMatrix block(Kernel h, const RootList& gamma, int v) {
    if (v < 0)
        throw ShapeError("block row count must be nonnegative");
    const int u = gamma.size();
    PolyMatrix m(v, u);
    for (int j = 0; j < u; ++j) {
        Rat power(1); // gamma_j^{i-1}
        for (int i = 0; i < v; ++i) {
            switch (h) {
            case Kernel::One:
                m.at(i, j) = BiPoly(UniPoly(power));
                break;
            case Kernel::T:
                m.at(i, j) = BiPoly::t_monomial(1, UniPoly(power));
                break;
            case Kernel::XMinusRoot:
                m.at(i, j) = BiPoly(UniPoly(std::vector<Rat>{-(power * gamma[j]), power}));
                break;
            }
            power *= gamma[j];
        }
    }
    return m;
}

PolyMatrix block(const UniPoly& h, const RootList& gamma, int v) {
    if (v < 0)
        throw ShapeError("block row count must be nonnegative");
    const int u = gamma.size();
    PolyMatrix m(v, u);
    for (int j = 0; j < u; ++j) {
        const Rat value = h.eval(gamma[j]);
        Rat power(1);
        for (int i = 0; i < v; ++i) {
            m.at(i, j) = BiPoly(UniPoly(power * value));
            power *= gamma[j];
        }
    }
    return m;
}

BiPoly det_laplace(const PolyMatrix& m) {
    if (m.rows() != m.cols())
        throw ShapeError("determinant of a non-square matrix");
    const int n = m.rows();
    if (n == 0)
        return BiPoly::one();
    if (n > 20)
        throw ShapeError("laplace determinant limited to dimension 20");

    // minors[mask] = det of the submatrix on rows 0..popcount(mask)-1 and
    // the column set encoded by mask.
    const uint32_t full = (n == 32) ? ~uint32_t(0) : ((uint32_t(1) << n) - 1);
    std::vector<BiPoly> minors(static_cast<size_t>(full) + 1);
    minors[0] = BiPoly::one();
    for (uint32_t mask = 1; mask <= full; ++mask) {
        const int row = std::popcount(mask) - 1;
        BiPoly acc;
        int pos = 0; // index of the column within the mask
        for (uint32_t bits = mask; bits != 0; bits &= bits - 1, ++pos) {
            const int col = std::countr_zero(bits);
            const BiPoly& e = m.at(row, col);
            if (!e.is_zero()) {
                BiPoly term = e * minors[mask & ~(uint32_t(1) << col)];
                if ((row + pos) % 2 != 0)
                    acc -= term;
                else
                    acc += term;
            }
        }
        minors[mask] = std::move(acc);
    }
    return minors[full];
}

BiPoly det_bareiss(const PolyMatrix& m) {
    if (m.rows() != m.cols())
        throw ShapeError("determinant of a non-square matrix");
    const int n = m.rows();
    if (n == 0)
        return BiPoly::one();

    PolyMatrix w = m;
    bool negate = false;
    BiPoly prev = BiPoly::one();
    for (int k = 0; k + 1 < n; ++k) {
        if (w.at(k, k).is_zero()) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (!w.at(r, k).is_zero()) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0)
                return BiPoly();
            for (int j = k; j < n; ++j)
                std::swap(w.at(k, j), w.at(swap_row, j));
            negate = !negate;
        }
        const BiPoly& pivot = w.at(k, k);
        const bool divide = !prev.is_one();
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                BiPoly num = pivot * w.at(i, j) - w.at(i, k) * w.at(k, j);
                w.at(i, j) = divide ? BiPoly::divide_exact(num, prev) : std::move(num);
            }
        prev = pivot;
    }
    return negate ? -w.at(n - 1, n - 1) : w.at(n - 1, n - 1);
}

BiPoly det(const PolyMatrix& m) {
    if (m.rows() != m.cols())
        throw ShapeError("determinant of a non-square matrix");
    return m.rows() <= 4 ? det_laplace(m) : det_bareiss(m);
}

Rat vandermonde(const RootList& gamma) {
    BiPoly d = det(block(Kernel::One, gamma, gamma.size()));
    return d.is_zero() ? Rat(0) : d.t_coeff(0).coeff(0);
}

Rat r_product(std::span<const Rat> y, std::span<const Rat> z) {
    Rat p(1);
    for (const Rat& a : y)
        for (const Rat& b : z)
            p *= a - b;
    return p;
}

} // namespace sylv
