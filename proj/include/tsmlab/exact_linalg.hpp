#ifndef TSMLAB_EXACT_LINALG_HPP
#define TSMLAB_EXACT_LINALG_HPP

#include "tsmlab/cyclotomic.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace tsmlab {

template <class T>
using ExactMatrix = std::vector<std::vector<T>>;

template <class T>
struct EchelonForm {
    ExactMatrix<T> rows;             // row echelon form, rank nonzero rows first
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
    int sign = 1;                    // parity of the row swaps
    std::size_t rank() const { return pivots.size(); }
};

/// Fraction-free (Bareiss) elimination. Pivot choice is the first row with a
/// nonzero entry in the current column, so the result is deterministic.
template <class T>
EchelonForm<T> bareiss_echelon(ExactMatrix<T> a, const T& one) {
    EchelonForm<T> out;
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    T prev = one;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t piv = r;
        while (piv < m && is_zero(a[piv][c]))
            ++piv;
        if (piv == m)
            continue;
        if (piv != r) {
            std::swap(a[piv], a[r]);
            out.sign = -out.sign;
        }
        for (std::size_t i = r + 1; i < m; ++i) {
            const T lead = a[i][c];
            for (std::size_t j = c + 1; j < n; ++j) {
                T v = a[r][c] * a[i][j];
                if (!is_zero(lead))
                    v -= lead * a[r][j];
                a[i][j] = v / prev;
            }
            a[i][c] = one - one;
        }
        prev = a[r][c];
        out.pivots.push_back(c);
        ++r;
    }
    out.rows = std::move(a);
    return out;
}

/// Basis of {x : A x = 0}; one vector per free column, with that column set to one.
template <class T>
ExactMatrix<T> null_space_basis(const EchelonForm<T>& e, std::size_t cols, const T& one) {
    const T zero = one - one;
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivots)
        is_pivot[c] = true;
    ExactMatrix<T> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<T> x(cols, zero);
        x[free] = one;
        for (std::size_t i = e.rank(); i-- > 0;) {
            const std::size_t pc = e.pivots[i];
            T acc = zero;
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (!is_zero(e.rows[i][j]) && !is_zero(x[j]))
                    acc += e.rows[i][j] * x[j];
            x[pc] = -acc / e.rows[i][pc];
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

/// Determinant of a square matrix; the last Bareiss pivot carries it.
template <class T>
T exact_determinant(const ExactMatrix<T>& a, const T& one) {
    const std::size_t n = a.size();
    if (n == 0)
        return one;
    auto e = bareiss_echelon(a, one);
    if (e.rank() < n)
        return one - one;
    T d = e.rows[n - 1][n - 1];
    return e.sign < 0 ? -d : d;
}

} // namespace tsmlab

#endif
