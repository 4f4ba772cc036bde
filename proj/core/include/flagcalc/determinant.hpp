#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace flagcalc {

template <class T>
using DenseMatrix = std::vector<std::vector<T>>;

/// Determinant by Bareiss fraction-free elimination with row pivoting.
/// The divisions by the previous pivot are exact, so this also runs over
/// integral domains whose `/` is exact division.
template <class T>
T bareiss_determinant(DenseMatrix<T> m) {
    const std::size_t n = m.size();
    if (n == 0) return T(1);
    for (const auto& row : m) {
        if (row.size() != n) throw std::invalid_argument("bareiss_determinant: matrix is not square");
    }
    T sign(1);
    T previous(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == T(0)) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == T(0)) ++swap_row;
            if (swap_row == n) return T(0);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
            }
            m[i][k] = T(0);
        }
        previous = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

template <class Ring>
bool is_zero_entry(const Ring& x, const Ring& zero) {
    if constexpr (requires { x.is_zero(); }) {
        return x.is_zero();
    } else {
        return x == zero;
    }
}

/// Division-free determinant over a commutative ring: Laplace expansion
/// down the rows, memoized on the set of columns still available.
/// O(n 2^n) ring multiplications; intended for n <= 20.
template <class Ring>
Ring laplace_determinant(const DenseMatrix<Ring>& m, const Ring& zero, const Ring& one) {
    const std::size_t n = m.size();
    if (n == 0) return one;
    if (n > 20) throw std::invalid_argument("laplace_determinant: matrix too large");
    std::unordered_map<std::uint32_t, Ring> memo;
    // minor(row, cols) = det of rows [row, n) restricted to columns in `cols`.
    auto minor = [&](auto&& self, std::size_t row, std::uint32_t cols) -> Ring {
        if (row == n) return one;
        if (auto it = memo.find(cols); it != memo.end()) return it->second;
        Ring acc = zero;
        int parity = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if ((cols & (1U << c)) == 0) continue;
            if (!is_zero_entry(m[row][c], zero)) {
                Ring term = m[row][c] * self(self, row + 1, cols & ~(1U << c));
                if (parity % 2 == 0) {
                    acc = acc + term;
                } else {
                    acc = acc - term;
                }
            }
            ++parity;
        }
        memo.emplace(cols, acc);
        return acc;
    };
    return minor(minor, 0, (1U << n) - 1U);
}

}  // namespace flagcalc
