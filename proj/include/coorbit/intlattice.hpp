#pragma once

#include <coorbit/linalg.hpp>

#include <vector>

namespace coorbit {

/// Splits the Q(theta)-linear system {sum_j m_j row[j] = 0 : row in rows}
/// with rational unknowns m into an equivalent rational system: clearing
/// denominators makes every entry polynomial in theta, and since theta is
/// transcendental each power of theta gives an independent rational
/// condition.
inline Mat<Rat> split_theta_conditions(const std::vector<Vec<Scalar>>& rows, size_t n) {
    std::vector<Vec<Rat>> out;
    for (const auto& row : rows) {
        if (row.size() != n) throw std::invalid_argument("condition row length mismatch");
        Poly l(Rat(1));
        for (const auto& e : row) l = poly_lcm(l, e.den());
        if (l.is_zero()) throw std::logic_error("vanishing denominator lcm");
        std::vector<Poly> cleared;
        int deg = -1;
        for (const auto& e : row) {
            Poly p = e.num() * divrem(l, e.den()).first;
            deg = std::max(deg, p.degree());
            cleared.push_back(std::move(p));
        }
        for (int d = 0; d <= deg; ++d) {
            Vec<Rat> r(n, Rat(0));
            for (size_t j = 0; j < n; ++j) r[j] = cleared[j].coeff(d);
            out.push_back(std::move(r));
        }
    }
    if (out.empty()) return Mat<Rat>(0, n);
    return Mat<Rat>::from_rows(out, n);
}

/// Dimension of the rational solution space of the split system.  The
/// integer solution lattice has the same rank, because a rational solution
/// scales to an integer one.
inline size_t relation_space_dim(const std::vector<Vec<Scalar>>& rows, size_t n) {
    Mat<Rat> m = split_theta_conditions(rows, n);
    return n - rank(m);
}

inline bool relation_lattice_trivial(const std::vector<Vec<Scalar>>& rows, size_t n) {
    return relation_space_dim(rows, n) == 0;
}

/// Basis of the saturated integer kernel {m in Z^n : Am = 0} of a rational
/// matrix, by integer column elimination on the denominator-cleared matrix
/// while tracking the transformation.
inline std::vector<std::vector<BigInt>> integer_kernel(const Mat<Rat>& a) {
    size_t rows = a.rows(), n = a.cols();
    std::vector<std::vector<BigInt>> m(rows, std::vector<BigInt>(n, 0));
    for (size_t i = 0; i < rows; ++i) {
        BigInt l = 1;
        for (size_t j = 0; j < n; ++j) l = lcm(l, denominator(a(i, j)));
        for (size_t j = 0; j < n; ++j)
            m[i][j] = numerator(a(i, j)) * (l / denominator(a(i, j)));
    }
    std::vector<std::vector<BigInt>> u(n, std::vector<BigInt>(n, 0));
    for (size_t j = 0; j < n; ++j) u[j][j] = 1;

    auto col_combine = [&](size_t dst, size_t src, const BigInt& q) {
        // column dst -= q * column src
        for (size_t i = 0; i < rows; ++i) m[i][dst] -= q * m[i][src];
        for (size_t i = 0; i < n; ++i) u[i][dst] -= q * u[i][src];
    };
    auto col_swap = [&](size_t x, size_t y) {
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][x], m[i][y]);
        for (size_t i = 0; i < n; ++i) std::swap(u[i][x], u[i][y]);
    };

    size_t fixed = 0;  // columns with settled pivots
    for (size_t r = 0; r < rows && fixed < n; ++r) {
        for (;;) {
            size_t nz = 0, last = 0;
            BigInt best_abs = 0;
            size_t best = 0;
            for (size_t j = fixed; j < n; ++j) {
                if (m[r][j] != 0) {
                    ++nz;
                    last = j;
                    BigInt v = abs(m[r][j]);
                    if (best_abs == 0 || v < best_abs) {
                        best_abs = v;
                        best = j;
                    }
                }
            }
            if (nz == 0) break;
            if (nz == 1) {
                col_swap(fixed, last);
                ++fixed;
                break;
            }
            // Reduce every other entry in the row modulo the smallest one.
            for (size_t j = fixed; j < n; ++j) {
                if (j == best || m[r][j] == 0) continue;
                BigInt q = m[r][j] / m[r][best];
                if (q != 0) col_combine(j, best, q);
            }
        }
    }
    std::vector<std::vector<BigInt>> basis;
    for (size_t j = fixed; j < n; ++j) {
        std::vector<BigInt> v(n);
        for (size_t i = 0; i < n; ++i) v[i] = u[i][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Integer relation lattice basis for a theta-valued system.
inline std::vector<std::vector<BigInt>> relation_lattice_basis(
    const std::vector<Vec<Scalar>>& rows, size_t n) {
    return integer_kernel(split_theta_conditions(rows, n));
}

}  // namespace coorbit
