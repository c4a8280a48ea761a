#pragma once

#include <coorbit/nilext.hpp>
#include <coorbit/rng.hpp>
#include <coorbit/semidirect.hpp>

#include <stdexcept>
#include <vector>

namespace coorbit {

inline Vec<Scalar> random_vector(size_t n, SplitMix64& rng, int64_t bound = 9) {
    Vec<Scalar> v(n);
    for (size_t i = 0; i < n; ++i) v[i] = Scalar(rng.next_small_rational(bound));
    return v;
}

/// Random small unimodular matrix built from elementary shear and swap
/// steps, so both the matrix and its inverse stay small-integer.
inline Mat<Scalar> random_unimodular(size_t n, SplitMix64& rng, size_t steps = 4) {
    Mat<Scalar> t = Mat<Scalar>::identity(n);
    for (size_t s = 0; s < steps; ++s) {
        size_t i = static_cast<size_t>(rng.next_int(0, static_cast<int64_t>(n) - 1));
        size_t j = static_cast<size_t>(rng.next_int(0, static_cast<int64_t>(n) - 1));
        if (i == j) continue;
        if (rng.next_int(0, 3) == 0) {
            for (size_t r = 0; r < n; ++r) std::swap(t(r, i), t(r, j));
        } else {
            Scalar c(static_cast<int>(rng.next_int(-2, 2)));
            for (size_t r = 0; r < n; ++r) t(r, j) += c * t(r, i);
        }
    }
    return t;
}

/// Re-expresses an algebra in the basis f_j = sum_i T(i,j) e_i.  T must be
/// invertible; antisymmetry and Jacobi are preserved.
inline LieAlgebra change_basis(const LieAlgebra& g, const Mat<Scalar>& t) {
    size_t n = g.dim();
    LieAlgebra out(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            Vec<Scalar> br = g.bracket(t.col(i), t.col(j));
            auto coords = solve(t, br);
            if (!coords) throw std::invalid_argument("basis change matrix is singular");
            out.set_bracket_pair(i, j, *coords);
        }
    return out;
}

/// Random solvable algebra of dimension at most 6: a structured template
/// (abelian, heisenberg or filiform summand, or an abelian ideal with one
/// acting element), then a random change of basis.
inline LieAlgebra random_solvable(SplitMix64& rng) {
    LieAlgebra base(1);
    switch (rng.next_int(0, 3)) {
        case 0:
            base = LieAlgebra(static_cast<size_t>(rng.next_int(1, 6)));
            break;
        case 1: {
            size_t extra = static_cast<size_t>(rng.next_int(0, 3));
            LieAlgebra g(3 + extra);
            Vec<Scalar> c = zero_vec<Scalar>(3 + extra);
            c[2] = Scalar(1);
            g.set_bracket_pair(0, 1, c);
            base = g;
            break;
        }
        case 2: {
            size_t extra = static_cast<size_t>(rng.next_int(0, 2));
            LieAlgebra g(4 + extra);
            Vec<Scalar> c2 = zero_vec<Scalar>(4 + extra), c3 = zero_vec<Scalar>(4 + extra);
            c2[2] = Scalar(1);
            c3[3] = Scalar(1);
            g.set_bracket_pair(0, 1, c2);
            g.set_bracket_pair(0, 2, c3);
            base = g;
            break;
        }
        default: {
            // Abelian ideal R^d with one element acting by a small matrix.
            size_t d = static_cast<size_t>(rng.next_int(1, 5));
            LieAlgebra g(d + 1);
            for (size_t j = 0; j < d; ++j) {
                Vec<Scalar> c = zero_vec<Scalar>(d + 1);
                for (size_t i = 0; i < d; ++i) c[i] = Scalar(static_cast<int>(rng.next_int(-2, 2)));
                g.set_bracket_pair(d, j, c);
            }
            base = g;
            break;
        }
    }
    return change_basis(base, random_unimodular(base.dim(), rng));
}

/// Random diagonal semidirect data with small rational covectors and an
/// occasional theta-linear rotation term.
inline DiagonalSemidirectSpec random_semidirect_spec(SplitMix64& rng) {
    DiagonalSemidirectSpec s;
    s.n = static_cast<size_t>(rng.next_int(1, 3));
    s.k = static_cast<size_t>(rng.next_int(1, 4));
    for (size_t j = 0; j < s.n; ++j) {
        Vec<Scalar> eta(s.k), xi(s.k);
        for (size_t l = 0; l < s.k; ++l) {
            eta[l] = Scalar(rng.next_small_rational(3));
            xi[l] = Scalar(rng.next_small_rational(3)) +
                    Scalar(rng.next_small_rational(2)) * Scalar(theta_power(1));
        }
        s.growth.push_back(eta);
        s.rotation.push_back(xi);
    }
    return s;
}

/// Random dual point with a mixed chance of zero coordinates.
inline Point random_semidirect_point(const DiagonalSemidirectSpec& s, SplitMix64& rng) {
    Point pt;
    for (size_t j = 0; j < s.n; ++j) {
        if (rng.next_int(0, 3) == 0) {
            pt.p.push_back(CScalar(0));
        } else {
            pt.p.push_back(
                CScalar(Scalar(rng.next_small_rational(4)), Scalar(rng.next_small_rational(4))));
        }
    }
    pt.xi_a = random_vector(s.k, rng, 4);
    return pt;
}

/// Random nilpotent algebra with a valid derivation: the full derivation
/// family on the heisenberg algebra, diagonal weight gradings on the
/// filiform algebra, or an arbitrary matrix on an abelian algebra.
inline NilExtSpec random_nilext_spec(SplitMix64& rng) {
    auto small = [&](bool with_theta) {
        Scalar v(rng.next_small_rational(2));
        if (with_theta && rng.next_int(0, 2) == 0)
            v += Scalar(rng.next_small_rational(1)) * Scalar(theta_power(1));
        return v;
    };
    switch (rng.next_int(0, 2)) {
        case 0: {
            size_t d = static_cast<size_t>(rng.next_int(1, 4));
            LieAlgebra nil(d);
            Mat<Scalar> dm(d, d);
            for (size_t i = 0; i < d; ++i)
                for (size_t j = 0; j < d; ++j) dm(i, j) = small(true);
            return NilExtSpec(std::move(nil), std::move(dm));
        }
        case 1: {
            // Every derivation of h3: X,Y block arbitrary, Z weight forced.
            LieAlgebra nil(3);
            Vec<Scalar> c = zero_vec<Scalar>(3);
            c[2] = Scalar(1);
            nil.set_bracket_pair(0, 1, c);
            Mat<Scalar> dm(3, 3);
            dm(0, 0) = small(true);
            dm(0, 1) = small(true);
            dm(1, 0) = small(true);
            dm(1, 1) = small(true);
            dm(2, 0) = small(false);
            dm(2, 1) = small(false);
            dm(2, 2) = dm(0, 0) + dm(1, 1);
            return NilExtSpec(std::move(nil), std::move(dm));
        }
        default: {
            LieAlgebra nil(4);
            Vec<Scalar> c2 = zero_vec<Scalar>(4), c3 = zero_vec<Scalar>(4);
            c2[2] = Scalar(1);
            c3[3] = Scalar(1);
            nil.set_bracket_pair(0, 1, c2);
            nil.set_bracket_pair(0, 2, c3);
            Mat<Scalar> dm(4, 4);
            Scalar w = small(true), v = small(true);
            dm(0, 0) = w;
            dm(1, 1) = v;
            dm(2, 2) = w + v;
            dm(3, 3) = w + w + v;
            return NilExtSpec(std::move(nil), std::move(dm));
        }
    }
}

}  // namespace coorbit
