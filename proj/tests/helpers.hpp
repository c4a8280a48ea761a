#pragma once

#include <coorbit/bch.hpp>
#include <coorbit/linalg.hpp>
#include <coorbit/nilext.hpp>
#include <coorbit/rng.hpp>
#include <coorbit/sampling.hpp>
#include <coorbit/semidirect.hpp>

#include <stdexcept>
#include <vector>

namespace coorbit::testing {

inline Vec<Scalar> sv(std::initializer_list<int> vals) {
    Vec<Scalar> v;
    for (int x : vals) v.push_back(Scalar(x));
    return v;
}

inline LieAlgebra make_abelian(size_t n) { return LieAlgebra(n); }

/// [X,Y] = Z on basis (X, Y, Z).
inline LieAlgebra make_h3() {
    LieAlgebra g(3);
    g.set_bracket_pair(0, 1, sv({0, 0, 1}));
    return g;
}

/// [X,Y] = Y on basis (X, Y): solvable, not nilpotent.
inline LieAlgebra make_xy_y() {
    LieAlgebra g(2);
    g.set_bracket_pair(0, 1, sv({0, 1}));
    return g;
}

/// [X,Y1] = Y2, [X,Y2] = Y3 on basis (X, Y1, Y2, Y3): class 3.
inline LieAlgebra make_filiform4() {
    LieAlgebra g(4);
    g.set_bracket_pair(0, 1, sv({0, 0, 1, 0}));
    g.set_bracket_pair(0, 2, sv({0, 0, 0, 1}));
    return g;
}

/// h3 + R: 4-dimensional, 2-dimensional center.
inline LieAlgebra make_h3_plus_r() {
    LieAlgebra g(4);
    g.set_bracket_pair(0, 1, sv({0, 0, 1, 0}));
    return g;
}

/// Strictly upper triangular 4x4 matrices: dim 6, class 3.  Basis order
/// E12, E13, E14, E23, E24, E34.
inline LieAlgebra make_ut4() {
    LieAlgebra g(6);
    g.set_bracket_pair(0, 3, sv({0, 1, 0, 0, 0, 0}));  // [E12,E23] = E13
    g.set_bracket_pair(0, 4, sv({0, 0, 1, 0, 0, 0}));  // [E12,E24] = E14
    g.set_bracket_pair(1, 5, sv({0, 0, 1, 0, 0, 0}));  // [E13,E34] = E14
    g.set_bracket_pair(3, 5, sv({0, 0, 0, 0, 1, 0}));  // [E23,E34] = E24
    return g;
}

/// Writes the coordinates of an ut4 element as an actual 4x4 strictly upper
/// triangular matrix.
inline Mat<Scalar> ut4_matrix(const Vec<Scalar>& coords) {
    Mat<Scalar> m(4, 4);
    m(0, 1) = coords[0];
    m(0, 2) = coords[1];
    m(0, 3) = coords[2];
    m(1, 2) = coords[3];
    m(1, 3) = coords[4];
    m(2, 3) = coords[5];
    return m;
}

inline Vec<Scalar> ut4_coords(const Mat<Scalar>& m) {
    return {m(0, 1), m(0, 2), m(0, 3), m(1, 2), m(1, 3), m(2, 3)};
}

/// Exact logarithm of a unipotent matrix (I + N with N strictly nilpotent).
inline Mat<Scalar> log_unipotent(const Mat<Scalar>& u) {
    size_t n = u.rows();
    Mat<Scalar> nil = u - Mat<Scalar>::identity(n);
    Mat<Scalar> acc(n, n);
    Mat<Scalar> power = Mat<Scalar>::identity(n);
    for (size_t k = 1; k <= n; ++k) {
        power = power * nil;
        if (power.is_zero()) break;
        Scalar sign = (k % 2 == 1) ? Scalar(1) : Scalar(-1);
        acc = acc + (sign / Scalar(static_cast<int>(k))) * power;
    }
    return acc;
}

inline CScalar cs(int re, int im) { return CScalar(Scalar(re), Scalar(im)); }

inline std::vector<CScalar> ones_p(size_t n) { return std::vector<CScalar>(n, CScalar(1)); }

/// n = 1, k = 2: one coordinate scaled by e^{a_1} and rotated by a_2.
inline DiagonalSemidirectSpec make_axb() {
    DiagonalSemidirectSpec s;
    s.n = 1;
    s.k = 2;
    s.growth = {sv({1, 0})};
    s.rotation = {sv({0, 1})};
    return s;
}

/// n = 2, k = 3: independent growth directions, one shared rotation
/// parameter entering the two coordinates at frequencies 1 and theta.
inline DiagonalSemidirectSpec make_codim3() {
    DiagonalSemidirectSpec s;
    s.n = 2;
    s.k = 3;
    s.growth = {sv({1, 0, 0}), sv({0, 1, 0})};
    Vec<Scalar> xi2 = zero_vec<Scalar>(3);
    xi2[2] = Scalar(theta_power(1));
    s.rotation = {sv({0, 0, 1}), xi2};
    return s;
}

/// Same shape with rationally dependent frequencies 1 and 1.
inline DiagonalSemidirectSpec make_codim3_rational() {
    DiagonalSemidirectSpec s = make_codim3();
    s.rotation[1] = sv({0, 0, 1});
    return s;
}

/// n = 3, k = 5: two free rotation parameters, frequencies (1,0), (0,1),
/// (theta, theta^2).
inline DiagonalSemidirectSpec make_dense5() {
    DiagonalSemidirectSpec s;
    s.n = 3;
    s.k = 5;
    s.growth = {sv({1, 0, 0, 0, 0}), sv({0, 1, 0, 0, 0}), sv({0, 0, 1, 0, 0})};
    Vec<Scalar> xi3 = zero_vec<Scalar>(5);
    xi3[3] = Scalar(theta_power(1));
    xi3[4] = Scalar(theta_power(2));
    s.rotation = {sv({0, 0, 0, 1, 0}), sv({0, 0, 0, 0, 1}), xi3};
    return s;
}

inline Mat<Scalar> diag_matrix(std::initializer_list<Scalar> entries) {
    Mat<Scalar> d(entries.size(), entries.size());
    size_t i = 0;
    for (const Scalar& e : entries) {
        d(i, i) = e;
        ++i;
    }
    return d;
}

/// Heisenberg algebra with the grading derivation diag(1, 1, 2).
inline NilExtSpec make_h3_grading() {
    return NilExtSpec(make_h3(), diag_matrix({Scalar(1), Scalar(1), Scalar(2)}));
}

/// Expanding and contracting directions cancel on the center.
inline NilExtSpec make_h3_mixed() {
    return NilExtSpec(make_h3(), diag_matrix({Scalar(1), Scalar(-1), Scalar(0)}));
}

/// Nilpotent shear derivation X -> Y.
inline NilExtSpec make_h3_shear() {
    Mat<Scalar> d(3, 3);
    d(1, 0) = Scalar(1);
    return NilExtSpec(make_h3(), d);
}

/// Non-diagonal rational derivation with invertible matrix.
inline NilExtSpec make_h3_rational() {
    Mat<Scalar> d(3, 3);
    d(0, 0) = Scalar(1);
    d(1, 0) = Scalar(2);
    d(2, 0) = Scalar(1);
    d(0, 1) = Scalar(3);
    d(1, 1) = Scalar(Rat(1, 2));
    d(2, 2) = Scalar(Rat(3, 2));
    return NilExtSpec(make_h3(), d);
}

/// Grading weights theta and 1, forcing the numeric spectral path.
inline NilExtSpec make_h3_theta_grading() {
    Scalar th(theta_power(1));
    return NilExtSpec(make_h3(), diag_matrix({th, Scalar(1), th + Scalar(1)}));
}

/// Weights theta and -theta: the central weight degenerates to zero.
inline NilExtSpec make_h3_theta_mixed() {
    Scalar th(theta_power(1));
    return NilExtSpec(make_h3(), diag_matrix({th, -th, Scalar(0)}));
}

inline NilExtSpec make_filiform4_grading() {
    return NilExtSpec(make_filiform4(),
                      diag_matrix({Scalar(1), Scalar(1), Scalar(2), Scalar(3)}));
}

/// Abelian plane with a rotation: every matrix is a derivation here.
inline NilExtSpec make_abelian_rotation() {
    Mat<Scalar> d(2, 2);
    d(0, 1) = Scalar(-1);
    d(1, 0) = Scalar(1);
    return NilExtSpec(make_abelian(2), d);
}

inline double max_abs_diff(const Mat<double>& a, const Mat<double>& b) {
    double m = 0.0;
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

inline double max_abs_diff(const Vec<double>& a, const Vec<double>& b) {
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace coorbit::testing
