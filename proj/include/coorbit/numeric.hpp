#pragma once

#include <coorbit/linalg.hpp>

#include <cmath>
#include <stdexcept>

namespace coorbit {

inline double inf_norm(const Mat<double>& a) {
    double best = 0.0;
    for (size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (size_t j = 0; j < a.cols(); ++j) s += std::abs(a(i, j));
        best = std::max(best, s);
    }
    return best;
}

inline double inf_norm(const Vec<double>& v) {
    double best = 0.0;
    for (double x : v) best = std::max(best, std::abs(x));
    return best;
}

/// Matrix exponential by scaling and squaring with a Taylor core.  The input
/// is scaled below norm 1/2, so the series converges at machine precision in
/// a few dozen terms; accuracy is near 1e-14 relative at moderate norms.
inline Mat<double> expm(const Mat<double>& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("exponential of a non-square matrix");
    size_t n = a.rows();
    double norm = inf_norm(a);
    int s = 0;
    while (norm > 0.5) {
        norm /= 2.0;
        ++s;
    }
    Mat<double> b = std::pow(0.5, s) * a;
    Mat<double> sum = Mat<double>::identity(n);
    Mat<double> term = Mat<double>::identity(n);
    for (int k = 1; k <= 40; ++k) {
        term = (1.0 / k) * (term * b);
        sum = sum + term;
        if (inf_norm(term) <= 1e-18 * (1.0 + inf_norm(sum))) break;
    }
    for (int i = 0; i < s; ++i) sum = sum * sum;
    return sum;
}

/// Exact exponential of a nilpotent matrix over an exact field: the series
/// terminates once a power vanishes.  Throws if no power up to the dimension
/// vanishes.
template <class F>
Mat<F> expm_nilpotent(const Mat<F>& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("exponential of a non-square matrix");
    size_t n = a.rows();
    Mat<F> sum = Mat<F>::identity(n);
    Mat<F> power = Mat<F>::identity(n);
    F fact(1);
    for (size_t k = 1; k <= n; ++k) {
        power = power * a;
        if (power.is_zero()) return sum;
        fact = fact * F(static_cast<int>(k));
        sum = sum + (F(1) / fact) * power;
    }
    throw std::domain_error("matrix is not nilpotent");
}

inline double evaluate(const Scalar& s, double theta) { return s.eval(theta); }

inline Vec<double> evaluate(const Vec<Scalar>& v, double theta) {
    Vec<double> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i].eval(theta);
    return r;
}

inline Mat<double> evaluate(const Mat<Scalar>& m, double theta) {
    Mat<double> r(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).eval(theta);
    return r;
}

}  // namespace coorbit
