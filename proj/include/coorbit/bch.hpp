#pragma once

#include <coorbit/lie_algebra.hpp>

#include <vector>

namespace coorbit {

/// Bernoulli numbers B_0..B_n with the B_1 = +1/2 convention, so that
/// w/(1 - e^{-w}) = sum_m B_m w^m / m!.
inline std::vector<Rat> bernoulli_numbers(size_t n) {
    // Recurrence for the B_1 = -1/2 convention, then flip B_1.
    std::vector<Rat> b(n + 1, Rat(0));
    b[0] = 1;
    std::vector<std::vector<Rat>> binom(n + 2);
    for (size_t m = 0; m <= n + 1; ++m) {
        binom[m].assign(m + 1, Rat(1));
        for (size_t j = 1; j < m; ++j) binom[m][j] = binom[m - 1][j - 1] + binom[m - 1][j];
    }
    for (size_t m = 1; m <= n; ++m) {
        Rat s(0);
        for (size_t j = 0; j < m; ++j) s += binom[m + 1][j] * b[j];
        b[m] = -s / Rat(binom[m + 1][m]);
    }
    if (n >= 1) b[1] = Rat(1, 2);
    return b;
}

template <class F>
F field_from_rat(const Rat& r);
template <>
inline Scalar field_from_rat<Scalar>(const Rat& r) {
    return Scalar(r);
}
template <>
inline double field_from_rat<double>(const Rat& r) {
    return to_double(r);
}

/// Solves Z(1) for Z(t) = log(exp(x) exp(t y)) through the defining flow
/// Z'(t) = phi(ad Z(t)) y with phi(w) = w/(1 - e^{-w}): matching powers of t
/// gives (r+1) u_{r+1} = sum_m B_m/m! [t^r] (ad Z(t))^m y with Z = sum u_r t^r.
/// In an algebra of nilpotency class c every bracket word in more than c
/// letters vanishes, so the sums are finite and the result is exact over an
/// exact field.
template <class F, class Bracket>
Vec<F> bch_recursion(size_t dim, size_t nilpotency_class, Bracket bracket, const Vec<F>& x,
                     const Vec<F>& y) {
    const size_t c = nilpotency_class;
    std::vector<Rat> bern = bernoulli_numbers(c == 0 ? 0 : c - 1);
    std::vector<F> beta;  // B_m / m!
    Rat fact(1);
    for (size_t m = 0; m < std::max<size_t>(c, 1); ++m) {
        if (m > 0) fact *= Rat(static_cast<long>(m));
        beta.push_back(field_from_rat<F>(bern[std::min(m, bern.size() - 1)] / fact));
    }

    std::vector<Vec<F>> u(c + 1, zero_vec<F>(dim));
    u[0] = x;
    for (size_t r = 0; r + 1 <= c; ++r) {
        Vec<F> total = zero_vec<F>(dim);
        if (r == 0) total = vec_add(total, vec_scale(beta[0], y));
        // w holds the t-coefficients of (ad Z(t))^m y up to degree r.
        std::vector<Vec<F>> w(r + 1, zero_vec<F>(dim));
        w[0] = y;
        for (size_t m = 1; m < c; ++m) {
            std::vector<Vec<F>> next(r + 1, zero_vec<F>(dim));
            for (size_t d = 0; d <= r; ++d)
                for (size_t a = 0; a <= d && a <= r; ++a)
                    next[d] = vec_add(next[d], bracket(u[a], w[d - a]));
            w = std::move(next);
            if (!(beta[m] == F(0))) total = vec_add(total, vec_scale(beta[m], w[r]));
        }
        u[r + 1] = vec_scale(F(1) / F(static_cast<int>(r + 1)), total);
    }

    Vec<F> z = zero_vec<F>(dim);
    for (const auto& ur : u) z = vec_add(z, ur);
    return z;
}

/// Exact group product in exponential coordinates; defined for nilpotent
/// algebras only.
inline Vec<Scalar> bch_product(const LieAlgebra& g, const Vec<Scalar>& x, const Vec<Scalar>& y) {
    std::optional<size_t> c = g.nilpotency_class();
    if (!c) throw std::domain_error("BCH product requires a nilpotent algebra");
    return bch_recursion<Scalar>(g.dim(), *c,
                                 [&](const Vec<Scalar>& a, const Vec<Scalar>& b) {
                                     return g.bracket(a, b);
                                 },
                                 x, y);
}

/// Numeric variant at a fixed theta; the class bound must come from the
/// exact side.
inline Vec<double> bch_product(const NumLieAlgebra& g, size_t nilpotency_class,
                               const Vec<double>& x, const Vec<double>& y) {
    return bch_recursion<double>(g.dim, nilpotency_class,
                                 [&](const Vec<double>& a, const Vec<double>& b) {
                                     return g.bracket(a, b);
                                 },
                                 x, y);
}

}  // namespace coorbit
