#pragma once

#include <coorbit/numeric.hpp>

#include <optional>
#include <string>
#include <vector>

namespace coorbit {

/// Covectors share the coordinate representation of vectors; the pairing in
/// linalg.hpp is the only place the two roles meet.
using Covector = Vec<Scalar>;

struct StructureViolation {
    std::string kind;  // "antisymmetry" | "jacobi"
    size_t i, j, k;    // offending basis indices (0-based; k unused for antisymmetry)
    std::string message;
};

/// Finite-dimensional Lie algebra over Q(theta), presented by structure
/// constants on a fixed basis: [e_i, e_j] = sum_k c[i][j][k] e_k.
class LieAlgebra {
  public:
    explicit LieAlgebra(size_t dim)
        : dim_(dim), c_(dim, std::vector<Vec<Scalar>>(dim, zero_vec<Scalar>(dim))) {}

    size_t dim() const { return dim_; }

    void set_bracket(size_t i, size_t j, Vec<Scalar> coeffs) {
        if (i >= dim_ || j >= dim_ || coeffs.size() != dim_)
            throw std::invalid_argument("bracket indices or coefficient length out of range");
        c_[i][j] = std::move(coeffs);
    }
    /// Sets [e_i, e_j] and [e_j, e_i] = -[e_i, e_j] in one step.
    void set_bracket_pair(size_t i, size_t j, const Vec<Scalar>& coeffs) {
        set_bracket(i, j, coeffs);
        Vec<Scalar> neg = coeffs;
        for (auto& x : neg) x = -x;
        set_bracket(j, i, neg);
    }
    const Vec<Scalar>& structure(size_t i, size_t j) const { return c_[i][j]; }

    Vec<Scalar> basis_vector(size_t i) const {
        Vec<Scalar> v = zero_vec<Scalar>(dim_);
        v[i] = Scalar(1);
        return v;
    }

    Vec<Scalar> bracket(const Vec<Scalar>& x, const Vec<Scalar>& y) const {
        if (x.size() != dim_ || y.size() != dim_)
            throw std::invalid_argument("bracket operand dimension mismatch");
        Vec<Scalar> r = zero_vec<Scalar>(dim_);
        for (size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (size_t j = 0; j < dim_; ++j) {
                if (y[j].is_zero()) continue;
                Scalar f = x[i] * y[j];
                for (size_t k = 0; k < dim_; ++k) r[k] += f * c_[i][j][k];
            }
        }
        return r;
    }

    /// Matrix of ad(x): y -> [x, y] in the fixed basis.
    Mat<Scalar> ad(const Vec<Scalar>& x) const {
        Mat<Scalar> m(dim_, dim_);
        for (size_t j = 0; j < dim_; ++j) {
            Vec<Scalar> col = bracket(x, basis_vector(j));
            for (size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
        }
        return m;
    }

    /// Matrix of the coadjoint representation ad*(x) = -ad(x)^T acting on
    /// covector coordinates.
    Mat<Scalar> ad_star(const Vec<Scalar>& x) const {
        Mat<Scalar> t = ad(x).transpose();
        return Scalar(-1) * t;
    }

    /// Checks antisymmetry and the Jacobi identity; an empty result means the
    /// structure constants present a Lie algebra.
    std::vector<StructureViolation> validate() const {
        std::vector<StructureViolation> out;
        for (size_t i = 0; i < dim_; ++i)
            for (size_t j = i; j < dim_; ++j) {
                Vec<Scalar> s = vec_add(c_[i][j], c_[j][i]);
                if (i == j) s = c_[i][i];
                if (!vec_is_zero(s))
                    out.push_back({"antisymmetry", i, j, 0,
                                   "[e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) +
                                       "] + [e" + std::to_string(j + 1) + ",e" +
                                       std::to_string(i + 1) + "] != 0"});
            }
        for (size_t i = 0; i < dim_; ++i)
            for (size_t j = i + 1; j < dim_; ++j)
                for (size_t k = j + 1; k < dim_; ++k) {
                    Vec<Scalar> s = bracket(c_[i][j], basis_vector(k));
                    s = vec_add(s, bracket(c_[j][k], basis_vector(i)));
                    s = vec_add(s, bracket(c_[k][i], basis_vector(j)));
                    if (!vec_is_zero(s))
                        out.push_back({"jacobi", i, j, k,
                                       "Jacobi identity fails on (e" + std::to_string(i + 1) +
                                           ",e" + std::to_string(j + 1) + ",e" +
                                           std::to_string(k + 1) + ")"});
                }
        return out;
    }

    /// Center {x : [x, y] = 0 for all y}.
    Subspace<Scalar> center() const {
        // Rows indexed by (j, k), columns by i: sum_i x_i c[i][j][k] = 0.
        Mat<Scalar> m(dim_ * dim_, dim_);
        for (size_t j = 0; j < dim_; ++j)
            for (size_t k = 0; k < dim_; ++k)
                for (size_t i = 0; i < dim_; ++i) m(j * dim_ + k, i) = c_[i][j][k];
        return kernel_space(m);
    }

    /// Derived ideal [g, g].
    Subspace<Scalar> derived_ideal() const {
        std::vector<Vec<Scalar>> gens;
        for (size_t i = 0; i < dim_; ++i)
            for (size_t j = i + 1; j < dim_; ++j) gens.push_back(c_[i][j]);
        return Subspace<Scalar>::span(dim_, gens);
    }

    Subspace<Scalar> bracket_span(const Subspace<Scalar>& a, const Subspace<Scalar>& b) const {
        std::vector<Vec<Scalar>> gens;
        for (const auto& x : a.basis())
            for (const auto& y : b.basis()) gens.push_back(bracket(x, y));
        return Subspace<Scalar>::span(dim_, gens);
    }

    /// Lower central series g = g^1 >= g^2 >= ..., stopping at stabilization.
    std::vector<Subspace<Scalar>> lower_central_series() const {
        std::vector<Subspace<Scalar>> series{Subspace<Scalar>::full(dim_)};
        for (;;) {
            Subspace<Scalar> next = bracket_span(series.front(), series.back());
            if (next == series.back()) break;
            series.push_back(next);
            if (next.dim() == 0) break;
        }
        return series;
    }

    /// Nilpotency class, or nullopt for a non-nilpotent algebra.
    std::optional<size_t> nilpotency_class() const {
        std::vector<Subspace<Scalar>> s = lower_central_series();
        if (s.back().dim() != 0) return std::nullopt;
        return s.size() - 1;
    }
    bool is_nilpotent() const { return nilpotency_class().has_value(); }

    bool is_solvable() const {
        Subspace<Scalar> d = derived_ideal();
        for (;;) {
            if (d.dim() == 0) return true;
            Subspace<Scalar> next = bracket_span(d, d);
            if (next == d) return false;
            d = next;
        }
    }

  private:
    size_t dim_;
    std::vector<std::vector<Vec<Scalar>>> c_;
};

/// psi(ad x) for psi(z) = -sum_{k>=0} z^k / (k+1)!, summed exactly; the
/// series is finite precisely when ad x is nilpotent.
inline Mat<Scalar> psi_of_ad(const LieAlgebra& g, const Vec<Scalar>& x) {
    size_t n = g.dim();
    Mat<Scalar> a = g.ad(x);
    Mat<Scalar> sum(n, n);
    Mat<Scalar> power = Mat<Scalar>::identity(n);
    Rat fact(1);
    for (size_t k = 0;; ++k) {
        fact *= Rat(static_cast<long>(k + 1));
        sum = sum + Scalar(Rat(-1) / fact) * power;
        power = power * a;
        if (power.is_zero()) return sum;
        if (k >= n)
            throw std::domain_error(
                "series requires truncation: ad x is not nilpotent, pass a truncation order and "
                "a numeric theta");
    }
}

/// Truncated numeric variant for non-nilpotent ad x.
inline Mat<double> psi_of_ad(const LieAlgebra& g, const Vec<Scalar>& x, size_t truncation_order,
                             double theta) {
    Mat<double> a = evaluate(g.ad(x), theta);
    size_t n = g.dim();
    Mat<double> sum(n, n);
    Mat<double> power = Mat<double>::identity(n);
    double fact = 1.0;
    for (size_t k = 0; k <= truncation_order; ++k) {
        fact *= static_cast<double>(k + 1);
        sum = sum + (-1.0 / fact) * power;
        power = power * a;
    }
    return sum;
}

/// exp(t ad x) evaluated numerically at a given theta.
inline Mat<double> exp_ad(const LieAlgebra& g, const Vec<Scalar>& x, double t, double theta) {
    return expm(t * evaluate(g.ad(x), theta));
}

/// Numeric shadow of an algebra at a fixed theta.
struct NumLieAlgebra {
    size_t dim = 0;
    std::vector<Mat<double>> ad_basis;  // ad(e_i)

    Mat<double> ad(const Vec<double>& x) const {
        Mat<double> m(dim, dim);
        for (size_t i = 0; i < dim; ++i)
            if (x[i] != 0.0) m = m + x[i] * ad_basis[i];
        return m;
    }
    Vec<double> bracket(const Vec<double>& x, const Vec<double>& y) const { return ad(x) * y; }
};

inline NumLieAlgebra evaluate(const LieAlgebra& g, double theta) {
    NumLieAlgebra n;
    n.dim = g.dim();
    for (size_t i = 0; i < g.dim(); ++i)
        n.ad_basis.push_back(evaluate(g.ad(g.basis_vector(i)), theta));
    return n;
}

}  // namespace coorbit
