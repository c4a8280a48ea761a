#pragma once

#include <coorbit/scalar.hpp>

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

namespace coorbit {

template <class F>
using Vec = std::vector<F>;

template <class F>
inline Vec<F> zero_vec(size_t n) {
    return Vec<F>(n, F(0));
}

template <class F>
inline bool vec_is_zero(const Vec<F>& v) {
    for (const F& x : v)
        if (!(x == F(0))) return false;
    return true;
}

template <class F>
inline Vec<F> vec_add(const Vec<F>& a, const Vec<F>& b) {
    Vec<F> r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

template <class F>
inline Vec<F> vec_sub(const Vec<F>& a, const Vec<F>& b) {
    Vec<F> r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
    return r;
}

template <class F>
inline Vec<F> vec_scale(const F& s, const Vec<F>& a) {
    Vec<F> r(a);
    for (auto& x : r) x = s * x;
    return r;
}

/// Dense row-major matrix over a field F.
template <class F>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(size_t r, size_t c) : rows_(r), cols_(c), a_(r * c, F(0)) {}
    Mat(std::initializer_list<std::initializer_list<F>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            for (const auto& x : r) a_.push_back(x);
        }
    }

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }
    static Mat from_rows(const std::vector<Vec<F>>& rows, size_t cols) {
        Mat m(rows.size(), cols);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
            for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static Mat from_cols(const std::vector<Vec<F>>& cols, size_t rows) {
        Mat m(rows, cols.size());
        for (size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
            for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    F& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const F& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    Vec<F> row(size_t i) const {
        Vec<F> r(cols_);
        for (size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }
    Vec<F> col(size_t j) const {
        Vec<F> c(rows_);
        for (size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        check_same(a, b);
        Mat r = a;
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] + b.a_[i];
        return r;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        check_same(a, b);
        Mat r = a;
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] - b.a_[i];
        return r;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Mat r(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t l = 0; l < a.cols_; ++l) {
                const F& x = a(i, l);
                if (x == F(0)) continue;
                for (size_t j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + x * b(l, j);
            }
        return r;
    }
    friend Mat operator*(const F& s, const Mat& a) {
        Mat r = a;
        for (auto& x : r.a_) x = s * x;
        return r;
    }
    friend Vec<F> operator*(const Mat& a, const Vec<F>& v) {
        if (a.cols_ != v.size()) throw std::invalid_argument("matrix apply shape mismatch");
        Vec<F> r(a.rows_, F(0));
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t j = 0; j < a.cols_; ++j) r[i] = r[i] + a(i, j) * v[j];
        return r;
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool is_zero() const {
        for (const F& x : a_)
            if (!(x == F(0))) return false;
        return true;
    }

  private:
    static void check_same(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }
    size_t rows_, cols_;
    std::vector<F> a_;
};

/// In-place reduced row echelon form; returns the pivot column indices.
/// Only meaningful over exact fields.
template <class F>
std::vector<size_t> rref(Mat<F>& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t p = r;
        while (p < m.rows() && m(p, c) == F(0)) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        F inv = F(1) / m(r, c);
        for (size_t j = 0; j < m.cols(); ++j) m(r, j) = inv * m(r, j);
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == F(0)) continue;
            F f = m(i, c);
            for (size_t j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
size_t rank(Mat<F> m) {
    return rref(m).size();
}

/// Basis of the right null space {v : Av = 0}.
template <class F>
std::vector<Vec<F>> kernel(Mat<F> m) {
    size_t n = m.cols();
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<Vec<F>> basis;
    for (size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec<F> v(n, F(0));
        v[f] = F(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F(0) - m(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// One solution of Ax = b, if any.
template <class F>
std::optional<Vec<F>> solve(const Mat<F>& a, const Vec<F>& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve shape mismatch");
    Mat<F> aug(a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    std::vector<size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    Vec<F> x(a.cols(), F(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
    return x;
}

template <class F>
bool in_column_span(const Mat<F>& a, const Vec<F>& b) {
    return solve(a, b).has_value();
}

/// Linear subspace of F^n held as a canonical reduced-row-echelon basis, so
/// that two subspaces are equal exactly when their representations are.
template <class F>
class Subspace {
  public:
    static Subspace zero(size_t ambient) { return Subspace(ambient, {}); }
    static Subspace full(size_t ambient) {
        std::vector<Vec<F>> b;
        for (size_t i = 0; i < ambient; ++i) {
            Vec<F> v(ambient, F(0));
            v[i] = F(1);
            b.push_back(std::move(v));
        }
        return Subspace(ambient, std::move(b));
    }
    static Subspace span(size_t ambient, const std::vector<Vec<F>>& vectors) {
        if (vectors.empty()) return zero(ambient);
        Mat<F> m = Mat<F>::from_rows(vectors, ambient);
        size_t r = rref(m).size();
        std::vector<Vec<F>> b;
        for (size_t i = 0; i < r; ++i) b.push_back(m.row(i));
        return Subspace(ambient, std::move(b));
    }

    size_t ambient() const { return ambient_; }
    size_t dim() const { return basis_.size(); }
    const std::vector<Vec<F>>& basis() const { return basis_; }

    bool contains(const Vec<F>& v) const {
        if (v.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
        Vec<F> r = v;
        for (const Vec<F>& b : basis_) {
            size_t lead = leading_index(b);
            if (!(r[lead] == F(0))) r = vec_sub(r, vec_scale(r[lead], b));
        }
        return vec_is_zero(r);
    }
    bool contains(const Subspace& o) const {
        for (const Vec<F>& b : o.basis_)
            if (!contains(b)) return false;
        return true;
    }

    /// Coefficients of v in the stored basis; nullopt when v is outside.
    std::optional<Vec<F>> coordinates(const Vec<F>& v) const {
        if (v.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
        Vec<F> r = v;
        Vec<F> coords(basis_.size(), F(0));
        for (size_t i = 0; i < basis_.size(); ++i) {
            size_t lead = leading_index(basis_[i]);
            coords[i] = r[lead];
            if (!(coords[i] == F(0))) r = vec_sub(r, vec_scale(coords[i], basis_[i]));
        }
        if (!vec_is_zero(r)) return std::nullopt;
        return coords;
    }

    Subspace sum(const Subspace& o) const {
        std::vector<Vec<F>> all = basis_;
        all.insert(all.end(), o.basis_.begin(), o.basis_.end());
        return span(ambient_, all);
    }
    Subspace intersect(const Subspace& o) const {
        // Kernel trick on the stacked basis: combinations of this-basis equal
        // to combinations of o-basis.
        if (dim() == 0 || o.dim() == 0) return zero(ambient_);
        Mat<F> m(ambient_, dim() + o.dim());
        for (size_t j = 0; j < dim(); ++j)
            for (size_t i = 0; i < ambient_; ++i) m(i, j) = basis_[j][i];
        for (size_t j = 0; j < o.dim(); ++j)
            for (size_t i = 0; i < ambient_; ++i) m(i, dim() + j) = F(0) - o.basis_[j][i];
        std::vector<Vec<F>> combos = kernel(m);
        std::vector<Vec<F>> gens;
        for (const Vec<F>& c : combos) {
            Vec<F> v(ambient_, F(0));
            for (size_t j = 0; j < dim(); ++j) v = vec_add(v, vec_scale(c[j], basis_[j]));
            gens.push_back(std::move(v));
        }
        return span(ambient_, gens);
    }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

  private:
    Subspace(size_t ambient, std::vector<Vec<F>> basis)
        : ambient_(ambient), basis_(std::move(basis)) {}
    static size_t leading_index(const Vec<F>& b) {
        for (size_t i = 0; i < b.size(); ++i)
            if (!(b[i] == F(0))) return i;
        throw std::logic_error("zero vector in subspace basis");
    }
    size_t ambient_;
    std::vector<Vec<F>> basis_;
};

/// Annihilator of a subspace h in the dual space, as row vectors:
/// {xi : <xi, x> = 0 for all x in h}.
template <class F>
Subspace<F> annihilator(const Subspace<F>& h) {
    if (h.dim() == 0) return Subspace<F>::full(h.ambient());
    Mat<F> m = Mat<F>::from_rows(h.basis(), h.ambient());
    return Subspace<F>::span(h.ambient(), kernel(m));
}

template <class F>
Subspace<F> kernel_space(const Mat<F>& m) {
    return Subspace<F>::span(m.cols(), kernel(m));
}

/// Dual pairing of a covector with a vector.
template <class F>
F pairing(const Vec<F>& xi, const Vec<F>& x) {
    if (xi.size() != x.size()) throw std::invalid_argument("pairing dimension mismatch");
    F acc(0);
    for (size_t i = 0; i < xi.size(); ++i) acc = acc + xi[i] * x[i];
    return acc;
}

}  // namespace coorbit
