#pragma once

#include <coorbit/rational.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

namespace coorbit {

/// Dense univariate polynomial over the rationals.  Coefficients are stored
/// in ascending order; the invariant is that the leading coefficient of a
/// nonzero polynomial is nonzero (the zero polynomial has no coefficients).
class Poly {
  public:
    Poly() = default;
    explicit Poly(const Rat& c) {
        if (c != 0) c_.push_back(c);
    }
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly variable() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rat(0);
    }
    Rat lc() const { return c_.empty() ? Rat(0) : c_.back(); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        std::vector<Rat> r(c_);
        for (auto& x : r) x = -x;
        Poly p;
        p.c_ = std::move(r);
        return p;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Rat& s, const Poly& a) {
        if (s == 0) return Poly();
        std::vector<Rat> r(a.c_);
        for (auto& x : r) x *= s;
        Poly p;
        p.c_ = std::move(r);
        return p;
    }
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Euclidean division; throws on division by zero.
    friend std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        Poly r = a;
        std::vector<Rat> q(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1, Rat(0));
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int d = r.degree() - b.degree();
            Rat f = r.lc() / b.lc();
            q[d] = f;
            std::vector<Rat> sub(d + b.c_.size(), Rat(0));
            for (size_t i = 0; i < b.c_.size(); ++i) sub[d + i] = f * b.c_[i];
            r = r - Poly(std::move(sub));
        }
        return {Poly(std::move(q)), r};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return Rat(1) / lc() * *this;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Rat> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rat(static_cast<long>(i)) * c_[i];
        return Poly(std::move(r));
    }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }
    double eval(double x) const {
        double acc = 0.0;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + to_double(c_[i]);
        return acc;
    }

    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += " + ";
            if (i == 0 || c_[i] != 1) s += rational_to_string(c_[i]);
            if (i > 0) {
                if (c_[i] != 1) s += "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divrem(a, b).second;
        a = b;
        b = r;
    }
    return a.monic();
}

inline Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    return divrem(a * b, poly_gcd(a, b)).first.monic();
}

namespace detail {
inline int sign_at_pos_infinity(const Poly& p) {
    if (p.is_zero()) return 0;
    return p.lc() > 0 ? 1 : -1;
}
inline int sign_at_neg_infinity(const Poly& p) {
    if (p.is_zero()) return 0;
    int s = p.lc() > 0 ? 1 : -1;
    return (p.degree() % 2 == 0) ? s : -s;
}
inline int sign_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}
}  // namespace detail

/// Number of distinct real roots, via a Sturm chain on the squarefree part.
inline int count_real_roots(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("root count of the zero polynomial");
    if (p.degree() == 0) return 0;
    Poly f = divrem(p, poly_gcd(p, p.derivative())).first;
    std::vector<Poly> chain{f, f.derivative()};
    while (!chain.back().is_zero()) {
        Poly r = divrem(chain[chain.size() - 2], chain.back()).second;
        chain.push_back(-r);
    }
    chain.pop_back();
    std::vector<int> lo, hi;
    for (const Poly& q : chain) {
        lo.push_back(detail::sign_at_neg_infinity(q));
        hi.push_back(detail::sign_at_pos_infinity(q));
    }
    return detail::sign_variations(lo) - detail::sign_variations(hi);
}

}  // namespace coorbit
