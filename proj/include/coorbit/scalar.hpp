#pragma once

#include <coorbit/polynomial.hpp>

#include <stdexcept>
#include <string>

namespace coorbit {

/// Element of the field Q(theta) for a fixed transcendental theta: a reduced
/// fraction num/den of polynomials with monic denominator.  Equality of the
/// canonical representation is exact field equality, and a scalar is zero
/// exactly when its numerator is the zero polynomial.
class Scalar {
  public:
    Scalar() : num_(), den_(Rat(1)) {}
    Scalar(int v) : num_(Rat(v)), den_(Rat(1)) {}
    explicit Scalar(const Rat& v) : num_(v), den_(Rat(1)) {}
    explicit Scalar(Poly num) : num_(std::move(num)), den_(Rat(1)) {}
    Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("scalar with zero denominator");
        reduce();
    }

    static Scalar theta() { return Scalar(Poly::variable()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// True when the value lies in Q.
    bool is_rational() const { return num_.degree() <= 0 && den_.degree() == 0; }
    Rat as_rational() const {
        if (!is_rational()) throw std::domain_error("scalar is not rational");
        return num_.coeff(0) / den_.coeff(0);
    }

    /// Largest theta-degree appearing in the reduced representation.
    int theta_degree() const { return std::max(num_.degree(), den_.degree()); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    Scalar operator-() const {
        Scalar r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return Scalar(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw std::domain_error("division by zero scalar");
        return Scalar(a.num_ * b.den_, a.den_ * b.num_);
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero scalar");
        return Scalar(den_, num_);
    }

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Evaluates at a numeric theta; throws if the denominator vanishes there.
    double eval(double theta) const {
        double d = den_.eval(theta);
        if (d == 0.0) throw std::domain_error("scalar denominator vanishes at the given theta");
        return num_.eval(theta) / d;
    }

    std::string to_string() const {
        if (den_ == Poly(Rat(1))) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

  private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = Poly(Rat(1));
            return;
        }
        Poly g = poly_gcd(num_, den_);
        num_ = divrem(num_, g).first;
        den_ = divrem(den_, g).first;
        Rat l = den_.lc();
        num_ = Rat(1) / l * num_;
        den_ = Rat(1) / l * den_;
    }
    Poly num_, den_;
};

inline Scalar theta_power(int k) {
    std::vector<Rat> c(k + 1, Rat(0));
    c[k] = 1;
    return Scalar(Poly(std::move(c)));
}

}  // namespace coorbit
