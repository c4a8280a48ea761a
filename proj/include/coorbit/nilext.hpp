#pragma once

#include <coorbit/coadjoint.hpp>
#include <coorbit/semidirect.hpp>

#include <Eigen/Eigenvalues>

#include <string>
#include <vector>

namespace coorbit {

/// G = N x| R for a nilpotent N, the one-parameter subgroup acting by
/// exp(t D) for a derivation D of the nil algebra.
struct NilExtSpec {
    LieAlgebra nil;
    Mat<Scalar> derivation;  // square, size dim(nil)

    NilExtSpec(LieAlgebra n, Mat<Scalar> d) : nil(std::move(n)), derivation(std::move(d)) {
        if (derivation.rows() != nil.dim() || derivation.cols() != nil.dim())
            throw std::invalid_argument("derivation shape must match the algebra dimension");
    }
};

struct DerivationViolation {
    size_t i, j;
    std::string message;
};

/// D[x,y] = [Dx,y] + [x,Dy], checked exactly on all basis pairs.
inline std::vector<DerivationViolation> validate_derivation(const NilExtSpec& s) {
    std::vector<DerivationViolation> out;
    size_t n = s.nil.dim();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            Vec<Scalar> lhs = s.derivation * s.nil.structure(i, j);
            Vec<Scalar> rhs =
                vec_add(s.nil.bracket(s.derivation * s.nil.basis_vector(i), s.nil.basis_vector(j)),
                        s.nil.bracket(s.nil.basis_vector(i), s.derivation * s.nil.basis_vector(j)));
            if (!vec_is_zero(vec_sub(lhs, rhs)))
                out.push_back({i, j,
                               "derivation law fails on (e" + std::to_string(i + 1) + ",e" +
                                   std::to_string(j + 1) + ")"});
        }
    return out;
}

/// The extension algebra g = n + R e_last with [e_last, y] = D y.
inline LieAlgebra extended_algebra(const NilExtSpec& s) {
    size_t n = s.nil.dim();
    LieAlgebra g(n + 1);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Vec<Scalar> c = s.nil.structure(i, j);
            c.push_back(Scalar(0));
            g.set_bracket(i, j, c);
        }
    for (size_t j = 0; j < n; ++j) {
        Vec<Scalar> c = s.derivation * s.nil.basis_vector(j);
        c.push_back(Scalar(0));
        g.set_bracket_pair(n, j, c);
    }
    return g;
}

/// Coadjoint matrix of (x,t)^{-1} on n* + R: block upper-left
/// e^{tD^T} (e^{ad x})^T, bottom row the coordinates of psi(ad x) D x, and
/// corner 1.  The nilpotent pieces are summed exactly, then evaluated.
inline Mat<double> coadjoint_matrix(const NilExtSpec& s, const Vec<Scalar>& x, double t,
                                    double theta) {
    size_t n = s.nil.dim();
    Mat<Scalar> ad_exp_t = expm_nilpotent(s.nil.ad(x)).transpose();
    Vec<Scalar> w = psi_of_ad(s.nil, x) * (s.derivation * x);

    Mat<double> e_d = expm(t * evaluate(s.derivation, theta).transpose());
    Mat<double> block = e_d * evaluate(ad_exp_t, theta);
    Vec<double> w_num = evaluate(w, theta);

    Mat<double> m(n + 1, n + 1);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m(i, j) = block(i, j);
    for (size_t j = 0; j < n; ++j) m(n, j) = w_num[j];
    m(n, n) = 1.0;
    return m;
}

/// The same matrix from first principles: differentiate the conjugation
/// (y,s) -> ((x . alpha_t(y)) . alpha_s(-x), s) through the group law, then
/// dualize.  Central differences with step 1e-5.
inline Mat<double> coadjoint_oracle(const NilExtSpec& s, const Vec<Scalar>& x, double t,
                                    double theta, double h = 1e-5) {
    std::optional<size_t> c = s.nil.nilpotency_class();
    if (!c) throw std::domain_error("oracle requires a nilpotent algebra");
    if (*c > 4) throw std::domain_error("nilpotency class too large for the numeric oracle");
    size_t n = s.nil.dim();
    NumLieAlgebra num = evaluate(s.nil, theta);
    Mat<double> d = evaluate(s.derivation, theta);
    Vec<double> xn = evaluate(x, theta);
    Vec<double> minus_x(n);
    for (size_t i = 0; i < n; ++i) minus_x[i] = -xn[i];

    auto conj_vec = [&](const Vec<double>& y, double sarg) {
        Vec<double> z1 = bch_product(num, *c, xn, expm(t * d) * y);
        return bch_product(num, *c, z1, expm(sarg * d) * minus_x);
    };

    Mat<double> jac(n + 1, n + 1);
    for (size_t j = 0; j < n; ++j) {
        Vec<double> e(n, 0.0);
        e[j] = h;
        Vec<double> fp = conj_vec(e, 0.0);
        e[j] = -h;
        Vec<double> fm = conj_vec(e, 0.0);
        for (size_t i = 0; i < n; ++i) jac(i, j) = (fp[i] - fm[i]) / (2 * h);
        jac(n, j) = 0.0;  // s-component of the conjugation is s itself
    }
    Vec<double> zero(n, 0.0);
    Vec<double> sp = conj_vec(zero, h);
    Vec<double> sm = conj_vec(zero, -h);
    for (size_t i = 0; i < n; ++i) jac(i, n) = (sp[i] - sm[i]) / (2 * h);
    jac(n, n) = 1.0;
    return jac.transpose();
}

struct GateReport {
    bool pass = false;
    bool exact_path = false;  // Sturm chain on the characteristic polynomial
};

namespace detail {

/// Characteristic polynomial of a rational matrix, monic in lambda, by the
/// trace recursion (Faddeev-LeVerrier).
inline std::vector<Rat> char_poly(const Mat<Rat>& r) {
    size_t n = r.rows();
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = 1;  // coefficient of lambda^n
    Mat<Rat> m = Mat<Rat>::identity(n);
    for (size_t kk = 1; kk <= n; ++kk) {
        m = r * m;
        Rat tr(0);
        for (size_t i = 0; i < n; ++i) tr += m(i, i);
        Rat ck = -tr / Rat(static_cast<long>(kk));
        c[n - kk] = ck;
        for (size_t i = 0; i < n; ++i) m(i, i) += ck;
    }
    return c;  // ascending: c[0] + c[1] x + ... + c[n] x^n
}

}  // namespace detail

/// True iff D restricted to the center of n has no eigenvalue on the
/// imaginary axis (zero included).  All-rational restrictions are decided
/// exactly: substituting i*mu into the characteristic polynomial splits it
/// into even and odd parts whose gcd collects exactly the imaginary-axis
/// eigenvalues, and a Sturm chain counts its real roots.  Otherwise the
/// theta-evaluated matrix goes through a numeric eigensolver with tolerance
/// 1e-9.
inline GateReport central_spectrum_gate_report(const NilExtSpec& s, double theta,
                                               double tol = 1e-9) {
    Subspace<Scalar> z = s.nil.center();
    size_t dz = z.dim();
    GateReport rep;
    if (dz == 0) {
        rep.pass = true;
        rep.exact_path = true;
        return rep;
    }
    Mat<Scalar> r(dz, dz);
    for (size_t j = 0; j < dz; ++j) {
        Vec<Scalar> img = s.derivation * z.basis()[j];
        auto coords = z.coordinates(img);
        if (!coords)
            throw std::invalid_argument("derivation does not preserve the center");
        for (size_t i = 0; i < dz; ++i) r(i, j) = (*coords)[i];
    }

    bool rational = true;
    for (size_t i = 0; i < dz && rational; ++i)
        for (size_t j = 0; j < dz && rational; ++j)
            if (!r(i, j).is_rational()) rational = false;

    if (rational) {
        Mat<Rat> rq(dz, dz);
        for (size_t i = 0; i < dz; ++i)
            for (size_t j = 0; j < dz; ++j) rq(i, j) = r(i, j).as_rational();
        std::vector<Rat> cp = detail::char_poly(rq);
        // p(i mu): real part uses even coefficients, imaginary part odd ones,
        // with alternating signs.
        std::vector<Rat> re, im;
        for (size_t d = 0; d < cp.size(); ++d) {
            Rat v = (d / 2) % 2 == 0 ? cp[d] : -cp[d];
            if (d % 2 == 0) {
                re.resize(std::max(re.size(), d + 1), Rat(0));
                re[d] = v;
            } else {
                im.resize(std::max(im.size(), d + 1), Rat(0));
                im[d] = v;
            }
        }
        Poly g = poly_gcd(Poly(std::move(re)), Poly(std::move(im)));
        rep.exact_path = true;
        rep.pass = g.degree() <= 0 ? true : (count_real_roots(g) == 0);
        return rep;
    }

    Eigen::MatrixXd em(dz, dz);
    Mat<double> rn = evaluate(r, theta);
    for (size_t i = 0; i < dz; ++i)
        for (size_t j = 0; j < dz; ++j) em(i, j) = rn(i, j);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(em);
    rep.exact_path = false;
    rep.pass = true;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        std::complex<double> ev = solver.eigenvalues()[i];
        bool on_axis = std::abs(ev.imag()) > tol ? std::abs(ev.real()) <= tol
                                                 : std::abs(ev) <= tol;
        if (on_axis) rep.pass = false;
    }
    return rep;
}

inline bool central_spectrum_gate(const NilExtSpec& s, double theta = 1.4142135623730951) {
    return central_spectrum_gate_report(s, theta).pass;
}

struct Codim1Report {
    bool trivial_center_G = false;
    bool flat_generic_N = false;
    bool center_dim_1 = false;
    bool open_orbits_possible = false;
    GateReport gate;
    std::string implication;
    Verdict verdict;
};

/// Classifier for the codimension-1 case: open coadjoint orbits exist
/// exactly when the extension has trivial center, the generic orbits of the
/// nilpotent part are flat, and the center of n is a line.
inline Codim1Report codim1_classify(const NilExtSpec& s, double theta = 1.4142135623730951) {
    Codim1Report rep;
    LieAlgebra g = extended_algebra(s);
    rep.trivial_center_G = (g.center().dim() == 0);
    rep.flat_generic_N = nilpotent_flat_generic(s.nil);
    rep.center_dim_1 = (s.nil.center().dim() == 1);
    rep.open_orbits_possible = rep.trivial_center_G && rep.flat_generic_N && rep.center_dim_1;
    rep.gate = central_spectrum_gate_report(s, theta);
    rep.implication = "SI => type I in codimension 1";

    rep.verdict.facts["trivial_center"] = rep.trivial_center_G;
    rep.verdict.facts["quasiorbit_open"] = rep.open_orbits_possible;
    rep.verdict.facts["flat_generic"] = rep.flat_generic_N;
    rep.verdict.facts["center_dim_1"] = rep.center_dim_1;
    rep.verdict.facts["spectral_gate"] = rep.gate.pass;
    if (rep.open_orbits_possible) {
        rep.verdict.rule = "N1";
        rep.verdict.square_integrable = Tri::True;
        rep.verdict.type_I = Tri::True;
        rep.verdict.facts["stabilizer_trivial"] = true;
    } else {
        rep.verdict.rule = "N0";
        rep.verdict.square_integrable = Tri::False;
        rep.verdict.type_I = Tri::Undetermined;
        rep.verdict.warnings.push_back(
            "no open orbits: type I status is not decided by this classifier");
    }
    if (!rep.gate.exact_path)
        rep.verdict.warnings.push_back(
            "spectral gate decided numerically at the supplied theta (tolerance 1e-9)");
    return rep;
}

}  // namespace coorbit
