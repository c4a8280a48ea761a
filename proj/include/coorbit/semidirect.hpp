#pragma once

#include <coorbit/intlattice.hpp>
#include <coorbit/numeric.hpp>

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace coorbit {

/// Complex number over the exact scalar field.
struct CScalar {
    Scalar re, im;

    CScalar() = default;
    CScalar(int v) : re(v), im(0) {}
    CScalar(Scalar r, Scalar i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    CScalar conj() const { return {re, -im}; }
    Scalar modulus_sq() const { return re * re + im * im; }

    friend CScalar operator+(const CScalar& a, const CScalar& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend CScalar operator-(const CScalar& a, const CScalar& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend CScalar operator*(const CScalar& a, const CScalar& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend CScalar operator/(const CScalar& a, const CScalar& b) {
        if (b.is_zero()) throw std::domain_error("division by zero complex scalar");
        Scalar m = b.modulus_sq();
        CScalar n = a * b.conj();
        return {n.re / m, n.im / m};
    }
    bool operator==(const CScalar& o) const { return re == o.re && im == o.im; }
    bool operator!=(const CScalar& o) const { return !(*this == o); }

    std::complex<double> eval(double theta) const { return {re.eval(theta), im.eval(theta)}; }
};

inline CScalar cpow(const CScalar& base, const BigInt& e) {
    CScalar b = base;
    BigInt n = e;
    if (n < 0) {
        b = CScalar(1) / b;
        n = -n;
    }
    CScalar acc(1);
    while (n > 0) {
        if ((n & 1) != 0) acc = acc * b;
        b = b * b;
        n >>= 1;
    }
    return acc;
}

/// The group V x| A with V = C^n, A = R^k, acting diagonally: the j-th
/// coordinate of V is scaled by exp(<growth_j, a> + i <rotation_j, a>).
struct DiagonalSemidirectSpec {
    size_t n = 0, k = 0;
    std::vector<Vec<Scalar>> growth;    // eta_j, length k each
    std::vector<Vec<Scalar>> rotation;  // xi_j, length k each

    void validate_shape() const {
        if (n < 1 || k < 1) throw std::invalid_argument("spec requires n >= 1 and k >= 1");
        if (growth.size() != n || rotation.size() != n)
            throw std::invalid_argument("spec requires n growth and n rotation vectors");
        for (const auto& v : growth)
            if (v.size() != k) throw std::invalid_argument("growth vector length must be k");
        for (const auto& v : rotation)
            if (v.size() != k) throw std::invalid_argument("rotation vector length must be k");
    }
};

/// A point (p, xi) of the dual, p in V* identified with C^n and xi in a*.
struct Point {
    std::vector<CScalar> p;
    Vec<Scalar> xi_a;
};

struct NumPoint {
    std::vector<std::complex<double>> p;
    Vec<double> xi_a;
};

inline NumPoint evaluate(const Point& pt, double theta) {
    NumPoint r;
    for (const auto& c : pt.p) r.p.push_back(c.eval(theta));
    r.xi_a = evaluate(pt.xi_a, theta);
    return r;
}

enum class Tri { False = 0, True = 1, Undetermined = 2 };

inline const char* to_string(Tri t) {
    switch (t) {
        case Tri::True: return "true";
        case Tri::False: return "false";
        default: return "undetermined";
    }
}

enum class ZeroPattern { AllZero, AllNonzero, Mixed };

inline ZeroPattern zero_pattern(const std::vector<CScalar>& p) {
    size_t zeros = 0;
    for (const auto& c : p)
        if (c.is_zero()) ++zeros;
    if (zeros == p.size()) return ZeroPattern::AllZero;
    if (zeros == 0) return ZeroPattern::AllNonzero;
    return ZeroPattern::Mixed;
}

/// theta_p from its defining pairing: theta_p(v) = -<p, dalpha(.)v>, where
/// dalpha(a) acts on coordinate j by <growth_j, a> + i <rotation_j, a> and
/// the real pairing on C^n is <p, w> = Re sum_j conj(p_j) w_j.
inline Vec<Scalar> theta_p(const DiagonalSemidirectSpec& s, const std::vector<CScalar>& p,
                           const std::vector<CScalar>& v) {
    if (p.size() != s.n || v.size() != s.n)
        throw std::invalid_argument("theta_p operand length mismatch");
    Vec<Scalar> out = zero_vec<Scalar>(s.k);
    for (size_t l = 0; l < s.k; ++l) {
        Scalar acc(0);
        for (size_t j = 0; j < s.n; ++j) {
            CScalar d(s.growth[j][l], s.rotation[j][l]);
            acc += (p[j].conj() * d * v[j]).re;
        }
        out[l] = -acc;
    }
    return out;
}

/// The same map through the expanded coordinate formula
/// theta_p(v) = sum_j Im(conj(p_j) v_j) xi_j - Re(conj(p_j) v_j) eta_j;
/// kept separate so the two derivations can be compared exactly.
inline Vec<Scalar> theta_p_diagonal(const DiagonalSemidirectSpec& s,
                                    const std::vector<CScalar>& p,
                                    const std::vector<CScalar>& v) {
    if (p.size() != s.n || v.size() != s.n)
        throw std::invalid_argument("theta_p operand length mismatch");
    Vec<Scalar> out = zero_vec<Scalar>(s.k);
    for (size_t j = 0; j < s.n; ++j) {
        CScalar w = p[j].conj() * v[j];
        for (size_t l = 0; l < s.k; ++l)
            out[l] += w.im * s.rotation[j][l] - w.re * s.growth[j][l];
    }
    return out;
}

struct ThetaStructure {
    Mat<Scalar> matrix;  // k x 2n, columns ordered Re v_1, Im v_1, Re v_2, ...
    size_t rank = 0;
    Subspace<Scalar> kernel = Subspace<Scalar>::zero(0);
};

/// Matrix of theta_p as a real-linear map R^{2n} -> R^k.
inline ThetaStructure theta_matrix(const DiagonalSemidirectSpec& s,
                                   const std::vector<CScalar>& p) {
    std::vector<Vec<Scalar>> cols;
    for (size_t j = 0; j < s.n; ++j) {
        std::vector<CScalar> v(s.n, CScalar(0));
        v[j] = CScalar(1);
        cols.push_back(theta_p(s, p, v));
        v[j] = CScalar(Scalar(0), Scalar(1));
        cols.push_back(theta_p(s, p, v));
    }
    ThetaStructure t;
    t.matrix = Mat<Scalar>::from_cols(cols, s.k);
    t.rank = rank(t.matrix);
    t.kernel = kernel_space(t.matrix);
    return t;
}

/// Numeric coadjoint action of (v, a): p goes to the diagonally rescaled
/// alpha(a^{-1})* p and xi drops by theta_p(alpha(a^{-1}) v).
inline NumPoint coadjoint_action(const DiagonalSemidirectSpec& s,
                                 const std::vector<std::complex<double>>& v, const Vec<double>& a,
                                 const NumPoint& pt, double theta) {
    if (v.size() != s.n || a.size() != s.k || pt.p.size() != s.n || pt.xi_a.size() != s.k)
        throw std::invalid_argument("coadjoint action operand length mismatch");
    NumPoint out;
    out.p.resize(s.n);
    std::vector<std::complex<double>> v_back(s.n);
    for (size_t j = 0; j < s.n; ++j) {
        double ge = 0.0, re = 0.0;
        for (size_t l = 0; l < s.k; ++l) {
            ge += s.growth[j][l].eval(theta) * a[l];
            re += s.rotation[j][l].eval(theta) * a[l];
        }
        out.p[j] = std::exp(std::complex<double>(-ge, re)) * pt.p[j];
        v_back[j] = std::exp(std::complex<double>(-ge, -re)) * v[j];
    }
    out.xi_a = pt.xi_a;
    for (size_t l = 0; l < s.k; ++l) {
        double acc = 0.0;
        for (size_t j = 0; j < s.n; ++j) {
            std::complex<double> d(s.growth[j][l].eval(theta), s.rotation[j][l].eval(theta));
            acc += (std::conj(pt.p[j]) * d * v_back[j]).real();
        }
        out.xi_a[l] += acc;  // minus theta_p(v_back), whose l-component is -acc
    }
    return out;
}

inline NumPoint coadjoint_action(const DiagonalSemidirectSpec& s,
                                 const std::vector<std::complex<double>>& v, const Vec<double>& a,
                                 const Point& pt, double theta) {
    return coadjoint_action(s, v, a, evaluate(pt, theta), theta);
}

/// Group law (v, a) . (w, b) = (v + alpha(a) w, a + b), needed to test that
/// the action composes correctly.
inline std::pair<std::vector<std::complex<double>>, Vec<double>> group_product(
    const DiagonalSemidirectSpec& s, const std::vector<std::complex<double>>& v,
    const Vec<double>& a, const std::vector<std::complex<double>>& w, const Vec<double>& b,
    double theta) {
    std::vector<std::complex<double>> pv(s.n);
    for (size_t j = 0; j < s.n; ++j) {
        double ge = 0.0, re = 0.0;
        for (size_t l = 0; l < s.k; ++l) {
            ge += s.growth[j][l].eval(theta) * a[l];
            re += s.rotation[j][l].eval(theta) * a[l];
        }
        pv[j] = v[j] + std::exp(std::complex<double>(ge, re)) * w[j];
    }
    Vec<double> pa(s.k);
    for (size_t l = 0; l < s.k; ++l) pa[l] = a[l] + b[l];
    return {pv, pa};
}

namespace detail {

inline std::vector<size_t> support(const std::vector<CScalar>& p) {
    std::vector<size_t> j;
    for (size_t i = 0; i < p.size(); ++i)
        if (!p[i].is_zero()) j.push_back(i);
    return j;
}

/// {a : <growth_j, a> = 0 for j in J}.
inline Subspace<Scalar> growth_perp(const DiagonalSemidirectSpec& s,
                                    const std::vector<size_t>& J) {
    std::vector<Vec<Scalar>> rows;
    for (size_t j : J) rows.push_back(s.growth[j]);
    if (rows.empty()) return Subspace<Scalar>::full(s.k);
    return kernel_space(Mat<Scalar>::from_rows(rows, s.k));
}

/// Rows of the relation system on integers m: one row per basis vector w of
/// W, with entries <rotation_j, w> for j in J.
inline std::vector<Vec<Scalar>> rotation_relation_rows(const DiagonalSemidirectSpec& s,
                                                       const std::vector<size_t>& J,
                                                       const Subspace<Scalar>& w) {
    std::vector<Vec<Scalar>> rows;
    for (const auto& wb : w.basis()) {
        Vec<Scalar> row(J.size());
        for (size_t idx = 0; idx < J.size(); ++idx) row[idx] = pairing(s.rotation[J[idx]], wb);
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Matrix of a |-> (<rotation_j, a>)_{j in J} restricted to W, in the basis
/// of W.
inline Mat<Scalar> restricted_rotation_map(const DiagonalSemidirectSpec& s,
                                           const std::vector<size_t>& J,
                                           const Subspace<Scalar>& w) {
    Mat<Scalar> m(J.size(), w.dim());
    for (size_t r = 0; r < J.size(); ++r)
        for (size_t c = 0; c < w.dim(); ++c) m(r, c) = pairing(s.rotation[J[r]], w.basis()[c]);
    return m;
}

/// dim over Q of (column span of L) intersected with Q^rows: the defining
/// equations of the span are its left kernel, and splitting theta-degrees
/// turns them into a rational system.
inline size_t rational_points_dim(const Mat<Scalar>& l) {
    std::vector<Vec<Scalar>> left_kernel = kernel(l.transpose());
    Mat<Rat> split = split_theta_conditions(left_kernel, l.rows());
    return l.rows() - rank(split);
}

inline std::vector<size_t> all_indices(size_t n) {
    std::vector<size_t> j(n);
    for (size_t i = 0; i < n; ++i) j[i] = i;
    return j;
}

}  // namespace detail

struct StabilizerReport {
    size_t ker_theta_dim = 0;
    size_t a_connected_dim = 0;
    size_t discrete_rank = 0;
    // Generators of the connected part, for fixed-point checks.
    std::vector<Vec<Scalar>> ker_theta_basis;    // in R^{2n} coordinates
    std::vector<Vec<Scalar>> a_connected_basis;  // in R^k

    size_t connected_dim() const { return ker_theta_dim + a_connected_dim; }
};

/// Stabilizer of (p, xi): Ker theta_p semidirect A(p).  The connected part
/// of A(p) kills both pairings on the support of p; the discrete part is the
/// lattice of integer rotation patterns reachable inside the growth kernel.
inline StabilizerReport stabilizer_group(const DiagonalSemidirectSpec& s,
                                         const std::vector<CScalar>& p,
                                         const Vec<Scalar>& /*xi_a*/) {
    StabilizerReport rep;
    ThetaStructure t = theta_matrix(s, p);
    rep.ker_theta_dim = 2 * s.n - t.rank;
    rep.ker_theta_basis = t.kernel.basis();

    std::vector<size_t> J = detail::support(p);
    std::vector<Vec<Scalar>> rows;
    for (size_t j : J) {
        rows.push_back(s.growth[j]);
        rows.push_back(s.rotation[j]);
    }
    Subspace<Scalar> conn = rows.empty()
                                ? Subspace<Scalar>::full(s.k)
                                : kernel_space(Mat<Scalar>::from_rows(rows, s.k));
    rep.a_connected_dim = conn.dim();
    rep.a_connected_basis = conn.basis();

    Subspace<Scalar> w = detail::growth_perp(s, J);
    Mat<Scalar> l = detail::restricted_rotation_map(s, J, w);
    rep.discrete_rank = J.empty() ? 0 : detail::rational_points_dim(l);
    return rep;
}

struct ConditionsABC {
    bool a = false;
    bool b = false;
    bool c_injective = false;
    bool c_dense = false;
    bool c_proper = false;

    bool all() const { return a && b && c_injective && c_dense && c_proper; }
};

/// The density conditions for the diagonal family.  (a) full span of all
/// growth and rotation covectors; (b) independent growth covectors;
/// (c) behavior of the rotation map on W = growth^perp: dense winding
/// (trivial integer-relation lattice), proper image, injective with no
/// rational points in the image.
inline ConditionsABC check_conditions_abc(const DiagonalSemidirectSpec& s) {
    ConditionsABC c;
    std::vector<Vec<Scalar>> all_rows;
    for (size_t j = 0; j < s.n; ++j) {
        all_rows.push_back(s.rotation[j]);
        all_rows.push_back(s.growth[j]);
    }
    c.a = rank(Mat<Scalar>::from_rows(all_rows, s.k)) == s.k;

    std::vector<Vec<Scalar>> eta_rows(s.growth.begin(), s.growth.end());
    c.b = rank(Mat<Scalar>::from_rows(eta_rows, s.k)) == s.n;

    std::vector<size_t> all_j = detail::all_indices(s.n);
    Subspace<Scalar> w = detail::growth_perp(s, all_j);
    c.c_dense = relation_lattice_trivial(detail::rotation_relation_rows(s, all_j, w), s.n);

    Mat<Scalar> l = detail::restricted_rotation_map(s, all_j, w);
    size_t l_rank = rank(l);
    c.c_proper = l_rank < s.n;
    c.c_injective = (l_rank == w.dim()) && (detail::rational_points_dim(l) == 0);
    return c;
}

/// Under conditions (a)-(c) the dimensions are forced to satisfy 2n > k.
inline bool two_n_greater_k_check(const DiagonalSemidirectSpec& s) {
    if (!check_conditions_abc(s).all())
        throw std::domain_error("2n > k check requires conditions (a), (b), (c) to hold");
    return 2 * s.n > s.k;
}

/// Tangent matrix of the A-action at p, a 2n x k real matrix; full rank 2n
/// means the orbit of p itself is open in V*.
inline Mat<Scalar> action_tangent_matrix(const DiagonalSemidirectSpec& s,
                                         const std::vector<CScalar>& p) {
    Mat<Scalar> m(2 * s.n, s.k);
    for (size_t j = 0; j < s.n; ++j)
        for (size_t l = 0; l < s.k; ++l) {
            // d/dt exp(-<eta_j,a>t + i<xi_j,a>t) p_j at t = 0
            m(2 * j, l) = -p[j].re * s.growth[j][l] - p[j].im * s.rotation[j][l];
            m(2 * j + 1, l) = -p[j].im * s.growth[j][l] + p[j].re * s.rotation[j][l];
        }
    return m;
}

inline bool is_single_orbit(const DiagonalSemidirectSpec& s, const std::vector<CScalar>& p) {
    return rank(action_tangent_matrix(s, p)) == 2 * s.n;
}

inline bool density_lattice_trivial(const DiagonalSemidirectSpec& s) {
    std::vector<size_t> all_j = detail::all_indices(s.n);
    Subspace<Scalar> w = detail::growth_perp(s, all_j);
    return relation_lattice_trivial(detail::rotation_relation_rows(s, all_j, w), s.n);
}

/// Openness of the quasi-orbit through (p, .): theta_p must be onto a* and
/// the A-quasi-orbit of p must be open, which inside the scope (all p_j
/// nonzero, independent growth covectors) means dense phase winding or an
/// orbit that is already open.
inline Tri quasiorbit_open(const DiagonalSemidirectSpec& s, const std::vector<CScalar>& p) {
    ZeroPattern zp = zero_pattern(p);
    if (zp == ZeroPattern::Mixed) return Tri::Undetermined;
    if (zp == ZeroPattern::AllZero) return Tri::False;
    std::vector<Vec<Scalar>> eta_rows(s.growth.begin(), s.growth.end());
    if (rank(Mat<Scalar>::from_rows(eta_rows, s.k)) != s.n) return Tri::Undetermined;
    if (theta_matrix(s, p).rank != s.k) return Tri::False;
    if (density_lattice_trivial(s) || is_single_orbit(s, p)) return Tri::True;
    return Tri::False;
}

/// Equality of coadjoint orbit closures of two points.  Decides the two
/// halves: closure equality of the diagonal A-orbits in V*, and membership
/// of the a*-difference in the image of theta_p.
inline Tri orbit_closure_equal(const DiagonalSemidirectSpec& s, const Point& pt1,
                               const Point& pt2) {
    if (pt1.p.size() != s.n || pt2.p.size() != s.n || pt1.xi_a.size() != s.k ||
        pt2.xi_a.size() != s.k)
        throw std::invalid_argument("orbit closure operand length mismatch");
    if (pt1.p == pt2.p && pt1.xi_a == pt2.xi_a) return Tri::True;

    ZeroPattern z1 = zero_pattern(pt1.p), z2 = zero_pattern(pt2.p);
    if (z1 == ZeroPattern::Mixed || z2 == ZeroPattern::Mixed) return Tri::Undetermined;
    if (z1 == ZeroPattern::AllZero && z2 == ZeroPattern::AllZero) {
        // Both orbits are fixed points (0, xi).
        return pt1.xi_a == pt2.xi_a ? Tri::True : Tri::False;
    }
    if (z1 != z2) return Tri::False;

    // xi difference must land in the image of theta_p, which on (C^x)^n is
    // the span of all growth and rotation covectors.
    ThetaStructure t = theta_matrix(s, pt1.p);
    Vec<Scalar> diff = vec_sub(pt1.xi_a, pt2.xi_a);
    if (!in_column_span(t.matrix, diff)) return Tri::False;

    std::vector<Vec<Scalar>> eta_rows(s.growth.begin(), s.growth.end());
    if (rank(Mat<Scalar>::from_rows(eta_rows, s.k)) != s.n) return Tri::Undetermined;
    if (density_lattice_trivial(s)) return Tri::True;

    // Nontrivial phase lattice: decidable when the moduli agree exactly,
    // through the torsion test on a lattice basis.
    for (size_t j = 0; j < s.n; ++j)
        if (pt1.p[j].modulus_sq() != pt2.p[j].modulus_sq()) return Tri::Undetermined;
    std::vector<size_t> all_j = detail::all_indices(s.n);
    Subspace<Scalar> w = detail::growth_perp(s, all_j);
    auto basis = relation_lattice_basis(detail::rotation_relation_rows(s, all_j, w), s.n);
    for (const auto& m : basis) {
        CScalar prod(1);
        for (size_t j = 0; j < s.n; ++j) prod = prod * cpow(pt2.p[j] / pt1.p[j], m[j]);
        if (!(prod == CScalar(1))) return Tri::False;
    }
    return Tri::True;
}

struct Verdict {
    Tri square_integrable = Tri::Undetermined;
    Tri type_I = Tri::Undetermined;
    std::string rule;
    std::map<std::string, bool> facts;
    std::vector<std::string> warnings;
};

/// Rule table for the diagonal family.
///   R1: quasi-orbit not open or center of G nontrivial -> not SI.
///   R2: open single-orbit quasi-orbit, trivial stabilizer -> SI and type I.
///   R3: open single orbit, discrete stabilizer part -> not SI, type I.
///   R4: open dense non-single quasi-orbit, connected stabilizer -> SI, not
///       type I.
/// Everything else is undetermined, with the established facts attached.
inline Verdict classify(const DiagonalSemidirectSpec& s, const std::vector<CScalar>& p,
                        const Vec<Scalar>& xi_a) {
    Verdict v;
    ConditionsABC abc = check_conditions_abc(s);
    bool trivial_center = abc.a;
    Tri qo = quasiorbit_open(s, p);
    bool single = is_single_orbit(s, p);
    StabilizerReport st = stabilizer_group(s, p, xi_a);
    bool stab_trivial =
        st.ker_theta_dim == 0 && st.a_connected_dim == 0 && st.discrete_rank == 0;
    bool stab_connected = st.discrete_rank == 0;

    v.facts["trivial_center"] = trivial_center;
    v.facts["is_single_orbit"] = single;
    v.facts["stabilizer_trivial"] = stab_trivial;
    v.facts["stabilizer_connected"] = stab_connected;
    v.facts["density_ok"] = density_lattice_trivial(s);
    if (qo != Tri::Undetermined) v.facts["quasiorbit_open"] = (qo == Tri::True);
    else
        v.warnings.push_back(
            "quasi-orbit openness undetermined: point or spec outside the analyzed scope "
            "(mixed zero pattern in p, or growth covectors not independent)");

    if (qo == Tri::True && st.ker_theta_dim > 0)
        v.warnings.push_back(
            "open quasi-orbit with a positive-dimensional stabilizer (dim Ker theta_p = " +
            std::to_string(st.ker_theta_dim) +
            "): the quasi-orbit is dense but not a single orbit, and the reported stabilizer "
            "follows the exact kernel computation");

    if (!trivial_center || qo == Tri::False) {
        v.rule = "R1";
        v.square_integrable = Tri::False;
        v.type_I = Tri::Undetermined;
        return v;
    }
    if (qo == Tri::Undetermined) {
        v.rule = "U0";
        return v;
    }
    if (single && stab_trivial) {
        v.rule = "R2";
        v.square_integrable = Tri::True;
        v.type_I = Tri::True;
        return v;
    }
    if (single && st.discrete_rank > 0) {
        v.rule = "R3";
        v.square_integrable = Tri::False;
        v.type_I = Tri::True;
        return v;
    }
    if (!single && stab_connected) {
        v.rule = "R4";
        v.square_integrable = Tri::True;
        v.type_I = Tri::False;
        return v;
    }
    v.rule = "U0";
    v.warnings.push_back("dense non-single quasi-orbit with a disconnected stabilizer is "
                         "outside the decided rule table");
    return v;
}

}  // namespace coorbit
