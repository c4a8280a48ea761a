#pragma once

#include <coorbit/bch.hpp>
#include <coorbit/rng.hpp>

#include <string>
#include <vector>

namespace coorbit {

/// Matrix of the map x -> -(xi o ad x), whose kernel is the stabilizer
/// subalgebra of xi.  Rows are indexed by the basis vector the result is
/// paired with, columns by the coordinates of x.
inline Mat<Scalar> stabilizer_matrix(const LieAlgebra& g, const Covector& xi) {
    if (xi.size() != g.dim()) throw std::invalid_argument("covector dimension mismatch");
    size_t n = g.dim();
    Mat<Scalar> m(n, n);
    for (size_t l = 0; l < n; ++l)
        for (size_t i = 0; i < n; ++i) {
            // -<xi, [e_i, e_l]>
            m(l, i) = -pairing(xi, g.structure(i, l));
        }
    return m;
}

/// Stabilizer subalgebra g(xi) = {x : xi o ad x = 0}.
inline Subspace<Scalar> stabilizer_subalg(const LieAlgebra& g, const Covector& xi) {
    return kernel_space(stabilizer_matrix(g, xi));
}

struct OrbitReport {
    Subspace<Scalar> stabilizer = Subspace<Scalar>::zero(0);
    size_t orbit_dim = 0;
    bool is_generic = false;
    bool is_open_orbit = false;
};

struct GenericScan {
    size_t k0 = 0;          // minimal stabilizer dimension found
    Covector witness;       // first sample attaining it
    size_t samples_used = 0;
};

/// Randomized scan for the minimal stabilizer dimension.  Samples are
/// small-integer covectors from a seeded stream; the first sample attaining
/// the running minimum is kept, so a fixed seed reproduces the same witness.
inline GenericScan generic_rank_scan(const LieAlgebra& g, size_t samples = 200,
                                     uint64_t seed = 1) {
    if (samples == 0) throw std::invalid_argument("generic scan needs at least one sample");
    SplitMix64 rng(seed);
    GenericScan scan;
    scan.k0 = g.dim() + 1;
    for (size_t s = 0; s < samples; ++s) {
        Covector xi(g.dim());
        for (size_t i = 0; i < g.dim(); ++i) xi[i] = Scalar(rng.next_small_rational());
        size_t d = stabilizer_subalg(g, xi).dim();
        if (d < scan.k0) {
            scan.k0 = d;
            scan.witness = xi;
        }
    }
    scan.samples_used = samples;
    return scan;
}

inline bool is_generic(const LieAlgebra& g, const Covector& xi, size_t k0) {
    return stabilizer_subalg(g, xi).dim() == k0;
}

/// An orbit is open exactly when the stabilizer is trivial.
inline bool is_open_orbit(const LieAlgebra& g, const Covector& xi) {
    return stabilizer_subalg(g, xi).dim() == 0;
}

inline OrbitReport orbit_report(const LieAlgebra& g, const Covector& xi, size_t k0) {
    OrbitReport r;
    r.stabilizer = stabilizer_subalg(g, xi);
    r.orbit_dim = g.dim() - r.stabilizer.dim();
    r.is_generic = (r.stabilizer.dim() == k0);
    r.is_open_orbit = (r.stabilizer.dim() == 0);
    return r;
}

/// xi(t) = xi o exp(t ad x) sampled on a t-grid at a numeric theta.
inline std::vector<Vec<double>> coadjoint_flow(const LieAlgebra& g, const Covector& xi,
                                               const Vec<Scalar>& x,
                                               const std::vector<double>& t_grid, double theta) {
    Mat<double> a = evaluate(g.ad(x), theta);
    Vec<double> xi0 = evaluate(xi, theta);
    std::vector<Vec<double>> out;
    out.reserve(t_grid.size());
    for (double t : t_grid) out.push_back(expm(t * a).transpose() * xi0);
    return out;
}

struct FlowParams {
    double t_min = -2.0;
    double t_max = 2.0;
    size_t steps = 64;
    double theta = 1.4142135623730951;  // default evaluation point
    double tol = 1e-9;
};

/// Checks numerically that the flow of xi under every basis direction stays
/// inside the affine slice xi + h^perp, in the sense that the pairing with
/// each generator of h is constant.  Preconditions are exact: h must be an
/// ideal contained in the stabilizer of xi.
inline bool check_affine_confinement(const LieAlgebra& g, const Covector& xi,
                                     const Subspace<Scalar>& h, const FlowParams& params = {}) {
    if (h.ambient() != g.dim()) throw std::invalid_argument("subalgebra ambient mismatch");
    for (size_t i = 0; i < g.dim(); ++i)
        for (const auto& b : h.basis())
            if (!h.contains(g.bracket(g.basis_vector(i), b)))
                throw std::invalid_argument("confinement check requires an ideal");
    Subspace<Scalar> stab = stabilizer_subalg(g, xi);
    if (!stab.contains(h))
        throw std::invalid_argument("confinement check requires h inside the stabilizer of xi");

    std::vector<double> grid;
    for (size_t s = 0; s < params.steps; ++s)
        grid.push_back(params.t_min +
                       (params.t_max - params.t_min) * static_cast<double>(s) /
                           static_cast<double>(params.steps - 1));
    std::vector<Vec<double>> h_basis_num;
    for (const auto& b : h.basis()) h_basis_num.push_back(evaluate(b, params.theta));
    Vec<double> xi0 = evaluate(xi, params.theta);

    for (size_t i = 0; i < g.dim(); ++i) {
        std::vector<Vec<double>> flow =
            coadjoint_flow(g, xi, g.basis_vector(i), grid, params.theta);
        for (const auto& eta : flow) {
            Vec<double> diff = vec_sub(eta, xi0);
            for (const auto& b : h_basis_num) {
                double p = 0.0;
                for (size_t l = 0; l < diff.size(); ++l) p += diff[l] * b[l];
                if (std::abs(p) > params.tol) return false;
            }
        }
    }
    return true;
}

/// A nilpotent algebra has flat generic orbits exactly when the generic
/// stabilizer coincides with the center.
inline bool nilpotent_flat_generic(const LieAlgebra& g, size_t samples = 200, uint64_t seed = 1) {
    if (!g.is_nilpotent())
        throw std::domain_error("flatness check requires a nilpotent algebra");
    GenericScan scan = generic_rank_scan(g, samples, seed);
    return stabilizer_subalg(g, scan.witness) == g.center();
}

}  // namespace coorbit
