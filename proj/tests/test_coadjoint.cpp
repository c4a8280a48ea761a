#include <catch2/catch_amalgamated.hpp>

#include <coorbit/coadjoint.hpp>

#include "helpers.hpp"

using namespace coorbit;
using namespace coorbit::testing;

namespace {
const double kTheta = 1.4142135623730951;
}

TEST_CASE("stabilizer subalgebras of hand-checked covectors") {
    LieAlgebra h3 = make_h3();
    Subspace<Scalar> stab = stabilizer_subalg(h3, sv({0, 0, 1}));
    CHECK(stab.dim() == 1);
    CHECK(stab == h3.center());
    // A covector killing the derived ideal has a full stabilizer.
    CHECK(stabilizer_subalg(h3, sv({1, 0, 0})).dim() == 3);

    LieAlgebra xy = make_xy_y();
    CHECK(stabilizer_subalg(xy, sv({0, 1})).dim() == 0);
    CHECK(stabilizer_subalg(xy, sv({1, 0})).dim() == 2);

    LieAlgebra fil = make_filiform4();
    Subspace<Scalar> fs = stabilizer_subalg(fil, sv({0, 0, 0, 1}));
    CHECK(fs.dim() == 2);
    CHECK(fs.contains(sv({0, 1, 0, 0})));
    CHECK(fs.contains(sv({0, 0, 0, 1})));

    Subspace<Scalar> mixed = stabilizer_subalg(fil, sv({0, 0, 1, 1}));
    CHECK(mixed.dim() == 2);
    CHECK(mixed.contains(sv({0, 1, -1, 0})));
    CHECK(mixed.contains(sv({0, 0, 0, 1})));

    CHECK_THROWS_AS(stabilizer_subalg(h3, sv({1, 0})), std::invalid_argument);
}

TEST_CASE("generic scan finds the minimal stabilizer dimension") {
    CHECK(generic_rank_scan(make_abelian(3)).k0 == 3);
    CHECK(generic_rank_scan(make_h3()).k0 == 1);
    CHECK(generic_rank_scan(make_xy_y()).k0 == 0);
    CHECK(generic_rank_scan(make_filiform4()).k0 == 2);
    CHECK(generic_rank_scan(make_ut4()).k0 == 2);

    // Same seed, same witness; a longer run can only lower the minimum.
    LieAlgebra g = make_ut4();
    GenericScan a = generic_rank_scan(g, 200, 7);
    GenericScan b = generic_rank_scan(g, 200, 7);
    CHECK(a.k0 == b.k0);
    CHECK(a.witness == b.witness);
    CHECK(a.samples_used == 200);
    CHECK(generic_rank_scan(g, 50, 7).k0 >= a.k0);
    CHECK(is_generic(g, a.witness, a.k0));

    CHECK_THROWS_AS(generic_rank_scan(g, 0, 7), std::invalid_argument);
}

TEST_CASE("orbit reports and openness") {
    LieAlgebra h3 = make_h3();
    OrbitReport r = orbit_report(h3, sv({0, 0, 1}), 1);
    CHECK(r.stabilizer.dim() == 1);
    CHECK(r.orbit_dim == 2);
    CHECK(r.is_generic);
    CHECK_FALSE(r.is_open_orbit);

    LieAlgebra xy = make_xy_y();
    OrbitReport open = orbit_report(xy, sv({1, 1}), 0);
    CHECK(open.stabilizer.dim() == 0);
    CHECK(open.orbit_dim == 2);
    CHECK(open.is_generic);
    CHECK(open.is_open_orbit);
    CHECK(is_open_orbit(xy, sv({0, 1})));
    CHECK_FALSE(is_open_orbit(xy, sv({1, 0})));
    CHECK_FALSE(is_open_orbit(h3, sv({0, 0, 1})));
}

TEST_CASE("flow of a central covector moves along the annihilated directions") {
    LieAlgebra h3 = make_h3();
    std::vector<double> grid{-2.0, -1.0, 0.0, 0.5, 2.0};
    auto flow = coadjoint_flow(h3, sv({0, 0, 1}), sv({1, 0, 0}), grid, kTheta);
    REQUIRE(flow.size() == grid.size());
    for (size_t s = 0; s < grid.size(); ++s) {
        CHECK(std::abs(flow[s][0]) < 1e-12);
        CHECK(std::abs(flow[s][1] - grid[s]) < 1e-12);
        CHECK(std::abs(flow[s][2] - 1.0) < 1e-12);
    }
}

TEST_CASE("affine confinement along an ideal inside the stabilizer") {
    LieAlgebra h3 = make_h3();
    CHECK(check_affine_confinement(h3, sv({0, 0, 1}), h3.center()));

    LieAlgebra fil = make_filiform4();
    CHECK(check_affine_confinement(fil, sv({0, 0, 0, 1}), fil.center()));

    // span{X} is not an ideal of h3.
    Subspace<Scalar> not_ideal = Subspace<Scalar>::span(3, {sv({1, 0, 0})});
    CHECK_THROWS_WITH(check_affine_confinement(h3, sv({0, 0, 1}), not_ideal),
                      Catch::Matchers::ContainsSubstring("ideal"));

    // The derived ideal of [X,Y] = Y misses the stabilizer of X* + Y*.
    LieAlgebra xy = make_xy_y();
    CHECK_THROWS_WITH(check_affine_confinement(xy, sv({1, 1}), xy.derived_ideal()),
                      Catch::Matchers::ContainsSubstring("stabilizer"));
}

TEST_CASE("flat generic orbits for nilpotent algebras") {
    CHECK(nilpotent_flat_generic(make_h3()));
    CHECK(nilpotent_flat_generic(make_abelian(4)));
    CHECK(nilpotent_flat_generic(make_h3_plus_r()));
    CHECK_FALSE(nilpotent_flat_generic(make_filiform4()));
    CHECK_FALSE(nilpotent_flat_generic(make_ut4()));
    CHECK_THROWS_AS(nilpotent_flat_generic(make_xy_y()), std::domain_error);
}

TEST_CASE("structural invariants of stabilizers") {
    SplitMix64 rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        LieAlgebra g = random_solvable(rng);
        size_t k0 = generic_rank_scan(g, 60, 5).k0;
        Covector xi = random_vector(g.dim(), rng);

        Subspace<Scalar> stab = stabilizer_subalg(g, xi);
        CHECK(stab.contains(g.center()));
        CHECK(stab.dim() >= k0);
        CHECK(orbit_report(g, xi, k0).orbit_dim == g.dim() - stab.dim());
        CHECK(stab.dim() == g.dim() - rank(stabilizer_matrix(g, xi)));

        // Covectors killing the derived ideal are fixed points.
        Subspace<Scalar> ann = annihilator(g.derived_ideal());
        if (ann.dim() > 0) {
            Vec<Scalar> sigma = ann.basis()[trial % ann.dim()];
            CHECK(stabilizer_subalg(g, sigma).dim() == g.dim());
        }
    }
}

TEST_CASE("genericity survives small perturbations of the witness") {
    SplitMix64 rng(83);
    for (const LieAlgebra& g : {make_h3(), make_filiform4(), make_ut4()}) {
        GenericScan scan = generic_rank_scan(g);
        for (int trial = 0; trial < 20; ++trial) {
            Covector moved = scan.witness;
            for (size_t i = 0; i < moved.size(); ++i) {
                Rat delta(rng.next_int(-9, 9), 1000);
                moved[i] += Scalar(delta);
            }
            CHECK(is_generic(g, moved, scan.k0));
        }
    }
}
