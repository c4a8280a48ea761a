#include <catch2/catch_amalgamated.hpp>

#include <coorbit/semidirect.hpp>

#include "helpers.hpp"

using namespace coorbit;
using namespace coorbit::testing;

namespace {
const double kTheta = 1.4142135623730951;

std::vector<CScalar> random_complex(size_t n, SplitMix64& rng, int64_t bound = 4) {
    std::vector<CScalar> v;
    for (size_t j = 0; j < n; ++j)
        v.push_back(CScalar(Scalar(rng.next_small_rational(bound)),
                            Scalar(rng.next_small_rational(bound))));
    return v;
}

DiagonalSemidirectSpec random_spec(SplitMix64& rng) {
    DiagonalSemidirectSpec s;
    s.n = static_cast<size_t>(rng.next_int(1, 3));
    s.k = static_cast<size_t>(rng.next_int(1, 4));
    for (size_t j = 0; j < s.n; ++j) {
        Vec<Scalar> eta(s.k), xi(s.k);
        for (size_t l = 0; l < s.k; ++l) {
            eta[l] = Scalar(rng.next_small_rational(3));
            xi[l] = Scalar(rng.next_small_rational(3)) +
                    Scalar(rng.next_small_rational(2)) * Scalar(theta_power(1));
        }
        s.growth.push_back(eta);
        s.rotation.push_back(xi);
    }
    return s;
}
}  // namespace

TEST_CASE("complex scalar arithmetic") {
    CScalar i(Scalar(0), Scalar(1));
    CHECK(i * i == CScalar(-1));
    CHECK(cpow(i, BigInt(3)) == CScalar(Scalar(0), Scalar(-1)));
    CHECK(cpow(CScalar(2), BigInt(-2)) == CScalar(Scalar(Rat(1, 4)), Scalar(0)));
    CHECK(cpow(cs(1, 1), BigInt(2)) == cs(0, 2));
    CHECK(cs(3, -4).modulus_sq() == Scalar(25));

    SplitMix64 rng(5);
    for (int t = 0; t < 20; ++t) {
        CScalar a(Scalar(rng.next_small_rational()), Scalar(rng.next_small_rational()));
        CScalar b(Scalar(rng.next_small_rational()), Scalar(rng.next_small_rational()));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
    CHECK_THROWS_AS(cs(1, 0) / cs(0, 0), std::domain_error);
}

TEST_CASE("spec shape validation") {
    CHECK_NOTHROW(make_axb().validate_shape());
    CHECK_NOTHROW(make_codim3().validate_shape());
    CHECK_NOTHROW(make_dense5().validate_shape());

    DiagonalSemidirectSpec bad = make_axb();
    bad.n = 0;
    CHECK_THROWS_AS(bad.validate_shape(), std::invalid_argument);
    bad = make_axb();
    bad.growth.push_back(sv({1, 0}));
    CHECK_THROWS_AS(bad.validate_shape(), std::invalid_argument);
    bad = make_axb();
    bad.rotation = {sv({0, 1, 0})};
    CHECK_THROWS_AS(bad.validate_shape(), std::invalid_argument);
}

TEST_CASE("integer relation lattices") {
    auto S = [](int v) { return Scalar(v); };
    Vec<Scalar> row_irrational{S(1), Scalar(theta_power(1))};
    CHECK(relation_lattice_trivial({row_irrational}, 2));
    CHECK(relation_lattice_basis({row_irrational}, 2).empty());

    Vec<Scalar> row_equal{S(1), S(1)};
    auto basis = relation_lattice_basis({row_equal}, 2);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0][0] + basis[0][1] == 0);
    CHECK((basis[0][0] == 1 || basis[0][0] == -1));

    // Denominators are cleared: m1/2 + m2/3 = 0 has primitive solution (2,-3).
    Vec<Scalar> row_frac{Scalar(Rat(1, 2)), Scalar(Rat(1, 3))};
    basis = relation_lattice_basis({row_frac}, 2);
    REQUIRE(basis.size() == 1);
    CHECK(abs(basis[0][0]) == 2);
    CHECK(basis[0][0] * 3 + basis[0][1] * 2 == 0);

    // Saturated: the primitive vector itself, not a multiple.
    Vec<Scalar> row_scaled{S(2), S(4)};
    basis = relation_lattice_basis({row_scaled}, 2);
    REQUIRE(basis.size() == 1);
    CHECK(abs(basis[0][0]) == 2);
    CHECK(abs(basis[0][1]) == 1);

    CHECK(relation_space_dim({}, 3) == 3);
    CHECK(relation_lattice_basis({}, 2).size() == 2);

    // Mixed theta degrees split into independent rational conditions.
    Vec<Scalar> row_mixed{Scalar(theta_power(2)) - S(1), S(2)};
    Mat<Rat> split = split_theta_conditions({row_mixed}, 2);
    CHECK(rank(split) == 2);
    CHECK(relation_lattice_trivial({row_mixed}, 2));
}

TEST_CASE("pairing map on hand-checked inputs") {
    DiagonalSemidirectSpec axb = make_axb();
    std::vector<CScalar> p1{cs(1, 0)};
    CHECK(theta_p(axb, p1, {cs(0, 1)}) == sv({0, 1}));
    CHECK(theta_p(axb, p1, {cs(1, 0)}) == sv({-1, 0}));

    DiagonalSemidirectSpec c3 = make_codim3();
    Vec<Scalar> got = theta_p(c3, ones_p(2), {cs(0, 1), cs(0, 1)});
    Vec<Scalar> want = zero_vec<Scalar>(3);
    want[2] = Scalar(1) + Scalar(theta_power(1));
    CHECK(got == want);

    CHECK_THROWS_AS(theta_p(axb, ones_p(2), {cs(0, 1)}), std::invalid_argument);
}

TEST_CASE("pairing map equals its expanded coordinate form") {
    SplitMix64 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        DiagonalSemidirectSpec s = random_spec(rng);
        std::vector<CScalar> p = random_complex(s.n, rng);
        std::vector<CScalar> v = random_complex(s.n, rng);
        CHECK(theta_p(s, p, v) == theta_p_diagonal(s, p, v));

        // Rational rescaling of p and additivity in p.
        Scalar lam(Rat(rng.next_int(-5, 5), 3));
        std::vector<CScalar> lp = p, q = random_complex(s.n, rng), pq = p;
        for (size_t j = 0; j < s.n; ++j) {
            lp[j] = CScalar(lam, Scalar(0)) * p[j];
            pq[j] = p[j] + q[j];
        }
        CHECK(theta_p(s, lp, v) == vec_scale(lam, theta_p(s, p, v)));
        CHECK(theta_p(s, pq, v) == vec_add(theta_p(s, p, v), theta_p(s, q, v)));
    }
}

TEST_CASE("matrix of the pairing map") {
    ThetaStructure t = theta_matrix(make_axb(), {cs(1, 0)});
    CHECK(t.rank == 2);
    CHECK(t.kernel.dim() == 0);
    CHECK(t.matrix == Mat<Scalar>{{-1, 0}, {0, 1}});

    t = theta_matrix(make_axb(), {cs(0, 0)});
    CHECK(t.rank == 0);
    CHECK(t.kernel.dim() == 2);

    t = theta_matrix(make_codim3(), ones_p(2));
    CHECK(t.rank == 3);
    REQUIRE(t.kernel.dim() == 1);
    Vec<Scalar> kv = t.kernel.basis()[0];
    CHECK(t.matrix * kv == zero_vec<Scalar>(3));
    CHECK(!kv[1].is_zero());
}

TEST_CASE("coadjoint action on hand-checked group elements") {
    DiagonalSemidirectSpec axb = make_axb();
    Point pt{{cs(1, 0)}, sv({0, 0})};

    // Pure growth move rescales p.
    NumPoint moved = coadjoint_action(axb, {{0.0, 0.0}}, {std::log(2.0), 0.0}, pt, kTheta);
    CHECK(std::abs(moved.p[0] - 0.5) < 1e-12);
    CHECK(std::abs(moved.xi_a[0]) + std::abs(moved.xi_a[1]) < 1e-12);

    // Pure rotation move turns the phase.
    moved = coadjoint_action(axb, {{0.0, 0.0}}, {0.0, std::acos(-1.0) / 2}, pt, kTheta);
    CHECK(std::abs(moved.p[0] - std::complex<double>(0.0, 1.0)) < 1e-12);

    // Pure translation shifts xi by -theta_p(v).
    moved = coadjoint_action(axb, {{1.0, 0.0}}, {0.0, 0.0}, pt, kTheta);
    CHECK(std::abs(moved.p[0] - 1.0) < 1e-12);
    CHECK(std::abs(moved.xi_a[0] - 1.0) < 1e-12);
    CHECK(std::abs(moved.xi_a[1]) < 1e-12);

    // Identity acts trivially.
    moved = coadjoint_action(axb, {{0.0, 0.0}}, {0.0, 0.0}, pt, kTheta);
    CHECK(std::abs(moved.p[0] - 1.0) < 1e-15);
}

TEST_CASE("coadjoint action composes along the group law") {
    SplitMix64 rng(13);
    for (const DiagonalSemidirectSpec& s : {make_axb(), make_codim3(), make_dense5()}) {
        for (int trial = 0; trial < 10; ++trial) {
            auto rand_elt = [&] {
                std::vector<std::complex<double>> v(s.n);
                Vec<double> a(s.k);
                for (auto& c : v) c = {rng.next_unit_double() - 0.5, rng.next_unit_double() - 0.5};
                for (auto& x : a) x = rng.next_unit_double() - 0.5;
                return std::make_pair(v, a);
            };
            auto [v1, a1] = rand_elt();
            auto [v2, a2] = rand_elt();
            NumPoint pt;
            for (size_t j = 0; j < s.n; ++j)
                pt.p.push_back({rng.next_unit_double() - 0.5, rng.next_unit_double() - 0.5});
            pt.xi_a.assign(s.k, 0.0);
            for (auto& x : pt.xi_a) x = rng.next_unit_double() - 0.5;

            NumPoint lhs = coadjoint_action(s, v1, a1, coadjoint_action(s, v2, a2, pt, kTheta),
                                            kTheta);
            auto [pv, pa] = group_product(s, v1, a1, v2, a2, kTheta);
            NumPoint rhs = coadjoint_action(s, pv, pa, pt, kTheta);
            for (size_t j = 0; j < s.n; ++j) CHECK(std::abs(lhs.p[j] - rhs.p[j]) < 1e-10);
            for (size_t l = 0; l < s.k; ++l) CHECK(std::abs(lhs.xi_a[l] - rhs.xi_a[l]) < 1e-10);
        }
    }
}

TEST_CASE("stabilizer structure of marked points") {
    DiagonalSemidirectSpec axb = make_axb();
    StabilizerReport r = stabilizer_group(axb, {cs(1, 0)}, sv({0, 0}));
    CHECK(r.ker_theta_dim == 0);
    CHECK(r.a_connected_dim == 0);
    CHECK(r.discrete_rank == 1);
    CHECK(r.connected_dim() == 0);

    r = stabilizer_group(axb, {cs(0, 0)}, sv({0, 0}));
    CHECK(r.ker_theta_dim == 2);
    CHECK(r.a_connected_dim == 2);
    CHECK(r.discrete_rank == 0);

    r = stabilizer_group(make_codim3(), ones_p(2), sv({0, 0, 0}));
    CHECK(r.ker_theta_dim == 1);
    CHECK(r.a_connected_dim == 0);
    CHECK(r.discrete_rank == 0);

    r = stabilizer_group(make_codim3_rational(), ones_p(2), sv({0, 0, 0}));
    CHECK(r.ker_theta_dim == 1);
    CHECK(r.a_connected_dim == 0);
    CHECK(r.discrete_rank == 1);

    r = stabilizer_group(make_dense5(), ones_p(3), sv({0, 0, 0, 0, 0}));
    CHECK(r.ker_theta_dim == 1);
    CHECK(r.a_connected_dim == 0);
    CHECK(r.discrete_rank == 0);
}

TEST_CASE("stabilizer generators fix the point numerically") {
    SplitMix64 rng(17);
    for (const DiagonalSemidirectSpec& s :
         {make_axb(), make_codim3(), make_codim3_rational(), make_dense5()}) {
        std::vector<CScalar> p = ones_p(s.n);
        Vec<Scalar> xi = random_vector(s.k, rng, 3);
        StabilizerReport r = stabilizer_group(s, p, xi);
        Point pt{p, xi};
        NumPoint base = evaluate(pt, kTheta);

        for (const auto& gen : r.ker_theta_basis) {
            std::vector<std::complex<double>> v(s.n);
            for (size_t j = 0; j < s.n; ++j)
                v[j] = {gen[2 * j].eval(kTheta), gen[2 * j + 1].eval(kTheta)};
            NumPoint moved = coadjoint_action(s, v, Vec<double>(s.k, 0.0), pt, kTheta);
            for (size_t j = 0; j < s.n; ++j) CHECK(std::abs(moved.p[j] - base.p[j]) < 1e-9);
            for (size_t l = 0; l < s.k; ++l) CHECK(std::abs(moved.xi_a[l] - base.xi_a[l]) < 1e-9);
        }
        for (const auto& gen : r.a_connected_basis) {
            NumPoint moved = coadjoint_action(s, std::vector<std::complex<double>>(s.n, 0.0),
                                              evaluate(gen, kTheta), pt, kTheta);
            for (size_t j = 0; j < s.n; ++j) CHECK(std::abs(moved.p[j] - base.p[j]) < 1e-9);
            for (size_t l = 0; l < s.k; ++l) CHECK(std::abs(moved.xi_a[l] - base.xi_a[l]) < 1e-9);
        }
    }
}

TEST_CASE("span and independence conditions") {
    ConditionsABC c = check_conditions_abc(make_axb());
    CHECK(c.a);
    CHECK(c.b);
    CHECK(c.c_dense);
    CHECK_FALSE(c.c_proper);
    CHECK_FALSE(c.c_injective);
    CHECK_FALSE(c.all());

    c = check_conditions_abc(make_codim3());
    CHECK(c.a);
    CHECK(c.b);
    CHECK(c.c_dense);
    CHECK(c.c_proper);
    CHECK(c.c_injective);
    CHECK(c.all());

    c = check_conditions_abc(make_codim3_rational());
    CHECK(c.a);
    CHECK(c.b);
    CHECK_FALSE(c.c_dense);
    CHECK(c.c_proper);
    CHECK_FALSE(c.c_injective);

    c = check_conditions_abc(make_dense5());
    CHECK(c.all());

    CHECK(two_n_greater_k_check(make_codim3()));
    CHECK(two_n_greater_k_check(make_dense5()));
    CHECK_THROWS_AS(two_n_greater_k_check(make_axb()), std::domain_error);
}

TEST_CASE("density is stable under integer rescaling of the frequencies") {
    SplitMix64 rng(19);
    for (const DiagonalSemidirectSpec& s :
         {make_axb(), make_codim3(), make_codim3_rational(), make_dense5()}) {
        bool base = density_lattice_trivial(s);
        for (int trial = 0; trial < 8; ++trial) {
            DiagonalSemidirectSpec scaled = s;
            for (size_t j = 0; j < s.n; ++j) {
                int c = 0;
                while (c == 0) c = static_cast<int>(rng.next_int(-3, 3));
                scaled.rotation[j] = vec_scale(Scalar(c), s.rotation[j]);
            }
            CHECK(density_lattice_trivial(scaled) == base);
        }
    }
}

TEST_CASE("single orbits and quasi-orbit openness") {
    CHECK(is_single_orbit(make_axb(), {cs(1, 0)}));
    CHECK_FALSE(is_single_orbit(make_axb(), {cs(0, 0)}));
    CHECK_FALSE(is_single_orbit(make_codim3(), ones_p(2)));
    CHECK_FALSE(is_single_orbit(make_dense5(), ones_p(3)));

    CHECK(quasiorbit_open(make_axb(), {cs(1, 0)}) == Tri::True);
    CHECK(quasiorbit_open(make_axb(), {cs(0, 0)}) == Tri::False);
    CHECK(quasiorbit_open(make_codim3(), ones_p(2)) == Tri::True);
    CHECK(quasiorbit_open(make_codim3_rational(), ones_p(2)) == Tri::False);
    CHECK(quasiorbit_open(make_dense5(), ones_p(3)) == Tri::True);
    CHECK(quasiorbit_open(make_codim3(), {cs(1, 0), cs(0, 0)}) == Tri::Undetermined);

    // Growth covectors must stay independent for the openness analysis.
    DiagonalSemidirectSpec dep = make_codim3();
    dep.growth[1] = dep.growth[0];
    CHECK(quasiorbit_open(dep, ones_p(2)) == Tri::Undetermined);
}

TEST_CASE("orbit closure comparison") {
    DiagonalSemidirectSpec axb = make_axb();
    Point base{{cs(1, 0)}, sv({0, 0})};
    CHECK(orbit_closure_equal(axb, base, base) == Tri::True);
    CHECK(orbit_closure_equal(axb, base, Point{{cs(5, 7)}, sv({3, 4})}) == Tri::True);
    CHECK(orbit_closure_equal(axb, base, Point{{cs(0, 0)}, sv({0, 0})}) == Tri::False);
    CHECK(orbit_closure_equal(axb, Point{{cs(0, 0)}, sv({1, 2})},
                              Point{{cs(0, 0)}, sv({1, 2})}) == Tri::True);
    CHECK(orbit_closure_equal(axb, Point{{cs(0, 0)}, sv({1, 2})},
                              Point{{cs(0, 0)}, sv({1, 3})}) == Tri::False);

    DiagonalSemidirectSpec c3 = make_codim3();
    Point c3base{ones_p(2), sv({0, 0, 0})};
    CHECK(orbit_closure_equal(c3, c3base, Point{{cs(2, 0), cs(0, 3)}, sv({1, 1, 5})}) ==
          Tri::True);
    CHECK(orbit_closure_equal(c3, c3base, Point{{cs(1, 0), cs(0, 0)}, sv({0, 0, 0})}) ==
          Tri::Undetermined);

    // Rationally dependent frequencies: phases must match up to the lattice.
    DiagonalSemidirectSpec cr = make_codim3_rational();
    Point crbase{ones_p(2), sv({0, 0, 0})};
    CHECK(orbit_closure_equal(cr, crbase, Point{{cs(0, 1), cs(0, 1)}, sv({0, 0, 0})}) ==
          Tri::True);
    CHECK(orbit_closure_equal(cr, crbase, Point{{cs(-1, 0), cs(-1, 0)}, sv({2, 0, 0})}) ==
          Tri::True);
    CHECK(orbit_closure_equal(cr, crbase, Point{{cs(0, 1), cs(1, 0)}, sv({0, 0, 0})}) ==
          Tri::False);
    CHECK(orbit_closure_equal(cr, crbase, Point{{cs(2, 0), cs(2, 0)}, sv({0, 0, 0})}) ==
          Tri::Undetermined);

    // xi difference outside the image of the pairing map.
    DiagonalSemidirectSpec flat;
    flat.n = 1;
    flat.k = 2;
    flat.growth = {sv({1, 0})};
    flat.rotation = {sv({0, 0})};
    Point f1{{cs(1, 0)}, sv({0, 0})};
    CHECK(orbit_closure_equal(flat, f1, Point{{cs(2, 0)}, sv({0, 1})}) == Tri::False);
    CHECK(orbit_closure_equal(flat, f1, Point{{cs(2, 0)}, sv({0, 0})}) == Tri::Undetermined);

    CHECK_THROWS_AS(orbit_closure_equal(axb, base, c3base), std::invalid_argument);

    // Symmetry on a deterministic sample of pairs.
    SplitMix64 rng(29);
    for (int trial = 0; trial < 25; ++trial) {
        Point a{random_complex(2, rng, 2), random_vector(3, rng, 2)};
        Point b{random_complex(2, rng, 2), random_vector(3, rng, 2)};
        CHECK(orbit_closure_equal(c3, a, b) == orbit_closure_equal(c3, b, a));
        CHECK(orbit_closure_equal(cr, a, b) == orbit_closure_equal(cr, b, a));
        CHECK(orbit_closure_equal(c3, a, a) == Tri::True);
    }
}

TEST_CASE("verdict rules on the bundled family") {
    Verdict v = classify(make_axb(), {cs(1, 0)}, sv({0, 0}));
    CHECK(v.rule == "R3");
    CHECK(v.square_integrable == Tri::False);
    CHECK(v.type_I == Tri::True);
    CHECK(v.facts.at("trivial_center"));
    CHECK(v.facts.at("quasiorbit_open"));
    CHECK(v.facts.at("is_single_orbit"));
    CHECK_FALSE(v.facts.at("stabilizer_trivial"));
    CHECK(v.facts.at("stabilizer_connected") == false);
    CHECK(v.warnings.empty());

    v = classify(make_axb(), {cs(0, 0)}, sv({0, 0}));
    CHECK(v.rule == "R1");
    CHECK(v.square_integrable == Tri::False);
    CHECK(v.type_I == Tri::Undetermined);

    v = classify(make_codim3(), ones_p(2), sv({0, 0, 0}));
    CHECK(v.rule == "R4");
    CHECK(v.square_integrable == Tri::True);
    CHECK(v.type_I == Tri::False);
    CHECK(v.facts.at("density_ok"));
    CHECK_FALSE(v.facts.at("is_single_orbit"));
    REQUIRE(v.warnings.size() == 1);
    CHECK(v.warnings[0].find("dim Ker theta_p = 1") != std::string::npos);

    v = classify(make_codim3_rational(), ones_p(2), sv({0, 0, 0}));
    CHECK(v.rule == "R1");
    CHECK(v.square_integrable == Tri::False);
    CHECK(v.type_I == Tri::Undetermined);
    CHECK_FALSE(v.facts.at("density_ok"));

    v = classify(make_dense5(), ones_p(3), sv({0, 0, 0, 0, 0}));
    CHECK(v.rule == "R4");
    CHECK(v.square_integrable == Tri::True);
    CHECK(v.type_I == Tri::False);

    // Mixed zero pattern: outside the analyzed scope.
    v = classify(make_codim3(), {cs(1, 0), cs(0, 0)}, sv({0, 0, 0}));
    CHECK(v.rule == "U0");
    CHECK(v.square_integrable == Tri::Undetermined);
    CHECK(v.type_I == Tri::Undetermined);
    CHECK(v.facts.count("quasiorbit_open") == 0);
    REQUIRE_FALSE(v.warnings.empty());
}
