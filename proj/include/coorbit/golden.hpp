#pragma once

#include <coorbit/json_io.hpp>
#include <coorbit/sampling.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

namespace coorbit {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

namespace golden_detail {

inline json load(const std::string& dir, const std::string& name) {
    std::ifstream in(dir + "/" + name);
    if (!in.good()) throw ParseError("cannot open " + dir + "/" + name);
    return json::parse(in);
}

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2e", v);
    return buf;
}

inline double mat_max_diff(const Mat<double>& a, const Mat<double>& b) {
    double m = 0.0;
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

/// Halve x until the evaluated ad-matrix has infinity norm at most 3, so
/// exponentials stay at desk scale for the absolute tolerances below.
inline Vec<Scalar> tame(const LieAlgebra& g, Vec<Scalar> x, double theta) {
    for (int guard = 0; guard < 60 && inf_norm(evaluate(g.ad(x), theta)) > 3.0; ++guard)
        x = vec_scale(Scalar(Rat(1, 2)), x);
    return x;
}

}  // namespace golden_detail

/// Runs the frozen acceptance criteria against the bundled data files.
/// Every check is seed-deterministic; tolerances are fixed here and nowhere
/// else.
inline std::vector<CriterionResult> run_golden_suite(const std::string& data_dir,
                                                     double theta = 1.4142135623730951) {
    using golden_detail::fmt;
    using golden_detail::load;
    std::vector<CriterionResult> results;

    auto run = [&](int id, const std::string& name, std::function<std::string()> body) {
        CriterionResult r;
        r.id = id;
        r.name = name;
        auto t0 = std::chrono::steady_clock::now();
        try {
            r.detail = body();
            r.pass = true;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        results.push_back(std::move(r));
    };
    auto expect = [](bool cond, const std::string& msg) {
        if (!cond) throw std::runtime_error(msg);
    };

    run(1, "ax+b golden orbit and verdict", [&] {
        auto t0 = std::chrono::steady_clock::now();
        DiagonalSemidirectSpec s = semidirect_from_json(load(data_dir, "axb.json"));
        std::vector<CScalar> p{CScalar(1)};
        expect(quasiorbit_open(s, p) == Tri::True, "quasi-orbit should be open");
        StabilizerReport st = stabilizer_group(s, p, zero_vec<Scalar>(s.k));
        expect(st.connected_dim() == 0, "stabilizer should have no connected part");
        expect(st.discrete_rank == 1, "stabilizer should have discrete rank 1");
        Verdict v = classify(s, p, zero_vec<Scalar>(s.k));
        expect(v.rule == "R3" && v.square_integrable == Tri::False && v.type_I == Tri::True,
               "verdict should be R3: not square integrable, type I");
        double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        expect(sec < 1.0, "runtime budget of 1 s exceeded");
        return "open quasi-orbit, stabilizer (0 connected, rank-1 discrete), R3 in " +
               fmt(sec) + " s";
    });

    run(2, "codim3 golden conditions and verdict", [&] {
        auto t0 = std::chrono::steady_clock::now();
        DiagonalSemidirectSpec s = semidirect_from_json(load(data_dir, "codim3.json"));
        ConditionsABC abc = check_conditions_abc(s);
        expect(abc.all(), "conditions (a), (b), (c) should all hold");
        expect(two_n_greater_k_check(s), "2n > k should be confirmed");
        std::vector<CScalar> p{CScalar(1), CScalar(1)};
        expect(quasiorbit_open(s, p) == Tri::True, "quasi-orbit should be open and dense");
        StabilizerReport st = stabilizer_group(s, p, zero_vec<Scalar>(s.k));
        expect(st.a_connected_dim == 0 && st.discrete_rank == 0,
               "acting-part stabilizer should be trivial");
        expect(st.ker_theta_dim == 1, "kernel of the pairing map should be one-dimensional");
        Verdict v = classify(s, p, zero_vec<Scalar>(s.k));
        expect(v.rule == "R4" && v.square_integrable == Tri::True && v.type_I == Tri::False,
               "verdict should be R4: square integrable, not type I");
        bool flagged = false;
        for (const auto& w : v.warnings)
            if (w.find("Ker theta_p") != std::string::npos) flagged = true;
        expect(flagged, "the positive-dimensional kernel should be flagged as a warning");
        double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        expect(sec < 1.0, "runtime budget of 1 s exceeded");
        return "conditions (a)-(c) true, 2n>k, dim Ker theta_p = 1 flagged, R4 in " + fmt(sec) +
               " s";
    });

    run(3, "density sensitivity at rational frequency", [&] {
        DiagonalSemidirectSpec s = semidirect_from_json(load(data_dir, "codim3_rational.json"));
        ConditionsABC abc = check_conditions_abc(s);
        expect(!abc.c_dense, "rational frequencies should break density");
        expect(abc.a && abc.b, "the span conditions should be unaffected");
        Verdict v = classify(s, {CScalar(1), CScalar(1)}, zero_vec<Scalar>(s.k));
        expect(v.rule == "R1" && v.square_integrable == Tri::False &&
                   v.type_I == Tri::Undetermined,
               "verdict should fall to R1 with type I undetermined");
        return "c_dense flips to false, verdict R1 (exact lattice computation)";
    });

    run(4, "coadjoint matrix versus differentiated conjugation", [&] {
        auto t0 = std::chrono::steady_clock::now();
        const char* files[] = {"h3_grading.json", "h3_rational_derivation.json",
                               "filiform4_grading.json"};
        SplitMix64 rng(101);
        double worst = 0.0;
        size_t samples = 0;
        for (const char* f : files) {
            NilExtSpec s = nilext_from_json(load(data_dir, f));
            for (int trial = 0; trial < 18; ++trial) {
                Vec<Scalar> x = random_vector(s.nil.dim(), rng, 2);
                double t = 2.0 * rng.next_unit_double() - 1.0;
                worst = std::max(worst, golden_detail::mat_max_diff(
                                            coadjoint_matrix(s, x, t, theta),
                                            coadjoint_oracle(s, x, t, theta)));
                ++samples;
            }
        }
        expect(samples >= 50, "need at least 50 samples");
        expect(worst < 1e-6, "max |formula - oracle| = " + fmt(worst) + " exceeds 1e-6");
        double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        expect(sec < 10.0, "runtime budget of 10 s exceeded");
        return "max |formula - oracle| = " + fmt(worst) + " over " + std::to_string(samples) +
               " samples on 3 specs (tol 1e-6) in " + fmt(sec) + " s";
    });

    run(5, "psi identity by finite differences", [&] {
        const char* files[] = {"h3_grading.json", "h3_rational_derivation.json",
                               "filiform4_grading.json"};
        SplitMix64 rng(103);
        const double h = 1e-5;
        double worst = 0.0;
        for (const char* f : files) {
            NilExtSpec s = nilext_from_json(load(data_dir, f));
            size_t n = s.nil.dim();
            size_t cls = *s.nil.nilpotency_class();
            NumLieAlgebra num = evaluate(s.nil, theta);
            Mat<double> dn = evaluate(s.derivation, theta);
            for (int trial = 0; trial < 20; ++trial) {
                Vec<Scalar> x = random_vector(n, rng, 2);
                Vec<double> xn = evaluate(x, theta);
                auto shifted = [&](double sarg) {
                    Vec<double> w = expm(sarg * dn) * vec_scale(-1.0, xn);
                    return bch_product(num, cls, xn, w);
                };
                Vec<double> plus = shifted(h), minus = shifted(-h);
                Vec<double> want = evaluate(psi_of_ad(s.nil, x), theta) * (dn * xn);
                for (size_t i = 0; i < n; ++i)
                    worst = std::max(worst,
                                     std::abs((plus[i] - minus[i]) / (2 * h) - want[i]));
            }
        }
        expect(worst < 1e-6, "max derivative mismatch = " + fmt(worst) + " exceeds 1e-6");
        return "max derivative mismatch = " + fmt(worst) +
               " over 20 samples per spec (tol 1e-6)";
    });

    run(6, "derived-ideal annihilators are flow invariants", [&] {
        SplitMix64 rng(107);
        double worst = 0.0;
        for (int a = 0; a < 10; ++a) {
            LieAlgebra g = random_solvable(rng);
            Subspace<Scalar> ann = annihilator(g.derived_ideal());
            for (int pair = 0; pair < 10; ++pair) {
                Vec<Scalar> sigma = zero_vec<Scalar>(g.dim());
                for (const auto& b : ann.basis())
                    sigma = vec_add(sigma,
                                    vec_scale(Scalar(static_cast<int>(rng.next_int(-2, 2))), b));
                if (vec_is_zero(sigma) && ann.dim() > 0) sigma = ann.basis()[0];
                Vec<Scalar> x =
                    golden_detail::tame(g, random_vector(g.dim(), rng, 2), theta);
                Vec<double> sn = evaluate(sigma, theta);
                for (double t : {1.0, -1.0, 0.37, -0.37}) {
                    Vec<double> moved = exp_ad(g, x, t, theta).transpose() * sn;
                    worst = std::max(worst, inf_norm(vec_sub(moved, sn)));
                }
            }
        }
        expect(worst < 1e-9, "max invariance defect = " + fmt(worst) + " exceeds 1e-9");
        return "max |sigma o exp(t ad x) - sigma| = " + fmt(worst) +
               " over 10 algebras x 10 pairs at t in {1, -1, 0.37, -0.37} (tol 1e-9)";
    });

    run(7, "flows confined to the affine slice along the center", [&] {
        const char* files[] = {"h3.json", "filiform4.json", "h3_plus_r.json"};
        FlowParams params;
        params.theta = theta;
        for (const char* f : files) {
            LieAlgebra g = algebra_from_json(load(data_dir, f));
            Covector xi = generic_rank_scan(g).witness;
            expect(check_affine_confinement(g, xi, g.center(), params),
                   std::string(f) + ": a flow sample left the slice");
        }
        return "all flow samples on 3 algebras stay within 1e-9 of the slice (64-step grid, "
               "t in [-2, 2])";
    });

    run(8, "generic scan minima with fixed seed", [&] {
        struct Want {
            const char* file;
            size_t k0;
        } wants[] = {{"h3.json", 1}, {"abelian3.json", 3}, {"xy_y.json", 0}};
        std::string parts;
        for (const auto& w : wants) {
            auto t0 = std::chrono::steady_clock::now();
            LieAlgebra g = algebra_from_json(load(data_dir, w.file));
            GenericScan a = generic_rank_scan(g, 200, 1);
            GenericScan b = generic_rank_scan(g, 200, 1);
            double sec =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            expect(a.k0 == w.k0, std::string(w.file) + ": expected minimal dimension " +
                                     std::to_string(w.k0) + ", got " + std::to_string(a.k0));
            expect(a.k0 == b.k0 && a.witness == b.witness,
                   std::string(w.file) + ": scan is not deterministic");
            expect(a.samples_used <= 200, "sample budget exceeded");
            expect(sec < 1.0, std::string(w.file) + ": runtime budget of 1 s exceeded");
            parts += std::string(w.file) + " k0=" + std::to_string(a.k0) + " ";
        }
        return parts + "(200 samples, seed 1, deterministic)";
    });

    run(9, "codimension-1 classifier family", [&] {
        NilExtSpec grading = nilext_from_json(load(data_dir, "h3_grading.json"));
        Codim1Report r = codim1_classify(grading, theta);
        expect(r.trivial_center_G && r.flat_generic_N && r.center_dim_1 &&
                   r.open_orbits_possible && r.gate.pass,
               "h3 grading should satisfy every open-orbit condition");
        expect(r.verdict.rule == "N1", "h3 grading should classify as N1");

        NilExtSpec mixed = nilext_from_json(load(data_dir, "h3_mixed_derivation.json"));
        Codim1Report m = codim1_classify(mixed, theta);
        expect(!m.gate.pass, "mixed weights should fail the spectral gate");
        expect(!m.open_orbits_possible, "mixed weights should not allow open orbits");

        const char* family[] = {"h3_grading.json", "h3_mixed_derivation.json",
                                "h3_rational_derivation.json", "filiform4_grading.json"};
        for (const char* f : family) {
            Codim1Report rep = codim1_classify(nilext_from_json(load(data_dir, f)), theta);
            if (rep.verdict.square_integrable == Tri::True)
                expect(rep.verdict.type_I == Tri::True,
                       std::string(f) + ": square integrable without type I");
        }
        return "grading passes all conditions (N1), mixed weights fail the gate (N0), and "
               "SI implies type I across the family";
    });

    run(10, "verdict invariants on a randomized corpus", [&] {
        SplitMix64 rng(109);
        size_t violations = 0;
        std::string first;
        auto audit = [&](const Verdict& v, const std::string& who) {
            auto fact_true = [&](const char* key) {
                auto it = v.facts.find(key);
                return it != v.facts.end() && it->second;
            };
            bool ok = true;
            if (v.square_integrable == Tri::True && !fact_true("trivial_center")) ok = false;
            if (v.square_integrable == Tri::True && v.type_I == Tri::True &&
                !fact_true("stabilizer_trivial"))
                ok = false;
            if ((v.square_integrable == Tri::Undetermined ||
                 v.type_I == Tri::Undetermined) &&
                v.facts.empty())
                ok = false;
            if (v.rule == "U0" && v.warnings.empty()) ok = false;
            if (v.rule.empty()) ok = false;
            if (!ok) {
                ++violations;
                if (first.empty()) first = who + " rule=" + v.rule;
            }
        };
        for (int i = 0; i < 500; ++i) {
            if (i % 2 == 0) {
                DiagonalSemidirectSpec s = random_semidirect_spec(rng);
                Point pt = random_semidirect_point(s, rng);
                audit(classify(s, pt.p, pt.xi_a), "semidirect#" + std::to_string(i));
            } else {
                NilExtSpec s = random_nilext_spec(rng);
                audit(codim1_classify(s, theta).verdict, "extension#" + std::to_string(i));
            }
        }
        expect(violations == 0,
               std::to_string(violations) + " invariant violations, first at " + first);
        return "500 verdicts audited, no invariant violations";
    });

    return results;
}

}  // namespace coorbit
