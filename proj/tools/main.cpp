// Batch front end: ingests algebra and spec files, runs the analyses, and
// emits human-readable reports plus an optional JSON copy.
//
// Exit codes: 0 determined result, 1 failed check (oracle-check, golden),
// 2 validation failure or undeterminable request, 3 undetermined verdict,
// 4 I/O or parse error.

#include <coorbit/golden.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace coorbit;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInvalid = 2;
constexpr int kUndetermined = 3;
constexpr int kIoError = 4;

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw ParseError("cannot open " + path);
    return json::parse(in);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

/// "re,im;re,im;..." with rational entries; a bare "re" means imaginary
/// part zero.  An empty string yields the all-ones marked point.
std::vector<CScalar> parse_p(const std::string& text, size_t n) {
    if (text.empty()) return std::vector<CScalar>(n, CScalar(1));
    std::vector<CScalar> p;
    for (const std::string& tok : split(text, ';')) {
        std::vector<std::string> parts = split(tok, ',');
        if (parts.empty() || parts.size() > 2)
            throw ParseError("each p entry must be \"re\" or \"re,im\"");
        Scalar re{parse_rational(parts[0])};
        Scalar im = parts.size() == 2 ? Scalar(parse_rational(parts[1])) : Scalar(0);
        p.emplace_back(re, im);
    }
    if (p.size() != n)
        throw ParseError("expected " + std::to_string(n) + " p entries, got " +
                         std::to_string(p.size()));
    return p;
}

Vec<Scalar> parse_xi(const std::string& text, size_t k) {
    if (text.empty()) return zero_vec<Scalar>(k);
    Vec<Scalar> xi;
    for (const std::string& tok : split(text, ',')) xi.emplace_back(parse_rational(tok));
    if (xi.size() != k)
        throw ParseError("expected " + std::to_string(k) + " xi entries, got " +
                         std::to_string(xi.size()));
    return xi;
}

std::string join_scalars(const Vec<Scalar>& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
    return out + ")";
}

json verdict_to_json(const Verdict& v) {
    json out;
    out["rule"] = v.rule;
    out["square_integrable"] = to_string(v.square_integrable);
    out["type_I"] = to_string(v.type_I);
    out["facts"] = json::object();
    for (const auto& [k, b] : v.facts) out["facts"][k] = b;
    out["warnings"] = v.warnings;
    return out;
}

void print_verdict(const Verdict& v) {
    std::printf("verdict: rule %s\n", v.rule.c_str());
    std::printf("  square integrable: %s\n", to_string(v.square_integrable));
    std::printf("  type I:            %s\n", to_string(v.type_I));
    if (!v.facts.empty()) {
        std::printf("  facts:");
        for (const auto& [k, b] : v.facts) std::printf(" %s=%s", k.c_str(), b ? "true" : "false");
        std::printf("\n");
    }
    for (const auto& w : v.warnings) std::printf("  warning: %s\n", w.c_str());
}

int verdict_exit(const Verdict& v) {
    return (v.square_integrable == Tri::Undetermined || v.type_I == Tri::Undetermined)
               ? kUndetermined
               : kOk;
}

// ---------------------------------------------------------------- validate

int cmd_validate(const json& doc, json& out) {
    SpecKind kind = spec_kind(doc);
    json issues = json::array();
    if (kind == SpecKind::Algebra) {
        LieAlgebra g = algebra_from_json(doc);
        for (const auto& v : g.validate()) {
            std::printf("violation [%s]: %s\n", v.kind.c_str(), v.message.c_str());
            issues.push_back({{"kind", v.kind}, {"message", v.message}});
        }
    } else if (kind == SpecKind::Semidirect) {
        semidirect_from_json(doc);  // shape checks run while parsing
    } else {
        NilExtSpec s = nilext_from_json(doc);
        for (const auto& v : s.nil.validate()) {
            std::printf("violation [%s]: %s\n", v.kind.c_str(), v.message.c_str());
            issues.push_back({{"kind", v.kind}, {"message", v.message}});
        }
        for (const auto& v : validate_derivation(s)) {
            std::string msg = "derivation law fails on (e" + std::to_string(v.i + 1) + ",e" +
                              std::to_string(v.j + 1) + ")";
            std::printf("violation [derivation]: %s\n", msg.c_str());
            issues.push_back({{"kind", "derivation"}, {"message", msg}});
        }
        if (issues.empty() && !s.nil.is_nilpotent()) {
            std::printf("violation [nilpotency]: the extended algebra must be nilpotent\n");
            issues.push_back({{"kind", "nilpotency"},
                              {"message", "the extended algebra must be nilpotent"}});
        }
    }
    out["violations"] = issues;
    if (issues.empty()) {
        std::printf("valid\n");
        return kOk;
    }
    std::printf("%zu violation(s)\n", issues.size());
    return kInvalid;
}

// ----------------------------------------------------------------- analyze

int analyze_algebra(const LieAlgebra& g, uint64_t seed, size_t samples, double theta, json& out) {
    auto violations = g.validate();
    if (!violations.empty()) {
        for (const auto& v : violations) std::printf("violation [%s]: %s\n", v.kind.c_str(),
                                                     v.message.c_str());
        out["error"] = "structure constants do not present a Lie algebra";
        return kInvalid;
    }
    std::printf("lie algebra of dimension %zu\n", g.dim());
    std::printf("  center dim %zu, derived ideal dim %zu\n", g.center().dim(),
                g.derived_ideal().dim());
    auto cls = g.nilpotency_class();
    if (cls)
        std::printf("  nilpotent of class %zu\n", *cls);
    else
        std::printf("  not nilpotent; solvable: %s\n", g.is_solvable() ? "yes" : "no");
    GenericScan scan = generic_rank_scan(g, samples, seed);
    OrbitReport rep = orbit_report(g, scan.witness, scan.k0);
    std::printf("  generic scan (%zu samples, seed %llu): minimal stabilizer dim k0 = %zu\n",
                scan.samples_used, static_cast<unsigned long long>(seed), scan.k0);
    std::printf("  witness %s: orbit dim %zu, open orbit: %s\n",
                join_scalars(scan.witness).c_str(), rep.orbit_dim,
                rep.is_open_orbit ? "yes" : "no");
    out["dim"] = g.dim();
    out["center_dim"] = g.center().dim();
    out["derived_dim"] = g.derived_ideal().dim();
    if (cls) out["nilpotency_class"] = *cls;
    out["solvable"] = g.is_solvable();
    out["k0"] = scan.k0;
    out["orbit_dim"] = rep.orbit_dim;
    out["open_orbit"] = rep.is_open_orbit;
    if (g.is_nilpotent()) {
        bool flat = nilpotent_flat_generic(g, samples, seed);
        std::printf("  flat generic orbits: %s\n", flat ? "yes" : "no");
        out["flat_generic"] = flat;
    }
    (void)theta;
    std::printf("  arithmetic: exact over Q(theta) throughout\n");
    out["arithmetic"] = "exact";
    return kOk;
}

int analyze_semidirect(const DiagonalSemidirectSpec& s, json& out) {
    std::printf("diagonal semidirect family: n = %zu complex coordinates, k = %zu acting "
                "directions, group dim %zu\n",
                s.n, s.k, 2 * s.n + s.k);
    ConditionsABC abc = check_conditions_abc(s);
    std::printf("  (a) growth joint span full:      %s\n", abc.a ? "true" : "false");
    std::printf("  (b) pair span full:              %s\n", abc.b ? "true" : "false");
    std::printf("  (c) injective / dense / proper:  %s / %s / %s\n",
                abc.c_injective ? "true" : "false", abc.c_dense ? "true" : "false",
                abc.c_proper ? "true" : "false");
    out["conditions"] = {{"a", abc.a},
                         {"b", abc.b},
                         {"c_injective", abc.c_injective},
                         {"c_dense", abc.c_dense},
                         {"c_proper", abc.c_proper}};
    if (abc.all()) {
        bool tg = two_n_greater_k_check(s);
        std::printf("  2n > k: %s\n", tg ? "true" : "false");
        out["two_n_greater_k"] = tg;
    }
    std::printf("  density lattice trivial: %s (exact integer lattice computation)\n",
                density_lattice_trivial(s) ? "true" : "false");
    out["density_lattice_trivial"] = density_lattice_trivial(s);

    std::vector<CScalar> p(s.n, CScalar(1));
    ThetaStructure t = theta_matrix(s, p);
    StabilizerReport st = stabilizer_group(s, p, zero_vec<Scalar>(s.k));
    std::printf("  at the all-ones marked point:\n");
    std::printf("    pairing map rank %zu, kernel dim %zu\n", t.rank, t.kernel.dim());
    std::printf("    stabilizer: Ker theta_p dim %zu, connected acting dim %zu, discrete rank "
                "%zu\n",
                st.ker_theta_dim, st.a_connected_dim, st.discrete_rank);
    std::printf("    single orbit: %s, quasi-orbit open: %s\n",
                is_single_orbit(s, p) ? "true" : "false", to_string(quasiorbit_open(s, p)));
    out["theta_p_rank"] = t.rank;
    out["theta_p_kernel_dim"] = t.kernel.dim();
    out["stabilizer"] = {{"ker_theta_dim", st.ker_theta_dim},
                         {"a_connected_dim", st.a_connected_dim},
                         {"discrete_rank", st.discrete_rank}};
    out["single_orbit"] = is_single_orbit(s, p);
    out["quasiorbit_open"] = to_string(quasiorbit_open(s, p));
    std::printf("  arithmetic: exact over Q(theta) throughout\n");
    out["arithmetic"] = "exact";
    return kOk;
}

int analyze_nilext(const NilExtSpec& s, double theta, json& out) {
    std::printf("nilpotent extension: base dim %zu, extended dim %zu\n", s.nil.dim(),
                s.nil.dim() + 1);
    auto dv = validate_derivation(s);
    if (!dv.empty() || !s.nil.validate().empty() || !s.nil.is_nilpotent()) {
        std::printf("input fails validation; run the validate command for details\n");
        out["error"] = "input fails validation";
        return kInvalid;
    }
    Codim1Report r = codim1_classify(s, theta);
    std::printf("  nilpotency class of the base: %zu\n", *s.nil.nilpotency_class());
    std::printf("  trivial center of the extension: %s\n", r.trivial_center_G ? "true" : "false");
    std::printf("  flat generic orbits in the base:  %s\n", r.flat_generic_N ? "true" : "false");
    std::printf("  one-dimensional base center:      %s\n", r.center_dim_1 ? "true" : "false");
    std::printf("  central spectrum gate: %s (%s path)\n", r.gate.pass ? "pass" : "fail",
                r.gate.exact_path ? "exact" : "numeric");
    std::printf("  open coadjoint orbits possible: %s\n",
                r.open_orbits_possible ? "true" : "false");
    out["base_dim"] = s.nil.dim();
    out["extended_dim"] = s.nil.dim() + 1;
    out["nilpotency_class"] = *s.nil.nilpotency_class();
    out["trivial_center_G"] = r.trivial_center_G;
    out["flat_generic_N"] = r.flat_generic_N;
    out["center_dim_1"] = r.center_dim_1;
    out["gate"] = {{"pass", r.gate.pass}, {"exact", r.gate.exact_path}};
    out["open_orbits_possible"] = r.open_orbits_possible;
    out["arithmetic"] = r.gate.exact_path ? "exact" : "numeric (tol 1e-9)";
    return kOk;
}

// ---------------------------------------------------------------- classify

int cmd_classify(const json& doc, const std::string& p_text, const std::string& xi_text,
                 double theta, json& out) {
    SpecKind kind = spec_kind(doc);
    if (kind == SpecKind::Algebra) {
        std::printf("classify needs a diagonal_semidirect or nilpotent_extension input\n");
        out["error"] = "classify needs a diagonal_semidirect or nilpotent_extension input";
        return kInvalid;
    }
    if (kind == SpecKind::Semidirect) {
        DiagonalSemidirectSpec s = semidirect_from_json(doc);
        std::vector<CScalar> p = parse_p(p_text, s.n);
        Vec<Scalar> xi = parse_xi(xi_text, s.k);
        Verdict v = classify(s, p, xi);
        print_verdict(v);
        std::printf("arithmetic: exact over Q(theta)\n");
        out["verdict"] = verdict_to_json(v);
        out["arithmetic"] = "exact";
        return verdict_exit(v);
    }
    NilExtSpec s = nilext_from_json(doc);
    Codim1Report r = codim1_classify(s, theta);
    std::printf("central spectrum gate: %s (%s path)\n", r.gate.pass ? "pass" : "fail",
                r.gate.exact_path ? "exact" : "numeric");
    if (!r.implication.empty()) std::printf("%s\n", r.implication.c_str());
    print_verdict(r.verdict);
    std::printf("arithmetic: %s\n", r.gate.exact_path ? "exact over Q(theta)"
                                                      : "numeric eigenvalues (tol 1e-9)");
    out["gate"] = {{"pass", r.gate.pass}, {"exact", r.gate.exact_path}};
    out["implication"] = r.implication;
    out["verdict"] = verdict_to_json(r.verdict);
    out["arithmetic"] = r.gate.exact_path ? "exact" : "numeric";
    return verdict_exit(r.verdict);
}

// ------------------------------------------------------------ oracle-check

struct CheckTally {
    json checks = json::array();
    bool all_ok = true;

    void add(const std::string& name, bool ok, const std::string& detail) {
        std::printf("[%s] %s: %s\n", ok ? "ok" : "FAIL", name.c_str(), detail.c_str());
        checks.push_back({{"name", name}, {"pass", ok}, {"detail", detail}});
        all_ok = all_ok && ok;
    }
    void add_exact(const std::string& name, size_t failures, size_t trials) {
        add(name, failures == 0,
            failures == 0 ? "exact agreement over " + std::to_string(trials) + " trials"
                          : std::to_string(failures) + " of " + std::to_string(trials) +
                                " trials disagree");
    }
    void add_tol(const std::string& name, double worst, double tol, size_t trials) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "max error %.2e over %zu trials (tol %.0e)", worst,
                      trials, tol);
        add(name, worst < tol, buf);
    }
};

void oracle_algebra(const LieAlgebra& g, size_t trials, uint64_t seed, double theta,
                    CheckTally& tally) {
    SplitMix64 rng(seed);
    size_t dual_fail = 0;
    for (size_t i = 0; i < trials; ++i) {
        Vec<Scalar> x = random_vector(g.dim(), rng, 3);
        Vec<Scalar> y = random_vector(g.dim(), rng, 3);
        Covector xi = random_vector(g.dim(), rng, 3);
        if (pairing(g.ad_star(x) * xi, y) != Scalar(-1) * pairing(xi, g.bracket(x, y)))
            ++dual_fail;
    }
    tally.add_exact("coadjoint pairing duality", dual_fail, trials);

    Subspace<Scalar> ann = annihilator(g.derived_ideal());
    double worst = 0.0;
    for (size_t i = 0; i < trials; ++i) {
        Vec<Scalar> sigma = zero_vec<Scalar>(g.dim());
        for (const auto& b : ann.basis())
            sigma = vec_add(sigma, vec_scale(Scalar(static_cast<int>(rng.next_int(-2, 2))), b));
        Vec<Scalar> x = golden_detail::tame(g, random_vector(g.dim(), rng, 2), theta);
        Vec<double> sn = evaluate(sigma, theta);
        for (double t : {-1.0, 0.5, 1.0}) {
            Vec<double> moved = exp_ad(g, x, t, theta).transpose() * sn;
            worst = std::max(worst, inf_norm(vec_sub(moved, sn)));
        }
    }
    tally.add_tol("derived-ideal annihilators invariant under flows", worst, 1e-9, trials);

    if (g.is_nilpotent()) {
        size_t inv_fail = 0;
        for (size_t i = 0; i < trials; ++i) {
            Vec<Scalar> x = random_vector(g.dim(), rng, 3);
            if (!vec_is_zero(bch_product(g, x, vec_scale(Scalar(-1), x)))) ++inv_fail;
        }
        tally.add_exact("group inverse via the series product", inv_fail, trials);

        NumLieAlgebra num = evaluate(g, theta);
        size_t cls = *g.nilpotency_class();
        const double h = 1e-5;
        double psi_worst = 0.0;
        for (size_t i = 0; i < trials; ++i) {
            Vec<Scalar> x = random_vector(g.dim(), rng, 2);
            Vec<double> xn = evaluate(x, theta);
            Mat<double> d(g.dim(), g.dim());
            for (size_t r = 0; r < g.dim(); ++r)
                for (size_t c = 0; c < g.dim(); ++c)
                    d(r, c) = static_cast<double>(rng.next_int(-2, 2));
            auto shifted = [&](double sarg) {
                return bch_product(num, cls, xn, expm(sarg * d) * vec_scale(-1.0, xn));
            };
            Vec<double> plus = shifted(h), minus = shifted(-h);
            Vec<double> want = evaluate(psi_of_ad(g, x), theta) * (d * xn);
            for (size_t l = 0; l < g.dim(); ++l)
                psi_worst = std::max(psi_worst,
                                     std::abs((plus[l] - minus[l]) / (2 * h) - want[l]));
        }
        tally.add_tol("psi against the differentiated product", psi_worst, 1e-6, trials);
    }
}

void oracle_semidirect(const DiagonalSemidirectSpec& s, size_t trials, uint64_t seed,
                       double theta, CheckTally& tally) {
    SplitMix64 rng(seed);
    auto rand_complex = [&](size_t n) {
        std::vector<CScalar> v;
        for (size_t j = 0; j < n; ++j)
            v.emplace_back(Scalar(rng.next_small_rational(4)), Scalar(rng.next_small_rational(4)));
        return v;
    };
    size_t pair_fail = 0;
    for (size_t i = 0; i < trials; ++i) {
        std::vector<CScalar> p = rand_complex(s.n), v = rand_complex(s.n);
        if (theta_p(s, p, v) != theta_p_diagonal(s, p, v)) ++pair_fail;
    }
    tally.add_exact("pairing map: defining versus expanded form", pair_fail, trials);

    double comp_worst = 0.0;
    for (size_t i = 0; i < trials; ++i) {
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
        for (size_t l = 0; l < s.k; ++l) pt.xi_a.push_back(rng.next_unit_double() - 0.5);
        NumPoint lhs =
            coadjoint_action(s, v1, a1, coadjoint_action(s, v2, a2, pt, theta), theta);
        auto [pv, pa] = group_product(s, v1, a1, v2, a2, theta);
        NumPoint rhs = coadjoint_action(s, pv, pa, pt, theta);
        for (size_t j = 0; j < s.n; ++j)
            comp_worst = std::max(comp_worst, std::abs(lhs.p[j] - rhs.p[j]));
        for (size_t l = 0; l < s.k; ++l)
            comp_worst = std::max(comp_worst, std::abs(lhs.xi_a[l] - rhs.xi_a[l]));
    }
    tally.add_tol("action composes along the group law", comp_worst, 1e-10, trials);

    std::vector<CScalar> p(s.n, CScalar(1));
    Vec<Scalar> xi = random_vector(s.k, rng, 3);
    StabilizerReport r = stabilizer_group(s, p, xi);
    Point pt{p, xi};
    NumPoint base = evaluate(pt, theta);
    double fix_worst = 0.0;
    size_t gens = 0;
    auto measure = [&](const NumPoint& moved) {
        for (size_t j = 0; j < s.n; ++j)
            fix_worst = std::max(fix_worst, std::abs(moved.p[j] - base.p[j]));
        for (size_t l = 0; l < s.k; ++l)
            fix_worst = std::max(fix_worst, std::abs(moved.xi_a[l] - base.xi_a[l]));
        ++gens;
    };
    for (const auto& gen : r.ker_theta_basis) {
        std::vector<std::complex<double>> v(s.n);
        for (size_t j = 0; j < s.n; ++j)
            v[j] = {gen[2 * j].eval(theta), gen[2 * j + 1].eval(theta)};
        measure(coadjoint_action(s, v, Vec<double>(s.k, 0.0), pt, theta));
    }
    for (const auto& gen : r.a_connected_basis)
        measure(coadjoint_action(s, std::vector<std::complex<double>>(s.n, 0.0),
                                 evaluate(gen, theta), pt, theta));
    if (gens == 0)
        tally.add("stabilizer generators fix the marked point", true,
                  "connected stabilizer is trivial; nothing to move");
    else
        tally.add_tol("stabilizer generators fix the marked point", fix_worst, 1e-9, gens);
}

void oracle_nilext(const NilExtSpec& s, size_t trials, uint64_t seed, double theta,
                   CheckTally& tally) {
    tally.add("derivation law and base structure", validate_derivation(s).empty() &&
                                                       s.nil.validate().empty(),
              "exact check of the Leibniz rule on every basis pair");

    SplitMix64 rng(seed);
    double worst = 0.0;
    for (size_t i = 0; i < trials; ++i) {
        Vec<Scalar> x = random_vector(s.nil.dim(), rng, 2);
        double t = 2.0 * rng.next_unit_double() - 1.0;
        worst = std::max(worst, golden_detail::mat_max_diff(coadjoint_matrix(s, x, t, theta),
                                                            coadjoint_oracle(s, x, t, theta)));
    }
    tally.add_tol("coadjoint matrix versus differentiated conjugation", worst, 1e-6, trials);

    size_t n = s.nil.dim();
    double fact_worst = 0.0;
    for (size_t i = 0; i < trials; ++i) {
        Vec<Scalar> x = random_vector(n, rng, 2);
        for (double t : {-1.0, -0.5, 0.5, 1.0}) {
            Mat<double> m = coadjoint_matrix(s, x, t, theta);
            Mat<double> right = coadjoint_matrix(s, x, 0.0, theta);
            Mat<double> left(n + 1, n + 1);
            Mat<double> e_d = expm(t * evaluate(s.derivation, theta).transpose());
            for (size_t a = 0; a < n; ++a)
                for (size_t b = 0; b < n; ++b) left(a, b) = e_d(a, b);
            left(n, n) = 1.0;
            fact_worst = std::max(
                fact_worst, golden_detail::mat_max_diff(m, left * right) / (1.0 + inf_norm(m)));
        }
    }
    tally.add_tol("factored form of the coadjoint matrix", fact_worst, 1e-8, trials);
}

int cmd_oracle_check(const json& doc, size_t trials, uint64_t seed, double theta, json& out) {
    CheckTally tally;
    SpecKind kind = spec_kind(doc);
    if (kind == SpecKind::Algebra) {
        LieAlgebra g = algebra_from_json(doc);
        if (!g.validate().empty()) {
            std::printf("input fails validation; run the validate command for details\n");
            out["error"] = "input fails validation";
            return kInvalid;
        }
        oracle_algebra(g, trials, seed, theta, tally);
    } else if (kind == SpecKind::Semidirect) {
        oracle_semidirect(semidirect_from_json(doc), trials, seed, theta, tally);
    } else {
        oracle_nilext(nilext_from_json(doc), trials, seed, theta, tally);
    }
    out["checks"] = tally.checks;
    std::printf("%s\n", tally.all_ok ? "all checks passed" : "some checks FAILED");
    return tally.all_ok ? kOk : kCheckFailed;
}

// ------------------------------------------------------------------ golden

int cmd_golden(const std::string& data_dir, double theta, json& out) {
    auto results = run_golden_suite(data_dir, theta);
    int failed = 0;
    json arr = json::array();
    for (const auto& r : results) {
        std::printf("[%s] %2d %-45s %7.3fs  %s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.seconds, r.detail.c_str());
        arr.push_back({{"id", r.id},
                       {"name", r.name},
                       {"pass", r.pass},
                       {"detail", r.detail},
                       {"seconds", r.seconds}});
        if (!r.pass) ++failed;
    }
    std::printf("%zu/%zu criteria passed\n", results.size() - failed, results.size());
    out["criteria"] = arr;
    return failed == 0 ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coadjoint orbit analyzer for solvable Lie groups"};
    app.require_subcommand(1);

    std::string input, json_path, p_text, xi_text, data_dir = "data";
    double theta = 1.4142135623730951;
    uint64_t seed = 1;
    size_t samples = 200, trials = 20;

    auto add_common = [&](CLI::App* c, bool with_file) {
        if (with_file) c->add_option("file", input, "input JSON document")->required();
        c->add_option("--theta", theta, "evaluation point for numeric results");
        c->add_option("--json", json_path, "also write the report as JSON to this path");
    };
    CLI::App* c_validate = app.add_subcommand("validate", "check structure laws");
    add_common(c_validate, true);
    CLI::App* c_analyze = app.add_subcommand("analyze", "structural report");
    add_common(c_analyze, true);
    c_analyze->add_option("--seed", seed, "seed for randomized scans");
    c_analyze->add_option("--samples", samples, "sample budget for randomized scans")
        ->check(CLI::PositiveNumber);
    CLI::App* c_classify = app.add_subcommand("classify", "square-integrability verdict");
    add_common(c_classify, true);
    c_classify->add_option("--p", p_text, "marked point, \"re,im;re,im;...\" (default all ones)");
    c_classify->add_option("--xi", xi_text, "acting covector, \"x1,x2,...\" (default zero)");
    CLI::App* c_oracle = app.add_subcommand("oracle-check", "dual-route consistency checks");
    add_common(c_oracle, true);
    c_oracle->add_option("--trials", trials, "trials per check")->check(CLI::PositiveNumber);
    c_oracle->add_option("--seed", seed, "seed for randomized trials");
    CLI::App* c_golden = app.add_subcommand("golden", "frozen acceptance criteria");
    add_common(c_golden, false);
    c_golden->add_option("--data", data_dir, "directory with the bundled data files");

    CLI11_PARSE(app, argc, argv);

    json report;
    report["request"] = {{"command", app.get_subcommands().front()->get_name()},
                         {"theta", theta},
                         {"seed", seed},
                         {"samples", samples}};
    if (!input.empty()) report["request"]["input"] = input;

    int code = kOk;
    try {
        json results;
        if (c_validate->parsed()) {
            code = cmd_validate(load_file(input), results);
        } else if (c_analyze->parsed()) {
            json doc = load_file(input);
            SpecKind kind = spec_kind(doc);
            if (kind == SpecKind::Algebra)
                code = analyze_algebra(algebra_from_json(doc), seed, samples, theta, results);
            else if (kind == SpecKind::Semidirect)
                code = analyze_semidirect(semidirect_from_json(doc), results);
            else
                code = analyze_nilext(nilext_from_json(doc), theta, results);
        } else if (c_classify->parsed()) {
            code = cmd_classify(load_file(input), p_text, xi_text, theta, results);
        } else if (c_oracle->parsed()) {
            code = cmd_oracle_check(load_file(input), trials, seed, theta, results);
        } else {
            code = cmd_golden(data_dir, theta, results);
        }
        report["results"] = results;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        code = kIoError;
    } catch (const json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        code = kIoError;
    } catch (const std::domain_error& e) {
        std::cerr << "input rejected: " << e.what() << "\n";
        code = kInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input rejected: " << e.what() << "\n";
        code = kInvalid;
    }

    report["exit_code"] = code;
    if (!json_path.empty()) {
        std::ofstream js(json_path);
        if (!js.good()) {
            std::cerr << "cannot write " << json_path << "\n";
            return kIoError;
        }
        js << report.dump(2) << "\n";
    }
    return code;
}
