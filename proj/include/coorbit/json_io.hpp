#pragma once

#include <coorbit/lie_algebra.hpp>
#include <coorbit/nilext.hpp>
#include <coorbit/semidirect.hpp>

#include <json.hpp>

#include <set>
#include <string>
#include <utility>

namespace coorbit {

using nlohmann::json;

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline Rat rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long long>());
    throw ParseError("rational entries must be integers or \"p/q\" strings");
}

/// Scalar forms: integer, "p/q" string, or {"num":[rational...],
/// "den":[rational...]} with ascending theta-coefficients ("den" optional).
inline Scalar scalar_from_json(const json& j) {
    if (j.is_string() || j.is_number_integer()) return Scalar(rational_from_json(j));
    if (j.is_object()) {
        if (!j.contains("num")) throw ParseError("scalar object needs a \"num\" array");
        auto read_poly = [](const json& arr) {
            if (!arr.is_array()) throw ParseError("scalar coefficient list must be an array");
            std::vector<Rat> c;
            for (const auto& e : arr) c.push_back(rational_from_json(e));
            return Poly(std::move(c));
        };
        Poly num = read_poly(j.at("num"));
        Poly den(Rat(1));
        if (j.contains("den")) den = read_poly(j.at("den"));
        if (den.is_zero()) throw ParseError("scalar with zero denominator polynomial");
        return Scalar(std::move(num), std::move(den));
    }
    throw ParseError("unrecognized scalar encoding");
}

inline json rational_to_json(const Rat& r) { return rational_to_string(r); }

inline json scalar_to_json(const Scalar& s) {
    if (s.is_rational()) return rational_to_json(s.as_rational());
    json num = json::array(), den = json::array();
    for (int d = 0; d <= s.num().degree(); ++d) num.push_back(rational_to_json(s.num().coeff(d)));
    for (int d = 0; d <= s.den().degree(); ++d) den.push_back(rational_to_json(s.den().coeff(d)));
    json out;
    out["num"] = num;
    if (s.den() != Poly(Rat(1))) out["den"] = den;
    return out;
}

inline Vec<Scalar> scalar_vec_from_json(const json& j, size_t expect) {
    if (!j.is_array() || j.size() != expect)
        throw ParseError("expected an array of " + std::to_string(expect) + " scalars");
    Vec<Scalar> v;
    for (const auto& e : j) v.push_back(scalar_from_json(e));
    return v;
}

inline json scalar_vec_to_json(const Vec<Scalar>& v) {
    json arr = json::array();
    for (const auto& s : v) arr.push_back(scalar_to_json(s));
    return arr;
}

/// {"dim": n, "brackets": [{"i":, "j":, "coeffs": [scalar...]}...]}.
/// Indices are 1-based.  A listed (i,j) implies [e_j,e_i] = -coeffs unless
/// (j,i) is itself listed; all unlisted brackets are zero.
inline LieAlgebra algebra_from_json(const json& j) {
    if (!j.contains("dim") || !j.at("dim").is_number_integer() || j.at("dim").get<long>() < 1)
        throw ParseError("algebra needs a positive integer \"dim\"");
    size_t dim = j.at("dim").get<size_t>();
    LieAlgebra g(dim);
    std::set<std::pair<size_t, size_t>> listed;
    if (j.contains("brackets")) {
        if (!j.at("brackets").is_array()) throw ParseError("\"brackets\" must be an array");
        for (const auto& entry : j.at("brackets")) {
            if (!entry.contains("i") || !entry.contains("j") || !entry.contains("coeffs"))
                throw ParseError("bracket entries need \"i\", \"j\", \"coeffs\"");
            long i1 = entry.at("i").get<long>(), j1 = entry.at("j").get<long>();
            if (i1 < 1 || j1 < 1 || i1 > static_cast<long>(dim) || j1 > static_cast<long>(dim))
                throw ParseError("bracket index out of range");
            size_t i = static_cast<size_t>(i1) - 1, jj = static_cast<size_t>(j1) - 1;
            if (!listed.insert({i, jj}).second)
                throw ParseError("duplicate bracket entry (" + std::to_string(i1) + "," +
                                 std::to_string(j1) + ")");
            g.set_bracket(i, jj, scalar_vec_from_json(entry.at("coeffs"), dim));
        }
    }
    // Antisymmetric completion for pairs given in one order only.
    for (const auto& [i, jj] : listed) {
        if (listed.count({jj, i})) continue;
        Vec<Scalar> neg = g.structure(i, jj);
        for (auto& x : neg) x = -x;
        g.set_bracket(jj, i, neg);
    }
    return g;
}

inline json algebra_to_json(const LieAlgebra& g) {
    json out;
    out["type"] = "lie_algebra";
    out["dim"] = g.dim();
    json brackets = json::array();
    auto emit = [&](size_t i, size_t j) {
        json e;
        e["i"] = i + 1;
        e["j"] = j + 1;
        e["coeffs"] = scalar_vec_to_json(g.structure(i, j));
        brackets.push_back(e);
    };
    for (size_t i = 0; i < g.dim(); ++i) {
        if (!vec_is_zero(g.structure(i, i))) emit(i, i);
        for (size_t j = i + 1; j < g.dim(); ++j) {
            if (!vec_is_zero(g.structure(i, j))) emit(i, j);
            Vec<Scalar> neg = g.structure(i, j);
            for (auto& x : neg) x = -x;
            if (!(g.structure(j, i) == neg)) emit(j, i);
        }
    }
    out["brackets"] = brackets;
    return out;
}

/// {"type":"diagonal_semidirect","n":,"k":,"eta":[[scalar...]...],
///  "xi_rot":[[scalar...]...]}.
inline DiagonalSemidirectSpec semidirect_from_json(const json& j) {
    DiagonalSemidirectSpec s;
    if (!j.contains("n") || !j.contains("k") || !j.contains("eta") || !j.contains("xi_rot"))
        throw ParseError("diagonal spec needs \"n\", \"k\", \"eta\", \"xi_rot\"");
    s.n = j.at("n").get<size_t>();
    s.k = j.at("k").get<size_t>();
    if (!j.at("eta").is_array() || j.at("eta").size() != s.n)
        throw ParseError("\"eta\" must list n covectors");
    if (!j.at("xi_rot").is_array() || j.at("xi_rot").size() != s.n)
        throw ParseError("\"xi_rot\" must list n covectors");
    for (const auto& row : j.at("eta")) s.growth.push_back(scalar_vec_from_json(row, s.k));
    for (const auto& row : j.at("xi_rot")) s.rotation.push_back(scalar_vec_from_json(row, s.k));
    s.validate_shape();
    return s;
}

inline json semidirect_to_json(const DiagonalSemidirectSpec& s) {
    json out;
    out["type"] = "diagonal_semidirect";
    out["n"] = s.n;
    out["k"] = s.k;
    json eta = json::array(), xi = json::array();
    for (const auto& row : s.growth) eta.push_back(scalar_vec_to_json(row));
    for (const auto& row : s.rotation) xi.push_back(scalar_vec_to_json(row));
    out["eta"] = eta;
    out["xi_rot"] = xi;
    return out;
}

/// {"type":"nilpotent_extension","nil":<algebra>,"D":[[scalar...]...]},
/// D given by rows.
inline NilExtSpec nilext_from_json(const json& j) {
    if (!j.contains("nil") || !j.contains("D"))
        throw ParseError("extension spec needs \"nil\" and \"D\"");
    LieAlgebra nil = algebra_from_json(j.at("nil"));
    const json& dj = j.at("D");
    if (!dj.is_array() || dj.size() != nil.dim())
        throw ParseError("\"D\" must be a square matrix of the algebra dimension");
    Mat<Scalar> d(nil.dim(), nil.dim());
    for (size_t i = 0; i < nil.dim(); ++i) {
        Vec<Scalar> row = scalar_vec_from_json(dj.at(i), nil.dim());
        for (size_t jj = 0; jj < nil.dim(); ++jj) d(i, jj) = row[jj];
    }
    return NilExtSpec(std::move(nil), std::move(d));
}

inline json nilext_to_json(const NilExtSpec& s) {
    json out;
    out["type"] = "nilpotent_extension";
    json nil = algebra_to_json(s.nil);
    nil.erase("type");
    out["nil"] = nil;
    json rows = json::array();
    for (size_t i = 0; i < s.derivation.rows(); ++i)
        rows.push_back(scalar_vec_to_json(s.derivation.row(i)));
    out["D"] = rows;
    return out;
}

enum class SpecKind { Algebra, Semidirect, NilExtension };

/// Dispatch on the "type" field; a bare {"dim", "brackets"} document is an
/// algebra.
inline SpecKind spec_kind(const json& j) {
    if (j.contains("type")) {
        std::string t = j.at("type").get<std::string>();
        if (t == "lie_algebra") return SpecKind::Algebra;
        if (t == "diagonal_semidirect") return SpecKind::Semidirect;
        if (t == "nilpotent_extension") return SpecKind::NilExtension;
        throw ParseError("unknown spec type \"" + t + "\"");
    }
    if (j.contains("dim")) return SpecKind::Algebra;
    throw ParseError("document has no \"type\" field and no \"dim\" field");
}

}  // namespace coorbit
