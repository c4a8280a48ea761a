#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace coorbit {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.template convert_to<double>(); }

/// Parses "p", "-p" or "p/q" with integer p, q.  Throws std::invalid_argument
/// on malformed input or a zero denominator.
inline Rat parse_rational(std::string_view s) {
    auto bad = [&] { throw std::invalid_argument("malformed rational: '" + std::string(s) + "'"); };
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    if (b == e) bad();
    std::string_view body = s.substr(b, e - b);
    auto parse_int = [&](std::string_view t) -> BigInt {
        if (t.empty()) bad();
        size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) bad();
        for (size_t j = i; j < t.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(t[j]))) bad();
        return BigInt(std::string(t));
    };
    size_t slash = body.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(body));
    BigInt num = parse_int(body.substr(0, slash));
    BigInt den = parse_int(body.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rat(num, den);
}

/// Canonical form: "p" when the denominator is 1, otherwise "p/q" with q > 0.
inline std::string rational_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

}  // namespace coorbit
