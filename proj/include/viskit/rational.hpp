#ifndef VISKIT_RATIONAL_HPP
#define VISKIT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace viskit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// error with a stable machine code plus a human detail line
struct Error : std::runtime_error {
    std::string code;
    Error(std::string c, const std::string& detail = "")
        : std::runtime_error(detail.empty() ? c : c + ": " + detail), code(std::move(c)) {}
};

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

// parse "p" or "p/q" with optional sign, q > 0 after reduction
inline Rat parse_rat(const std::string& s) {
    auto bad = [&] { throw Error("parse_error", "bad rational '" + s + "'"); };
    if (s.empty()) bad();
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) bad();
        return Rat(p, q);
    } catch (const std::exception&) {
        bad();
    }
    return Rat(0);
}

inline std::string format_rat(const Rat& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

// fixed-point decimal with the given number of fractional digits, round half away from zero
inline std::string decimal_str(const Rat& q, int digits) {
    Int n = num(q), d = den(q);
    bool neg = n < 0;
    if (neg) n = -n;
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Int scaled = (n * scale * 2 + d) / (d * 2);
    Int ip = scaled / scale, fp = scaled % scale;
    std::string out = (neg && scaled != 0 ? "-" : "") + ip.str();
    if (digits > 0) {
        std::string frac = fp.str();
        frac.insert(frac.begin(), digits - frac.size(), '0');
        out += "." + frac;
    }
    return out;
}

}

#endif
