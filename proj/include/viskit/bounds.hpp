#ifndef VISKIT_BOUNDS_HPP
#define VISKIT_BOUNDS_HPP

#include <viskit/rational.hpp>
#include <viskit/representation.hpp>
#include <cmath>
#include <string>

namespace viskit {

struct EdgeBound {
    Int value;
    bool tight = false;
    std::string source;
};

inline Int choose2(long n) { return Int(n) * (n - 1) / 2; }

inline EdgeBound max_edges(Kind kind, long n, long k) {
    switch (kind) {
    case Kind::arc:
        if (n <= 4 * k + 4) return {choose2(n), k == 0 && n <= 5, "complete_regime"};
        return {Int(k + 1) * (6 * n - 3 * k - 6) / 2, k == 0, "arc_bound"};
    case Kind::semi_arc:
        if (n <= 3 * k + 4) return {choose2(n), true, "complete_regime"};
        return {Int(k + 1) * (4 * n - k - 2) / 2, n >= 5 * k + 5, "semi_arc_bound"};
    case Kind::semi_bar:
        if (n < 2 * k + 2) return {choose2(n), true, "complete_regime"};
        return {Int(k + 1) * (2 * n - 2 * k - 3), true, "semi_bar_bound"};
    default:
        throw Error("unsupported_kind");
    }
}

inline Rat harmonic_range(long lo, long hi) {
    Rat s(0);
    for (long j = lo; j <= hi; ++j) s += Rat(1, j);
    return s;
}

inline Rat expected_edges_semibar(long n, long k) {
    if (n <= k + 2) return Rat(choose2(n));
    Rat tail = harmonic_range(k + 3, n);
    return Rat(k + 1) * (Rat(4 * n - 3 * k - 6) - 2 * Rat(k + 2) * tail) / 2;
}

// the single non-exact value in the system
inline double azuma_tail(long n, long /*k*/, double t) {
    double raw = 2.0 * std::exp(-2.0 * t * t / (double)n);
    return raw > 1.0 ? 1.0 : raw;
}

inline Rat expected_records(long i, long n) { return harmonic_range(i, n); }

inline Rat center_expectation_bound(long n, long k) {
    Rat s(0);
    for (long i = 1; i <= k + 1; ++i) s += Rat(k + 2 - i) * expected_records(i, n);
    return s;
}

} // namespace viskit

#endif
