#ifndef VISKIT_ANGLE_HPP
#define VISKIT_ANGLE_HPP

#include "rational.hpp"

namespace viskit {

// angles are exact rationals q meaning q*pi radians, normalized into [0,2)
using Angle = Rat;

inline Angle norm2(Rat q) {
    Int k = num(q) / den(q);
    q -= 2 * Rat(k / 2);
    if (q < 0) q += 2;
    if (q >= 2) q -= 2;
    return q;
}

inline Angle antipode(const Angle& q) { return norm2(q + 1); }

// midpoint of the ccw walk from a to b (wraps when b < a; a == b means the full turn)
inline Angle circ_mid(const Angle& a, const Angle& b) {
    Rat bb = b > a ? b : b + 2;
    return norm2((a + bb) / 2);
}

// signed argument in (-1,1] (pi units) used to order limiting sightlines
inline Rat to_arg(const Angle& q) { return q <= 1 ? q : q - 2; }

}

#endif
