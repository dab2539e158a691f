#pragma once

#include "surface.hpp"

namespace scrollsmith {

struct IntInterval {
    i64 lo = 0;
    i64 hi = 0;  // inclusive
    bool single() const { return lo == hi; }
};

// Interval bounds for the three cohomology dimensions of a sheaf; exact means
// every interval is a point.  Bounds are always sound: the true dimension
// lies inside.
struct CohomologyBound {
    IntInterval h0, h1, h2;
    bool exact = false;

    static CohomologyBound exactly(i64 h0, i64 h1, i64 h2) {
        return CohomologyBound{{h0, h0}, {h1, h1}, {h2, h2}, true};
    }
};

// Exact cohomology of a*C0 + b*f on F_e (e >= 0), by closed form:
//   a >= 0 : h0 = sum_{i=0..a} max(0, b - i e + 1) (arithmetic series),
//            h2 = 0, h1 = h0 - chi;
//   a = -1 : (0, 0, 0);
//   a <= -2: reflect through h^i(D) = h^{2-i}(K - D).
CohomologyBound cohomology_rational(const DivisorClass& d, i64 e);

// The same h0 by brute force: counts monomial lattice points (i, j) with
// 0 <= i <= a and 0 <= j <= b - i e, one by one.  Deliberately shares no
// code with cohomology_rational so the two can check each other.
i64 h0_oracle_lattice(const DivisorClass& d, i64 e);

// Exact cohomology of O(d) on P2.
CohomologyBound cohomology_plane(i64 d);

// Exact cohomology where available (rational ruled and P2); other bases are
// a domain error.
CohomologyBound cohomology_exact(const DivisorClass& d, const RuledBase& base);

// Sufficient h1-vanishing on an elliptic base via the pushforward slope:
// Established when a >= 0 and b + a*mu- > 0 (strict: slope-0 summands can
// carry h1), or when a = -1 (both direct images vanish); else Inconclusive.
Status h1_vanishes_elliptic(const DivisorClass& d, const RuledBase& base);

// Certificate that h0 vanishes on an elliptic base: a < 0, or the maximal
// pushforward slope b + a*mu+ is negative.
bool h0_vanishes_elliptic(const DivisorClass& d, const RuledBase& base);

// Lower bound for h0 of d*l - sum m_i l_i on a blow-up of the plane:
// max(0, (d+2)(d+1)/2 - sum m_i (m_i + 1)/2).  A bound, not the dimension.
i64 h0_lower_bound_blown_plane(const BlownPlaneClass& c);

// Vanishing of h1(D tensor I_W) on F_1 for w points whose images (with the
// blown-up point) are in general position in the plane: Established when
// a >= 0, b >= 1, b >= a and h0(D) >= w.
Status h1_vanishes_with_ideal(const DivisorClass& d, i64 w, const RuledBase& base);

// Surjectivity of the evaluation H0(D) -> H0(O_W) for w generic points:
// Established when w = 0, or when h0(D) >= w and h1(D) = 0 -- exact on
// rational and plane bases, via the slope certificate and the chi lower
// bound on elliptic bases; Inconclusive otherwise.
Status general_position_surjective(const DivisorClass& d, i64 w, const RuledBase& base);

} // namespace scrollsmith
