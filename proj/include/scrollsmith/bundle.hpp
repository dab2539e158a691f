#pragma once

#include "cohomology.hpp"

#include <string>

namespace scrollsmith {

enum class ExistenceNote { Supported, Unverified };

const char* to_token(ExistenceNote n);

/*
 * Rank-2 bundle presented as extension data
 *
 *     0 -> L -> E -> M (x) I_W -> 0
 *
 * on a ruled base or P2, where W is a length-w point scheme.  The points are
 * never stored: only w, the maximal number lm of them on one fibre, and
 * whether they are declared to be in general position.  On F_1 general
 * position forces lm = 1 (at most one point per fibre).
 */
struct ExtensionBundle {
    RuledBase base;
    DivisorClass L;
    DivisorClass M;
    i64 w = 0;
    i64 lm = 1;
    bool general_position = false;
    std::string label;
    ExistenceNote existence = ExistenceNote::Unverified;

    // the per-fibre cap of an empty point scheme is 0, whatever lm says
    i64 lm_effective() const { return w >= 1 ? lm : 0; }
};

// Validates the extension data and certifies existence of a locally free
// extension when one of the recognized section-through-points patterns
// applies: W empty (split extension), |K + M - L| certifiably empty, or two
// points on one fibre with K + M - L a positive multiple of the fibre.
ExtensionBundle make_extension_bundle(const RuledBase& base, const DivisorClass& L,
                                      const DivisorClass& M, i64 w, i64 lm,
                                      bool general_position, std::string label = "");

struct ChernClasses {
    DivisorClass c1;
    i64 c2;
};

// c1 = L + M, c2 = L.M + w
ChernClasses chern_classes(const ExtensionBundle& E);

// Splitting data of E restricted to a curve: the edge degrees of
// 0 -> O(sub) -> E|C -> O(quo) -> 0 after eps of the points of W move onto
// the curve, plus what the edges force about very ampleness of E|C.
struct SplittingType {
    i64 sub_degree = 0;
    i64 quo_degree = 0;
    Status very_ample = Status::Inconclusive;
};

// Restriction to a fibre: degrees (L.f + eps, M.f - eps); 0 <= eps <= per-fibre cap.
SplittingType restrict_to_fibre(const ExtensionBundle& E, i64 eps);

// Restriction to a curve of class gamma: degrees (L.gamma + eps, M.gamma - eps).
// The very-ample flag is decided for rational gamma (both possible splitting
// summands >= 1 / <= 0) and for elliptic gamma (minimal quotient degree >= 3
// establishes, quotient edge <= 2 refutes); other genera stay Inconclusive.
SplittingType restrict_to_curve(const ExtensionBundle& E, const DivisorClass& gamma, i64 eps);

// Sound interval for h0(E (x) B) from the extension sequence.  The h0 slot is
// the result; h1/h2 are not tracked for bundle twists.  Exact when the
// twisted point count is certified (general position: everywhere on P2, via
// the F_1 ideal-twist lemma on F_1; or W empty) and h1(L+B) = 0.
// Rational and plane bases only.
CohomologyBound h0_bundle_twist(const ExtensionBundle& E, const DivisorClass& B);

// One-parameter family on F_1: L = C0 + (5-h) f, M = 2 C0 + h f, w = h + y
// generic points (at most one per fibre).  Requires h >= 3, -2 <= y <= 4,
// h + y >= 1.
ExtensionBundle ey_family(i64 y, i64 h);

} // namespace scrollsmith
