#pragma once

#include "bundle.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace scrollsmith {

// Direction of a checker relative to very ampleness of its subject:
//   Sufficient -- an Established verdict certifies very ampleness;
//   Necessary  -- a Refuted verdict disproves it (Established just means
//                "consistent", never a certificate);
//   Supporting -- establishes an ingredient fact (a vanishing, a span bound),
//                never a very-ampleness verdict either way.
enum class CriterionKind { Sufficient, Necessary, Supporting };

const char* to_token(CriterionKind k);

struct Condition {
    std::string name;
    Status status = Status::Inconclusive;
    std::string detail;
};

struct Witness {
    i64 x = 0;
    i64 z = 0;
};

struct ConditionReport {
    std::string criterion; // stable identifier, e.g. "valma"
    std::string citation;  // one-line statement of what the checker decides
    CriterionKind kind = CriterionKind::Sufficient;
    std::vector<Condition> conditions;
    Status verdict = Status::Inconclusive;
    std::optional<Witness> witness;

    bool certifies_very_ample() const {
        return kind == CriterionKind::Sufficient && verdict == Status::Established;
    }
};

// --- sufficient very-ampleness tests -------------------------------------

// Six-condition sufficient test for very ampleness of E on a rational ruled
// base, evaluated at the unisecant curve gamma = C0 + x f and multiplier z.
// Requires x >= e + 2 and z >= 1.
ConditionReport check_valma(const ExtensionBundle& E, i64 x, i64 z);

// Elliptic-base variant: condition 0 is the very-ampleness threshold for
// C0 + x f, the remaining six mirror the rational test with slope-certified
// vanishings.  Requires z >= 1.
ConditionReport check_valmae(const ExtensionBundle& E, i64 x, i64 z);

struct WitnessSearch {
    std::optional<Witness> witness;
    ConditionReport report; // report at the witness, or at the last scanned pair
    i64 pairs_scanned = 0;
};

// Scan (x, z) in lexicographic order over x in [x_lo, x_max], z in [1, z_max]
// and return the first pair where every condition is Established.  The
// defaults are x_max = x_lo + 18 and z_max = 12, where x_lo is the smallest
// admissible x for the base.
WitnessSearch search_valma_witness(const ExtensionBundle& E, i64 x_max, i64 z_max);
WitnessSearch search_valma_witness(const ExtensionBundle& E);

// Abstract-surface sufficient test for very ampleness of D: a good curve
// system |A| at level z, a degree bound on D.A, and h1(D - zA) = 0.
ConditionReport check_prop_cinque(const RuledBase& base, const DivisorClass& D,
                                  const DivisorClass& A, i64 z);

struct ReiderCandidate {
    int case_id = 0; // 1: lines through 3 points, 2: conics through 6, 3: line pairs
    BlownPlaneClass cls;
    i64 me = 0; // pairing with the tested class
    i64 e2 = 0; // self-intersection
};

struct ReiderResult {
    ConditionReport report;
    i64 m_squared = 0;
    std::vector<ReiderCandidate> candidates;
};

// Adjoint-style very-ampleness test for a class on the plane blown up in
// nine points: requires M^2 >= 10, an ampleness screen, and that every
// low-pairing candidate curve has self-intersection <= -2.
ReiderResult reider_exceptions(const BlownPlaneClass& M);

// Very-ampleness classification of the one-parameter family ey_family(y, h)
// for h in {3, 4, 5}: Established / NotVeryAmple / Inconclusive.
ConditionReport teoy_verdict(i64 y, i64 h);

// --- necessary-condition checkers -----------------------------------------

struct BrosiusResult {
    ConditionReport report;
    DivisorClass forced_L; // 2 C0 + (2t - 2e - k) f
    DivisorClass forced_M; // C0 + (k - t + 2e) f
};

// Necessary conditions for a very ample rank-2 bundle on F_e with
// c1 = 3 C0 + t f and c2 = k, together with the forced extension classes.
BrosiusResult check_brosius(i64 e, i64 t, i64 k);

// Builds the class (x+5) l - (x+1) l0 - l1 - ... - l_n on the plane blown up
// in n+1 points.
BlownPlaneClass finalno_class(i64 x, i64 n_points);

// Necessary section-count test: the claimed h0 must be at least the lower
// bound forced by the plane model (x+5; x+1, 1^n).
ConditionReport finalno_obstruction(i64 x, i64 n_points, i64 claimed_h0);

// --- supporting checkers ---------------------------------------------------

// Span test for the image of P(E) under the twisted linear system: (a) more
// than 4 independent sections, (b) no decomposition B + (A - B) carries the
// span.  Scans twists B below A, clamped to the given search width.
ConditionReport check_prop_due(const ExtensionBundle& E, const DivisorClass& A,
                               i64 search_bound);

// Vanishing test for h1 of the tautological-twist pushforward: eps = 1 needs
// h1(-A) = 0; eps = 0 needs h1(L - A) = 0 and h1((M - A) (x) I_W) = 0.
ConditionReport check_prop_uno_b(const ExtensionBundle& E, const DivisorClass& A,
                                 i64 eps);

// Restriction behaviour of ey_family(y, h) on fibres, C0, and unisecants,
// with the companion h1 vanishings.  Requires h in {3, 4}.
ConditionReport check_restriction_props(i64 y, i64 h);

} // namespace scrollsmith
