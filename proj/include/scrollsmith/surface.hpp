#pragma once

#include "checked.hpp"

#include <string>
#include <vector>

namespace scrollsmith {

// Three-valued verdict used throughout: Established and Refuted are proved
// facts, Inconclusive means the test is silent.  NotVeryAmple is the
// refuted-style verdict of the classification table for the one-parameter
// family on F_1: not very ample by a cited obstruction rather than by a
// failed necessary condition.
enum class Status { Established, Inconclusive, Refuted, NotVeryAmple };

const char* to_token(Status s);

enum class BaseKind { ProjectivePlane, RationalRuled, EllipticRuled, GenusGRuled };

/*
 * Base surface for the divisor lattice: the projective plane, or a
 * geometrically ruled surface P(F) -> C with F normalized.  Invariants:
 *   - RationalRuled (F_e): e >= 0.
 *   - EllipticRuled indecomposable: deg F = -e in {0,1}, mu_minus = -e/2;
 *     decomposable: e >= 0, mu_minus = -e.
 *   - GenusGRuled supports only intersection / genus / Euler characteristic.
 */
class RuledBase {
public:
    static RuledBase projective_plane();
    static RuledBase rational(i64 e);
    static RuledBase elliptic(i64 e, bool decomposable);
    static RuledBase genus_g(i64 g, i64 e);

    BaseKind kind() const { return kind_; }
    i64 e() const;
    i64 genus() const { return g_; }
    bool decomposable() const;
    Rational mu_minus() const;  // minimal slope of the normalized bundle (elliptic only)
    Rational mu_plus() const;   // maximal slope (elliptic only)
    std::string label() const;  // "P2", "F1", "E(e=0,dec)", "R(g=2,e=-2)"

    friend bool operator==(const RuledBase& x, const RuledBase& y) {
        return x.kind_ == y.kind_ && x.e_ == y.e_ && x.g_ == y.g_ &&
               x.decomposable_ == y.decomposable_;
    }

private:
    RuledBase(BaseKind k, i64 e, i64 g, bool dec) : kind_(k), e_(e), g_(g), decomposable_(dec) {}
    BaseKind kind_;
    i64 e_ = 0;
    i64 g_ = 0;
    bool decomposable_ = true;
};

// Numerical divisor class: a*C0 + b*f on a ruled base (C0 the normalized
// section, f a fibre), or a plain degree on P2.  The two flavours never mix.
class DivisorClass {
public:
    static DivisorClass ruled(i64 a, i64 b) { return DivisorClass(false, a, b); }
    static DivisorClass plane(i64 d) { return DivisorClass(true, d, 0); }

    bool on_plane() const { return plane_; }
    i64 a() const { require_ruled(); return a_; }
    i64 b() const { require_ruled(); return b_; }
    i64 degree() const { require_plane(); return a_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    friend DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
        x.require_same(y);
        return DivisorClass(x.plane_, add_ck(x.a_, y.a_), add_ck(x.b_, y.b_));
    }
    friend DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
        x.require_same(y);
        return DivisorClass(x.plane_, sub_ck(x.a_, y.a_), sub_ck(x.b_, y.b_));
    }
    DivisorClass operator-() const { return DivisorClass(plane_, -a_, -b_); }
    friend DivisorClass operator*(i64 n, const DivisorClass& x) {
        return DivisorClass(x.plane_, mul_ck(n, x.a_), mul_ck(n, x.b_));
    }
    friend bool operator==(const DivisorClass& x, const DivisorClass& y) {
        return x.plane_ == y.plane_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

    std::string str() const;

private:
    DivisorClass(bool plane, i64 a, i64 b) : plane_(plane), a_(a), b_(b) {}
    void require_ruled() const {
        if (plane_) throw std::domain_error("plane divisor class has no (a,b) components");
    }
    void require_plane() const {
        if (!plane_) throw std::domain_error("ruled divisor class has no plane degree");
    }
    void require_same(const DivisorClass& y) const {
        if (plane_ != y.plane_)
            throw std::domain_error("divisor classes live on different kinds of base");
    }
    bool plane_;
    i64 a_;
    i64 b_;
};

// Class on a blow-up of P2: d*l - sum mults[i]*l_i (l the line pullback,
// l_i the exceptional curves).
struct BlownPlaneClass {
    i64 d = 0;
    std::vector<i64> mults;

    i64 self_intersection() const;
};

i64 intersect(const BlownPlaneClass& c1, const BlownPlaneClass& c2);

// Intersection pairing on the base: C0^2 = -e, C0.f = 1, f^2 = 0 on ruled
// bases; degree product on P2.  A class of the wrong flavour is a domain error.
i64 intersect(const DivisorClass& d1, const DivisorClass& d2, const RuledBase& base);

DivisorClass canonical_class(const RuledBase& base);

// p_a(D) = D.(D+K)/2 + 1
i64 arithmetic_genus(const DivisorClass& d, const RuledBase& base);

// chi(D) = (1-g) + D.(D-K)/2
i64 euler_characteristic(const DivisorClass& d, const RuledBase& base);

// Exact on P2, rational and elliptic bases; on a genus-g base only the
// refuting direction is decidable.
Status is_ample(const DivisorClass& d, const RuledBase& base);

// Exact on P2 and rational bases.  Elliptic: Refuted when ampleness fails,
// Established when the slope threshold holds (b + a*mu- >= 3, or > 1 when
// the normalized bundle has degree 1), else Inconclusive.
Status is_very_ample(const DivisorClass& d, const RuledBase& base);

// Line classes of the embedding given by a very ample class V on a ruled
// base: the fibre f whenever V.f = 1, plus C0 when g = 0 and V.C0 = 1
// (a section over a positive-genus curve is never rational).  Demands
// is_very_ample(V) Established.
std::vector<DivisorClass> lines_in_embedding(const DivisorClass& v, const RuledBase& base);

// Lines of the embedding by |C0 + x f|: [f] always, plus C0 exactly when
// g = 0 and x = e+1.
std::vector<DivisorClass> classify_lines(i64 x, const RuledBase& base);

} // namespace scrollsmith
