#include "scrollsmith/bundle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace scrollsmith {

const char* to_token(ExistenceNote n) {
    return n == ExistenceNote::Supported ? "supported" : "unverified";
}

namespace {

// floor(a/2) also for negative a
i64 half_floor(i64 a) { return (a >= 0) ? a / 2 : -((-a + 1) / 2); }

bool flavour_matches(const RuledBase& base, const DivisorClass& d) {
    return d.on_plane() == (base.kind() == BaseKind::ProjectivePlane);
}

// Is h0(base, d) = 0 certifiable exactly (rational/plane) or by slope (elliptic)?
bool h0_vanishes(const DivisorClass& d, const RuledBase& base) {
    switch (base.kind()) {
    case BaseKind::ProjectivePlane:
        return cohomology_plane(d.degree()).h0.hi == 0;
    case BaseKind::RationalRuled:
        return cohomology_rational(d, base.e()).h0.hi == 0;
    case BaseKind::EllipticRuled:
        return h0_vanishes_elliptic(d, base);
    case BaseKind::GenusGRuled:
        return false; // no section engine for higher-genus bases
    }
    return false;
}

ExistenceNote existence_for(const RuledBase& base, const DivisorClass& L,
                            const DivisorClass& M, i64 w, i64 lm) {
    if (w == 0) {
        return ExistenceNote::Supported; // the split extension L + M exists
    }
    // A locally free extension exists for points in suitable position when
    // no divisor in |K + M - L| passes through all but one point of W:
    // certifiable when the linear system is empty, or when the class is
    // trivial (a section vanishing at any point vanishes identically).
    const DivisorClass t = canonical_class(base) + M - L;
    if (h0_vanishes(t, base) || t.is_zero()) {
        return ExistenceNote::Supported;
    }
    // Two points on one fibre, with K + M - L a positive multiple of the
    // fibre: every member of |K + M - L| is a union of fibres and can be
    // arranged to miss one of the two chosen points.
    if (base.kind() != BaseKind::ProjectivePlane && w == 2 && lm == 2 &&
        !t.on_plane() && t.a() == 0 && t.b() >= 1) {
        return ExistenceNote::Supported;
    }
    return ExistenceNote::Unverified;
}

// Very-ampleness of a rank-2 bundle on a rational curve from its extension
// edge degrees (d_sub, d_quo).  If d_sub > d_quo the extension splits as
// O(d_sub) + O(d_quo); otherwise the balanced summand can be anything between
// O(d_sub) and O(floor((d_sub+d_quo)/2)).  Very ample iff both summands >= 1.
Status rational_curve_bundle_va(i64 d_sub, i64 d_quo) {
    const i64 min_low = std::min(d_sub, d_quo);
    const i64 min_high = (d_sub > d_quo) ? d_quo : half_floor(add_ck(d_sub, d_quo));
    if (min_low >= 1) return Status::Established;
    if (min_high <= 0) return Status::Refuted;
    return Status::Inconclusive;
}

// Very-ampleness on an elliptic curve: every rank-1 quotient of the extension
// has degree >= min(d_sub, d_quo), and a bundle with minimal quotient slope
// >= 3 is very ample; conversely a very ample bundle has every rank-1
// quotient of degree >= 3, and O(d_quo) is one such quotient.
Status elliptic_curve_bundle_va(i64 d_sub, i64 d_quo) {
    if (std::min(d_sub, d_quo) >= 3) return Status::Established;
    if (d_quo <= 2) return Status::Refuted;
    return Status::Inconclusive;
}

} // namespace

ExtensionBundle make_extension_bundle(const RuledBase& base, const DivisorClass& L,
                                      const DivisorClass& M, i64 w, i64 lm,
                                      bool general_position, std::string label) {
    if (!flavour_matches(base, L) || !flavour_matches(base, M)) {
        throw std::domain_error("extension bundle: divisor classes do not live on the base surface");
    }
    if (w < 0) {
        throw std::domain_error("extension bundle: point count w must be >= 0");
    }
    if (lm < 1) {
        throw std::domain_error("extension bundle: per-fibre cap lm must be >= 1");
    }
    if (w >= 1 && lm > w) {
        throw std::domain_error("extension bundle: per-fibre cap lm exceeds the point count");
    }
    if (general_position && base.kind() == BaseKind::RationalRuled && base.e() == 1 &&
        w >= 1 && lm != 1) {
        throw std::domain_error("extension bundle: general position on F_1 forces lm = 1");
    }
    return ExtensionBundle{base,  L,
                           M,     w,
                           lm,    general_position,
                           std::move(label), existence_for(base, L, M, w, lm)};
}

ChernClasses chern_classes(const ExtensionBundle& E) {
    return {E.L + E.M, add_ck(intersect(E.L, E.M, E.base), E.w)};
}

SplittingType restrict_to_fibre(const ExtensionBundle& E, i64 eps) {
    if (E.base.kind() == BaseKind::ProjectivePlane) {
        throw std::domain_error("restrict_to_fibre: the plane has no fibres");
    }
    if (eps < 0 || eps > E.lm_effective()) {
        throw std::domain_error("restrict_to_fibre: eps must lie in [0, per-fibre cap]");
    }
    const DivisorClass f = DivisorClass::ruled(0, 1);
    const i64 d_sub = add_ck(intersect(E.L, f, E.base), eps);
    const i64 d_quo = sub_ck(intersect(E.M, f, E.base), eps);
    return {d_sub, d_quo, rational_curve_bundle_va(d_sub, d_quo)};
}

SplittingType restrict_to_curve(const ExtensionBundle& E, const DivisorClass& gamma, i64 eps) {
    if (eps < 0 || eps > E.w) {
        throw std::domain_error("restrict_to_curve: eps must lie in [0, w]");
    }
    const i64 d_sub = add_ck(intersect(E.L, gamma, E.base), eps);
    const i64 d_quo = sub_ck(intersect(E.M, gamma, E.base), eps);
    const i64 pa = arithmetic_genus(gamma, E.base);
    Status va = Status::Inconclusive;
    if (pa == 0) {
        va = rational_curve_bundle_va(d_sub, d_quo);
    } else if (pa == 1) {
        va = elliptic_curve_bundle_va(d_sub, d_quo);
    }
    return {d_sub, d_quo, va};
}

CohomologyBound h0_bundle_twist(const ExtensionBundle& E, const DivisorClass& B) {
    const BaseKind kind = E.base.kind();
    if (kind != BaseKind::ProjectivePlane && kind != BaseKind::RationalRuled) {
        throw std::domain_error("h0_bundle_twist: exact section counts need a rational or plane base");
    }
    if (!flavour_matches(E.base, B)) {
        throw std::domain_error("h0_bundle_twist: twist class does not live on the base surface");
    }
    const CohomologyBound cL = cohomology_exact(E.L + B, E.base);
    const CohomologyBound cM = cohomology_exact(E.M + B, E.base);
    const i64 h0L = cL.h0.lo;
    const i64 h0M = cM.h0.lo;

    // Is h0((M+B) (x) I_W) = max(0, h0(M+B) - w) certified?
    bool count_certified = false;
    if (E.w == 0) {
        count_certified = true;
    } else if (E.general_position && kind == BaseKind::ProjectivePlane) {
        count_certified = true; // general points of P2 impose independent conditions
    } else if (E.general_position && kind == BaseKind::RationalRuled && E.base.e() == 1) {
        count_certified =
            h1_vanishes_with_ideal(E.M + B, E.w, E.base) == Status::Established;
    }

    CohomologyBound out;
    out.h1 = {0, std::numeric_limits<i64>::max()};
    out.h2 = {0, std::numeric_limits<i64>::max()};
    if (count_certified) {
        const i64 total = add_ck(h0L, std::max<i64>(0, sub_ck(h0M, E.w)));
        if (cL.h1.lo == 0) {
            out.h0 = {total, total};
            out.exact = true;
        } else {
            out.h0 = {h0L, total};
            out.exact = false;
        }
    } else {
        out.h0 = {h0L, add_ck(h0L, h0M)};
        out.exact = false;
    }
    return out;
}

ExtensionBundle ey_family(i64 y, i64 h) {
    if (h < 3) {
        throw std::domain_error("ey_family: requires h >= 3");
    }
    if (y < -2 || y > 4) {
        throw std::domain_error("ey_family: requires -2 <= y <= 4");
    }
    if (h + y < 1) {
        throw std::domain_error("ey_family: requires at least one point (h + y >= 1)");
    }
    const RuledBase f1 = RuledBase::rational(1);
    const DivisorClass L = DivisorClass::ruled(1, 5 - h);
    const DivisorClass M = DivisorClass::ruled(2, h);
    std::string label = "E_y(y=" + std::to_string(y) + ",h=" + std::to_string(h) + ")";
    return make_extension_bundle(f1, L, M, h + y, 1, true, std::move(label));
}

} // namespace scrollsmith
