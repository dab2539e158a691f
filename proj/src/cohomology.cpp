#include "scrollsmith/cohomology.hpp"

namespace scrollsmith {

namespace {

void require_ruled_class(const DivisorClass& d) {
    if (d.on_plane())
        throw std::domain_error("expected a ruled divisor class");
}

// h0 of a*C0 + b*f for a >= 0 as a closed arithmetic series: the i-th
// pushforward summand contributes b - i e + 1 sections when non-negative.
i64 h0_nonnegative_part(i64 a, i64 b, i64 e) {
    if (b < 0) return 0;
    i64 imax = a;
    if (e > 0) imax = std::min(a, b / e);
    i64 terms = add_ck(imax, 1);
    // sum_{i=0..imax} (b + 1 - i e) = terms*(b+1) - e * imax*(imax+1)/2
    i64 tri = mul_ck(imax, add_ck(imax, 1)) / 2;
    return sub_ck(mul_ck(terms, add_ck(b, 1)), mul_ck(e, tri));
}

} // namespace

CohomologyBound cohomology_rational(const DivisorClass& d, i64 e) {
    require_ruled_class(d);
    if (e < 0) throw std::domain_error("rational ruled base requires e >= 0");
    RuledBase base = RuledBase::rational(e);
    i64 a = d.a(), b = d.b();
    if (a == -1) return CohomologyBound::exactly(0, 0, 0);
    if (a < -1) {
        CohomologyBound dual = cohomology_rational(canonical_class(base) - d, e);
        return CohomologyBound::exactly(dual.h2.lo, dual.h1.lo, dual.h0.lo);
    }
    i64 h0 = h0_nonnegative_part(a, b, e);
    i64 h1 = sub_ck(h0, euler_characteristic(d, base));
    if (h1 < 0) throw std::logic_error("negative h1 in exact rational cohomology");
    return CohomologyBound::exactly(h0, h1, 0);
}

i64 h0_oracle_lattice(const DivisorClass& d, i64 e) {
    require_ruled_class(d);
    if (e < 0) throw std::domain_error("rational ruled base requires e >= 0");
    if (d.a() < 0) return 0;
    i64 count = 0;
    for (i64 i = 0; i <= d.a(); ++i)
        for (i64 j = 0; j <= d.b() - i * e; ++j)
            ++count;
    return count;
}

CohomologyBound cohomology_plane(i64 d) {
    auto choose2 = [](i64 n) { return mul_ck(n, sub_ck(n, 1)) / 2; };
    i64 h0 = d >= 0 ? choose2(add_ck(d, 2)) : 0;
    i64 h2 = d <= -3 ? choose2(-add_ck(d, 1)) : 0;
    return CohomologyBound::exactly(h0, 0, h2);
}

CohomologyBound cohomology_exact(const DivisorClass& d, const RuledBase& base) {
    switch (base.kind()) {
        case BaseKind::ProjectivePlane: return cohomology_plane(d.degree());
        case BaseKind::RationalRuled: return cohomology_rational(d, base.e());
        default:
            throw std::domain_error("exact cohomology is available on rational and plane bases only");
    }
}

Status h1_vanishes_elliptic(const DivisorClass& d, const RuledBase& base) {
    require_ruled_class(d);
    if (base.kind() != BaseKind::EllipticRuled)
        throw std::domain_error("slope vanishing test applies to elliptic bases");
    if (d.a() == -1) return Status::Established;
    if (d.a() >= 0 &&
        Rational(d.b()) + Rational(d.a()) * base.mu_minus() > Rational(0))
        return Status::Established;
    return Status::Inconclusive;
}

bool h0_vanishes_elliptic(const DivisorClass& d, const RuledBase& base) {
    require_ruled_class(d);
    if (base.kind() != BaseKind::EllipticRuled)
        throw std::domain_error("slope vanishing test applies to elliptic bases");
    if (d.a() < 0) return true;
    return Rational(d.b()) + Rational(d.a()) * base.mu_plus() < Rational(0);
}

i64 h0_lower_bound_blown_plane(const BlownPlaneClass& c) {
    if (c.d < 0) throw std::domain_error("blown-plane bound requires d >= 0");
    i64 bound = mul_ck(add_ck(c.d, 2), add_ck(c.d, 1)) / 2;
    for (i64 m : c.mults) {
        if (m < 0) throw std::domain_error("point multiplicities must be non-negative");
        bound = sub_ck(bound, mul_ck(m, add_ck(m, 1)) / 2);
    }
    return bound > 0 ? bound : 0;
}

Status h1_vanishes_with_ideal(const DivisorClass& d, i64 w, const RuledBase& base) {
    require_ruled_class(d);
    if (w < 0) throw std::domain_error("number of points must be non-negative");
    if (base.kind() != BaseKind::RationalRuled || base.e() != 1)
        throw std::domain_error("ideal-twist vanishing lemma applies to F_1 only");
    if (d.a() >= 0 && d.b() >= 1 && d.b() >= d.a() &&
        cohomology_rational(d, 1).h0.lo >= w)
        return Status::Established;
    return Status::Inconclusive;
}

Status general_position_surjective(const DivisorClass& d, i64 w, const RuledBase& base) {
    if (w < 0) throw std::domain_error("number of points must be non-negative");
    if (w == 0) return Status::Established;  // empty target
    switch (base.kind()) {
        case BaseKind::ProjectivePlane:
        case BaseKind::RationalRuled: {
            CohomologyBound c = cohomology_exact(d, base);
            return (c.h0.lo >= w && c.h1.lo == 0) ? Status::Established
                                                  : Status::Inconclusive;
        }
        case BaseKind::EllipticRuled: {
            // once h1 vanishes, h0 = chi (h2 dies for a >= -1, which the
            // certificate implies), so chi >= w suffices
            if (h1_vanishes_elliptic(d, base) == Status::Established &&
                euler_characteristic(d, base) >= w)
                return Status::Established;
            return Status::Inconclusive;
        }
        case BaseKind::GenusGRuled:
            return Status::Inconclusive;
    }
    throw std::logic_error("unreachable base kind");
}

} // namespace scrollsmith
