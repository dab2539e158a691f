#include "scrollsmith/surface.hpp"

namespace scrollsmith {

const char* to_token(Status s) {
    switch (s) {
        case Status::Established: return "established";
        case Status::Inconclusive: return "inconclusive";
        case Status::Refuted: return "refuted";
        case Status::NotVeryAmple: return "not_very_ample";
    }
    throw std::logic_error("unreachable status");
}

RuledBase RuledBase::projective_plane() {
    return RuledBase(BaseKind::ProjectivePlane, 0, 0, true);
}

RuledBase RuledBase::rational(i64 e) {
    if (e < 0) throw std::domain_error("rational ruled base requires e >= 0");
    return RuledBase(BaseKind::RationalRuled, e, 0, e == 0 ? true : false);
}

RuledBase RuledBase::elliptic(i64 e, bool decomposable) {
    if (decomposable) {
        if (e < 0) throw std::domain_error("decomposable elliptic base requires e >= 0");
    } else {
        // indecomposable normalized bundle on an elliptic curve: deg = -e in {0,1}
        if (e != 0 && e != -1)
            throw std::domain_error("indecomposable elliptic base requires e in {-1,0}");
    }
    return RuledBase(BaseKind::EllipticRuled, e, 1, decomposable);
}

RuledBase RuledBase::genus_g(i64 g, i64 e) {
    if (g < 0) throw std::domain_error("genus must be non-negative");
    return RuledBase(BaseKind::GenusGRuled, e, g, true);
}

i64 RuledBase::e() const {
    if (kind_ == BaseKind::ProjectivePlane)
        throw std::domain_error("P2 has no ruling invariant");
    return e_;
}

bool RuledBase::decomposable() const {
    if (kind_ != BaseKind::EllipticRuled)
        throw std::domain_error("decomposability is tracked on elliptic bases only");
    return decomposable_;
}

Rational RuledBase::mu_minus() const {
    if (kind_ != BaseKind::EllipticRuled)
        throw std::domain_error("slope data is available on elliptic bases only");
    return decomposable_ ? Rational(-e_) : Rational(-e_, 2);
}

Rational RuledBase::mu_plus() const {
    if (kind_ != BaseKind::EllipticRuled)
        throw std::domain_error("slope data is available on elliptic bases only");
    // decomposable O + L(-e): slopes {0, -e}; indecomposable: semistable.
    return decomposable_ ? Rational(0) : Rational(-e_, 2);
}

std::string RuledBase::label() const {
    switch (kind_) {
        case BaseKind::ProjectivePlane: return "P2";
        case BaseKind::RationalRuled: return "F" + std::to_string(e_);
        case BaseKind::EllipticRuled:
            return "E(e=" + std::to_string(e_) + (decomposable_ ? ",dec)" : ",ind)");
        case BaseKind::GenusGRuled:
            return "R(g=" + std::to_string(g_) + ",e=" + std::to_string(e_) + ")";
    }
    throw std::logic_error("unreachable base kind");
}

std::string DivisorClass::str() const {
    if (plane_) return "O(" + std::to_string(a_) + ")";
    if (a_ == 0 && b_ == 0) return "0";
    std::string s;
    if (a_ != 0) {
        if (a_ == -1) s += "-";
        else if (a_ != 1) s += std::to_string(a_);
        s += "C0";
    }
    if (b_ != 0) {
        if (!s.empty() && b_ > 0) s += "+";
        if (b_ == -1) s += "-";
        else if (b_ != 1) s += std::to_string(b_);
        s += "f";
    }
    return s;
}

i64 BlownPlaneClass::self_intersection() const {
    return intersect(*this, *this);
}

i64 intersect(const BlownPlaneClass& c1, const BlownPlaneClass& c2) {
    if (c1.mults.size() != c2.mults.size())
        throw std::domain_error("blown-plane classes live on different blow-ups");
    i64 r = mul_ck(c1.d, c2.d);
    for (size_t i = 0; i < c1.mults.size(); ++i)
        r = sub_ck(r, mul_ck(c1.mults[i], c2.mults[i]));
    return r;
}

i64 intersect(const DivisorClass& d1, const DivisorClass& d2, const RuledBase& base) {
    bool plane = base.kind() == BaseKind::ProjectivePlane;
    if (d1.on_plane() != plane || d2.on_plane() != plane)
        throw std::domain_error("divisor class does not live on this base");
    if (plane) return mul_ck(d1.degree(), d2.degree());
    // (a1 C0 + b1 f).(a2 C0 + b2 f) = -e a1 a2 + a1 b2 + a2 b1
    i64 r = mul_ck(-base.e(), mul_ck(d1.a(), d2.a()));
    r = add_ck(r, mul_ck(d1.a(), d2.b()));
    return add_ck(r, mul_ck(d2.a(), d1.b()));
}

DivisorClass canonical_class(const RuledBase& base) {
    if (base.kind() == BaseKind::ProjectivePlane) return DivisorClass::plane(-3);
    // K = -2 C0 + (2g - 2 - e) f
    return DivisorClass::ruled(-2, sub_ck(mul_ck(2, base.genus()) - 2, base.e()));
}

i64 arithmetic_genus(const DivisorClass& d, const RuledBase& base) {
    i64 n = intersect(d, d + canonical_class(base), base);
    if (n % 2 != 0) throw std::logic_error("D.(D+K) must be even");
    return add_ck(n / 2, 1);
}

i64 euler_characteristic(const DivisorClass& d, const RuledBase& base) {
    i64 n = intersect(d, d - canonical_class(base), base);
    if (n % 2 != 0) throw std::logic_error("D.(D-K) must be even");
    return add_ck(1 - base.genus(), n / 2);
}

Status is_ample(const DivisorClass& d, const RuledBase& base) {
    switch (base.kind()) {
        case BaseKind::ProjectivePlane:
            return d.degree() >= 1 ? Status::Established : Status::Refuted;
        case BaseKind::RationalRuled:
            return (d.a() >= 1 && d.b() > mul_ck(d.a(), base.e()))
                       ? Status::Established : Status::Refuted;
        case BaseKind::EllipticRuled:
            return (d.a() >= 1 && Rational(d.b()) + Rational(d.a()) * base.mu_minus() > Rational(0))
                       ? Status::Established : Status::Refuted;
        case BaseKind::GenusGRuled: {
            // b > ae for e >= 0, b > ae/2 for e < 0
            bool ok = d.a() >= 1 &&
                      (base.e() >= 0
                           ? d.b() > mul_ck(d.a(), base.e())
                           : Rational(d.b()) > Rational(mul_ck(d.a(), base.e()), 2));
            return ok ? Status::Established : Status::Refuted;
        }
    }
    throw std::logic_error("unreachable base kind");
}

Status is_very_ample(const DivisorClass& d, const RuledBase& base) {
    switch (base.kind()) {
        case BaseKind::ProjectivePlane:
            return d.degree() >= 1 ? Status::Established : Status::Refuted;
        case BaseKind::RationalRuled:
            // on F_e very ample coincides with ample
            return is_ample(d, base);
        case BaseKind::EllipticRuled: {
            if (is_ample(d, base) != Status::Established) return Status::Refuted;
            Rational slope = Rational(d.b()) + Rational(d.a()) * base.mu_minus();
            bool degree_one = !base.decomposable() && base.e() == -1;
            if (slope >= Rational(3) || (degree_one && slope > Rational(1)))
                return Status::Established;
            return Status::Inconclusive;
        }
        case BaseKind::GenusGRuled:
            // no numerical very-ampleness criterion here; ampleness gate only
            return is_ample(d, base) == Status::Refuted ? Status::Refuted
                                                        : Status::Inconclusive;
    }
    throw std::logic_error("unreachable base kind");
}

std::vector<DivisorClass> lines_in_embedding(const DivisorClass& v, const RuledBase& base) {
    if (base.kind() == BaseKind::ProjectivePlane)
        throw std::domain_error("line classification applies to ruled bases");
    if (is_very_ample(v, base) != Status::Established)
        throw std::domain_error("embedding class is not very ample");
    std::vector<DivisorClass> lines;
    DivisorClass f = DivisorClass::ruled(0, 1), c0 = DivisorClass::ruled(1, 0);
    if (intersect(v, f, base) == 1) lines.push_back(f);
    if (base.genus() == 0 && intersect(v, c0, base) == 1) lines.push_back(c0);
    return lines;
}

std::vector<DivisorClass> classify_lines(i64 x, const RuledBase& base) {
    return lines_in_embedding(DivisorClass::ruled(1, x), base);
}

} // namespace scrollsmith
