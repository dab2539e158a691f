#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace scrollsmith {

using i64 = long long;

// All lattice arithmetic is exact: any operation that would wrap aborts the
// computation instead of silently overflowing.
inline i64 add_ck(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline i64 sub_ck(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline i64 mul_ck(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

// Exact rational number. Slopes of rank-2 bundles on elliptic curves are
// half-integers, so denominators stay tiny, but comparisons must be exact.
class Rational {
public:
    Rational() = default;
    Rational(i64 n) : num_(n) {}
    Rational(i64 n, i64 d) : num_(n), den_(d) {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        i64 g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    i64 num() const { return num_; }
    i64 den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return Rational(add_ck(mul_ck(x.num_, y.den_), mul_ck(y.num_, x.den_)),
                        mul_ck(x.den_, y.den_));
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return Rational(sub_ck(mul_ck(x.num_, y.den_), mul_ck(y.num_, x.den_)),
                        mul_ck(x.den_, y.den_));
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return Rational(mul_ck(x.num_, y.num_), mul_ck(x.den_, y.den_));
    }
    Rational operator-() const { return Rational(-num_, den_); }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
    friend bool operator<(const Rational& x, const Rational& y) {
        return mul_ck(x.num_, y.den_) < mul_ck(y.num_, x.den_);
    }
    friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
    friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
    friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    i64 num_ = 0;
    i64 den_ = 1;
};

} // namespace scrollsmith
