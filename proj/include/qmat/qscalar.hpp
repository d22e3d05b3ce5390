#pragma once

#include <string>

#include "qmat/zpoly.hpp"

namespace qmat {

/// An element of Q(q), kept in canonical reduced form at all times:
/// gcd(num, den) = 1 (integer content included), den has positive leading
/// coefficient, zero is 0/1. Two values are equal as field elements iff
/// their representations are identical.
class QScalar {
public:
    QScalar() : num_(), den_(1) {}
    QScalar(long c) : num_(c), den_(1) {}
    QScalar(BigInt c) : num_(std::move(c)), den_(1) {}
    QScalar(ZPoly num) : num_(std::move(num)), den_(1) {}
    QScalar(ZPoly num, ZPoly den);
    QScalar(const Rational& r);

    static QScalar q() { return QScalar(ZPoly::q_power(1)); }
    /// q^k for any integer k; negative exponents land in the denominator.
    static QScalar q_power(long k);

    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one() && num_.degree() <= 0; }

    QScalar operator-() const;
    friend QScalar operator+(const QScalar& a, const QScalar& b);
    friend QScalar operator-(const QScalar& a, const QScalar& b);
    friend QScalar operator*(const QScalar& a, const QScalar& b);
    /// Throws qmat::error on division by zero.
    friend QScalar operator/(const QScalar& a, const QScalar& b);
    QScalar& operator+=(const QScalar& o) { return *this = *this + o; }
    QScalar& operator-=(const QScalar& o) { return *this = *this - o; }
    QScalar& operator*=(const QScalar& o) { return *this = *this * o; }

    friend bool operator==(const QScalar& a, const QScalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }

    /// Substitutes q -> 1/q and re-canonicalizes. Involutive.
    QScalar inverted_q() const;

    /// Integer powers; negative exponents invert (throws on 0^negative).
    QScalar pow(long e) const;

    /// Exact evaluation at a rational point. Throws on q0 == 0 and on poles.
    Rational eval(const Rational& q0) const;

    /// Canonical text: expanded numerator over expanded denominator, terms in
    /// decreasing degree, e.g. "(q^2 - 1)/q". Parenthesized tightly enough to
    /// reparse inside a product.
    std::string str() const;

private:
    ZPoly num_, den_;
    void canonicalize();
};

} // namespace qmat
