#include "qmat/qscalar.hpp"

#include <sstream>

namespace qmat {

QScalar::QScalar(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw error("scalar with zero denominator");
    canonicalize();
}

QScalar::QScalar(const Rational& r)
    : num_(BigInt(r.get_num())), den_(BigInt(r.get_den())) {
    canonicalize();
}

void QScalar::canonicalize() {
    if (num_.is_zero()) {
        den_ = ZPoly(1);
        return;
    }
    ZPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = poly_div_exact(num_, g);
        den_ = poly_div_exact(den_, g);
    }
    if (den_.sign_of_leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

QScalar QScalar::q_power(long k) {
    if (k >= 0) return QScalar(ZPoly::q_power(static_cast<unsigned>(k)));
    return QScalar(ZPoly(1), ZPoly::q_power(static_cast<unsigned>(-k)));
}

QScalar QScalar::operator-() const {
    QScalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

QScalar operator+(const QScalar& a, const QScalar& b) {
    return QScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QScalar operator-(const QScalar& a, const QScalar& b) {
    return QScalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

QScalar operator*(const QScalar& a, const QScalar& b) {
    return QScalar(a.num_ * b.num_, a.den_ * b.den_);
}

QScalar operator/(const QScalar& a, const QScalar& b) {
    if (b.is_zero()) throw error("scalar division by zero");
    return QScalar(a.num_ * b.den_, a.den_ * b.num_);
}

QScalar QScalar::inverted_q() const {
    if (is_zero()) return QScalar();
    int dn = num_.degree();
    int dd = den_.degree();
    ZPoly n = num_.reversed();
    ZPoly d = den_.reversed();
    if (dd >= dn)
        n = n * ZPoly::q_power(static_cast<unsigned>(dd - dn));
    else
        d = d * ZPoly::q_power(static_cast<unsigned>(dn - dd));
    return QScalar(std::move(n), std::move(d));
}

QScalar QScalar::pow(long e) const {
    if (e < 0) {
        if (is_zero()) throw error("zero raised to a negative power");
        return QScalar(den_, num_).pow(-e);
    }
    QScalar acc(1);
    QScalar base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Rational QScalar::eval(const Rational& q0) const {
    if (q0 == 0) throw error("scalar evaluation at q0 = 0");
    Rational d = den_.eval(q0);
    if (d == 0) throw error("scalar evaluation at a pole");
    Rational n = num_.eval(q0);
    Rational r = n / d;
    r.canonicalize();
    return r;
}

namespace {

bool multi_term(const ZPoly& p) {
    int nonzero = 0;
    for (const auto& c : p.coeffs())
        if (c != 0 && ++nonzero > 1) return true;
    return false;
}

} // namespace

std::string QScalar::str() const {
    if (den_.is_one()) return num_.str();
    std::ostringstream out;
    if (multi_term(num_))
        out << "(" << num_.str() << ")";
    else
        out << num_.str();
    out << "/";
    // "a/2*q^3" would reparse as (a/2)*q^3, so anything but an integer,
    // q or q^k goes in parentheses.
    bool den_needs_parens = multi_term(den_) || (den_.degree() >= 1 && den_.leading() != 1);
    if (den_needs_parens)
        out << "(" << den_.str() << ")";
    else
        out << den_.str();
    return out.str();
}

} // namespace qmat
