#include "qmat/zpoly.hpp"

#include <sstream>

namespace qmat {

void ZPoly::strip() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ZPoly ZPoly::from_coeffs(std::vector<BigInt> c) {
    ZPoly p;
    p.coeffs_ = std::move(c);
    p.strip();
    return p;
}

ZPoly ZPoly::q_power(unsigned k) {
    std::vector<BigInt> c(k + 1, BigInt(0));
    c[k] = 1;
    return from_coeffs(std::move(c));
}

BigInt ZPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return BigInt(0);
    return coeffs_[static_cast<size_t>(k)];
}

const BigInt& ZPoly::leading() const {
    if (is_zero()) throw error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

BigInt ZPoly::content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly ZPoly::primitive_part() const {
    if (is_zero()) return ZPoly();
    BigInt g = content();
    std::vector<BigInt> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] / g;
    return from_coeffs(std::move(c));
}

ZPoly ZPoly::operator-() const {
    std::vector<BigInt> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return from_coeffs(std::move(c));
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return ZPoly::from_coeffs(std::move(c));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return ZPoly::from_coeffs(std::move(c));
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZPoly();
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            if (b.coeffs_[j] != 0) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return ZPoly::from_coeffs(std::move(c));
}

ZPoly ZPoly::reversed() const {
    std::vector<BigInt> c(coeffs_.rbegin(), coeffs_.rend());
    return from_coeffs(std::move(c));
}

Rational ZPoly::eval(const Rational& q0) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q0 + *it;
    return acc;
}

std::string ZPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& c = coeffs_[static_cast<size_t>(k)];
        if (c == 0) continue;
        BigInt a = abs(c);
        if (first) {
            if (sgn(c) < 0) out << "-";
            first = false;
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        if (k == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << "q";
            if (k != 1) out << "^" << k;
        }
    }
    return out.str();
}

namespace {

// Pseudo-remainder of a by b (deg a >= deg b >= 0): multiplies by powers of
// lc(b) so the arithmetic stays in Z[q].
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
    const int db = b.degree();
    const BigInt& lb = b.leading();
    while (!a.is_zero() && a.degree() >= db) {
        int shift = a.degree() - db;
        std::vector<BigInt> c(static_cast<size_t>(a.degree()) + 1, BigInt(0));
        for (int i = 0; i <= a.degree(); ++i) c[static_cast<size_t>(i)] = lb * a.coeff(i);
        const BigInt la = a.leading();
        for (int i = 0; i <= db; ++i) c[static_cast<size_t>(i + shift)] -= la * b.coeff(i);
        a = ZPoly::from_coeffs(std::move(c));
    }
    return a;
}

} // namespace

ZPoly poly_gcd(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() && b.is_zero()) return ZPoly();
    if (a.is_zero()) return b.sign_of_leading() < 0 ? -b : b;
    if (b.is_zero()) return a.sign_of_leading() < 0 ? -a : a;

    BigInt cg;
    mpz_gcd(cg.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());

    // primitive PRS
    ZPoly A = a.primitive_part();
    ZPoly B = b.primitive_part();
    if (A.degree() < B.degree()) std::swap(A, B);
    while (!B.is_zero()) {
        ZPoly R = pseudo_rem(A, B).primitive_part();
        A = std::move(B);
        B = std::move(R);
    }
    if (A.sign_of_leading() < 0) A = -A;
    return ZPoly(cg) * A;
}

ZPoly poly_div_exact(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw error("polynomial division by zero");
    if (a.is_zero()) return ZPoly();
    if (a.degree() < b.degree()) throw error("inexact polynomial division");

    std::vector<BigInt> quot(static_cast<size_t>(a.degree() - b.degree()) + 1, BigInt(0));
    ZPoly r = a;
    const BigInt& lb = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        if (!mpz_divisible_p(r.leading().get_mpz_t(), lb.get_mpz_t()))
            throw error("inexact polynomial division");
        BigInt t = r.leading() / lb;
        int shift = r.degree() - b.degree();
        quot[static_cast<size_t>(shift)] = t;
        std::vector<BigInt> c(static_cast<size_t>(r.degree()) + 1, BigInt(0));
        for (int i = 0; i <= r.degree(); ++i) c[static_cast<size_t>(i)] = r.coeff(i);
        for (int i = 0; i <= b.degree(); ++i) c[static_cast<size_t>(i + shift)] -= t * b.coeff(i);
        c.pop_back();
        r = ZPoly::from_coeffs(std::move(c));
    }
    if (!r.is_zero()) throw error("inexact polynomial division");
    return ZPoly::from_coeffs(std::move(quot));
}

} // namespace qmat
