#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qmat/error.hpp"

namespace qmat {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Univariate polynomial in q with arbitrary-precision integer coefficients.
/// Stored densely, coeffs_[k] = coefficient of q^k, no trailing zeros.
class ZPoly {
public:
    ZPoly() = default;
    ZPoly(long c) { if (c != 0) coeffs_.emplace_back(c); }
    ZPoly(BigInt c) { if (c != 0) coeffs_.push_back(std::move(c)); }

    /// Coefficients in ascending degree; trailing zeros are stripped.
    static ZPoly from_coeffs(std::vector<BigInt> c);
    static ZPoly q_power(unsigned k);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    BigInt coeff(int k) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    const BigInt& leading() const;
    /// gcd of all coefficients (nonnegative); 0 for the zero polynomial.
    BigInt content() const;
    /// Divides out the content, keeping the sign of the leading coefficient.
    ZPoly primitive_part() const;
    int sign_of_leading() const { return is_zero() ? 0 : sgn(coeffs_.back()); }

    ZPoly operator-() const;
    friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }

    /// Coefficient reversal: returns q^deg * p(1/q).
    ZPoly reversed() const;

    /// Exact evaluation; q0 may be anything (poles are the caller's concern).
    Rational eval(const Rational& q0) const;

    /// "q^2 - 1" style, terms in decreasing degree; "0" for zero.
    std::string str() const;

private:
    std::vector<BigInt> coeffs_;
    void strip();
};

/// gcd over Z[q] (content included), normalized to positive leading coefficient.
ZPoly poly_gcd(const ZPoly& a, const ZPoly& b);

/// Exact division; throws qmat::error if b == 0 or the division is not exact.
ZPoly poly_div_exact(const ZPoly& a, const ZPoly& b);

} // namespace qmat
