#pragma once

#include <functional>
#include <map>
#include <string>

#include "qmat/monomial.hpp"
#include "qmat/qscalar.hpp"

namespace qmat {

/// An element of O_q(M_n) in PBW normal form: a sparse sum of ordered
/// monomials with nonzero Q(q) coefficients. PBW monomials are a basis, so
/// equality is term-map identity. The term map iterates in the canonical
/// monomial order (ascending); printing walks it leading-term-first.
class NormalElement {
public:
    explicit NormalElement(int n) : n_(n) {
        if (n < 1) throw error("matrix size must be positive");
    }
    static NormalElement unit(int n) { return scalar(n, QScalar(1)); }
    static NormalElement scalar(int n, QScalar c);
    static NormalElement generator(int n, int i, int j);
    static NormalElement monomial(PBWMonomial m, QScalar c = QScalar(1));

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<PBWMonomial, QScalar>& terms() const { return terms_; }
    QScalar coefficient(const PBWMonomial& m) const;
    size_t term_count() const { return terms_.size(); }

    /// Max total degree over terms; -1 for the zero element.
    int degree() const;
    /// Max x_{1,1}-exponent over terms; -1 for zero.
    int filtration_degree() const;
    bool is_homogeneous() const;

    void add_term(const PBWMonomial& m, const QScalar& c);

    NormalElement operator-() const;
    friend NormalElement operator+(const NormalElement& a, const NormalElement& b);
    friend NormalElement operator-(const NormalElement& a, const NormalElement& b);
    NormalElement scaled(const QScalar& c) const;
    NormalElement& operator+=(const NormalElement& o) { return *this = *this + o; }
    NormalElement& operator-=(const NormalElement& o) { return *this = *this - o; }

    bool operator==(const NormalElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    /// Splits by total degree; components sum back to the element. The zero
    /// element yields an empty map.
    std::map<int, NormalElement> homogeneous_components() const;
    NormalElement homogeneous_component(int d) const;

    /// Applies a map to every coefficient, dropping terms that become zero.
    NormalElement mapped_coeffs(const std::function<QScalar(const QScalar&)>& f) const;

    /// Canonical text form, terms leading-first: "x[1,1]*x[2,2] - q*x[1,2]*x[2,1]".
    std::string str() const;

private:
    int n_;
    std::map<PBWMonomial, QScalar> terms_;
};

} // namespace qmat
