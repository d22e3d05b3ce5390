#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qmat/ring.hpp"

namespace qmat {

/// The ordinary commutative polynomial ring D_n = C[t_1,...,t_n] with Q(q)
/// coefficients; unique sparse representation keyed by exponent vectors.
class CommutativePoly {
public:
    explicit CommutativePoly(int n) : n_(n) {
        if (n < 1) throw error("number of variables must be positive");
    }
    static CommutativePoly variable(int n, int i, int power = 1);
    static CommutativePoly scalar(int n, QScalar c);
    /// e_i(t_1,...,t_n), the elementary symmetric polynomial.
    static CommutativePoly elementary_symmetric(int n, int i);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, QScalar>& terms() const { return terms_; }

    void add_term(const std::vector<int>& exps, const QScalar& c);

    friend CommutativePoly operator+(const CommutativePoly& a, const CommutativePoly& b);
    friend CommutativePoly operator-(const CommutativePoly& a, const CommutativePoly& b);
    friend CommutativePoly operator*(const CommutativePoly& a, const CommutativePoly& b);
    CommutativePoly& operator+=(const CommutativePoly& o) { return *this = *this + o; }
    bool operator==(const CommutativePoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    /// Relabels t_i -> t_{i + shift} inside a larger variable set.
    CommutativePoly shifted_into(int new_n, int shift) const;

    std::string str() const;

private:
    int n_;
    std::map<std::vector<int>, QScalar> terms_;
};

/// An element of B_{2,n} = A_n/(x_{1,j}, x_{i,1} | 2 <= i,j <= n), stored
/// through the identification B_{2,n} = A_{n-1}[t]: a map from t-exponents to
/// elements of O_q(M_{n-1}). t (the image of x_{1,1}) is central.
class BElement {
public:
    explicit BElement(int source_n);

    int source_n() const { return n_; }
    int inner_n() const { return n_ - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, NormalElement>& coeffs() const { return coeffs_; }

    void add_term(int t_exp, const NormalElement& coeff);

    friend BElement operator+(const BElement& a, const BElement& b);
    friend BElement operator-(const BElement& a, const BElement& b);
    BElement& operator+=(const BElement& o) { return *this = *this + o; }
    bool operator==(const BElement& o) const { return n_ == o.n_ && coeffs_ == o.coeffs_; }

    std::string str() const;

private:
    int n_;
    std::map<int, NormalElement> coeffs_;
};

/// t is central, so multiplication only multiplies the A_{n-1} coefficients.
BElement b_multiply(const Ring& inner, const BElement& a, const BElement& b);

/// eta: O_q(M_n) -> C[t_1..t_n], x_{i,j} -> delta_{i,j} t_i.
CommutativePoly eta(const NormalElement& a);

/// phi: A_n -> B_{2,n}: kills x_{1,j}, x_{i,1} (i,j >= 2), sends x_{1,1} to t
/// and x_{i,j} to x_{i-1,j-1}. Throws for n = 1.
BElement phi(const NormalElement& a);

/// delta: B_{2,n} -> D_n: t -> t_1 and the eta of A_{n-1} into t_2..t_n on
/// coefficients. delta(phi(a)) = eta(a).
CommutativePoly delta_map(const BElement& b);

/// gamma: O_q(M_n) -> O_{q^{-1}}(M_n), the algebra isomorphism
/// x_{i,j} -> x_{n+1-i,n+1-j}. Coefficients are fixed; the result is in
/// normal form with respect to the target ring Ring(n, 1/q), and applying
/// gamma again there gives back a.
NormalElement gamma(const Ring& ring, const NormalElement& a);
/// The ring gamma maps into.
Ring gamma_target_ring(const Ring& ring);

/// The homogenization lift: for h with every term of degree = k (mod n),
/// returns sum_j h_{jn+k} det_q^{d-j} (d = top component index), the
/// homogeneous element of degree dn+k congruent to h modulo (det_q - 1).
/// Throws on mixed residues.
NormalElement homogenize_mod_n(const Ring& ring, const NormalElement& h, int k);

/// Membership in the ideal (det_q - 1): split into Z/nZ residue classes,
/// homogenize each; the element is a member iff every homogenization is 0.
bool sl_ideal_member(const Ring& ring, const NormalElement& x);

/// A residue class in O_q(SL_n) = O_q(M_n)/(det_q - 1), carried by a lift.
/// zn_degree is the Z/nZ degree when the lift is Z/nZ-homogeneous.
class SLElement {
public:
    SLElement(const Ring& ring, NormalElement representative);

    const NormalElement& representative() const { return rep_; }
    std::optional<int> zn_degree() const { return zn_degree_; }

    static bool equal(const Ring& ring, const SLElement& a, const SLElement& b);

private:
    NormalElement rep_;
    std::optional<int> zn_degree_;
};

/// numerator * det_q^{-det_power} in O_q(GL_n) = O_q(M_n)[det_q^{-1}].
/// Kept lazily unreduced; equality is by cross-multiplication.
class GLElement {
public:
    GLElement(NormalElement numerator, int det_power);

    const NormalElement& numerator() const { return num_; }
    int det_power() const { return k_; }

    static bool equal(const Ring& ring, const GLElement& a, const GLElement& b);

    /// Divides det_q out of the numerator as long as exact division succeeds
    /// (solved slice by slice as a linear system).
    GLElement reduced(const Ring& ring) const;

private:
    NormalElement num_;
    int k_;
};

/// Exact division by det_q: solves det_q * y = a degree slice by degree
/// slice; nullopt when a is not a multiple.
std::optional<NormalElement> divide_by_det(const Ring& ring, const NormalElement& a);

} // namespace qmat
