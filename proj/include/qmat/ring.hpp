#pragma once

#include <vector>

#include "qmat/element.hpp"

namespace qmat {

/// Multiplication context for O_q(M_n). The deformation parameter is a
/// Q(q)-value: the symbol q itself for the generic ring, 1/q for the image
/// ring of the index-flip isomorphism, or a rational constant for
/// specialized runs. All operations are pure; Ring carries no mutable state.
class Ring {
public:
    explicit Ring(int n, QScalar q = QScalar::q());

    int n() const { return n_; }
    const QScalar& q() const { return q_; }
    const QScalar& q_inv() const { return q_inv_; }

    /// x_g * m rewritten into the PBW basis. This is the elementary step of
    /// the rewriting system: commute the new generator rightward past the
    /// sorted word, applying the defining relations.
    NormalElement insert_generator(int gid, const PBWMonomial& m) const;

    NormalElement multiply(const NormalElement& a, const NormalElement& b) const;
    NormalElement multiply(const NormalElement& a, const PBWMonomial& m) const;

    /// c * x_{w_1} ... x_{w_k} for an arbitrary word of generator ids.
    NormalElement normalize_word(const std::vector<int>& word, QScalar c = QScalar(1)) const;
    /// Same, with (i,j) index pairs (validated against n).
    NormalElement normalize_word_ij(const std::vector<std::pair<int, int>>& word,
                                    QScalar c = QScalar(1)) const;

    /// ab - ba in normal form.
    NormalElement commutator(const NormalElement& a, const NormalElement& b) const;

    NormalElement power(const NormalElement& a, int e) const;

    /// All PBW monomials of total degree d, in canonical descending order
    /// (x[1,1]^d first). Fixed once; this is the basis order used by slice
    /// matrices and kernel output.
    std::vector<PBWMonomial> slice_monomials(int d) const;

private:
    int n_;
    QScalar q_, q_inv_, lambda_; // lambda = q - q^{-1}

    void insert_rec(int gid, const PBWMonomial& m, const QScalar& c, NormalElement& out) const;
};

} // namespace qmat
