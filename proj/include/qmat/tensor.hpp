#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "qmat/ring.hpp"

namespace qmat {

/// An element of O_q(M_n) tensor O_q(M_n): sparse sum of ordered pairs of PBW
/// monomials with nonzero coefficients. Both legs are kept in normal form;
/// equality is term-map identity.
class TensorElement {
public:
    explicit TensorElement(int n) : n_(n) {
        if (n < 1) throw error("matrix size must be positive");
    }
    static TensorElement unit(int n);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<PBWMonomial, PBWMonomial>, QScalar>& terms() const { return terms_; }

    void add_term(const PBWMonomial& left, const PBWMonomial& right, const QScalar& c);

    friend TensorElement operator+(const TensorElement& a, const TensorElement& b);
    friend TensorElement operator-(const TensorElement& a, const TensorElement& b);
    TensorElement scaled(const QScalar& c) const;
    TensorElement& operator+=(const TensorElement& o) { return *this = *this + o; }

    bool operator==(const TensorElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    /// The flip tau(a (x) b) = b (x) a.
    TensorElement flipped() const;

    std::string str() const;

private:
    int n_;
    std::map<std::pair<PBWMonomial, PBWMonomial>, QScalar> terms_;
};

/// Componentwise product in the tensor-square algebra, (a(x)b)(c(x)d) = ac (x) bd,
/// each leg renormalized; no braiding.
TensorElement tensor_multiply(const Ring& ring, const TensorElement& a, const TensorElement& b);

/// The coproduct, extended from Delta(x_{i,j}) = sum_k x_{i,k} (x) x_{k,j} as
/// an algebra map.
TensorElement coproduct(const Ring& ring, const NormalElement& a);

/// The counit, the algebra map x_{i,j} -> delta_{i,j}.
QScalar counit(const NormalElement& a);

/// Witness that an element fails cocommutativity: a tensor-basis pair where
/// Delta and tau.Delta have different coefficients, plus those coefficients.
struct CocommutativityWitness {
    PBWMonomial left, right;
    QScalar delta_coeff, flipped_coeff;
};

/// True iff Delta(a) = tau(Delta(a)) exactly. On failure, *witness (if given)
/// receives the first differing tensor-basis pair in canonical order.
bool is_cocommutative(const Ring& ring, const NormalElement& a,
                      std::optional<CocommutativityWitness>* witness = nullptr);

} // namespace qmat
