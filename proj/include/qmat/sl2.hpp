#pragma once

#include <compare>
#include <map>
#include <string>

#include "qmat/ring.hpp"

namespace qmat {

/// Basis monomial of O_q(SL_2) in the basis a^i b^k c^l, b^k c^l d^j, b^k c^l
/// (a = image of x_{1,1}, b = x_{1,2}, c = x_{2,1}, d = x_{2,2}); a and d
/// never both appear.
struct SL2Key {
    int a = 0, b = 0, c = 0, d = 0;
    auto operator<=>(const SL2Key&) const = default;
};

/// A finite Q(q)-combination of SL_2 basis monomials; unique representation.
class SL2Element {
public:
    SL2Element() = default;

    bool is_zero() const { return terms_.empty(); }
    const std::map<SL2Key, QScalar>& terms() const { return terms_; }

    void add_term(const SL2Key& key, const QScalar& coeff);

    friend SL2Element operator+(const SL2Element& x, const SL2Element& y);
    friend SL2Element operator-(const SL2Element& x, const SL2Element& y);
    bool operator==(const SL2Element& o) const { return terms_ == o.terms_; }

    std::string str() const;

private:
    std::map<SL2Key, QScalar> terms_;
};

/// Rewrites a representative in O_q(M_2) into the SL_2 basis by eliminating
/// every a.d product through a.d = 1 + q b c (det_q = 1). Output is unique.
/// Throws unless ring.n() == 2.
SL2Element sl2_normal_form(const Ring& ring, const NormalElement& representative);

enum class SL2Shape { ASide, DSide, Pure };

/// Closed-form right-hand side of the commutator of the trace a+d with a
/// basis monomial: [(a+d), a^i b^k c^l] (a-side), [(a+d), b^k c^l d^j]
/// (d-side), or [(a+d), b^k c^l] (pure). Exponent `i` is the a- or d-power
/// and is ignored for Pure. This is the test oracle for the generic engine.
SL2Element sl2_trace_commutator_formula(const Ring& ring, SL2Shape shape, int i, int k, int l);

/// The O_q(M_2) lift of a basis monomial (a -> x11 etc.), ready for the
/// generic commutator.
NormalElement sl2_basis_lift(SL2Shape shape, int i, int k, int l);

} // namespace qmat
