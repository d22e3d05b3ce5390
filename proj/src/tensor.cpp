#include "qmat/tensor.hpp"

#include <sstream>

namespace qmat {

TensorElement TensorElement::unit(int n) {
    TensorElement t(n);
    t.terms_.emplace(std::make_pair(PBWMonomial(n), PBWMonomial(n)), QScalar(1));
    return t;
}

void TensorElement::add_term(const PBWMonomial& left, const PBWMonomial& right, const QScalar& c) {
    if (left.n() != n_ || right.n() != n_) throw error("monomial size does not match tensor");
    if (c.is_zero()) return;
    auto key = std::make_pair(left, right);
    auto [it, inserted] = terms_.emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement operator+(const TensorElement& a, const TensorElement& b) {
    if (a.n_ != b.n_) throw error("mismatched matrix sizes in tensor addition");
    TensorElement r = a;
    for (const auto& [mm, c] : b.terms_) r.add_term(mm.first, mm.second, c);
    return r;
}

TensorElement operator-(const TensorElement& a, const TensorElement& b) {
    if (a.n_ != b.n_) throw error("mismatched matrix sizes in tensor subtraction");
    TensorElement r = a;
    for (const auto& [mm, c] : b.terms_) r.add_term(mm.first, mm.second, -c);
    return r;
}

TensorElement TensorElement::scaled(const QScalar& c) const {
    TensorElement r(n_);
    if (c.is_zero()) return r;
    for (const auto& [mm, cc] : terms_) r.terms_.emplace(mm, cc * c);
    return r;
}

TensorElement TensorElement::flipped() const {
    TensorElement r(n_);
    for (const auto& [mm, c] : terms_) r.terms_.emplace(std::make_pair(mm.second, mm.first), c);
    return r;
}

std::string TensorElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) out << " + ";
        first = false;
        const QScalar& c = it->second;
        if (!c.is_one()) out << "(" << c.str() << ")*";
        out << "(" << it->first.first.str() << " (x) " << it->first.second.str() << ")";
    }
    return out.str();
}

TensorElement tensor_multiply(const Ring& ring, const TensorElement& a, const TensorElement& b) {
    if (a.n() != b.n()) throw error("mismatched matrix sizes in tensor multiplication");
    TensorElement r(a.n());
    for (const auto& [am, ac] : a.terms()) {
        for (const auto& [bm, bc] : b.terms()) {
            NormalElement left = ring.multiply(NormalElement::monomial(am.first), bm.first);
            NormalElement right = ring.multiply(NormalElement::monomial(am.second), bm.second);
            const QScalar c = ac * bc;
            for (const auto& [lm, lc] : left.terms())
                for (const auto& [rm, rc] : right.terms()) r.add_term(lm, rm, c * lc * rc);
        }
    }
    return r;
}

TensorElement coproduct(const Ring& ring, const NormalElement& a) {
    const int n = ring.n();
    if (a.n() != n) throw error("element size does not match ring");
    TensorElement result(n);
    for (const auto& [m, c] : a.terms()) {
        // Delta of the word, one generator at a time, pruning zero terms as
        // we go (term counts grow as n^(2 deg) otherwise)
        TensorElement acc = TensorElement::unit(n).scaled(c);
        for (int g : m.word()) {
            const int i = gen_row(n, g), j = gen_col(n, g);
            TensorElement next(n);
            for (const auto& [mm, cc] : acc.terms()) {
                for (int k = 1; k <= n; ++k) {
                    NormalElement left =
                        ring.multiply(NormalElement::monomial(mm.first, cc),
                                      PBWMonomial::generator(n, i, k));
                    NormalElement right = ring.multiply(NormalElement::monomial(mm.second),
                                                        PBWMonomial::generator(n, k, j));
                    for (const auto& [lm, lc] : left.terms())
                        for (const auto& [rm, rc] : right.terms()) next.add_term(lm, rm, lc * rc);
                }
            }
            acc = std::move(next);
        }
        result += acc;
    }
    return result;
}

QScalar counit(const NormalElement& a) {
    // epsilon(x_{i,j}) = delta_{i,j}: a monomial survives iff purely diagonal
    QScalar r;
    for (const auto& [m, c] : a.terms()) {
        bool diagonal = true;
        for (const auto& [g, e] : m.factors())
            if (gen_row(a.n(), g) != gen_col(a.n(), g)) {
                diagonal = false;
                break;
            }
        if (diagonal) r += c;
    }
    return r;
}

bool is_cocommutative(const Ring& ring, const NormalElement& a,
                      std::optional<CocommutativityWitness>* witness) {
    TensorElement d = coproduct(ring, a);
    TensorElement flipped = d.flipped();
    TensorElement diff = d - flipped;
    if (diff.is_zero()) {
        if (witness) witness->reset();
        return true;
    }
    if (witness) {
        const auto& [mm, c] = *diff.terms().begin();
        QScalar dc, fc;
        if (auto it = d.terms().find(mm); it != d.terms().end()) dc = it->second;
        if (auto it = flipped.terms().find(mm); it != flipped.terms().end()) fc = it->second;
        *witness = CocommutativityWitness{mm.first, mm.second, dc, fc};
    }
    return false;
}

} // namespace qmat
