#include "qmat/sl2.hpp"

#include <sstream>

namespace qmat {

void SL2Element::add_term(const SL2Key& key, const QScalar& coeff) {
    if (key.a < 0 || key.b < 0 || key.c < 0 || key.d < 0) throw error("negative SL2 exponent");
    if (key.a > 0 && key.d > 0) throw error("SL2 basis key contains both a and d");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SL2Element operator+(const SL2Element& x, const SL2Element& y) {
    SL2Element r = x;
    for (const auto& [k, c] : y.terms_) r.add_term(k, c);
    return r;
}

SL2Element operator-(const SL2Element& x, const SL2Element& y) {
    SL2Element r = x;
    for (const auto& [k, c] : y.terms_) r.add_term(k, -c);
    return r;
}

std::string SL2Element::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) out << " + ";
        first = false;
        const SL2Key& k = it->first;
        std::string mono;
        auto append = [&mono](const char* name, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += name;
            if (e != 1) mono += "^" + std::to_string(e);
        };
        append("a", k.a);
        append("b", k.b);
        append("c", k.c);
        append("d", k.d);
        if (mono.empty())
            out << "(" << it->second.str() << ")";
        else if (it->second.is_one())
            out << mono;
        else
            out << "(" << it->second.str() << ")*" << mono;
    }
    return out.str();
}

SL2Element sl2_normal_form(const Ring& ring, const NormalElement& representative) {
    if (ring.n() != 2) throw error("sl2 normal form needs n = 2");
    if (representative.n() != 2) throw error("representative size does not match ring");
    const QScalar& q = ring.q();

    // worklist of monomials a^i b^k c^l d^j still possibly containing an a.d
    // pair; eliminate the pair via a d = 1 + q b c (moving one a rightward
    // past b^k c^l costs q^{k+l}); i+j strictly drops, so this terminates
    std::map<SL2Key, QScalar> work;
    auto push = [&work](const SL2Key& key, const QScalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = work.emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) work.erase(it);
        }
    };
    for (const auto& [m, c] : representative.terms()) {
        push(SL2Key{m.exponent(1, 1), m.exponent(1, 2), m.exponent(2, 1), m.exponent(2, 2)}, c);
    }

    SL2Element out;
    while (!work.empty()) {
        auto it = work.begin();
        SL2Key key = it->first;
        QScalar c = it->second;
        work.erase(it);
        if (key.a > 0 && key.d > 0) {
            QScalar f = c * q.pow(key.b + key.c);
            push(SL2Key{key.a - 1, key.b, key.c, key.d - 1}, f);
            push(SL2Key{key.a - 1, key.b + 1, key.c + 1, key.d - 1}, f * q);
        } else {
            out.add_term(key, c);
        }
    }
    return out;
}

NormalElement sl2_basis_lift(SL2Shape shape, int i, int k, int l) {
    if (k < 0 || l < 0) throw error("negative SL2 exponent");
    if (shape != SL2Shape::Pure && i < 1) throw error("a-side/d-side exponent must be >= 1");
    PBWMonomial m(2);
    if (shape == SL2Shape::ASide) m = m.with_exponent_bumped(gen_id(2, 1, 1), i);
    m = m.with_exponent_bumped(gen_id(2, 1, 2), k);
    m = m.with_exponent_bumped(gen_id(2, 2, 1), l);
    if (shape == SL2Shape::DSide) m = m.with_exponent_bumped(gen_id(2, 2, 2), i);
    return NormalElement::monomial(std::move(m));
}

SL2Element sl2_trace_commutator_formula(const Ring& ring, SL2Shape shape, int i, int k, int l) {
    if (ring.n() != 2) throw error("sl2 oracle needs n = 2");
    if (k < 0 || l < 0) throw error("negative SL2 exponent");
    const QScalar& q = ring.q();
    const QScalar one(1);
    SL2Element out;
    switch (shape) {
    case SL2Shape::ASide: {
        if (i < 1) throw error("a-side exponent must be >= 1");
        out.add_term(SL2Key{i + 1, k, l, 0}, one - q.pow(-(k + l)));
        out.add_term(SL2Key{i - 1, k, l, 0}, one - q.pow(k + l));
        out.add_term(SL2Key{i - 1, k + 1, l + 1, 0}, q.pow(-2 * (i - 1) - 1) - q.pow(k + l + 1));
        break;
    }
    case SL2Shape::DSide: {
        if (i < 1) throw error("d-side exponent must be >= 1");
        out.add_term(SL2Key{0, k, l, i + 1}, q.pow(-(k + l)) - one);
        out.add_term(SL2Key{0, k, l, i - 1}, q.pow(k + l) - one);
        out.add_term(SL2Key{0, k + 1, l + 1, i - 1}, q.pow(k + l + 1) - q.pow(-2 * (i - 1) - 1));
        break;
    }
    case SL2Shape::Pure: {
        out.add_term(SL2Key{1, k, l, 0}, one - q.pow(-(k + l)));
        out.add_term(SL2Key{0, k, l, 1}, q.pow(-(k + l)) - one);
        break;
    }
    }
    return out;
}

} // namespace qmat
