#include "qmat/element.hpp"

#include <sstream>

namespace qmat {

NormalElement NormalElement::scalar(int n, QScalar c) {
    NormalElement e(n);
    if (!c.is_zero()) e.terms_.emplace(PBWMonomial(n), std::move(c));
    return e;
}

NormalElement NormalElement::generator(int n, int i, int j) {
    return monomial(PBWMonomial::generator(n, i, j));
}

NormalElement NormalElement::monomial(PBWMonomial m, QScalar c) {
    NormalElement e(m.n());
    if (!c.is_zero()) e.terms_.emplace(std::move(m), std::move(c));
    return e;
}

QScalar NormalElement::coefficient(const PBWMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? QScalar() : it->second;
}

int NormalElement::degree() const {
    if (terms_.empty()) return -1;
    // canonical order is degree-major, so the last term has maximal degree
    return terms_.rbegin()->first.degree();
}

int NormalElement::filtration_degree() const {
    int f = -1;
    for (const auto& [m, c] : terms_) f = std::max(f, m.x11_exponent());
    return f;
}

bool NormalElement::is_homogeneous() const {
    if (terms_.empty()) return true;
    return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

void NormalElement::add_term(const PBWMonomial& m, const QScalar& c) {
    if (m.n() != n_) throw error("monomial size does not match element");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NormalElement NormalElement::operator-() const {
    NormalElement r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

NormalElement operator+(const NormalElement& a, const NormalElement& b) {
    if (a.n_ != b.n_) throw error("mismatched matrix sizes in addition");
    NormalElement r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

NormalElement operator-(const NormalElement& a, const NormalElement& b) {
    if (a.n_ != b.n_) throw error("mismatched matrix sizes in subtraction");
    NormalElement r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

NormalElement NormalElement::scaled(const QScalar& c) const {
    NormalElement r(n_);
    if (c.is_zero()) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
}

std::map<int, NormalElement> NormalElement::homogeneous_components() const {
    std::map<int, NormalElement> comps;
    for (const auto& [m, c] : terms_) {
        auto [it, inserted] = comps.try_emplace(m.degree(), NormalElement(n_));
        it->second.terms_.emplace(m, c);
    }
    return comps;
}

NormalElement NormalElement::homogeneous_component(int d) const {
    NormalElement r(n_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == d) r.terms_.emplace(m, c);
    return r;
}

NormalElement NormalElement::mapped_coeffs(const std::function<QScalar(const QScalar&)>& f) const {
    NormalElement r(n_);
    for (const auto& [m, c] : terms_) {
        QScalar v = f(c);
        if (!v.is_zero()) r.terms_.emplace(m, std::move(v));
    }
    return r;
}

namespace {

bool scalar_needs_parens_in_product(const QScalar& c) {
    int nonzero = 0;
    for (const auto& k : c.num().coeffs())
        if (k != 0 && ++nonzero > 1) return true;
    return false;
}

} // namespace

std::string NormalElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const PBWMonomial& m = it->first;
        QScalar c = it->second;
        bool negative = c.num().sign_of_leading() < 0;
        if (negative) c = -c;
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;

        if (m.is_unit()) {
            if (scalar_needs_parens_in_product(c) && !c.den().is_one())
                out << c.str(); // already "(...)/(...)"
            else if (scalar_needs_parens_in_product(c))
                out << "(" << c.str() << ")";
            else
                out << c.str();
        } else if (c.is_one()) {
            out << m.str();
        } else {
            if (scalar_needs_parens_in_product(c) && c.den().is_one())
                out << "(" << c.str() << ")";
            else
                out << c.str();
            out << "*" << m.str();
        }
    }
    return out.str();
}

} // namespace qmat
