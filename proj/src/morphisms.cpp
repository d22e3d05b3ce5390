#include "qmat/morphisms.hpp"

#include <sstream>

#include "qmat/linalg.hpp"
#include "qmat/minors.hpp"

namespace qmat {

// ---------- CommutativePoly ----------

CommutativePoly CommutativePoly::variable(int n, int i, int power) {
    if (i < 1 || i > n) throw error("variable index out of range");
    if (power < 0) throw error("negative exponent");
    CommutativePoly p(n);
    std::vector<int> e(static_cast<size_t>(n), 0);
    e[static_cast<size_t>(i - 1)] = power;
    p.terms_.emplace(std::move(e), QScalar(1));
    return p;
}

CommutativePoly CommutativePoly::scalar(int n, QScalar c) {
    CommutativePoly p(n);
    if (!c.is_zero()) p.terms_.emplace(std::vector<int>(static_cast<size_t>(n), 0), std::move(c));
    return p;
}

CommutativePoly CommutativePoly::elementary_symmetric(int n, int i) {
    if (i < 1 || i > n) throw error("elementary symmetric index out of range");
    CommutativePoly p(n);
    std::vector<int> pick;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(pick.size()) == i) {
            std::vector<int> e(static_cast<size_t>(n), 0);
            for (int v : pick) e[static_cast<size_t>(v - 1)] = 1;
            p.add_term(e, QScalar(1));
            return;
        }
        for (int v = next; v <= n; ++v) {
            pick.push_back(v);
            self(self, v + 1);
            pick.pop_back();
        }
    };
    rec(rec, 1);
    return p;
}

void CommutativePoly::add_term(const std::vector<int>& exps, const QScalar& c) {
    if (static_cast<int>(exps.size()) != n_) throw error("exponent vector length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CommutativePoly operator+(const CommutativePoly& a, const CommutativePoly& b) {
    if (a.n_ != b.n_) throw error("mismatched variable counts");
    CommutativePoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

CommutativePoly operator-(const CommutativePoly& a, const CommutativePoly& b) {
    if (a.n_ != b.n_) throw error("mismatched variable counts");
    CommutativePoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

CommutativePoly operator*(const CommutativePoly& a, const CommutativePoly& b) {
    if (a.n_ != b.n_) throw error("mismatched variable counts");
    CommutativePoly r(a.n_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            std::vector<int> e(ea);
            for (size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

CommutativePoly CommutativePoly::shifted_into(int new_n, int shift) const {
    if (shift < 0 || n_ + shift > new_n) throw error("bad variable shift");
    CommutativePoly r(new_n);
    for (const auto& [e, c] : terms_) {
        std::vector<int> ne(static_cast<size_t>(new_n), 0);
        for (size_t k = 0; k < e.size(); ++k) ne[k + static_cast<size_t>(shift)] = e[k];
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

std::string CommutativePoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) out << " + ";
        first = false;
        const auto& [e, c] = *it;
        std::string mono;
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "t" + std::to_string(k + 1);
            if (e[k] != 1) mono += "^" + std::to_string(e[k]);
        }
        if (mono.empty())
            out << "(" << c.str() << ")";
        else if (c.is_one())
            out << mono;
        else
            out << "(" << c.str() << ")*" << mono;
    }
    return out.str();
}

// ---------- BElement ----------

BElement::BElement(int source_n) : n_(source_n) {
    if (source_n < 2) throw error("B_{2,n} needs n >= 2");
}

void BElement::add_term(int t_exp, const NormalElement& coeff) {
    if (t_exp < 0) throw error("negative t exponent");
    if (coeff.n() != inner_n()) throw error("coefficient size does not match B element");
    if (coeff.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(t_exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

BElement operator+(const BElement& a, const BElement& b) {
    if (a.n_ != b.n_) throw error("mismatched sizes in B addition");
    BElement r = a;
    for (const auto& [k, c] : b.coeffs_) r.add_term(k, c);
    return r;
}

BElement operator-(const BElement& a, const BElement& b) {
    if (a.n_ != b.n_) throw error("mismatched sizes in B addition");
    BElement r = a;
    for (const auto& [k, c] : b.coeffs_) r.add_term(k, -c);
    return r;
}

std::string BElement::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (!first) out << " + ";
        first = false;
        out << "(" << it->second.str() << ")";
        if (it->first > 0) {
            out << "*t";
            if (it->first != 1) out << "^" << it->first;
        }
    }
    return out.str();
}

BElement b_multiply(const Ring& inner, const BElement& a, const BElement& b) {
    if (a.source_n() != b.source_n()) throw error("mismatched sizes in B multiplication");
    if (inner.n() != a.inner_n()) throw error("inner ring size does not match B elements");
    BElement r(a.source_n());
    for (const auto& [ka, ca] : a.coeffs())
        for (const auto& [kb, cb] : b.coeffs()) r.add_term(ka + kb, inner.multiply(ca, cb));
    return r;
}

// ---------- the maps ----------

CommutativePoly eta(const NormalElement& a) {
    const int n = a.n();
    CommutativePoly r(n);
    for (const auto& [m, c] : a.terms()) {
        std::vector<int> e(static_cast<size_t>(n), 0);
        bool killed = false;
        for (const auto& [g, k] : m.factors()) {
            int i = gen_row(n, g), j = gen_col(n, g);
            if (i != j) {
                killed = true;
                break;
            }
            e[static_cast<size_t>(i - 1)] += k;
        }
        if (!killed) r.add_term(e, c);
    }
    return r;
}

BElement phi(const NormalElement& a) {
    const int n = a.n();
    if (n < 2) throw error("phi needs n >= 2");
    BElement r(n);
    for (const auto& [m, c] : a.terms()) {
        bool killed = false;
        int t_exp = 0;
        PBWMonomial tail(n - 1);
        for (const auto& [g, k] : m.factors()) {
            int i = gen_row(n, g), j = gen_col(n, g);
            if (i == 1 && j == 1) {
                t_exp = k;
            } else if (i == 1 || j == 1) {
                killed = true;
                break;
            } else {
                // reindexing preserves the reading order, so the tail stays sorted
                tail = tail.with_exponent_bumped(gen_id(n - 1, i - 1, j - 1), k);
            }
        }
        if (!killed) r.add_term(t_exp, NormalElement::monomial(std::move(tail), c));
    }
    return r;
}

CommutativePoly delta_map(const BElement& b) {
    const int n = b.source_n();
    CommutativePoly r(n);
    for (const auto& [t_exp, coeff] : b.coeffs()) {
        CommutativePoly inner = eta(coeff).shifted_into(n, 1);
        CommutativePoly t1 = CommutativePoly::variable(n, 1, t_exp);
        r += t1 * inner;
    }
    return r;
}

Ring gamma_target_ring(const Ring& ring) {
    return Ring(ring.n(), ring.q_inv());
}

NormalElement gamma(const Ring& ring, const NormalElement& a) {
    const int n = ring.n();
    if (a.n() != n) throw error("element size does not match ring");
    Ring target = gamma_target_ring(ring);
    NormalElement r(n);
    for (const auto& [m, c] : a.terms()) {
        // flip every factor keeping the product order; the image word reverses
        // the reading order, so it must be renormalized under the target
        // relations. Coefficients are untouched: the map is linear over the
        // ground field, and only the relations see the inverted parameter.
        std::vector<int> w = m.word();
        std::vector<int> flipped;
        flipped.reserve(w.size());
        for (int g : w)
            flipped.push_back(gen_id(n, n + 1 - gen_row(n, g), n + 1 - gen_col(n, g)));
        r += target.normalize_word(flipped, c);
    }
    return r;
}

NormalElement homogenize_mod_n(const Ring& ring, const NormalElement& h, int k) {
    const int n = ring.n();
    if (h.n() != n) throw error("element size does not match ring");
    if (k < 0 || k >= n) throw error("residue out of range");
    if (h.is_zero()) return h;

    std::map<int, NormalElement> comps = h.homogeneous_components();
    int d = 0;
    for (const auto& [deg, comp] : comps) {
        if (deg % n != k) throw error("element has components of mixed residue mod n");
        d = std::max(d, (deg - k) / n);
    }
    const NormalElement det = quantum_det(ring);
    NormalElement out(n);
    for (const auto& [deg, comp] : comps) {
        int j = (deg - k) / n;
        out += ring.multiply(comp, ring.power(det, d - j));
    }
    return out;
}

bool sl_ideal_member(const Ring& ring, const NormalElement& x) {
    if (x.is_zero()) return true;
    const int n = ring.n();
    // the ideal (det_q - 1) is Z/nZ-homogeneous, so each residue class must
    // separately homogenize to zero
    std::vector<NormalElement> classes(static_cast<size_t>(n), NormalElement(n));
    for (const auto& [deg, comp] : x.homogeneous_components())
        classes[static_cast<size_t>(deg % n)] += comp;
    for (int k = 0; k < n; ++k) {
        const NormalElement& cls = classes[static_cast<size_t>(k)];
        if (cls.is_zero()) continue;
        if (!homogenize_mod_n(ring, cls, k).is_zero()) return false;
    }
    return true;
}

// ---------- SL / GL elements ----------

SLElement::SLElement(const Ring& ring, NormalElement representative)
    : rep_(std::move(representative)) {
    if (rep_.n() != ring.n()) throw error("representative size does not match ring");
    if (!rep_.is_zero()) {
        int k = rep_.terms().begin()->first.degree() % ring.n();
        bool homogeneous = true;
        for (const auto& [m, c] : rep_.terms())
            if (m.degree() % ring.n() != k) {
                homogeneous = false;
                break;
            }
        if (homogeneous) zn_degree_ = k;
    }
}

bool SLElement::equal(const Ring& ring, const SLElement& a, const SLElement& b) {
    return sl_ideal_member(ring, a.rep_ - b.rep_);
}

GLElement::GLElement(NormalElement numerator, int det_power)
    : num_(std::move(numerator)), k_(det_power) {
    if (det_power < 0) throw error("det power must be nonnegative");
}

bool GLElement::equal(const Ring& ring, const GLElement& a, const GLElement& b) {
    const NormalElement det = quantum_det(ring);
    NormalElement lhs = ring.multiply(a.num_, ring.power(det, b.k_));
    NormalElement rhs = ring.multiply(b.num_, ring.power(det, a.k_));
    return lhs == rhs;
}

std::optional<NormalElement> divide_by_det(const Ring& ring, const NormalElement& a) {
    const int n = ring.n();
    if (a.is_zero()) return NormalElement(n);
    const NormalElement det = quantum_det(ring);
    NormalElement out(n);
    for (const auto& [deg, comp] : a.homogeneous_components()) {
        if (deg < n) return std::nullopt;
        // solve det_q * y = comp on the degree-(deg - n) slice
        std::vector<PBWMonomial> domain = ring.slice_monomials(deg - n);
        std::vector<PBWMonomial> codomain = ring.slice_monomials(deg);
        std::map<PBWMonomial, int> row_of;
        for (size_t r = 0; r < codomain.size(); ++r)
            row_of.emplace(codomain[r], static_cast<int>(r));
        QMatrix mat(static_cast<int>(codomain.size()), static_cast<int>(domain.size()));
        for (size_t c = 0; c < domain.size(); ++c) {
            NormalElement prod = ring.multiply(det, domain[c]);
            for (const auto& [m, v] : prod.terms()) mat.add(row_of.at(m), static_cast<int>(c), v);
        }
        std::vector<QScalar> rhs(codomain.size());
        for (const auto& [m, v] : comp.terms()) rhs[static_cast<size_t>(row_of.at(m))] = v;
        auto sol = mat.solve(rhs);
        if (!sol) return std::nullopt;
        for (size_t c = 0; c < domain.size(); ++c) out.add_term(domain[c], (*sol)[c]);
    }
    return out;
}

GLElement GLElement::reduced(const Ring& ring) const {
    GLElement r = *this;
    while (r.k_ > 0) {
        auto q = divide_by_det(ring, r.num_);
        if (!q) break;
        r.num_ = std::move(*q);
        --r.k_;
    }
    return r;
}

} // namespace qmat
