#include "qmat/ring.hpp"

namespace qmat {

Ring::Ring(int n, QScalar q) : n_(n), q_(std::move(q)) {
    if (n < 1) throw error("matrix size must be positive");
    if (q_.is_zero()) throw error("deformation parameter must be nonzero");
    q_inv_ = QScalar(1) / q_;
    lambda_ = q_ - q_inv_;
}

// Rewriting the product x_g * (x_u * rest) for u < g in reading order.
// The defining relations give, with u = (i,j) and g = (k,l):
//   rows i<k, cols j<l:   x_g x_u = x_u x_g - (q - q^{-1}) x_{i,l} x_{k,j}
//   same row or column:   x_g x_u = q^{-1} x_u x_g
//   otherwise:            x_g x_u = x_u x_g
// The correction generators (i,l), (k,j) both come after u in reading order,
// so prepending u keeps words sorted; recursion is on strictly shorter tails
// or on a strictly smaller inserted generator, which terminates.
void Ring::insert_rec(int gid, const PBWMonomial& m, const QScalar& c, NormalElement& out) const {
    if (m.is_unit() || gid <= m.lead()) {
        out.add_term(m.with_exponent_bumped(gid, 1), c);
        return;
    }
    const int u = m.lead();
    const PBWMonomial tail = m.without_lead();

    const int ui = gen_row(n_, u), uj = gen_col(n_, u);
    const int gi = gen_row(n_, gid), gj = gen_col(n_, gid);

    // x_u * insert(g, tail), with the case coefficient
    NormalElement inner(n_);
    insert_rec(gid, tail, c, inner);
    const bool same_line = (ui == gi) || (uj == gj);
    const bool crossing = (ui < gi) && (uj < gj);
    for (const auto& [mm, cc] : inner.terms())
        out.add_term(mm.with_exponent_bumped(u, 1), same_line ? cc * q_inv_ : cc);

    if (crossing) {
        // correction term: -(q - q^{-1}) x_{ui,gj} x_{gi,uj} * tail
        NormalElement low(n_);
        insert_rec(gen_id(n_, gi, uj), tail, c * (-lambda_), low);
        for (const auto& [mm, cc] : low.terms()) insert_rec(gen_id(n_, ui, gj), mm, cc, out);
    }
}

NormalElement Ring::insert_generator(int gid, const PBWMonomial& m) const {
    if (m.n() != n_) throw error("monomial size does not match ring");
    if (gid < 0 || gid >= n_ * n_) throw error("generator index out of range");
    NormalElement out(n_);
    insert_rec(gid, m, QScalar(1), out);
    return out;
}

NormalElement Ring::multiply(const NormalElement& a, const PBWMonomial& m) const {
    if (a.n() != n_ || m.n() != n_) throw error("mismatched matrix sizes in multiplication");
    // feed the word of each of a's monomials into m from the right end leftward
    std::vector<int> w;
    NormalElement result(n_);
    for (const auto& [am, ac] : a.terms()) {
        w = am.word();
        NormalElement cur = NormalElement::monomial(m, ac);
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            NormalElement next(n_);
            for (const auto& [mm, cc] : cur.terms()) insert_rec(*it, mm, cc, next);
            cur = std::move(next);
        }
        result += cur;
    }
    return result;
}

NormalElement Ring::multiply(const NormalElement& a, const NormalElement& b) const {
    if (a.n() != n_ || b.n() != n_) throw error("mismatched matrix sizes in multiplication");
    NormalElement result(n_);
    for (const auto& [bm, bc] : b.terms()) result += multiply(a, bm).scaled(bc);
    return result;
}

NormalElement Ring::normalize_word(const std::vector<int>& word, QScalar c) const {
    for (int g : word)
        if (g < 0 || g >= n_ * n_) throw error("generator index out of range");
    NormalElement cur = NormalElement::scalar(n_, std::move(c));
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        NormalElement next(n_);
        for (const auto& [mm, cc] : cur.terms()) insert_rec(*it, mm, cc, next);
        cur = std::move(next);
    }
    return cur;
}

NormalElement Ring::normalize_word_ij(const std::vector<std::pair<int, int>>& word, QScalar c) const {
    std::vector<int> w;
    w.reserve(word.size());
    for (const auto& [i, j] : word) {
        if (i < 1 || i > n_ || j < 1 || j > n_)
            throw error("generator index x[" + std::to_string(i) + "," + std::to_string(j) +
                        "] out of range for n=" + std::to_string(n_));
        w.push_back(gen_id(n_, i, j));
    }
    return normalize_word(w, std::move(c));
}

NormalElement Ring::commutator(const NormalElement& a, const NormalElement& b) const {
    return multiply(a, b) - multiply(b, a);
}

NormalElement Ring::power(const NormalElement& a, int e) const {
    if (e < 0) throw error("negative power of a ring element");
    NormalElement acc = NormalElement::unit(n_);
    for (int k = 0; k < e; ++k) acc = multiply(acc, a);
    return acc;
}

std::vector<PBWMonomial> Ring::slice_monomials(int d) const {
    if (d < 0) throw error("negative degree");
    std::vector<PBWMonomial> out;
    std::vector<std::pair<int, int>> exps;
    const int ngen = n_ * n_;
    // descending canonical order: give the earliest generator as much as
    // possible first
    auto rec = [&](auto&& self, int gid, int rem) -> void {
        if (gid == ngen - 1) {
            auto e = exps;
            if (rem > 0) e.emplace_back(gid, rem);
            PBWMonomial m(n_);
            for (const auto& [g, k] : e) m = m.with_exponent_bumped(g, k);
            out.push_back(std::move(m));
            return;
        }
        for (int e = rem; e >= 0; --e) {
            if (e > 0) exps.emplace_back(gid, e);
            self(self, gid + 1, rem - e);
            if (e > 0) exps.pop_back();
        }
    };
    rec(rec, 0, d);
    return out;
}

} // namespace qmat
