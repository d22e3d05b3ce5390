#include "qmat/monomial.hpp"

#include <algorithm>
#include <sstream>

namespace qmat {

PBWMonomial PBWMonomial::generator(int n, int i, int j) {
    if (i < 1 || i > n || j < 1 || j > n)
        throw error("generator index x[" + std::to_string(i) + "," + std::to_string(j) +
                    "] out of range for n=" + std::to_string(n));
    PBWMonomial m(n);
    m.exps_.emplace_back(gen_id(n, i, j), 1);
    return m;
}

int PBWMonomial::degree() const {
    int d = 0;
    for (const auto& [g, e] : exps_) d += e;
    return d;
}

int PBWMonomial::exponent(int gid) const {
    auto it = std::lower_bound(exps_.begin(), exps_.end(), gid,
                               [](const auto& p, int g) { return p.first < g; });
    return (it != exps_.end() && it->first == gid) ? it->second : 0;
}

int PBWMonomial::lead() const {
    if (exps_.empty()) throw error("leading generator of the unit monomial");
    return exps_.front().first;
}

PBWMonomial PBWMonomial::with_exponent_bumped(int gid, int delta) const {
    PBWMonomial m(n_);
    m.exps_ = exps_;
    auto it = std::lower_bound(m.exps_.begin(), m.exps_.end(), gid,
                               [](const auto& p, int g) { return p.first < g; });
    if (it != m.exps_.end() && it->first == gid) {
        it->second += delta;
        if (it->second < 0) throw error("negative exponent in monomial");
        if (it->second == 0) m.exps_.erase(it);
    } else {
        if (delta < 0) throw error("negative exponent in monomial");
        if (delta > 0) m.exps_.insert(it, {gid, delta});
    }
    return m;
}

PBWMonomial PBWMonomial::without_lead() const {
    return with_exponent_bumped(lead(), -1);
}

std::vector<int> PBWMonomial::word() const {
    std::vector<int> w;
    w.reserve(static_cast<size_t>(degree()));
    for (const auto& [g, e] : exps_)
        for (int k = 0; k < e; ++k) w.push_back(g);
    return w;
}

int PBWMonomial::corner_weight() const {
    int c = 0;
    for (const auto& [g, e] : exps_) {
        int i = gen_row(n_, g), j = gen_col(n_, g);
        if ((i == 1 && j >= 2) || (j == 1 && i >= 2)) c += e;
    }
    return c;
}

std::vector<int> PBWMonomial::row_content() const {
    std::vector<int> r(static_cast<size_t>(n_), 0);
    for (const auto& [g, e] : exps_) r[static_cast<size_t>(gen_row(n_, g) - 1)] += e;
    return r;
}

std::vector<int> PBWMonomial::col_content() const {
    std::vector<int> c(static_cast<size_t>(n_), 0);
    for (const auto& [g, e] : exps_) c[static_cast<size_t>(gen_col(n_, g) - 1)] += e;
    return c;
}

std::strong_ordering PBWMonomial::operator<=>(const PBWMonomial& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    if (auto c = degree() <=> o.degree(); c != 0) return c;
    // dense lexicographic comparison without materializing the dense vector:
    // walk the sparse factor lists in parallel.
    auto a = exps_.begin();
    auto b = o.exps_.begin();
    while (a != exps_.end() && b != o.exps_.end()) {
        if (a->first != b->first)
            // whoever has a factor at the earlier position wins there
            return a->first < b->first ? std::strong_ordering::greater
                                       : std::strong_ordering::less;
        if (a->second != b->second)
            return a->second < b->second ? std::strong_ordering::less
                                         : std::strong_ordering::greater;
        ++a;
        ++b;
    }
    if (a != exps_.end()) return std::strong_ordering::greater;
    if (b != o.exps_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

std::string PBWMonomial::str() const {
    if (is_unit()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [g, e] : exps_) {
        if (!first) out << "*";
        first = false;
        out << "x[" << gen_row(n_, g) << "," << gen_col(n_, g) << "]";
        if (e != 1) out << "^" << e;
    }
    return out.str();
}

} // namespace qmat
