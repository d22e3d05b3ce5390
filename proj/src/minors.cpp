#include "qmat/minors.hpp"

#include <algorithm>
#include <numeric>

namespace qmat {

IndexSet::IndexSet(std::vector<int> idx, int n) : idx_(std::move(idx)) {
    if (idx_.empty() || idx_.size() > static_cast<size_t>(n))
        throw error("index set size must be between 1 and n");
    for (size_t k = 0; k < idx_.size(); ++k) {
        if (idx_[k] < 1 || idx_[k] > n) throw error("index out of range in index set");
        if (k > 0 && idx_[k] <= idx_[k - 1]) throw error("index set must be strictly increasing");
    }
}

std::vector<IndexSet> IndexSet::all(int n, int t) {
    std::vector<IndexSet> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == t) {
            out.emplace_back(cur, n);
            return;
        }
        for (int v = next; v <= n - (t - static_cast<int>(cur.size())) + 1; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

std::vector<Permutation> Permutation::all(int t) {
    std::vector<int> base(static_cast<size_t>(t));
    std::iota(base.begin(), base.end(), 1);
    std::vector<Permutation> out;
    do {
        int inv = 0;
        for (size_t a = 0; a < base.size(); ++a)
            for (size_t b = a + 1; b < base.size(); ++b)
                if (base[a] > base[b]) ++inv;
        out.push_back({base, inv});
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

NormalElement quantum_minor(const Ring& ring, const IndexSet& rows, const IndexSet& cols) {
    if (rows.size() != cols.size()) throw error("quantum minor needs |I| = |J|");
    const int n = ring.n();
    const int t = static_cast<int>(rows.size());
    const QScalar minus_q = -ring.q();

    NormalElement result(n);
    for (const Permutation& s : Permutation::all(t)) {
        PBWMonomial m(n);
        for (int k = 0; k < t; ++k)
            m = m.with_exponent_bumped(
                gen_id(n, rows[static_cast<size_t>(k)],
                       cols[static_cast<size_t>(s.images[static_cast<size_t>(k)] - 1)]),
                1);
        result.add_term(m, minus_q.pow(s.length));
    }
    return result;
}

NormalElement quantum_det(const Ring& ring) {
    return sigma(ring, ring.n());
}

NormalElement sigma(const Ring& ring, int i) {
    if (i < 1 || i > ring.n()) throw error("sigma index out of range");
    NormalElement result(ring.n());
    for (const IndexSet& I : IndexSet::all(ring.n(), i)) result += quantum_minor(ring, I, I);
    return result;
}

std::vector<std::vector<int>> partitions_with_max_part(int d, int max_part) {
    if (d < 0) throw error("negative degree");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // grow parts nondecreasing, then store sorted descending; enumeration by
    // increasing largest part gives (1,...,1) first and (d) last
    auto rec = [&](auto&& self, int rem, int minpart) -> void {
        if (rem == 0) {
            std::vector<int> p(cur.rbegin(), cur.rend());
            out.push_back(std::move(p));
            return;
        }
        for (int part = minpart; part <= std::min(rem, max_part); ++part) {
            cur.push_back(part);
            self(self, rem - part, part);
            cur.pop_back();
        }
    };
    rec(rec, d, 1);
    // order by largest part, then next, ascending: x^d of sigma_1 first
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NormalElement> sigma_monomials(const Ring& ring, int d) {
    std::vector<NormalElement> out;
    std::vector<NormalElement> sig;
    for (int i = 1; i <= ring.n(); ++i) sig.push_back(sigma(ring, i));
    for (const auto& parts : partitions_with_max_part(d, ring.n())) {
        NormalElement m = NormalElement::unit(ring.n());
        for (int p : parts) m = ring.multiply(m, sig[static_cast<size_t>(p - 1)]);
        out.push_back(std::move(m));
    }
    return out;
}

} // namespace qmat
