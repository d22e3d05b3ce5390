#include "qmat/linalg.hpp"

#include <algorithm>

namespace qmat {

QMatrix::QMatrix(int rows, int cols) : nrows_(rows), ncols_(cols) {
    if (rows < 0 || cols < 0) throw error("negative matrix dimension");
    rows_.resize(static_cast<size_t>(rows));
}

void QMatrix::add(int r, int c, const QScalar& v) {
    if (r < 0 || r >= nrows_ || c < 0 || c >= ncols_) throw error("matrix index out of range");
    if (v.is_zero()) return;
    auto& row = rows_[static_cast<size_t>(r)];
    auto [it, inserted] = row.emplace(c, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) row.erase(it);
    }
}

QScalar QMatrix::at(int r, int c) const {
    if (r < 0 || r >= nrows_ || c < 0 || c >= ncols_) throw error("matrix index out of range");
    const auto& row = rows_[static_cast<size_t>(r)];
    auto it = row.find(c);
    return it == row.end() ? QScalar() : it->second;
}

namespace {

// a row with Z[q] entries, sorted by column; the augmented right-hand-side
// entry (if any) uses column index = ncols
using SparseRow = std::vector<std::pair<int, ZPoly>>;

void strip_content(SparseRow& row) {
    if (row.empty()) return;
    ZPoly g;
    for (const auto& [c, p] : row) {
        g = poly_gcd(g, p);
        if (g.degree() == 0 && g.coeffs()[0] == 1) return;
    }
    for (auto& [c, p] : row) p = poly_div_exact(p, g);
}

// r <- lead(p)*r - lead(r)*p, where both rows lead at the same column
SparseRow cross_eliminate(const SparseRow& r, const SparseRow& p) {
    const ZPoly& rl = r.front().second;
    const ZPoly& pl = p.front().second;
    SparseRow out;
    out.reserve(r.size() + p.size());
    size_t a = 1, b = 1; // leading entries cancel by construction
    while (a < r.size() || b < p.size()) {
        if (b >= p.size() || (a < r.size() && r[a].first < p[b].first)) {
            out.emplace_back(r[a].first, pl * r[a].second);
            ++a;
        } else if (a >= r.size() || p[b].first < r[a].first) {
            out.emplace_back(p[b].first, -(rl * p[b].second));
            ++b;
        } else {
            ZPoly v = pl * r[a].second - rl * p[b].second;
            if (!v.is_zero()) out.emplace_back(r[a].first, std::move(v));
            ++a;
            ++b;
        }
    }
    strip_content(out);
    return out;
}

} // namespace

struct QMatrix::Echelon {
    // pivot column -> eliminated row (ascending by pivot column)
    std::vector<std::pair<int, SparseRow>> pivots;
    bool consistent = true; // only meaningful when an rhs was augmented
};

QMatrix::Echelon QMatrix::eliminate(const std::vector<QScalar>* rhs) const {
    // clear denominators rowwise and strip content; row scaling never
    // changes the kernel or the solution set
    std::vector<SparseRow> work;
    work.reserve(rows_.size());
    for (size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        QScalar aug = rhs ? (*rhs)[r] : QScalar();
        if (row.empty() && aug.is_zero()) continue;
        ZPoly lcm(1);
        for (const auto& [c, v] : row)
            lcm = poly_div_exact(lcm * v.den(), poly_gcd(lcm, v.den()));
        if (!aug.is_zero()) lcm = poly_div_exact(lcm * aug.den(), poly_gcd(lcm, aug.den()));
        SparseRow sr;
        sr.reserve(row.size() + 1);
        for (const auto& [c, v] : row)
            sr.emplace_back(c, v.num() * poly_div_exact(lcm, v.den()));
        if (!aug.is_zero())
            sr.emplace_back(ncols_, aug.num() * poly_div_exact(lcm, aug.den()));
        strip_content(sr);
        work.push_back(std::move(sr));
    }

    // bucket rows by current leading column; sweep columns left to right
    std::map<int, std::vector<size_t>> buckets;
    for (size_t r = 0; r < work.size(); ++r) buckets[work[r].front().first].push_back(r);

    Echelon ech;
    while (!buckets.empty()) {
        auto bucket = buckets.begin();
        const int col = bucket->first;
        std::vector<size_t> rows = std::move(bucket->second);
        buckets.erase(bucket);
        if (col >= ncols_) {
            // a row reduced to "0 = nonzero" in the augmented column
            ech.consistent = false;
            continue;
        }
        // pivot: fewest entries, then lowest original index (any choice
        // yields the same canonical echelon data)
        size_t piv = rows[0];
        for (size_t r : rows)
            if (work[r].size() < work[piv].size() || (work[r].size() == work[piv].size() && r < piv))
                piv = r;
        for (size_t r : rows) {
            if (r == piv) continue;
            work[r] = cross_eliminate(work[r], work[piv]);
            if (!work[r].empty()) buckets[work[r].front().first].push_back(r);
        }
        ech.pivots.emplace_back(col, std::move(work[piv]));
    }
    return ech;
}

int QMatrix::rank() const {
    return static_cast<int>(eliminate(nullptr).pivots.size());
}

std::vector<std::vector<QScalar>> QMatrix::kernel_basis() const {
    Echelon ech = eliminate(nullptr);
    std::vector<bool> is_pivot(static_cast<size_t>(ncols_), false);
    for (const auto& [c, row] : ech.pivots) is_pivot[static_cast<size_t>(c)] = true;

    std::vector<std::vector<QScalar>> basis;
    for (int f = 0; f < ncols_; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        std::vector<QScalar> v(static_cast<size_t>(ncols_));
        v[static_cast<size_t>(f)] = QScalar(1);
        for (auto it = ech.pivots.rbegin(); it != ech.pivots.rend(); ++it) {
            const auto& [p, row] = *it;
            if (p > f) continue; // columns right of f were not touched by v yet
            QScalar acc;
            for (size_t k = 1; k < row.size(); ++k)
                acc += QScalar(row[k].second) * v[static_cast<size_t>(row[k].first)];
            if (!acc.is_zero()) v[static_cast<size_t>(p)] = -acc / QScalar(row.front().second);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<QScalar>> QMatrix::solve(const std::vector<QScalar>& rhs) const {
    if (static_cast<int>(rhs.size()) != nrows_) throw error("right-hand side length mismatch");
    Echelon ech = eliminate(&rhs);
    if (!ech.consistent) return std::nullopt;
    std::vector<QScalar> v(static_cast<size_t>(ncols_)); // free coordinates stay 0
    for (auto it = ech.pivots.rbegin(); it != ech.pivots.rend(); ++it) {
        const auto& [p, row] = *it;
        QScalar acc;
        for (size_t k = 1; k < row.size(); ++k) {
            if (row[k].first == ncols_)
                acc -= QScalar(row[k].second); // augmented entry: move to the other side
            else
                acc += QScalar(row[k].second) * v[static_cast<size_t>(row[k].first)];
        }
        if (!acc.is_zero()) v[static_cast<size_t>(p)] = -acc / QScalar(row.front().second);
    }
    return v;
}

} // namespace qmat
