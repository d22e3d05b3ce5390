#include "qmat/centralizer.hpp"

#include <map>
#include <thread>

#include "qmat/minors.hpp"

namespace qmat {

GrMonomial::GrMonomial(int d_, PBWMonomial tail_) : d(d_), tail(std::move(tail_)) {
    if (d < 0) throw error("negative filtration degree");
    if (tail.x11_exponent() != 0) throw error("gr-monomial tail must not contain x[1,1]");
    weight = tail.corner_weight();
}

GrImage gr_ad_sigma1(const Ring& ring, const GrMonomial& m) {
    QScalar scale = QScalar(1) - ring.q_inv().pow(m.weight);
    return GrImage{std::move(scale), GrMonomial(m.d + 1, m.tail)};
}

bool gr_consistency_check(const Ring& ring, int d, const PBWMonomial& tail) {
    if (tail.x11_exponent() != 0) throw error("gr-monomial tail must not contain x[1,1]");
    GrMonomial gm(d, tail);
    NormalElement lift = NormalElement::monomial(tail.with_exponent_bumped(0, d));
    NormalElement comm = ring.commutator(sigma(ring, 1), lift);

    // discard everything of x11-exponent <= d; what survives lives in the
    // graded piece F^{d+1}/F^d
    NormalElement top(ring.n());
    for (const auto& [m, c] : comm.terms())
        if (m.x11_exponent() > d) top.add_term(m, c);

    GrImage img = gr_ad_sigma1(ring, gm);
    NormalElement predicted =
        NormalElement::monomial(img.mono.tail.with_exponent_bumped(0, img.mono.d), img.scale);
    return top == predicted;
}

SliceMatrix build_slice_matrix(const Ring& ring, int d, int threads) {
    if (d < 0) throw error("negative degree");
    std::vector<PBWMonomial> domain = ring.slice_monomials(d);
    std::vector<PBWMonomial> codomain = ring.slice_monomials(d + 1);
    std::map<PBWMonomial, int> row_of;
    for (size_t r = 0; r < codomain.size(); ++r) row_of.emplace(codomain[r], static_cast<int>(r));

    const NormalElement sigma1 = sigma(ring, 1);
    std::vector<NormalElement> columns(domain.size(), NormalElement(ring.n()));

    auto run = [&](size_t begin, size_t end) {
        for (size_t c = begin; c < end; ++c)
            columns[c] = ring.commutator(sigma1, NormalElement::monomial(domain[c]));
    };
    int nthreads = std::max(1, std::min<int>(threads, static_cast<int>(domain.size())));
    if (nthreads <= 1) {
        run(0, domain.size());
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (domain.size() + static_cast<size_t>(nthreads) - 1) / static_cast<size_t>(nthreads);
        for (int t = 0; t < nthreads; ++t) {
            size_t b = static_cast<size_t>(t) * chunk;
            size_t e = std::min(domain.size(), b + chunk);
            if (b < e) pool.emplace_back(run, b, e);
        }
        for (auto& th : pool) th.join();
    }

    QMatrix mat(static_cast<int>(codomain.size()), static_cast<int>(domain.size()));
    for (size_t c = 0; c < columns.size(); ++c)
        for (const auto& [m, v] : columns[c].terms())
            mat.add(row_of.at(m), static_cast<int>(c), v);
    return SliceMatrix{ring.n(), d, std::move(domain), std::move(codomain), std::move(mat)};
}

std::vector<NormalElement> kernel_basis(const Ring& ring, const SliceMatrix& sm) {
    std::vector<NormalElement> out;
    for (const auto& vec : sm.mat.kernel_basis()) {
        NormalElement e(ring.n());
        for (size_t c = 0; c < vec.size(); ++c) e.add_term(sm.domain[c], vec[c]);
        out.push_back(std::move(e));
    }
    return out;
}

long long count_partitions_max_part(int d, int n) {
    if (d < 0) throw error("negative degree");
    if (n < 1) throw error("max part must be positive");
    // table[j] = partitions of j with parts among those seen so far
    std::vector<long long> table(static_cast<size_t>(d) + 1, 0);
    table[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int j = part; j <= d; ++j)
            table[static_cast<size_t>(j)] += table[static_cast<size_t>(j - part)];
    return table[static_cast<size_t>(d)];
}

CentralizerReport verify_centralizer_theorem(const Ring& ring, int d, int threads) {
    CentralizerReport rep;
    rep.n = ring.n();
    rep.d = d;
    rep.partition_count = count_partitions_max_part(d, ring.n());

    SliceMatrix sm = build_slice_matrix(ring, d, threads);
    rep.slice_dim = static_cast<int>(sm.domain.size());
    rep.kernel_dim = rep.slice_dim - sm.mat.rank();

    std::map<PBWMonomial, int> col_of;
    for (size_t c = 0; c < sm.domain.size(); ++c) col_of.emplace(sm.domain[c], static_cast<int>(c));

    const NormalElement sigma1 = sigma(ring, 1);
    std::vector<NormalElement> smonos = sigma_monomials(ring, d);
    QMatrix sigma_mat(static_cast<int>(smonos.size()), rep.slice_dim);
    bool all_commute = true;
    for (size_t r = 0; r < smonos.size(); ++r) {
        if (!ring.commutator(sigma1, smonos[r]).is_zero()) all_commute = false;
        for (const auto& [m, c] : smonos[r].terms())
            sigma_mat.add(static_cast<int>(r), col_of.at(m), c);
    }
    rep.sigma_rank = sigma_mat.rank();

    if (rep.kernel_dim != rep.partition_count)
        rep.failed_check = "kernel dimension != partition count";
    else if (!all_commute)
        rep.failed_check = "a sigma-monomial does not commute with sigma_1";
    else if (rep.sigma_rank != rep.kernel_dim)
        rep.failed_check = "sigma-monomials do not span the kernel";
    rep.pass = rep.failed_check.empty();
    return rep;
}

} // namespace qmat
