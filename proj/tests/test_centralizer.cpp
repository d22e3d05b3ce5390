#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "qmat/centralizer.hpp"
#include "qmat/minors.hpp"

using namespace qmat;

namespace {

PBWMonomial mono(int n, std::initializer_list<std::pair<int, int>> ij_list) {
    PBWMonomial m(n);
    for (auto [i, j] : ij_list) m = m.with_exponent_bumped(gen_id(n, i, j), 1);
    return m;
}

// brute-force partition counter, independent of the DP
long long count_partitions_brute(int d, int n) {
    if (d == 0) return 1;
    long long total = 0;
    for (int first = std::min(d, n); first >= 1; --first) {
        // partitions of d with largest part exactly `first`
        std::function<long long(int, int)> rec = [&](int rem, int maxpart) -> long long {
            if (rem == 0) return 1;
            long long s = 0;
            for (int p = std::min(rem, maxpart); p >= 1; --p) s += rec(rem - p, p);
            return s;
        };
        total += rec(d - first, first);
    }
    return total;
}

} // namespace

TEST_CASE("gr action on monomials") {
    Ring ring(2);
    GrMonomial gm(1, mono(2, {{1, 2}}));
    CHECK(gm.weight == 1);
    GrImage img = gr_ad_sigma1(ring, gm);
    CHECK(img.scale == QScalar(1) - QScalar::q_power(-1));
    CHECK(img.mono.d == 2);
    CHECK(img.mono.tail == gm.tail);

    GrMonomial diag(0, mono(2, {{2, 2}}));
    CHECK(diag.weight == 0);
    CHECK(gr_ad_sigma1(ring, diag).scale.is_zero());

    GrMonomial two(0, mono(2, {{1, 2}, {2, 1}}));
    CHECK(two.weight == 2);
    CHECK(gr_ad_sigma1(ring, two).scale == QScalar(1) - QScalar::q_power(-2));

    CHECK_THROWS_AS(GrMonomial(0, mono(2, {{1, 1}})), error);
}

TEST_CASE("gr consistency examples") {
    Ring ring2(2);
    CHECK(gr_consistency_check(ring2, 0, mono(2, {{2, 2}})));
    CHECK(gr_consistency_check(ring2, 1, mono(2, {{1, 2}})));
    Ring ring3(3);
    CHECK(gr_consistency_check(ring3, 2, mono(3, {{2, 1}, {3, 3}})));
    CHECK_THROWS_AS(gr_consistency_check(ring2, 1, mono(2, {{1, 1}})), error);
}

TEST_CASE("gr diagonality sweep") {
    for (int n = 1; n <= 3; ++n) {
        Ring ring(n);
        for (int deg = 0; deg <= 3; ++deg)
            for (const PBWMonomial& m : ring.slice_monomials(deg)) {
                int d = m.x11_exponent();
                CHECK(gr_consistency_check(ring, d, m.with_exponent_bumped(0, -d)));
            }
    }
}

TEST_CASE("slice matrix shapes and trivial kernel") {
    Ring ring(2);
    SliceMatrix sm = build_slice_matrix(ring, 0);
    CHECK(sm.mat.rows() == 4);
    CHECK(sm.mat.cols() == 1);
    CHECK(sm.mat.rank() == 0); // [sigma_1, 1] = 0
    auto kb = kernel_basis(ring, sm);
    REQUIRE(kb.size() == 1);
    CHECK(kb[0] == NormalElement::unit(2));
}

TEST_CASE("degree-1 kernel is spanned by the trace") {
    for (int n = 2; n <= 3; ++n) {
        Ring ring(n);
        SliceMatrix sm = build_slice_matrix(ring, 1);
        auto kb = kernel_basis(ring, sm);
        REQUIRE(kb.size() == 1);
        CHECK(ring.commutator(sigma(ring, 1), kb[0]).is_zero());
        // proportional to sigma_1
        QScalar lead = kb[0].terms().begin()->second;
        CHECK(kb[0] == sigma(ring, 1).scaled(lead));
    }
}

TEST_CASE("kernel dimensions match the partition oracle") {
    Ring ring2(2);
    CHECK(static_cast<long long>(kernel_basis(ring2, build_slice_matrix(ring2, 2)).size()) ==
          count_partitions_max_part(2, 2));
    CHECK(static_cast<long long>(kernel_basis(ring2, build_slice_matrix(ring2, 4)).size()) == 3);
    Ring ring3(3);
    CHECK(static_cast<long long>(kernel_basis(ring3, build_slice_matrix(ring3, 3)).size()) == 3);
}

TEST_CASE("partition counts") {
    CHECK(count_partitions_max_part(4, 2) == 3);
    CHECK(count_partitions_max_part(0, 7) == 1);
    CHECK(count_partitions_max_part(3, 3) == 3);
    for (int n = 1; n <= 4; ++n)
        for (int d = 0; d <= 10; ++d)
            CHECK(count_partitions_max_part(d, n) == count_partitions_brute(d, n));
}

TEST_CASE("verify_centralizer_theorem") {
    Ring ring1(1);
    for (int d = 0; d <= 3; ++d) {
        CentralizerReport rep = verify_centralizer_theorem(ring1, d);
        CHECK(rep.pass);
        CHECK(rep.kernel_dim == 1);
        CHECK(rep.slice_dim == 1);
    }

    Ring ring2(2);
    for (int d = 0; d <= 4; ++d) {
        CentralizerReport rep = verify_centralizer_theorem(ring2, d);
        CHECK(rep.pass);
        CHECK(rep.kernel_dim == rep.partition_count);
        CHECK(rep.sigma_rank == rep.kernel_dim);
    }

    Ring ring3(3);
    CentralizerReport rep = verify_centralizer_theorem(ring3, 2);
    CHECK(rep.pass);
    CHECK(rep.slice_dim == 45);
    CHECK(rep.kernel_dim == 2);
}

TEST_CASE("kernel basis specializes into the kernel of the specialized matrix") {
    Ring ring(2);
    SliceMatrix sm = build_slice_matrix(ring, 2);
    auto kb = kernel_basis(ring, sm);
    auto kvecs = sm.mat.kernel_basis();
    REQUIRE(!kb.empty());
    for (const Rational& q0 : {Rational(2), Rational(3)}) {
        // entrywise-evaluated matrix times evaluated kernel vectors
        for (const auto& v : kvecs) {
            for (int r = 0; r < sm.mat.rows(); ++r) {
                Rational acc(0);
                for (int c = 0; c < sm.mat.cols(); ++c)
                    acc += sm.mat.at(r, c).eval(q0) * v[static_cast<size_t>(c)].eval(q0);
                CHECK(acc == 0);
            }
        }
        // equivalently, the evaluated elements still commute with the trace
        Ring spec(2, QScalar(q0));
        NormalElement sigma1 = sigma(spec, 1);
        for (const auto& k : kb) {
            NormalElement k0 =
                k.mapped_coeffs([&](const QScalar& c) { return QScalar(c.eval(q0)); });
            REQUIRE(!k0.is_zero());
            CHECK(spec.commutator(sigma1, k0).is_zero());
        }
    }
}

TEST_CASE("filtration degree is submultiplicative") {
    std::mt19937_64 rng(31);
    Ring ring(2);
    for (int t = 0; t < 40; ++t) {
        NormalElement a(2), b(2);
        for (int k = 0; k < 3; ++k) {
            int da = static_cast<int>(rng() % 3);
            PBWMonomial ma(2), mb(2);
            for (int s = 0; s < da; ++s) {
                ma = ma.with_exponent_bumped(static_cast<int>(rng() % 4), 1);
                mb = mb.with_exponent_bumped(static_cast<int>(rng() % 4), 1);
            }
            a.add_term(ma, QScalar(1));
            b.add_term(mb, QScalar::q());
        }
        if (a.is_zero() || b.is_zero()) continue;
        NormalElement ab = ring.multiply(a, b);
        if (ab.is_zero()) continue;
        CHECK(ab.filtration_degree() <= a.filtration_degree() + b.filtration_degree());
    }
}

TEST_CASE("threaded matrix construction is deterministic") {
    Ring ring(2);
    SliceMatrix s1 = build_slice_matrix(ring, 3, 1);
    SliceMatrix s4 = build_slice_matrix(ring, 3, 4);
    REQUIRE(s1.mat.rows() == s4.mat.rows());
    REQUIRE(s1.mat.cols() == s4.mat.cols());
    for (int r = 0; r < s1.mat.rows(); ++r)
        for (int c = 0; c < s1.mat.cols(); ++c) CHECK(s1.mat.at(r, c) == s4.mat.at(r, c));
}
