#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qmat/linalg.hpp"
#include "qmat/minors.hpp"

using namespace qmat;

namespace {

PBWMonomial mono(int n, std::initializer_list<std::pair<int, int>> ij_list) {
    PBWMonomial m(n);
    for (auto [i, j] : ij_list) m = m.with_exponent_bumped(gen_id(n, i, j), 1);
    return m;
}

} // namespace

TEST_CASE("index sets and permutations") {
    CHECK_THROWS_AS(IndexSet({2, 1}, 3), error);
    CHECK_THROWS_AS(IndexSet({1, 4}, 3), error);
    CHECK(IndexSet::all(3, 2).size() == 3);
    auto perms = Permutation::all(3);
    CHECK(perms.size() == 6);
    std::vector<int> lengths;
    for (const auto& p : perms) lengths.push_back(p.length);
    std::sort(lengths.begin(), lengths.end());
    CHECK(lengths == std::vector<int>{0, 1, 1, 2, 2, 3});
}

TEST_CASE("quantum minors") {
    Ring ring(2);
    CHECK(quantum_minor(ring, IndexSet({1}, 2), IndexSet({2}, 2)) ==
          NormalElement::generator(2, 1, 2));

    NormalElement det2(2);
    det2.add_term(mono(2, {{1, 1}, {2, 2}}), QScalar(1));
    det2.add_term(mono(2, {{1, 2}, {2, 1}}), -QScalar::q());
    CHECK(quantum_minor(ring, IndexSet({1, 2}, 2), IndexSet({1, 2}, 2)) == det2);
    CHECK(quantum_det(ring) == det2);

    CHECK_THROWS_AS(quantum_minor(ring, IndexSet({1}, 2), IndexSet({1, 2}, 2)), error);
}

TEST_CASE("det_q at n=3 is the alternating 6-term sum") {
    Ring ring(3);
    NormalElement det = quantum_det(ring);
    REQUIRE(det.term_count() == 6);
    const QScalar q = QScalar::q();
    CHECK(det.coefficient(mono(3, {{1, 1}, {2, 2}, {3, 3}})) == QScalar(1));
    CHECK(det.coefficient(mono(3, {{1, 1}, {2, 3}, {3, 2}})) == -q);
    CHECK(det.coefficient(mono(3, {{1, 2}, {2, 1}, {3, 3}})) == -q);
    CHECK(det.coefficient(mono(3, {{1, 2}, {2, 3}, {3, 1}})) == q * q);
    CHECK(det.coefficient(mono(3, {{1, 3}, {2, 1}, {3, 2}})) == q * q);
    CHECK(det.coefficient(mono(3, {{1, 3}, {2, 2}, {3, 1}})) == -(q * q * q));
}

TEST_CASE("sigma") {
    Ring ring3(3);
    NormalElement trace =
        NormalElement::generator(3, 1, 1) + NormalElement::generator(3, 2, 2) +
        NormalElement::generator(3, 3, 3);
    CHECK(sigma(ring3, 1) == trace);

    Ring ring2(2);
    CHECK(sigma(ring2, 2) == quantum_det(ring2));

    NormalElement expected(3);
    for (const auto& idx : {std::vector<int>{1, 2}, std::vector<int>{1, 3}, std::vector<int>{2, 3}})
        expected += quantum_minor(ring3, IndexSet(idx, 3), IndexSet(idx, 3));
    CHECK(sigma(ring3, 2) == expected);

    CHECK_THROWS_AS(sigma(ring3, 0), error);
    CHECK_THROWS_AS(sigma(ring3, 4), error);
}

TEST_CASE("det_q is central") {
    for (int n = 1; n <= 3; ++n) {
        Ring ring(n);
        NormalElement det = quantum_det(ring);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                CHECK(ring.commutator(det, NormalElement::generator(n, i, j)).is_zero());
    }
}

TEST_CASE("sigmas commute pairwise") {
    for (int n = 1; n <= 3; ++n) {
        Ring ring(n);
        std::vector<NormalElement> sig;
        for (int i = 1; i <= n; ++i) sig.push_back(sigma(ring, i));
        for (const auto& a : sig)
            for (const auto& b : sig) CHECK(ring.commutator(a, b).is_zero());
    }
}

TEST_CASE("partitions") {
    CHECK(partitions_with_max_part(2, 2) ==
          std::vector<std::vector<int>>{{1, 1}, {2}});
    CHECK(partitions_with_max_part(3, 3) ==
          std::vector<std::vector<int>>{{1, 1, 1}, {2, 1}, {3}});
    CHECK(partitions_with_max_part(0, 5) == std::vector<std::vector<int>>{{}});
    CHECK(partitions_with_max_part(4, 2).size() == 3);
}

TEST_CASE("sigma monomials") {
    Ring ring2(2);
    auto sm2 = sigma_monomials(ring2, 2);
    REQUIRE(sm2.size() == 2);
    CHECK(sm2[0] == ring2.multiply(sigma(ring2, 1), sigma(ring2, 1)));
    CHECK(sm2[1] == sigma(ring2, 2));

    Ring ring3(3);
    auto sm3 = sigma_monomials(ring3, 3);
    REQUIRE(sm3.size() == 3);
    CHECK(sm3[0] == ring3.power(sigma(ring3, 1), 3));
    CHECK(sm3[1] == ring3.multiply(sigma(ring3, 2), sigma(ring3, 1)));
    CHECK(sm3[2] == sigma(ring3, 3));

    auto sm0 = sigma_monomials(ring3, 0);
    REQUIRE(sm0.size() == 1);
    CHECK(sm0[0] == NormalElement::unit(3));
}

TEST_CASE("sigma monomials are distinct and linearly independent") {
    for (int n = 2; n <= 3; ++n) {
        Ring ring(n);
        for (int d = 0; d <= 4; ++d) {
            auto sm = sigma_monomials(ring, d);
            for (size_t a = 0; a < sm.size(); ++a)
                for (size_t b = a + 1; b < sm.size(); ++b) CHECK(!(sm[a] == sm[b]));
            // exact rank over Q(q)
            auto slice = ring.slice_monomials(d);
            std::map<PBWMonomial, int> col;
            for (size_t k = 0; k < slice.size(); ++k) col.emplace(slice[k], static_cast<int>(k));
            QMatrix mat(static_cast<int>(sm.size()), static_cast<int>(slice.size()));
            for (size_t r = 0; r < sm.size(); ++r)
                for (const auto& [m, c] : sm[r].terms())
                    mat.add(static_cast<int>(r), col.at(m), c);
            CHECK(mat.rank() == static_cast<int>(sm.size()));
        }
    }
}
