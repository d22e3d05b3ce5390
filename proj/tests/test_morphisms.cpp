#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qmat/minors.hpp"
#include "qmat/morphisms.hpp"

using namespace qmat;

namespace {

PBWMonomial mono(int n, std::initializer_list<std::pair<int, int>> ij_list) {
    PBWMonomial m(n);
    for (auto [i, j] : ij_list) m = m.with_exponent_bumped(gen_id(n, i, j), 1);
    return m;
}

NormalElement random_element(std::mt19937_64& rng, int n, int maxdeg, int maxterms,
                             bool nonzero = false) {
    for (;;) {
        NormalElement e(n);
        int terms = 1 + static_cast<int>(rng() % maxterms);
        for (int t = 0; t < terms; ++t) {
            int d = static_cast<int>(rng() % (maxdeg + 1));
            PBWMonomial m(n);
            for (int k = 0; k < d; ++k)
                m = m.with_exponent_bumped(static_cast<int>(rng() % (n * n)), 1);
            e.add_term(m, (rng() % 2) ? QScalar::q_power(static_cast<long>(rng() % 3) - 1)
                                      : QScalar(static_cast<long>(rng() % 5) - 2));
        }
        if (!nonzero || !e.is_zero()) return e;
    }
}

} // namespace

TEST_CASE("eta") {
    Ring ring2(2);
    CHECK(eta(NormalElement::generator(2, 1, 2)).is_zero());
    CHECK(eta(sigma(ring2, 2)) == CommutativePoly::variable(2, 1) * CommutativePoly::variable(2, 2));

    Ring ring3(3);
    for (int i = 1; i <= 3; ++i)
        CHECK(eta(sigma(ring3, i)) == CommutativePoly::elementary_symmetric(3, i));
}

TEST_CASE("the maps preserve products") {
    // on every generator pair
    for (int n = 2; n <= 3; ++n) {
        Ring ring(n);
        Ring inner(n - 1);
        Ring target = gamma_target_ring(ring);
        for (int g = 0; g < n * n; ++g)
            for (int h = 0; h < n * n; ++h) {
                NormalElement a =
                    NormalElement::generator(n, gen_row(n, g), gen_col(n, g));
                NormalElement b =
                    NormalElement::generator(n, gen_row(n, h), gen_col(n, h));
                NormalElement ab = ring.multiply(a, b);
                CHECK(eta(ab) == eta(a) * eta(b));
                CHECK(phi(ab) == b_multiply(inner, phi(a), phi(b)));
                CHECK(delta_map(phi(ab)) == delta_map(phi(a)) * delta_map(phi(b)));
                CHECK(gamma(ring, ab) == target.multiply(gamma(ring, a), gamma(ring, b)));
            }
    }
    // and on 200 random pairs
    std::mt19937_64 rng(21);
    for (int t = 0; t < 200; ++t) {
        int n = 2 + static_cast<int>(t % 2);
        Ring ring(n);
        Ring inner(n - 1);
        Ring target = gamma_target_ring(ring);
        NormalElement a = random_element(rng, n, 2, 3);
        NormalElement b = random_element(rng, n, 2, 3);
        NormalElement ab = ring.multiply(a, b);
        CHECK(eta(ab) == eta(a) * eta(b));
        CHECK(phi(ab) == b_multiply(inner, phi(a), phi(b)));
        CHECK(delta_map(phi(ab)) == delta_map(phi(a)) * delta_map(phi(b)));
        CHECK(gamma(ring, ab) == target.multiply(gamma(ring, a), gamma(ring, b)));
    }
}

TEST_CASE("phi") {
    CHECK(phi(NormalElement::generator(2, 1, 2)).is_zero());

    BElement t3(3);
    t3.add_term(1, NormalElement::unit(2));
    CHECK(phi(NormalElement::generator(3, 1, 1)) == t3);

    BElement x12(3);
    x12.add_term(0, NormalElement::generator(2, 1, 2));
    CHECK(phi(NormalElement::generator(3, 2, 3)) == x12);

    CHECK_THROWS_AS(phi(NormalElement::generator(1, 1, 1)), error);
}

TEST_CASE("delta") {
    // delta(t) = t_1
    BElement t2(2);
    t2.add_term(1, NormalElement::unit(1));
    CHECK(delta_map(t2) == CommutativePoly::variable(2, 1));

    // delta(phi(x22)) = t_2 at n=2
    CHECK(delta_map(phi(NormalElement::generator(2, 2, 2))) == CommutativePoly::variable(2, 2));

    // delta(sigma_1(B_{2,3})) = t_2 + t_3: sigma_1 of A_2 placed at t-degree 0
    Ring inner(2);
    BElement s1b(3);
    s1b.add_term(0, sigma(inner, 1));
    CHECK(delta_map(s1b) ==
          CommutativePoly::variable(3, 2) + CommutativePoly::variable(3, 3));

    // eta = delta . phi
    std::mt19937_64 rng(23);
    for (int n = 2; n <= 3; ++n) {
        for (int t = 0; t < 40; ++t) {
            NormalElement x = random_element(rng, n, 2, 3);
            CHECK(eta(x) == delta_map(phi(x)));
        }
    }
}

TEST_CASE("gamma") {
    Ring ring(2);
    Ring target = gamma_target_ring(ring);
    CHECK(gamma(ring, NormalElement::generator(2, 1, 1)) == NormalElement::generator(2, 2, 2));

    // gamma(sigma_i) is the sigma_i of the target ring, det_q included
    CHECK(gamma(ring, sigma(ring, 1)) == sigma(target, 1));
    CHECK(gamma(ring, quantum_det(ring)) == quantum_det(target));

    // the normal form of x22*x11 maps to the product of the flipped factors
    NormalElement e = ring.multiply(NormalElement::generator(2, 2, 2),
                                    NormalElement::generator(2, 1, 1));
    CHECK(gamma(ring, e) == target.multiply(gamma(ring, NormalElement::generator(2, 2, 2)),
                                            gamma(ring, NormalElement::generator(2, 1, 1))));

    // the reverse-direction gamma undoes it
    std::mt19937_64 rng(24);
    for (int n = 2; n <= 3; ++n) {
        Ring rn(n);
        Ring tn = gamma_target_ring(rn);
        for (int t = 0; t < 40; ++t) {
            NormalElement a = random_element(rng, n, 2, 3);
            CHECK(gamma(tn, gamma(rn, a)) == a);
        }
    }
}

TEST_CASE("homogenize_mod_n") {
    Ring ring(2);
    NormalElement det = quantum_det(ring);
    NormalElement one = NormalElement::unit(2);

    // 1 + det_q -> 2 det_q
    CHECK(homogenize_mod_n(ring, one + det, 0) == det + det);

    // already homogeneous elements are fixed
    NormalElement s1 = sigma(ring, 1);
    CHECK(homogenize_mod_n(ring, s1, 1) == s1);

    // x11 + x11 x12 x21 -> x11 det + x11 x12 x21
    NormalElement x11 = NormalElement::generator(2, 1, 1);
    NormalElement big = NormalElement::monomial(mono(2, {{1, 1}, {1, 2}, {2, 1}}));
    CHECK(homogenize_mod_n(ring, x11 + big, 1) == ring.multiply(x11, det) + big);

    CHECK_THROWS_AS(homogenize_mod_n(ring, x11 + det, 0), error);
    CHECK_THROWS_AS(homogenize_mod_n(ring, x11, 0), error);
}

TEST_CASE("sl ideal membership") {
    Ring ring(2);
    NormalElement det = quantum_det(ring);
    NormalElement one = NormalElement::unit(2);
    CHECK(sl_ideal_member(ring, det - one));
    CHECK(!sl_ideal_member(ring, NormalElement::generator(2, 1, 1)));
    CHECK(sl_ideal_member(ring, ring.multiply(det - one, NormalElement::generator(2, 1, 2))));
    CHECK(sl_ideal_member(ring, NormalElement(2)));

    std::mt19937_64 rng(25);
    for (int n = 2; n <= 3; ++n) {
        Ring rn(n);
        NormalElement dn = quantum_det(rn) - NormalElement::unit(n);
        for (int t = 0; t < 20; ++t) {
            NormalElement x = random_element(rng, n, 2, 3, true);
            CHECK(sl_ideal_member(rn, rn.multiply(x, dn)));
            CHECK(!sl_ideal_member(rn, rn.multiply(x, dn) + NormalElement::generator(n, 1, 2)));
        }
    }
}

TEST_CASE("ideal multiples are never homogeneous") {
    std::mt19937_64 rng(26);
    for (int n = 1; n <= 3; ++n) {
        Ring ring(n);
        NormalElement dn = quantum_det(ring) - NormalElement::unit(n);
        for (int t = 0; t < 20; ++t) {
            NormalElement y = random_element(rng, n, 2, 3, true);
            CHECK(ring.multiply(y, dn).homogeneous_components().size() >= 2);
        }
    }
}

TEST_CASE("SL elements") {
    Ring ring(2);
    NormalElement det = quantum_det(ring);

    SLElement a(ring, NormalElement::generator(2, 1, 1));
    REQUIRE(a.zn_degree().has_value());
    CHECK(*a.zn_degree() == 1);

    SLElement dm1(ring, det - NormalElement::unit(2));
    REQUIRE(dm1.zn_degree().has_value());
    CHECK(*dm1.zn_degree() == 0); // degrees 2 and 0 agree mod 2

    SLElement mixed(ring, NormalElement::generator(2, 1, 1) + det);
    CHECK(!mixed.zn_degree().has_value());

    CHECK(SLElement::equal(ring, SLElement(ring, det), SLElement(ring, NormalElement::unit(2))));
    CHECK(!SLElement::equal(ring, a, SLElement(ring, NormalElement::unit(2))));

    // Z/nZ degree is additive on products of homogeneous classes
    std::mt19937_64 rng(27);
    for (int t = 0; t < 20; ++t) {
        int da = static_cast<int>(rng() % 3);
        int db = static_cast<int>(rng() % 3);
        auto sa = ring.slice_monomials(da);
        auto sb = ring.slice_monomials(db);
        NormalElement ea = NormalElement::monomial(sa[rng() % sa.size()]);
        NormalElement eb = NormalElement::monomial(sb[rng() % sb.size()]);
        SLElement pa(ring, ea), pb(ring, eb);
        SLElement prod(ring, ring.multiply(ea, eb));
        REQUIRE(prod.zn_degree().has_value());
        CHECK(*prod.zn_degree() == (*pa.zn_degree() + *pb.zn_degree()) % 2);
    }
}

TEST_CASE("GL elements") {
    Ring ring(2);
    NormalElement det = quantum_det(ring);
    NormalElement x11 = NormalElement::generator(2, 1, 1);

    GLElement a(ring.multiply(x11, det), 1);
    GLElement b(x11, 0);
    CHECK(GLElement::equal(ring, a, b));
    CHECK(!GLElement::equal(ring, a, GLElement(x11, 1)));

    GLElement big(ring.multiply(ring.multiply(x11, det), det), 1);
    GLElement red = big.reduced(ring);
    CHECK(red.det_power() == 0);
    CHECK(red.numerator() == ring.multiply(x11, det));

    // exact division by det_q
    std::mt19937_64 rng(28);
    for (int t = 0; t < 10; ++t) {
        NormalElement y = random_element(rng, 2, 2, 2, true);
        auto q = divide_by_det(ring, ring.multiply(det, y));
        REQUIRE(q.has_value());
        CHECK(*q == y);
    }
    CHECK(!divide_by_det(ring, x11).has_value());
    CHECK(!divide_by_det(ring, det + x11).has_value());
}
