#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qmat/minors.hpp"
#include "qmat/ring.hpp"

using namespace qmat;

namespace {

NormalElement gen(int n, int i, int j) { return NormalElement::generator(n, i, j); }

PBWMonomial mono(int n, std::initializer_list<std::pair<int, int>> ij_list) {
    PBWMonomial m(n);
    for (auto [i, j] : ij_list) m = m.with_exponent_bumped(gen_id(n, i, j), 1);
    return m;
}

QScalar lam() { return QScalar::q() - QScalar::q_power(-1); }

NormalElement random_element(std::mt19937_64& rng, int n, int maxdeg, int maxterms) {
    NormalElement e(n);
    int terms = 1 + static_cast<int>(rng() % maxterms);
    for (int t = 0; t < terms; ++t) {
        int d = static_cast<int>(rng() % (maxdeg + 1));
        PBWMonomial m(n);
        for (int k = 0; k < d; ++k)
            m = m.with_exponent_bumped(static_cast<int>(rng() % (n * n)), 1);
        QScalar c = (rng() % 2) ? QScalar::q_power(static_cast<long>(rng() % 3) - 1)
                                : QScalar(static_cast<long>(rng() % 5) - 2);
        e.add_term(m, c);
    }
    return e;
}

long long binomial(int a, int b) {
    long long r = 1;
    for (int k = 1; k <= b; ++k) r = r * (a - b + k) / k;
    return r;
}

} // namespace

TEST_CASE("monomial order and basics") {
    PBWMonomial x11 = mono(2, {{1, 1}});
    PBWMonomial x12 = mono(2, {{1, 2}});
    CHECK(x11 > x12);                       // dense lex within the same degree
    CHECK(mono(2, {{1, 1}, {2, 2}}) > x11); // degree dominates
    CHECK(mono(2, {{1, 1}, {2, 2}}) > mono(2, {{1, 2}, {2, 1}}));
    CHECK(PBWMonomial(2).is_unit());
    CHECK(mono(2, {{1, 1}, {1, 1}, {1, 2}}).str() == "x[1,1]^2*x[1,2]");
    CHECK(mono(2, {{1, 1}, {1, 2}}).word() == std::vector<int>{0, 1});
    CHECK_THROWS_AS(PBWMonomial::generator(2, 3, 1), error);
}

TEST_CASE("multiplication against the defining relations") {
    Ring ring(2);
    // x22 * x11 = x11 x22 - (q - q^{-1}) x12 x21
    NormalElement expect(2);
    expect.add_term(mono(2, {{1, 1}, {2, 2}}), QScalar(1));
    expect.add_term(mono(2, {{1, 2}, {2, 1}}), -lam());
    CHECK(ring.multiply(gen(2, 2, 2), gen(2, 1, 1)) == expect);

    // x12 * x11 = q^{-1} x11 x12
    CHECK(ring.multiply(gen(2, 1, 2), gen(2, 1, 1)) ==
          NormalElement::monomial(mono(2, {{1, 1}, {1, 2}}), QScalar::q_power(-1)));

    // x21 * x12 = x12 x21
    CHECK(ring.multiply(gen(2, 2, 1), gen(2, 1, 2)) ==
          NormalElement::monomial(mono(2, {{1, 2}, {2, 1}})));

    Ring ring3(3);
    CHECK_THROWS_AS(ring3.multiply(gen(2, 1, 1), gen(2, 1, 1)), error);
}

TEST_CASE("normalize_word") {
    Ring ring(2);
    NormalElement expect(2);
    expect.add_term(mono(2, {{1, 1}, {2, 2}}), QScalar(1));
    expect.add_term(mono(2, {{1, 2}, {2, 1}}), -lam());
    CHECK(ring.normalize_word_ij({{2, 2}, {1, 1}}) == expect);

    // already sorted words pass through unchanged
    CHECK(ring.normalize_word_ij({{1, 1}, {2, 2}}, QScalar(3)) ==
          NormalElement::monomial(mono(2, {{1, 1}, {2, 2}}), QScalar(3)));

    // x21 x12 x11 = q^{-2} x11 x12 x21
    CHECK(ring.normalize_word_ij({{2, 1}, {1, 2}, {1, 1}}) ==
          NormalElement::monomial(mono(2, {{1, 1}, {1, 2}, {2, 1}}), QScalar::q_power(-2)));

    CHECK_THROWS_AS(ring.normalize_word_ij({{0, 1}}), error);
    CHECK_THROWS_AS(ring.normalize_word({17}), error);
}

TEST_CASE("normalize_word is stable under hand-applied relations") {
    // rewriting any adjacent pair by the defining relations must not change
    // the normal form
    Ring ring(2);
    std::vector<std::pair<int, int>> context = {{2, 2}, {1, 2}};
    // crossing pair: x11 x22 = x22 x11 + (q-q^{-1}) x12 x21
    {
        std::vector<std::pair<int, int>> w1 = {{1, 1}, {2, 2}};
        std::vector<std::pair<int, int>> w2 = {{2, 2}, {1, 1}};
        std::vector<std::pair<int, int>> w3 = {{1, 2}, {2, 1}};
        for (auto& w : {&w1, &w2, &w3})
            w->insert(w->end(), context.begin(), context.end());
        CHECK(ring.normalize_word_ij(w1) ==
              ring.normalize_word_ij(w2) + ring.normalize_word_ij(w3, lam()));
    }
    // q-commuting pair: x11 x12 = q x12 x11
    {
        std::vector<std::pair<int, int>> w1 = {{1, 1}, {1, 2}, {2, 1}};
        std::vector<std::pair<int, int>> w2 = {{1, 2}, {1, 1}, {2, 1}};
        CHECK(ring.normalize_word_ij(w1) == ring.normalize_word_ij(w2, QScalar::q()));
    }
    // commuting pair: x12 x21 = x21 x12
    {
        CHECK(ring.normalize_word_ij({{1, 2}, {2, 1}, {1, 1}}) ==
              ring.normalize_word_ij({{2, 1}, {1, 2}, {1, 1}}));
    }
}

TEST_CASE("commutator") {
    Ring ring(2);
    NormalElement sigma1 = gen(2, 1, 1) + gen(2, 2, 2);
    CHECK(ring.commutator(sigma1, gen(2, 1, 1)) ==
          NormalElement::monomial(mono(2, {{1, 2}, {2, 1}}), -lam()));
    CHECK(ring.commutator(gen(2, 1, 2), gen(2, 2, 1)).is_zero());

    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        NormalElement a = random_element(rng, 2, 3, 3);
        CHECK(ring.commutator(a, a).is_zero());
    }
}

TEST_CASE("homogeneous components") {
    Ring ring(2);
    NormalElement det = quantum_det(ring);
    auto comps = (det - NormalElement::unit(2)).homogeneous_components();
    REQUIRE(comps.size() == 2);
    CHECK(comps.at(0) == NormalElement::scalar(2, QScalar(-1)));
    CHECK(comps.at(2) == det);

    Ring ring3(3);
    NormalElement s1 = sigma(ring3, 1);
    auto c1 = s1.homogeneous_components();
    REQUIRE(c1.size() == 1);
    CHECK(c1.at(1) == s1);

    CHECK(NormalElement(2).homogeneous_components().empty());
}

TEST_CASE("slice sizes match the stars-and-bars count") {
    for (int n = 1; n <= 3; ++n) {
        Ring ring(n);
        for (int d = 0; d <= 4; ++d) {
            auto slice = ring.slice_monomials(d);
            CHECK(static_cast<long long>(slice.size()) == binomial(d + n * n - 1, n * n - 1));
            // canonical descending order, no duplicates
            for (size_t k = 1; k < slice.size(); ++k) CHECK(slice[k - 1] > slice[k]);
        }
    }
}

TEST_CASE("associativity on random triples") {
    std::mt19937_64 rng(2024);
    for (int n = 1; n <= 3; ++n) {
        Ring ring(n);
        for (int t = 0; t < 40; ++t) {
            NormalElement a = random_element(rng, n, 3, 3);
            NormalElement b = random_element(rng, n, 3, 3);
            NormalElement c = random_element(rng, n, 3, 3);
            CHECK(ring.multiply(ring.multiply(a, b), c) ==
                  ring.multiply(a, ring.multiply(b, c)));
        }
    }
}

TEST_CASE("degree additivity for homogeneous elements") {
    std::mt19937_64 rng(11);
    for (int n = 2; n <= 3; ++n) {
        Ring ring(n);
        for (int t = 0; t < 40; ++t) {
            int da = static_cast<int>(rng() % 3) + 1;
            int db = static_cast<int>(rng() % 3) + 1;
            NormalElement a(n), b(n);
            auto sa = ring.slice_monomials(da);
            auto sb = ring.slice_monomials(db);
            a.add_term(sa[rng() % sa.size()], QScalar(1));
            a.add_term(sa[rng() % sa.size()], QScalar::q());
            b.add_term(sb[rng() % sb.size()], QScalar(1));
            b.add_term(sb[rng() % sb.size()], -QScalar::q_power(-1));
            if (a.is_zero() || b.is_zero()) continue;
            NormalElement ab = ring.multiply(a, b);
            REQUIRE(!ab.is_zero()); // the ring is a domain
            CHECK(ab.is_homogeneous());
            CHECK(ab.degree() == da + db);
        }
    }
}

TEST_CASE("multiplication is bilinear") {
    std::mt19937_64 rng(77);
    Ring ring(2);
    for (int t = 0; t < 30; ++t) {
        NormalElement a = random_element(rng, 2, 2, 3);
        NormalElement b = random_element(rng, 2, 2, 3);
        NormalElement c = random_element(rng, 2, 2, 3);
        CHECK(ring.multiply(a, b + c) == ring.multiply(a, b) + ring.multiply(a, c));
        CHECK(ring.multiply(a + b, c) == ring.multiply(a, c) + ring.multiply(b, c));
    }
}

TEST_CASE("normalize_word agrees with stepwise multiplication") {
    std::mt19937_64 rng(123);
    for (int n = 2; n <= 3; ++n) {
        Ring ring(n);
        for (int t = 0; t < 60; ++t) {
            int len = static_cast<int>(rng() % 6);
            std::vector<int> word;
            for (int k = 0; k < len; ++k) word.push_back(static_cast<int>(rng() % (n * n)));
            NormalElement step = NormalElement::unit(n);
            for (int g : word)
                step = ring.multiply(step,
                                     NormalElement::generator(n, gen_row(n, g), gen_col(n, g)));
            CHECK(ring.normalize_word(word) == step);
        }
    }
}

TEST_CASE("unit and scalars") {
    Ring ring(3);
    NormalElement one = NormalElement::unit(3);
    std::mt19937_64 rng(3);
    NormalElement a = random_element(rng, 3, 3, 4);
    CHECK(ring.multiply(one, a) == a);
    CHECK(ring.multiply(a, one) == a);
    CHECK(ring.multiply(NormalElement::scalar(3, lam()), a) == a.scaled(lam()));
}
