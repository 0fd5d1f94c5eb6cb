#include "random_util.hpp"

#include "nct/symmetry.hpp"

#include <doctest.h>

using namespace nct;

namespace {

// Normal-orders a word in U1^{+-1}, U2^{+-1} by single swaps U2^e U1^f = lambda^{ef} U1^f U2^e.
std::pair<int, LatticePoint> ordered(const LatticePoint& a, const LatticePoint& b) {
    std::vector<std::pair<int, int>> word;  // (generator, sign)
    for (const auto& p : {a, b}) {
        for (int i = 0; i < std::abs(p.n); ++i) word.push_back({1, p.n > 0 ? 1 : -1});
        for (int i = 0; i < std::abs(p.m); ++i) word.push_back({2, p.m > 0 ? 1 : -1});
    }
    int texp = 0;
    for (bool swapped = true; swapped;) {
        swapped = false;
        for (size_t i = 0; i + 1 < word.size(); ++i)
            if (word[i].first == 2 && word[i + 1].first == 1) {
                texp += 2 * word[i].second * word[i + 1].second;
                std::swap(word[i], word[i + 1]);
                swapped = true;
            }
    }
    LatticePoint p{0, 0};
    for (const auto& [g, s] : word) (g == 1 ? p.n : p.m) += s;
    return {texp, p};
}

TorusElement U(int n, int m) { return TorusElement::monomial({n, m}); }

}  // namespace

TEST_CASE("monomial product normal ordering") {
    auto [c, p] = monomial_mul({0, 1}, {1, 0});
    CHECK(c == lambda());
    CHECK(p == LatticePoint{1, 1});
    auto [c2, p2] = monomial_mul({3, 0}, {-5, 0});
    CHECK(c2.is_one());
    CHECK(p2 == LatticePoint{-2, 0});
    auto [c3, p3] = monomial_mul({1, 1}, {1, 1});
    CHECK(c3 == lambda());
    CHECK(p3 == LatticePoint{2, 2});
}

TEST_CASE("monomial product agrees with single-swap normal ordering") {
    testutil::Rng rng(21);
    for (int i = 0; i < 300; ++i) {
        LatticePoint a = rng.point(3), b = rng.point(3);
        auto [c, p] = monomial_mul(a, b);
        auto [texp, q] = ordered(a, b);
        CHECK(c == Scalar::t_power(texp));
        CHECK(p == q);
    }
}

TEST_CASE("phase exponent is bilinear") {
    testutil::Rng rng(22);
    for (int i = 0; i < 100; ++i) {
        LatticePoint a = rng.point(5), b = rng.point(5), c = rng.point(5);
        CHECK(phase_exponent(a, b + c) == phase_exponent(a, b) + phase_exponent(a, c));
        CHECK(phase_exponent(a + b, c) == phase_exponent(a, c) + phase_exponent(b, c));
    }
}

TEST_CASE("torus ring operations") {
    TorusElement a = U(1, 0) + U(0, 1);
    CHECK(a * U(1, 0) == U(2, 0) + U(1, 1).scaled(lambda()));
    CHECK(a * TorusElement::one() == a);
    CHECK((TorusElement() * a).is_zero());
    CHECK((a - a).is_zero());
    CHECK(torus_add(a, a) == torus_scale(a, Scalar(2)));
}

TEST_CASE("torus product is associative") {
    testutil::Rng rng(23);
    for (int i = 0; i < 500; ++i) {
        TorusElement a = rng.element(3, 3), b = rng.element(3, 3), c = rng.element(3, 3);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("enveloping action") {
    CHECK(env_act(EnvElement::right({1, 0}), U(0, 1)) == U(1, 1).scaled(lambda()));
    TorusElement a = U(2, -1) + U(0, 3);
    CHECK(env_act(EnvElement::one(), a) == a);
    CHECK(env_act(EnvElement::term(Scalar(1), {-1, 0}, {-1, 0}), U(1, 1)) == U(-1, 1).scaled(lambda_power(-2)));
}

TEST_CASE("enveloping product") {
    EnvElement e = EnvElement::term(Scalar(3), {1, 2}, {-1, 1});
    CHECK(EnvElement::one() * e == e);
    EnvElement p = EnvElement::left({1, 0}) * EnvElement::left({0, 1});
    CHECK(p == EnvElement::left({1, 1}));
    testutil::Rng rng(24);
    for (int i = 0; i < 100; ++i) {
        EnvElement x, y;
        for (int k = 0; k < 2; ++k) {
            x.add_term(rng.unit(), rng.point(2), rng.point(2));
            y.add_term(rng.unit(), rng.point(2), rng.point(2));
        }
        TorusElement a = rng.element(2, 2);
        CHECK(env_act(env_mul(x, y), a) == env_act(x, env_act(y, a)));
    }
}

TEST_CASE("twisted left action composes") {
    testutil::Rng rng(25);
    for (const auto& g : all_groups()) {
        Automorphism s = generator(g);
        for (int i = 0; i < 100; ++i) {
            LatticePoint x = rng.point(2), y = rng.point(2);
            TorusElement a = TorusElement::monomial(rng.unit(), rng.point(2));
            TorusElement twice = env_act(EnvElement::left(y), env_act(EnvElement::left(x), a, &s), &s);
            auto [c, yx] = monomial_mul(y, x);
            CHECK(twice == env_act(EnvElement::term(c, yx, {0, 0}), a, &s));
        }
    }
}

TEST_CASE("bar chains") {
    BarChain b = bar_tensor(U(1, 0) + U(0, 1), {LatticePoint{1, 0}}, Scalar(2));
    CHECK(b.degree() == 1);
    CHECK(b.terms().size() == 2);
    CHECK((b - b).is_zero());
    CHECK(bar_to_torus(bar_from_torus(U(3, -2))) == U(3, -2));
}
