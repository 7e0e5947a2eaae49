#include "looptop/tensor_operator.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace looptop;

namespace {
BasisSymbol sym(const std::string& n, int d) { return BasisSymbol{n, d}; }
}  // namespace

TEST_CASE("koszul sign") {
    CHECK(koszul_sign(0, 5) == 1);
    CHECK(koszul_sign(3, 3) == -1);
    CHECK(koszul_sign(-3, -5) == -1);
    CHECK(koszul_sign(2, 7) == 1);
}

TEST_CASE("graded vectors drop zero coefficients") {
    GradedVector<Rational> v(1);
    v.add({sym("x", 2)}, Rational(1));
    v.add({sym("x", 2)}, Rational(-1));
    CHECK(v.is_zero());
    CHECK(v.to_string() == "0");

    v.add({sym("x", 2)}, Rational(1, 2));
    v.add({sym("y", 2)}, Rational(-3));
    CHECK(v.terms().size() == 2);
    CHECK(v.homogeneous_degree() == 2);
    v.add({sym("z", 5)}, Rational(1));
    CHECK(!v.homogeneous_degree().has_value());
}

TEST_CASE("twist") {
    auto x = sym("x", 0);
    auto a = sym("a", -3);

    auto v = GradedVector<Rational>::monomial(Word{x, a});
    CHECK(twist(v) == GradedVector<Rational>::monomial(Word{a, x}));

    auto aa = GradedVector<Rational>::monomial(Word{a, a});
    CHECK(twist(aa) == -aa);

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> deg(-4, 4), coeff(-3, 3);
    GradedVector<Rational> w(2);
    for (int i = 0; i < 8; ++i)
        w.add({sym("s" + std::to_string(i), deg(rng)), sym("t" + std::to_string(i), deg(rng))},
              Rational(coeff(rng)));
    CHECK(twist(twist(w)) == w);
    CHECK(twist(w).homogeneous_degree() == w.homogeneous_degree());
}

TEST_CASE("apply_tensor identity and Koszul conventions") {
    auto id = TensorOperator<Rational>::identity();
    auto x = sym("x", -3);
    auto y = sym("y", 2);
    auto xy = GradedVector<Rational>::monomial(Word{x, y});

    CHECK(apply_tensor(id, id, xy) == xy);

    // even-degree right factor introduces no sign
    auto y2 = sym("y'", 0);
    TensorOperator<Rational> g_even(1, 1, -2);
    g_even.define(y, GradedVector<Rational>::monomial(y2));
    CHECK(apply_tensor(id, g_even, xy) ==
          GradedVector<Rational>::monomial(Word{x, y2}));

    // odd-degree right factor moving past |x| = -3 flips the sign
    auto y3 = sym("y''", -3);
    TensorOperator<Rational> g_odd(1, 1, -5);
    g_odd.define(y, GradedVector<Rational>::monomial(y3));
    CHECK(apply_tensor(id, g_odd, xy) ==
          -GradedVector<Rational>::monomial(Word{x, y3}));
    // under the left rule the sign sits on the other factor
    CHECK(apply_tensor(id, g_odd, xy, SignRule::koszul_left) ==
          GradedVector<Rational>::monomial(Word{x, y3}));
    CHECK(apply_tensor(g_odd, id, GradedVector<Rational>::monomial(Word{y, x}),
                       SignRule::koszul_left) ==
          -GradedVector<Rational>::monomial(Word{y3, x}));
}

TEST_CASE("compose") {
    auto x = sym("x", 1);
    auto y = sym("y", 0);
    auto id = TensorOperator<Rational>::identity();

    TensorOperator<Rational> d(1, 1, -1);
    d.define(x, GradedVector<Rational>::monomial(y));
    d.define(y, GradedVector<Rational>::zero(1));

    CHECK(compose(d, id).degree() == -1);
    CHECK(compose(d, id).evaluate({x}) == d.evaluate({x}));

    auto dd = compose(d, d);
    CHECK(dd.degree() == -2);
    CHECK(dd.evaluate({x}).is_zero());
    CHECK(dd.evaluate({y}).is_zero());

    CHECK_THROWS_AS(d.evaluate({sym("missing", 0)}), undefined_action);
}

TEST_CASE("operator tables reject degree-inhomogeneous outputs") {
    TensorOperator<Rational> f(1, 1, -1);
    CHECK_THROWS_AS(f.define(sym("x", 1), GradedVector<Rational>::monomial(sym("y", 1))),
                    std::invalid_argument);
}

TEST_CASE("bilinearity on random vectors") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> coeff(-5, 5);
    auto x = sym("x", 2);
    auto y = sym("y", -1);
    TensorOperator<Rational> f(1, 1, 3);
    f.define(x, GradedVector<Rational>::monomial(sym("fx", 5), Rational(2)));
    f.define(y, GradedVector<Rational>::monomial(sym("fy", 2), Rational(-1)));

    for (int trial = 0; trial < 50; ++trial) {
        Rational a(coeff(rng)), b(coeff(rng));
        GradedVector<Rational> v = a * GradedVector<Rational>::monomial(x) +
                                   b * GradedVector<Rational>::monomial(y);
        GradedVector<Rational> expect = a * f.evaluate({x}) + b * f.evaluate({y});
        CHECK(f.apply(v) == expect);
    }
}

TEST_CASE("tensor composition sign coherence") {
    // (f (x) g) o (f' (x) g') = (-1)^{deg g * deg f'} (f o f') (x) (g o g')
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<int> deg(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        int df = deg(rng), dg = deg(rng), dfp = deg(rng), dgp = deg(rng);
        auto x0 = sym("x0", deg(rng));
        auto y0 = sym("y0", deg(rng));
        auto x1 = sym("x1", x0.degree + dfp);
        auto y1 = sym("y1", y0.degree + dgp);
        auto x2 = sym("x2", x1.degree + df);
        auto y2 = sym("y2", y1.degree + dg);

        TensorOperator<Rational> fp(1, 1, dfp), gp(1, 1, dgp), f(1, 1, df), g(1, 1, dg);
        fp.define(x0, GradedVector<Rational>::monomial(x1));
        gp.define(y0, GradedVector<Rational>::monomial(y1));
        f.define(x1, GradedVector<Rational>::monomial(x2));
        g.define(y1, GradedVector<Rational>::monomial(y2));

        auto v = GradedVector<Rational>::monomial(Word{x0, y0});
        auto stepwise = apply_tensor(f, g, apply_tensor(fp, gp, v));
        auto direct = apply_tensor(compose(f, fp), compose(g, gp), v);
        if (koszul_sign(dg, dfp) < 0) direct = -direct;
        CHECK(stepwise == direct);
    }
}
