#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "specbias/design_matrix.hpp"

using namespace specbias;

TEST_CASE("impulse on its own grid is the identity") {
    const auto g = Grid1D::uniform(8, 8);
    const auto dm = build(g, ActivationSpec(ActivationKind::impulse, 1.0));
    CHECK((dm.a - Mat::Identity(8, 8)).norm() == 0.0);

    Vec y(8);
    y << 3, 1, 4, 1, 5, 9, 2, 6;
    CHECK((predict(dm, y) - y).norm() == 0.0);  // w* = y under memorization
}

TEST_CASE("impulse accepts index-aligned subsets and rejects misaligned biases") {
    Vec x = Vec::LinSpaced(8, 0.0, 1.0);
    Vec b(4);
    b << x[0], x[2], x[4], x[6];
    const auto dm = build(Grid1D::from_vectors(x, b, 1.0), ActivationSpec(ActivationKind::impulse, 1.0));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 4; ++j) CHECK(dm.a(i, j) == (i == 2 * j ? 1.0 : 0.0));

    Vec bad(2);
    bad << 0.0, 1.0 / 7.0 * 0.4;  // falls between grid nodes
    CHECK_THROWS_AS(build(Grid1D::from_vectors(x, bad, 1.0), ActivationSpec(ActivationKind::impulse, 1.0)),
                    std::invalid_argument);
}

TEST_CASE("hand-checked small matrices") {
    Vec x1(1), b2(2);
    x1 << 0.5;
    b2 << 0.25, 0.75;
    const auto hs = build(Grid1D::from_vectors(x1, b2, 1.0), ActivationSpec(ActivationKind::heaviside, 1.0));
    CHECK(hs.a(0, 0) == 1.0);
    CHECK(hs.a(0, 1) == 0.0);

    Vec w(2);
    w << 2, 3;
    CHECK(predict(hs, w)[0] == 2.0);

    Vec xr(1), br(1);
    xr << 1.0;
    br << 0.0;
    const auto r = build(Grid1D::from_vectors(xr, br, 1.0), ActivationSpec(ActivationKind::relu, 1.0));
    CHECK(r.a(0, 0) == 1.0);
}

TEST_CASE("predict is linear and checks dimensions") {
    const auto dm = build(Grid1D::uniform(12, 20), ActivationSpec(ActivationKind::tanh, 8.0));
    std::mt19937_64 rng(5);
    std::normal_distribution<double> gauss;
    for (int t = 0; t < 20; ++t) {
        Vec w1(20), w2(20);
        for (int j = 0; j < 20; ++j) {
            w1[j] = gauss(rng);
            w2[j] = gauss(rng);
        }
        const Vec lhs = predict(dm, w1 + w2);
        const Vec rhs = predict(dm, w1) + predict(dm, w2);
        CHECK((lhs - rhs).norm() <= 1e-12 * rhs.norm());
    }
    CHECK((predict(dm, Vec::Zero(20))).norm() == 0.0);
    CHECK_THROWS_AS(predict(dm, Vec::Zero(7)), std::invalid_argument);
}

TEST_CASE("heaviside rows are step vectors") {
    const int n = 16;
    const auto g = Grid1D::uniform(n, n);
    const auto dm = build(g, ActivationSpec(ActivationKind::heaviside, 1.0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double expected = g.x[i] > g.b[j] ? 1.0 : 0.0;
            CHECK(dm.a(i, j) == expected);
        }
        // entries 1 up to the step, 0 after: non-increasing along the row
        for (int j = 1; j < n; ++j) CHECK(dm.a(i, j) <= dm.a(i, j - 1));
    }
}

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(Grid1D::uniform(0, 4), std::invalid_argument);
    Vec dec(3), inc(3);
    dec << 0.5, 0.2, 0.9;
    inc << 0.1, 0.2, 0.9;
    CHECK_THROWS_AS(Grid1D::from_vectors(dec, inc, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Grid1D::from_vectors(inc, dec, 1.0), std::invalid_argument);
    CHECK_NOTHROW(Grid1D::from_vectors(inc, inc, 1.0));
}
