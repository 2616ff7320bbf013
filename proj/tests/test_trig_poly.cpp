#include "trigsurf/trig_poly.hpp"

#include "trigsurf/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>

using namespace trigsurf;

namespace {

// Independent evaluation oracle: per-axis factor products instead of a
// single phase accumulation.
Complex eval_oracle(const TrigPolynomial& p, const Point& x) {
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < p.support().size(); ++i) {
        Complex term = p.coeffs()[static_cast<Eigen::Index>(i)];
        for (int d = 0; d < p.dim(); ++d) {
            term *= std::polar(1.0, kTwoPi * p.support()[i][d] * x[d]);
        }
        acc += term;
    }
    return acc;
}

// 1-D Dirichlet sum D_e(u) = sin(pi e u) / sin(pi u), with the removable
// singularity at integer u (equals e for odd e).
double dirichlet_1d(int extent, double u) {
    const double denom = std::sin(std::numbers::pi * u);
    if (std::abs(denom) < 1e-9) return static_cast<double>(extent);
    return std::sin(std::numbers::pi * extent * u) / denom;
}

Point random_point(Rng& rng, int dim) {
    Point x(dim);
    for (int i = 0; i < dim; ++i) x[i] = rng.uniform01();
    return x;
}

TrigPolynomial cosine_1d() {
    // c = [1/2, 0, 1/2] over {-1, 0, 1} evaluates to cos(2 pi x)
    Eigen::VectorXcd c(3);
    c << Complex(0.5, 0.0), Complex(0.0, 0.0), Complex(0.5, 0.0);
    return TrigPolynomial(FrequencySet::rect(1, {3}), c, true);
}

}  // namespace

TEST_CASE("constant polynomial evaluates to its constant") {
    const auto p = TrigPolynomial::constant(3, Complex(3.0, 0.0));
    Rng rng(1);
    for (int i = 0; i < 5; ++i) {
        CHECK(std::abs(p.eval(random_point(rng, 3)) - Complex(3.0, 0.0)) < 1e-15);
    }
}

TEST_CASE("cosine via Euler identity") {
    const auto p = cosine_1d();
    Point x(1);
    x[0] = 0.0;
    CHECK(std::abs(p.eval(x) - Complex(1.0, 0.0)) < 1e-15);
    x[0] = 0.25;
    CHECK(std::abs(p.eval(x)) < 1e-15);
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        x[0] = rng.uniform01();
        CHECK(std::abs(p.eval(x) - Complex(std::cos(kTwoPi * x[0]), 0.0)) < 1e-14);
    }
}

TEST_CASE("eval matches the per-axis product oracle") {
    Rng rng(17);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto p = random_real_coefficients(FrequencySet::rect(2, {5, 3}), seed);
        for (int i = 0; i < 10; ++i) {
            const Point x = random_point(rng, 2);
            const Complex direct = p.eval(x);
            const Complex oracle = eval_oracle(p, x);
            CHECK(std::abs(direct - oracle) <= 1e-12 * p.coeff_l1_norm());
        }
    }
}

TEST_CASE("eval rejects dimension mismatches") {
    const auto p = cosine_1d();
    CHECK_THROWS_AS(p.eval(Point::Zero(2)), std::invalid_argument);
}

TEST_CASE("feature map entries and order") {
    const auto bw = FrequencySet::rect(2, {3, 3});
    const auto phi0 = feature_map(bw, Point::Zero(2));
    REQUIRE(phi0.size() == 9);
    for (Eigen::Index i = 0; i < phi0.size(); ++i) {
        CHECK(std::abs(phi0[i] - Complex(1.0, 0.0)) < 1e-15);
    }

    Rng rng(5);
    const Point x = random_point(rng, 2);
    const auto phi = feature_map(bw, x);
    for (std::size_t i = 0; i < bw.size(); ++i) {
        CHECK(std::abs(std::abs(phi[static_cast<Eigen::Index>(i)]) - 1.0) < 1e-12);
        FreqIndex neg{-bw[i][0], -bw[i][1]};
        const auto j = static_cast<Eigen::Index>(bw.position_of(neg).value());
        CHECK(std::abs(std::conj(phi[static_cast<Eigen::Index>(i)]) - phi[j]) < 1e-15);
    }

    // c^T phi(x) is exactly the evaluation (Euler form of the inner product)
    const auto p = random_real_coefficients(bw, 42);
    const Complex via_features = p.coeffs().transpose() * phi;
    CHECK(std::abs(via_features - p.eval(x)) <= 1e-12 * p.coeff_l1_norm());

    CHECK_THROWS_AS(feature_map(bw, Point::Zero(3)), std::invalid_argument);
}

TEST_CASE("feature matrix columns are lifted points") {
    const auto bw = FrequencySet::rect(2, {3, 3});
    SampleSet xs(2);
    xs.add(Point::Zero(2), 0, 0.0);
    const auto single = feature_matrix(bw, xs);
    CHECK(single.rows() == 9);
    CHECK(single.cols() == 1);
    CHECK((single.col(0) - Eigen::VectorXcd::Ones(9)).norm() < 1e-14);

    Rng rng(8);
    SampleSet more(2);
    for (int i = 0; i < 4; ++i) more.add(random_point(rng, 2), 0, 0.0);
    const auto phi = feature_matrix(bw, more);
    for (std::size_t j = 0; j < more.size(); ++j) {
        CHECK((phi.col(static_cast<Eigen::Index>(j)) - feature_map(bw, more.point(j))).norm() ==
              0.0);
    }

    CHECK_THROWS_AS(feature_matrix(bw, SampleSet(2)), std::invalid_argument);
}

TEST_CASE("off-surface points are generically not annihilated") {
    const auto bw = FrequencySet::rect(2, {3, 3});
    Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = random_real_coefficients(bw, 1000 + static_cast<std::uint64_t>(trial));
        const Eigen::VectorXcd unit = p.coeffs() / p.coeff_l2_norm();
        double max_abs = 0.0;
        for (int i = 0; i < 10; ++i) {
            const Point x = random_point(rng, 2);
            max_abs = std::max(max_abs, std::abs(Complex(unit.transpose() * feature_map(bw, x))));
        }
        CHECK(max_abs > 1e-3);
    }
}

TEST_CASE("multiply: identity, homomorphism, support") {
    const auto a = random_real_coefficients(FrequencySet::rect(2, {3, 3}), 1);
    const auto one = TrigPolynomial::constant(2, Complex(1.0, 0.0));
    const auto a_again = multiply(a, one);
    CHECK(a_again.support() == a.support());
    CHECK((a_again.coeffs() - a.coeffs()).norm() < 1e-15);

    const auto b = random_real_coefficients(FrequencySet::rect(2, {3, 3}), 2);
    const auto ab = multiply(a, b);
    CHECK(ab.support() == FrequencySet::rect(2, {5, 5}));
    CHECK(ab.real_valued());

    Rng rng(33);
    for (int i = 0; i < 100; ++i) {
        const Point x = random_point(rng, 2);
        const Complex lhs = ab.eval(x);
        const Complex rhs = a.eval(x) * b.eval(x);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(rhs)));
    }

    CHECK_THROWS_AS(multiply(a, cosine_1d()), std::invalid_argument);
}

TEST_CASE("dirichlet kernel: diagonal, symmetry, product oracle") {
    const auto gamma = FrequencySet::rect(2, {13, 13});
    Rng rng(4);
    for (int i = 0; i < 10; ++i) {
        const Point x = random_point(rng, 2);
        const Point y = random_point(rng, 2);

        CHECK(std::abs(dirichlet_kernel(gamma, x, x) - Complex(169.0, 0.0)) <= 1e-12 * 169.0);
        CHECK(std::abs(std::conj(dirichlet_kernel(gamma, x, y)) - dirichlet_kernel(gamma, y, x)) <
              1e-12 * 169.0);

        const double oracle = dirichlet_1d(13, y[0] - x[0]) * dirichlet_1d(13, y[1] - x[1]);
        CHECK(std::abs(dirichlet_kernel(gamma, x, y) - Complex(oracle, 0.0)) <=
              1e-10 * 169.0);
    }
    CHECK_THROWS_AS(dirichlet_kernel(gamma, Point::Zero(2), Point::Zero(3)),
                    std::invalid_argument);
}

TEST_CASE("translate shifts the argument") {
    const auto p = random_real_coefficients(FrequencySet::rect(2, {3, 3}), 9);
    Rng rng(10);
    const Point t = random_point(rng, 2);
    const auto q = translate(p, t);
    CHECK(q.real_valued());
    for (int i = 0; i < 20; ++i) {
        const Point x = random_point(rng, 2);
        Point shifted = x + t;
        CHECK(std::abs(q.eval(shifted) - p.eval(x)) <= 1e-10 * p.coeff_l1_norm());
    }
}

TEST_CASE("random real polynomial: invariants and determinism") {
    const auto bw = FrequencySet::rect(2, {3, 3});
    const auto drawn = random_real_polynomial(bw, 123);
    CHECK(drawn.poly.real_valued());

    // real-valuedness as an evaluation property
    Rng rng(55);
    for (int i = 0; i < 100; ++i) {
        const Point x = random_point(rng, 2);
        CHECK(std::abs(drawn.poly.eval(x).imag()) <= 1e-12 * drawn.poly.coeff_l1_norm());
    }

    // the anchored root
    CHECK(std::abs(drawn.poly.eval(drawn.zero_anchor)) <= 1e-12 * drawn.poly.coeff_l1_norm());

    // bit-identical redraw
    const auto again = random_real_polynomial(bw, 123);
    CHECK((again.poly.coeffs() - drawn.poly.coeffs()).norm() == 0.0);
    CHECK((again.zero_anchor - drawn.zero_anchor).norm() == 0.0);

    const auto other = random_real_polynomial(bw, 124);
    CHECK((other.poly.coeffs() - drawn.poly.coeffs()).norm() > 0.0);

    CHECK_THROWS_AS(random_real_coefficients(FrequencySet(2, {{1, 0}, {0, 0}}), 0),
                    std::invalid_argument);
    // symmetric support without the zero frequency cannot be anchored
    CHECK_THROWS_AS(random_real_polynomial(FrequencySet(1, {{1}, {-1}}), 0),
                    std::invalid_argument);
}

TEST_CASE("mean square over a grid equals the coefficient energy") {
    // Parseval on an aliasing-free grid
    for (auto extents : {std::vector<int>{3, 3}, std::vector<int>{5, 5}}) {
        const auto p = random_real_coefficients(FrequencySet::rect(2, extents), 77);
        const int res = 64;
        double acc = 0.0;
        Point x(2);
        for (int i = 0; i < res; ++i) {
            x[0] = static_cast<double>(i) / res;
            for (int j = 0; j < res; ++j) {
                x[1] = static_cast<double>(j) / res;
                acc += std::norm(p.eval(x));
            }
        }
        const double mean_sq = acc / (res * res);
        const double energy = p.coeff_l2_norm() * p.coeff_l2_norm();
        CHECK(std::abs(mean_sq - energy) <= 1e-3 * energy);
    }
}

TEST_CASE("constructor validation") {
    const auto bw = FrequencySet::rect(1, {3});
    CHECK_THROWS_AS(TrigPolynomial(bw, Eigen::VectorXcd::Zero(3), false), std::invalid_argument);
    CHECK_THROWS_AS(TrigPolynomial(bw, Eigen::VectorXcd::Ones(2), false), std::invalid_argument);

    // real flag demands conjugate symmetry
    Eigen::VectorXcd c(3);
    c << Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(0.5, 0.0);
    CHECK_THROWS_AS(TrigPolynomial(bw, c, true), std::invalid_argument);
    CHECK_NOTHROW(TrigPolynomial(bw, c, false));

    // real flag on an asymmetric support
    Eigen::VectorXcd c2(2);
    c2 << Complex(1.0, 0.0), Complex(1.0, 0.0);
    CHECK_THROWS_AS(TrigPolynomial(FrequencySet(1, {{0}, {1}}), c2, true),
                    std::invalid_argument);
}
