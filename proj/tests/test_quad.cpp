#include "etso/angular.hpp"
#include "etso/quad.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace etso;

TEST(Quadrature, LegendreMatchesBoostNodes) {
    const auto rule = gauss_legendre(20);
    const auto& bx = boost::math::quadrature::gauss<double, 20>::abscissa();
    const auto& bw = boost::math::quadrature::gauss<double, 20>::weights();
    // Boost stores the non-negative half.
    for (std::size_t k = 0; k < bx.size(); ++k) {
        bool found = false;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            if (std::abs(rule.nodes[i] - bx[k]) < 1e-14) {
                EXPECT_NEAR(rule.weights[i], bw[k], 1e-14);
                found = true;
            }
        }
        EXPECT_TRUE(found) << bx[k];
    }
}

TEST(Quadrature, LegendreExactForPolynomials) {
    const int n = 12;
    const auto rule = gauss_legendre(n);
    for (int p = 0; p <= 2 * n - 1; ++p) {
        double sum = 0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], p);
        EXPECT_NEAR(sum, p % 2 ? 0.0 : 2.0 / (p + 1), 1e-13) << p;
    }
}

TEST(Quadrature, LaguerreExactForPolynomials) {
    const int n = 16;
    const auto rule = gauss_laguerre(n);
    double fact = 1;
    for (int p = 0; p <= 2 * n - 1; ++p) {
        if (p > 0) fact *= p;
        double sum = 0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], p);
        EXPECT_NEAR(sum / fact, 1.0, 1e-11) << p;  // int x^p e^-x = p!
    }
}

TEST(Quadrature, RadialGridScaling) {
    // int_0^inf r^4 e^{-3 r} dr = 4!/3^5
    const RadialGrid g(20, 3.0);
    double sum = 0;
    for (int i = 0; i < g.size(); ++i) sum += g.weight(i) * std::pow(g.r(i), 4) * std::exp(-3.0 * g.r(i));
    EXPECT_NEAR(sum, 24.0 / 243.0, 1e-13);
    EXPECT_NEAR(radial_inner([](double r) { return std::exp(-r); }, [](double r) { return r * std::exp(-r); }, 0, 1.0),
                6.0 / 16.0, 1e-13);  // int r^3 e^{-2r} = 3!/2^4
}

TEST(Quadrature, AngularGridIntegratesHarmonics) {
    const AngularGrid g(16, 33);
    double area = 0;
    for (double w : g.weights()) area += w;
    EXPECT_NEAR(area, 4 * std::numbers::pi, 1e-12);
    auto y = [](int l, int m) {
        return [l, m](double th, double ph) { return std::vector<std::complex<double>>{scalar_harmonic(l, m, th, ph)}; };
    };
    EXPECT_NEAR(std::abs(angular_inner(y(3, 2), y(3, 2), g) - 1.0), 0.0, 1e-13);
    EXPECT_NEAR(std::abs(angular_inner(y(3, 2), y(5, 2), g)), 0.0, 1e-13);
    EXPECT_NEAR(std::abs(angular_inner(y(3, 2), y(3, -2), g)), 0.0, 1e-13);
}

TEST(GridSpec, ValidationAndWarnings) {
    EXPECT_THROW((GridSpec{0, 8, 16}.validate()), GridError);
    EXPECT_THROW((GridSpec{8, -1, 16}.validate()), GridError);
    EXPECT_NO_THROW((GridSpec{4, 4, 4}.validate()));
    EXPECT_EQ((GridSpec{4, 4, 4}.warnings().size()), 3u);
    EXPECT_TRUE((GridSpec{}.warnings().empty()));
}

namespace {

SampleMatrix random_samples(int f, int p, int c, unsigned seed) {
    std::mt19937 gen(seed);
    std::normal_distribution<double> d;
    SampleMatrix m(f, p, c);
    for (auto& v : m.data) v = {d(gen), d(gen)};
    return m;
}

}  // namespace

TEST(Gram, ParallelMatchesSerial) {
    const auto a = random_samples(37, 500, 4, 1), b = random_samples(29, 500, 4, 2);
    std::vector<double> w(500);
    for (int i = 0; i < 500; ++i) w[i] = 0.5 + 0.001 * i;
    const auto gs = gram(a, b, w, Exec::serial), gp = gram(a, b, w, Exec::parallel);
    EXPECT_LT(gs.max_abs_diff(gp), 1e-12);
    // spot-check one entry against the definition
    std::complex<double> want = 0;
    for (int p = 0; p < 500; ++p)
        for (int c = 0; c < 4; ++c) want += w[p] * std::conj(a.func(3)[p * 4 + c]) * b.func(5)[p * 4 + c];
    EXPECT_LT(std::abs(gs(3, 5) - want), 1e-10);
}

TEST(Gram, ThreeDimensionalParallelMatchesSerial) {
    const AngularGrid ang(8, 8);
    const RadialGrid rad(24, 2.0);
    ShellSet set;
    set.n_funcs = 6;
    set.sample = [&](double r, SampleMatrix& out) {
        for (int f = 0; f < out.n_funcs; ++f)
            for (int p = 0; p < out.n_points; ++p)
                out.func(f)[p] = std::pow(r, f) * std::exp(-r) * std::complex<double>(std::cos(ang.theta(p) * f), std::sin(ang.phi(p)));
    };
    const auto gs = gram_3d(set, set, 1, ang, rad, Exec::serial);
    const auto gp = gram_3d(set, set, 1, ang, rad, Exec::parallel);
    EXPECT_LT(gs.max_abs_diff(gp), 1e-10 * std::abs(gs(5, 5)));
    for (int f = 0; f < 6; ++f) EXPECT_NEAR(gs(f, f).imag(), 0.0, 1e-10 * std::abs(gs(f, f)));
}
