#include "etso/radial.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gtest/gtest.h>

#include <cmath>

using namespace etso;

namespace {

// Adaptive oracle for int_0^inf f(r) dr, independent of the Gauss-Laguerre rule.
// Every integrand here decays at least like e^{-r}, so [0, 80] loses nothing at double precision.
// Kronrod nodes avoid r = 0, where the dual carries inverse powers of r.
template <class F>
double integrate(F f) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, 80.0, 15, 1e-13);
}

double fd(const std::function<double(double)>& f, double r, double h = 1e-5) { return (f(r + h) - f(r - h)) / (2 * h); }

}  // namespace

TEST(Radial, SlaterNormalized) {
    for (double zeta : {0.7, 1.0, 2.3}) {
        for (int n = 1; n <= 6; ++n) {
            const double norm = integrate([&](double r) { return std::pow(sto_radial(n, zeta, r) * r, 2); });
            EXPECT_NEAR(norm, 1.0, 1e-10) << "n=" << n << " zeta=" << zeta;
        }
    }
}

// Radial biorthonormality: int dual_n psi_n' r^2 dr = delta for fixed l.
TEST(Radial, PsiAlphaBiorthonormal) {
    const double zeta = 1.3;
    for (int alpha : {2, 1, 0, -1}) {
        for (int l = 0; l <= 2; ++l) {
            if (2 * l + 2 - alpha <= 0) continue;
            for (int n = l + 1; n <= 5; ++n) {
                for (int np = l + 1; np <= 5; ++np) {
                    const double v = integrate([&](double r) {
                        return psi_alpha_dual_radial(alpha, n, l, zeta, r) * psi_alpha_radial(alpha, np, l, zeta, r) * r * r;
                    });
                    EXPECT_NEAR(v, n == np ? 1.0 : 0.0, 1e-10) << "alpha=" << alpha << " l=" << l << " n=" << n << " n'=" << np;
                }
            }
        }
    }
}

TEST(Radial, AlphaOneIsHydrogenic) {
    // psi^1 with zeta = Z/n is the normalized hydrogen radial function; check 1s and 2p.
    EXPECT_NEAR(psi_alpha_radial(1, 1, 0, 1.0, 0.5), 2 * std::exp(-0.5), 1e-14);
    const double z = 0.5;  // Z = 1, n = 2
    EXPECT_NEAR(psi_alpha_radial(1, 2, 1, z, 1.7), 1.7 * std::exp(-1.7 / 2) / (2 * std::sqrt(6.0)), 1e-14);
}

TEST(Radial, DerivativesMatchFiniteDifferences) {
    const double zeta = 1.1;
    for (int n = 1; n <= 5; ++n) {
        for (int l = 0; l < n; ++l) {
            for (double r : {0.3, 1.0, 2.7, 6.0}) {
                EXPECT_NEAR(sto_radial_derivative(n, zeta, r), fd([&](double x) { return sto_radial(n, zeta, x); }, r), 1e-8);
                for (int alpha : {1, 0, -1}) {
                    EXPECT_NEAR(psi_alpha_radial_derivative(alpha, n, l, zeta, r),
                                fd([&](double x) { return psi_alpha_radial(alpha, n, l, zeta, x); }, r), 1e-8);
                    const double d = psi_alpha_dual_radial_derivative(alpha, n, l, zeta, r);
                    EXPECT_NEAR(d, fd([&](double x) { return psi_alpha_dual_radial(alpha, n, l, zeta, x); }, r),
                                1e-8 * std::max(1.0, std::abs(d)));
                }
            }
        }
    }
}

TEST(Radial, DualConstant) {
    EXPECT_EQ(psi_alpha_dual_constant(1, 3, 1), Rational(6));
    EXPECT_EQ(psi_alpha_dual_constant(0, 3, 1), Rational(1));
    EXPECT_EQ(psi_alpha_dual_constant(-1, 2, 0), Rational(1, 4));
    EXPECT_EQ(psi_alpha_dual_constant(2, 2, 1), Rational(16));
}

TEST(Radial, ZeroRadialConvention) {
    const RadialFamily f{RadialKind::psi_alpha, 1, 1.0};
    EXPECT_EQ(radial_value(f, 2, 2, 1.0), 0.0);
    EXPECT_EQ(radial_derivative(f, 2, 3, 1.0), 0.0);
    const RadialFamily s{RadialKind::sto, 0, 1.0};
    EXPECT_EQ(radial_value(s, 1, 1, 1.0), 0.0);
    EXPECT_EQ(radial_value(s, 2, 1, 1.0), sto_radial(2, 1.0, 1.0));
}

TEST(Radial, ValueAtOrigin) {
    EXPECT_EQ(psi_alpha_radial(1, 3, 1, 1.0, 0.0), 0.0);
    EXPECT_GT(psi_alpha_radial(1, 3, 0, 1.0, 0.0), 0.0);
    EXPECT_THROW(psi_alpha_dual_radial(1, 3, 0, 1.0, 0.0), RadialError);
    EXPECT_NO_THROW(psi_alpha_dual_radial(1, 3, 1, 1.0, 0.0));
}

TEST(Radial, PreconditionErrors) {
    EXPECT_THROW(psi_alpha_radial(3, 2, 0, 1.0, 1.0), RadialError);
    EXPECT_THROW(psi_alpha_radial(2, 2, 0, 1.0, 1.0), RadialError);  // 2l+2-alpha = 0
    EXPECT_THROW(psi_alpha_radial(1, 2, 0, -1.0, 1.0), RadialError);
    EXPECT_THROW(sto_radial(0, 1.0, 1.0), RadialError);
    EXPECT_THROW((RadialFamily{RadialKind::psi_alpha, 3, 1.0}.validate()), RadialError);
    EXPECT_THROW((RadialFamily{RadialKind::sto, 0, 0.0}.validate()), RadialError);
}

TEST(Radial, NormalizationFactor) {
    EXPECT_EQ(normalization_N(3, 2), SqrtLinear::sqrt_of(Rational(1, 2)));
    EXPECT_EQ(normalization_N(3, 3), SqrtLinear(1));
    EXPECT_EQ(normalization_N(1, 0), SqrtLinear::sqrt_of(Rational(1, 2)));
    EXPECT_THROW(normalization_N(0, 0), RadialError);
}
