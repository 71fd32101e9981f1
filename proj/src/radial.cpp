#include "etso/radial.hpp"

#include <cmath>

namespace etso {

namespace {

double factorial_d(int n) { return std::tgamma(n + 1.0); }

void check_psi(int alpha, int n, int l, double zeta) {
    if (n < 1) throw RadialError("principal quantum number must be >= 1");
    if (l < 0) throw RadialError("orbital l must be nonnegative");
    if (!(zeta > 0)) throw RadialError("zeta must be positive");
    if (alpha > 2) throw RadialError("alpha must be <= 2");
    if (2 * l + 2 - alpha <= 0) {
        throw RadialError("Laguerre parameter 2l+2-alpha must be positive (alpha=" + std::to_string(alpha) +
                          ", l=" + std::to_string(l) + ")");
    }
}

}  // namespace

void RadialFamily::validate() const {
    if (!(zeta > 0)) throw RadialError("zeta must be positive");
    if (kind != RadialKind::sto && alpha > 2) throw RadialError("alpha must be <= 2");
}

std::string RadialFamily::name() const {
    switch (kind) {
        case RadialKind::sto: return "sto";
        case RadialKind::psi_alpha: return "psi";
        case RadialKind::psi_alpha_dual: return "psi-dual";
    }
    return "?";
}

double sto_radial(int n, double zeta, double r) {
    if (n < 1) throw RadialError("principal quantum number must be >= 1");
    if (!(zeta > 0)) throw RadialError("zeta must be positive");
    double norm = std::pow(2.0 * zeta, n + 0.5) / std::sqrt(factorial_d(2 * n));
    return norm * std::pow(r, n - 1) * std::exp(-zeta * r);
}

double sto_radial_derivative(int n, double zeta, double r) {
    if (n < 1) throw RadialError("principal quantum number must be >= 1");
    double norm = std::pow(2.0 * zeta, n + 0.5) / std::sqrt(factorial_d(2 * n));
    double poly = (n > 1 ? (n - 1) * std::pow(r, n - 2) : 0.0) - zeta * std::pow(r, n - 1);
    return norm * poly * std::exp(-zeta * r);
}

double psi_alpha_norm(int alpha, int n, int l, double zeta) {
    check_psi(alpha, n, l, zeta);
    if (l >= n) return 0.0;
    int p = n - l - 1;
    double x = std::pow(2.0 * zeta, 3) * factorial_d(p) /
               (std::pow(2.0 * n, alpha) * factorial_d(n + l + 1 - alpha));
    return std::sqrt(x);
}

double psi_alpha_radial(int alpha, int n, int l, double zeta, double r) {
    check_psi(alpha, n, l, zeta);
    if (l >= n) return 0.0;
    const unsigned p = static_cast<unsigned>(n - l - 1);
    const unsigned beta = static_cast<unsigned>(2 * l + 2 - alpha);
    double x = 2.0 * zeta * r;
    return psi_alpha_norm(alpha, n, l, zeta) * std::pow(x, l) * std::exp(-0.5 * x) *
           std::assoc_laguerre(p, beta, x);
}

double psi_alpha_radial_derivative(int alpha, int n, int l, double zeta, double r) {
    check_psi(alpha, n, l, zeta);
    if (l >= n) return 0.0;
    const unsigned p = static_cast<unsigned>(n - l - 1);
    const unsigned beta = static_cast<unsigned>(2 * l + 2 - alpha);
    double x = 2.0 * zeta * r;
    double L = std::assoc_laguerre(p, beta, x);
    // d/dx L^(b)_p = -L^(b+1)_{p-1}
    double dL = p > 0 ? -std::assoc_laguerre(p - 1, beta + 1, x) : 0.0;
    double xl = std::pow(x, l);
    double dxl = l > 0 ? l * std::pow(x, l - 1) : 0.0;
    double d_dx = std::exp(-0.5 * x) * (dxl * L - 0.5 * xl * L + xl * dL);
    return psi_alpha_norm(alpha, n, l, zeta) * 2.0 * zeta * d_dx;
}

Rational psi_alpha_dual_constant(int alpha, int n, int l) {
    check_psi(alpha, n, l, 1.0);
    Rational c = 1;
    for (int i = 0; i < std::abs(alpha); ++i) c *= 2 * n;
    return alpha >= 0 ? c : Rational(1) / c;
}

double psi_alpha_dual_radial(int alpha, int n, int l, double zeta, double r) {
    check_psi(alpha, n, l, zeta);
    if (l >= n) return 0.0;
    double x = 2.0 * zeta * r;
    if (x == 0.0 && alpha > l) throw RadialError("dual radial is singular at r = 0 for l < alpha");
    double c = std::pow(2.0 * n, alpha);
    return c * std::pow(x, -alpha) * psi_alpha_radial(alpha, n, l, zeta, r);
}

double psi_alpha_dual_radial_derivative(int alpha, int n, int l, double zeta, double r) {
    check_psi(alpha, n, l, zeta);
    if (l >= n) return 0.0;
    double x = 2.0 * zeta * r;
    if (x == 0.0 && alpha > l - 1 && alpha != 0) {
        throw RadialError("dual radial derivative is singular at r = 0");
    }
    double c = std::pow(2.0 * n, alpha);
    double w = std::pow(x, -alpha);
    double dw = alpha != 0 ? -alpha * 2.0 * zeta * std::pow(x, -alpha - 1) : 0.0;
    return c * (dw * psi_alpha_radial(alpha, n, l, zeta, r) +
                w * psi_alpha_radial_derivative(alpha, n, l, zeta, r));
}

double radial_value(const RadialFamily& f, int n, int l, double r) {
    if (l >= n) return 0.0;
    switch (f.kind) {
        case RadialKind::sto: return sto_radial(n, f.zeta, r);
        case RadialKind::psi_alpha: return psi_alpha_radial(f.alpha, n, l, f.zeta, r);
        case RadialKind::psi_alpha_dual: return psi_alpha_dual_radial(f.alpha, n, l, f.zeta, r);
    }
    return 0.0;
}

double radial_derivative(const RadialFamily& f, int n, int l, double r) {
    if (l >= n) return 0.0;
    switch (f.kind) {
        case RadialKind::sto: return sto_radial_derivative(n, f.zeta, r);
        case RadialKind::psi_alpha: return psi_alpha_radial_derivative(f.alpha, n, l, f.zeta, r);
        case RadialKind::psi_alpha_dual: return psi_alpha_dual_radial_derivative(f.alpha, n, l, f.zeta, r);
    }
    return 0.0;
}

SqrtLinear normalization_N(int n, int l_tilde) {
    if (n < 1 || l_tilde < 0) throw RadialError("normalization_N needs n >= 1 and l~ >= 0");
    if (l_tilde <= n - 1) return SqrtLinear::sqrt_of(Rational(1, 2));
    return SqrtLinear(1);
}

}  // namespace etso
