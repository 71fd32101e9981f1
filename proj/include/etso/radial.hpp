#pragma once

#include "etso/exact.hpp"

#include <stdexcept>
#include <string>

namespace etso {

struct RadialError : std::domain_error {
    using std::domain_error::domain_error;
};

enum class RadialKind {
    sto,             // normalized Slater radial, independent of l
    psi_alpha,       // Laguerre-based psi^alpha radial
    psi_alpha_dual,  // its biorthogonal partner
};

struct RadialFamily {
    RadialKind kind = RadialKind::psi_alpha;
    int alpha = 1;
    double zeta = 1.0;

    void validate() const;
    std::string name() const;
};

// (2 zeta)^{n+1/2} / sqrt((2n)!) r^{n-1} e^{-zeta r}
double sto_radial(int n, double zeta, double r);
double sto_radial_derivative(int n, double zeta, double r);

// N (2 zeta r)^l e^{-zeta r} L^{(2l+2-alpha)}_{n-l-1}(2 zeta r); zero when l >= n.
double psi_alpha_radial(int alpha, int n, int l, double zeta, double r);
double psi_alpha_radial_derivative(int alpha, int n, int l, double zeta, double r);

// c (2 zeta r)^{-alpha} psi_alpha_radial
double psi_alpha_dual_radial(int alpha, int n, int l, double zeta, double r);
double psi_alpha_dual_radial_derivative(int alpha, int n, int l, double zeta, double r);

double psi_alpha_norm(int alpha, int n, int l, double zeta);
// The constant c with  int dual * primal r^2 dr = 1; equals (2n)^alpha.
Rational psi_alpha_dual_constant(int alpha, int n, int l);

// Dispatch on the family; radial functions with l >= n vanish for every family.
double radial_value(const RadialFamily& family, int n, int l, double r);
double radial_derivative(const RadialFamily& family, int n, int l, double r);

// 1/sqrt(2) for l~ <= n-1, 1 otherwise.
SqrtLinear normalization_N(int n, int l_tilde);

}  // namespace etso
