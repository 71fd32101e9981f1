#pragma once

#include "etso/angular.hpp"

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace etso {

struct DerivError : std::domain_error {
    using std::domain_error::domain_error;
};

// Gradient coefficients for k = +-1. Zero when l+k < 0, |m| > l or the denominator vanishes.
SqrtLinear grad_coeff_b(int k, int l, int m);
SqrtLinear grad_coeff_c(int k, int l, int m);
SqrtLinear grad_coeff_d(int k, int l, int m);

enum class GradAxis {
    z,      // d/dz
    plus,   // d/dx + i d/dy, raises m
    minus,  // d/dx - i d/dy, lowers m
};

// One term of D[f beta_m Y_lm] = sum_k [f' + bracket f / r] coeff beta_{m'} Y_{l+k, m'}
struct DerivTerm {
    int k = 1;
    int bracket = 0;  // delta_{k,-1} - k l
    SqrtLinear coeff;
    int l = 0;  // target degree l + k
    int m = 0;  // target projection m'
};

// Always two terms, k = +1 then k = -1; a term may carry a zero coefficient.
std::vector<DerivTerm> apply_cartesian_derivative(GradAxis axis, int l, int m);

std::complex<double> eval_derivative_expansion(const std::vector<DerivTerm>& terms, double f, double df, double r,
                                               double theta, double phi);

struct CouplingCoeffs {
    SqrtLinear A, B, C, D;
};

// Literal coupling coefficients; C and D use orbital l~ and coefficient indices 2s-lambda, 2s-(lambda+1).
// lambda must be one of 0, 2, ..., 2s-1.
CouplingCoeffs coupling_coeffs(int k, const SpinLabels& labels, int lambda);

// Two-component spinor as a pair of harmonic terms.
using TwoSpinor = std::array<HarmonicTerm, 2>;

struct ShiftedHarmonics {
    TwoSpinor omega;   // [eta A beta Y_{l+k,m(lambda)}; -eta B beta Y_{l+k,m(lambda+1)}]
    TwoSpinor lambda;  // [-i C beta Y_{l+k,m(lambda+1)}; -i D beta Y_{l+k,m(lambda)}]
};

ShiftedHarmonics shifted_harmonics(int k, const SpinLabels& labels, int lambda);

// Two-spinor of a stored block: Omega pair (lambda, lambda+1) or Lambda pair (2s-lambda, 2s-lambda-1).
TwoSpinor stored_pair(Block block, const SpinLabels& labels, int lambda);

// Lambda pairs are stored as (top, bottom); as a spinor in the usual spin basis they read (-bottom, top).
TwoSpinor to_physical(Block block, const TwoSpinor& stored);
TwoSpinor from_physical(Block block, const TwoSpinor& physical);

struct SigmaPTerm {
    int k = 1;
    int bracket = 0;  // radial operator R' + bracket R / r
    TwoSpinor spinor;  // in the stored basis of the target block
};

// c (sigma . p) applied to R(r) times one stored pair, in units hbar = c = 1 (unit tag kept in `unit`).
struct SigmaPExpansion {
    Block source = Block::upper;
    Block target = Block::lower;
    SpinLabels labels;
    int lambda = 0;         // source pair index
    int target_lambda = 0;  // pair index of the result in the target block
    int orbital = 0;        // degree of the source harmonics (l or l~)
    std::string unit = "c*hbar";
    std::vector<SigmaPTerm> terms;  // k = +1 then k = -1
};

// Derived from the gradient coefficients: sigma . grad acting on a two-spinor, times -i.
SigmaPExpansion sigma_p_apply(Block block, const SpinLabels& labels, int lambda);

// Physical-basis value of the expansion for radial value f, derivative df at (r, theta, phi).
std::array<std::complex<double>, 2> eval_sigma_p(const SigmaPExpansion& e, double f, double df, double r,
                                                 double theta, double phi);
std::array<std::complex<double>, 2> eval_two_spinor(const TwoSpinor& sp, double theta, double phi);

struct CouplingRow {
    SpinLabels labels;
    int lambda = 0;
    CouplingCoeffs plus;   // k = +1
    CouplingCoeffs minus;  // k = -1
};

// lambda = 0, 2, ..., 2s-1, then l = 0..l_max, j ascending, m descending.
std::vector<CouplingRow> emit_coupling_table(HalfInt s, int l_max = 3);

}  // namespace etso
