#pragma once

#include "etso/exact.hpp"
#include "etso/halfint.hpp"

#include <complex>
#include <stdexcept>
#include <vector>

namespace etso {

struct LabelError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// <j1 m1; j2 m2 | J M> by the Racah single sum. Zero when a selection rule fails;
// LabelError when a projection is inconsistent with its angular momentum.
SqrtLinear clebsch_gordan_general(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M);

// <l m_l; s m_s | j m>
SqrtLinear clebsch_gordan(int l, HalfInt s, HalfInt m_l, HalfInt m_s, HalfInt j, HalfInt m);

// Quantum numbers of one spinor block.
struct SpinLabels {
    HalfInt s;
    int l = 0;
    HalfInt j;
    HalfInt m;

    int t() const { return j.twice - 2 * l; }
    int eta() const { return t() < 0 ? -1 : 1; }
    int l_tilde() const { return j.twice - l; }
    int dim() const { return s.twice + 1; }
    HalfInt m_of(int lambda) const { return m - s + lambda; }
    // t (j + 1/2); l+1 for t = +1 and -l for t = -1
    int kappa() const { return t() * (j.twice + 1) / 2; }

    void validate() const;
};

// Admissible j for spin s and orbital l, ascending: j = l + t/2, t = -2s..2s step 2, t != 0, j >= s.
// For s = 0 the only value is j = l.
std::vector<HalfInt> allowed_j(HalfInt s, int l);

// a^{s lambda}_{ljm} evaluated at the given orbital index (l for the upper block, l~ for the lower).
SqrtLinear modified_cg(const SpinLabels& labels, int lambda, int orbital);
inline SqrtLinear modified_cg(const SpinLabels& labels, int lambda) {
    return modified_cg(labels, lambda, labels.l);
}

// (-1)^{(|m| - m)/2}
int phase_beta(HalfInt m);
inline int phase_beta(int m) { return phase_beta(HalfInt::from_int(m)); }

// Spherical harmonic in the self-conjugate phase: conj(Y_lm) = Y_{l,-m}.
std::complex<double> scalar_harmonic(int l, int m, double theta, double phi);

enum class Block { upper, lower };

// coeff * Y_{l m}
struct HarmonicTerm {
    ExactComplex coeff;
    int l = 0;
    int m = 0;
};

// Stack of 2s+1 scalar components. Upper (Omega): lambda = 0..2s. Lower (Lambda): lambda = 2s..0.
// Consecutive pairs form the two-spinors.
struct TensorHarmonic {
    Block block = Block::upper;
    SpinLabels labels;
    std::vector<HarmonicTerm> components;

    int orbital() const { return block == Block::upper ? labels.l : labels.l_tilde(); }
    // component index -> lambda
    int lambda_of(int c) const { return block == Block::upper ? c : labels.dim() - 1 - c; }
};

TensorHarmonic tensor_harmonic_omega(const SpinLabels& labels);
TensorHarmonic tensor_harmonic_lambda(const SpinLabels& labels);

std::vector<std::complex<double>> eval_tensor_harmonic(const TensorHarmonic& h, double theta, double phi);

}  // namespace etso
