#pragma once

#include "etso/angular.hpp"
#include "etso/quad.hpp"
#include "etso/radial.hpp"

#include <compare>
#include <complex>
#include <string>
#include <vector>

namespace etso {

struct OrbitalLabel {
    int n = 0;
    int l = 0;
    int m = 0;

    auto operator<=>(const OrbitalLabel&) const = default;
    std::string str() const;
};

enum class RadialMarker { psi, psi_dual, sto };

std::string marker_name(RadialMarker marker);

// One component of a symbolic spinor: coeff times the orbital (n, l, m_l). A zero coeff has no orbital.
struct SpinorTerm {
    ExactComplex coeff;
    OrbitalLabel orbital;

    bool is_zero() const { return coeff.is_zero(); }
};

struct SymbolicSpinor {
    SpinLabels labels;
    int n = 1;
    RadialMarker marker = RadialMarker::psi;
    std::vector<SpinorTerm> rows;  // 2(2s+1) entries: upper block then lower block

    int upper_size() const { return labels.dim(); }
    // Sum of |coeff|^2 over all rows, exact.
    SqrtLinear norm_squared() const;
};

// Upper block R_{nl} Omega, lower block R_{n l~} Lambda, both scaled by N_{n l~}.
// Lower components vanish when l~ >= n.
SymbolicSpinor assemble_psi(const SpinLabels& labels, int n, bool dual = false);
SymbolicSpinor assemble_chi(const SpinLabels& labels, int n);

// s = 0: (1/sqrt(2)) (1, -i)^T beta_{m_l} psi_{n l m_l}
SymbolicSpinor reduce_scalar(const SpinLabels& labels, int n);

// Rows in the canonical order: ascending n, l, j, descending m.
std::vector<SymbolicSpinor> emit_table(HalfInt s, int n_max, RadialMarker marker = RadialMarker::psi);

// Radial family matching the marker.
bool marker_matches(RadialMarker marker, const RadialFamily& family);

std::vector<std::complex<double>> eval_spinor(const SymbolicSpinor& sp, const RadialFamily& family, double r,
                                              double theta, double phi);

// Scalar harmonics tabulated on an angular grid for l <= l_max.
class HarmonicTable {
public:
    HarmonicTable(int l_max, const AngularGrid& grid);

    int l_max() const { return l_max_; }
    int points() const { return points_; }
    const std::complex<double>* row(int l, int m) const;

private:
    int l_max_;
    int points_;
    std::vector<std::complex<double>> values_;
};

int max_orbital_l(const std::vector<SymbolicSpinor>& set);

// Sampler over radial shells for a set of spinors sharing s; used by gram_3d.
ShellSet spinor_shells(const std::vector<SymbolicSpinor>& set, const RadialFamily& family,
                       const HarmonicTable& harmonics);

}  // namespace etso
