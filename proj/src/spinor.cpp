#include "etso/spinor.hpp"

#include <memory>

namespace etso {

std::string OrbitalLabel::str() const {
    return std::to_string(n) + "," + std::to_string(l) + "," + std::to_string(m);
}

std::string marker_name(RadialMarker marker) {
    switch (marker) {
        case RadialMarker::psi: return "psi";
        case RadialMarker::psi_dual: return "psi-dual";
        case RadialMarker::sto: return "sto";
    }
    return "?";
}

SqrtLinear SymbolicSpinor::norm_squared() const {
    SqrtLinear sum;
    for (const auto& row : rows) sum += row.coeff.norm();
    return sum;
}

namespace {

SymbolicSpinor assemble(const SpinLabels& labels, int n, RadialMarker marker) {
    labels.validate();
    if (n < 1) throw LabelError("principal quantum number must be >= 1");
    if (labels.l >= n) throw LabelError("orbital l must be below n");
    SymbolicSpinor sp;
    sp.labels = labels;
    sp.n = n;
    sp.marker = marker;
    const int lt = labels.l_tilde();
    const ExactComplex N(normalization_N(n, lt));

    auto push = [&](const HarmonicTerm& h, bool present) {
        SpinorTerm term;
        if (present && !h.coeff.is_zero()) {
            term.coeff = h.coeff * N;
            term.orbital = {n, h.l, h.m};
        }
        sp.rows.push_back(term);
    };
    for (const auto& h : tensor_harmonic_omega(labels).components) push(h, true);
    for (const auto& h : tensor_harmonic_lambda(labels).components) push(h, lt < n);
    return sp;
}

}  // namespace

SymbolicSpinor assemble_psi(const SpinLabels& labels, int n, bool dual) {
    return assemble(labels, n, dual ? RadialMarker::psi_dual : RadialMarker::psi);
}

SymbolicSpinor assemble_chi(const SpinLabels& labels, int n) { return assemble(labels, n, RadialMarker::sto); }

SymbolicSpinor reduce_scalar(const SpinLabels& labels, int n) {
    if (labels.s.twice != 0) throw LabelError("scalar reduction needs s = 0");
    labels.validate();
    if (n < 1 || labels.l >= n) throw LabelError("need n >= 1 and l < n");
    SymbolicSpinor sp;
    sp.labels = labels;
    sp.n = n;
    const int ml = labels.m.as_int();
    const OrbitalLabel orb{n, labels.l, ml};
    const SqrtLinear c = SqrtLinear::sqrt_of(Rational(1, 2)) * SqrtLinear(phase_beta(ml));
    sp.rows.push_back({ExactComplex(c), orb});
    sp.rows.push_back({ExactComplex(SqrtLinear(), -c), orb});
    return sp;
}

std::vector<SymbolicSpinor> emit_table(HalfInt s, int n_max, RadialMarker marker) {
    if (n_max < 1) throw LabelError("n_max must be >= 1");
    std::vector<SymbolicSpinor> rows;
    for (int n = 1; n <= n_max; ++n) {
        for (int l = 0; l < n; ++l) {
            for (HalfInt j : allowed_j(s, l)) {
                for (int tm = j.twice; tm >= -j.twice; tm -= 2) {
                    rows.push_back(assemble({s, l, j, HalfInt::from_twice(tm)}, n, marker));
                }
            }
        }
    }
    return rows;
}

bool marker_matches(RadialMarker marker, const RadialFamily& family) {
    switch (marker) {
        case RadialMarker::psi: return family.kind == RadialKind::psi_alpha;
        case RadialMarker::psi_dual: return family.kind == RadialKind::psi_alpha_dual;
        case RadialMarker::sto: return family.kind == RadialKind::sto;
    }
    return false;
}

std::vector<std::complex<double>> eval_spinor(const SymbolicSpinor& sp, const RadialFamily& family, double r,
                                              double theta, double phi) {
    if (!marker_matches(sp.marker, family)) {
        throw RadialError("radial family " + family.name() + " does not match a " + marker_name(sp.marker) +
                          " spinor");
    }
    std::vector<std::complex<double>> out(sp.rows.size());
    for (std::size_t c = 0; c < sp.rows.size(); ++c) {
        const auto& term = sp.rows[c];
        if (term.is_zero()) continue;
        const auto& o = term.orbital;
        out[c] = term.coeff.to_complex() * radial_value(family, o.n, o.l, r) * scalar_harmonic(o.l, o.m, theta, phi);
    }
    return out;
}

HarmonicTable::HarmonicTable(int l_max, const AngularGrid& grid) : l_max_(l_max), points_(grid.size()) {
    if (l_max < 0) throw LabelError("l_max must be nonnegative");
    values_.resize(static_cast<std::size_t>((l_max + 1) * (l_max + 1)) * points_);
    for (int l = 0; l <= l_max; ++l) {
        for (int m = -l; m <= l; ++m) {
            auto* dst = values_.data() + static_cast<std::size_t>(l * l + l + m) * points_;
            for (int p = 0; p < points_; ++p) dst[p] = scalar_harmonic(l, m, grid.theta(p), grid.phi(p));
        }
    }
}

const std::complex<double>* HarmonicTable::row(int l, int m) const {
    if (l < 0 || l > l_max_ || std::abs(m) > l) throw LabelError("harmonic outside the table");
    return values_.data() + static_cast<std::size_t>(l * l + l + m) * points_;
}

int max_orbital_l(const std::vector<SymbolicSpinor>& set) {
    int lmax = 0;
    for (const auto& sp : set) {
        for (const auto& row : sp.rows) {
            if (!row.is_zero()) lmax = std::max(lmax, row.orbital.l);
        }
    }
    return lmax;
}

ShellSet spinor_shells(const std::vector<SymbolicSpinor>& set, const RadialFamily& family,
                       const HarmonicTable& harmonics) {
    for (const auto& sp : set) {
        if (!marker_matches(sp.marker, family)) {
            throw RadialError("radial family " + family.name() + " does not match a " + marker_name(sp.marker) +
                              " spinor");
        }
    }
    auto spinors = std::make_shared<const std::vector<SymbolicSpinor>>(set);
    ShellSet shells;
    shells.n_funcs = static_cast<int>(set.size());
    shells.sample = [spinors, family, &harmonics](double r, SampleMatrix& out) {
        const int n_comp = out.n_comp;
        const int n_points = out.n_points;
        for (int f = 0; f < out.n_funcs; ++f) {
            const auto& sp = (*spinors)[f];
            auto* dst = out.func(f);
            std::fill(dst, dst + static_cast<std::size_t>(n_points) * n_comp, std::complex<double>{});
            for (int c = 0; c < static_cast<int>(sp.rows.size()); ++c) {
                const auto& term = sp.rows[c];
                if (term.is_zero()) continue;
                const auto& o = term.orbital;
                const std::complex<double> k = term.coeff.to_complex() * radial_value(family, o.n, o.l, r);
                const auto* y = harmonics.row(o.l, o.m);
                for (int p = 0; p < n_points; ++p) dst[p * n_comp + c] = k * y[p];
            }
        }
    };
    return shells;
}

}  // namespace etso
