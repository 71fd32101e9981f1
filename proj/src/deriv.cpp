#include "etso/deriv.hpp"

#include <cstdlib>

namespace etso {

namespace {

void check_k(int k) {
    if (k != 1 && k != -1) throw DerivError("k must be +1 or -1, got " + std::to_string(k));
}

// sqrt(num / den) with the shared out-of-range rules
SqrtLinear grad_root(int k, int l, int m, long long num) {
    if (l + k < 0 || std::abs(m) > l) return {};
    long long den = static_cast<long long>(2 * (l + 1) + k) * (2 * l + k);
    if (den == 0 || num == 0) return {};
    if (num < 0) throw DerivError("negative radicand in gradient coefficient");
    return SqrtLinear::sqrt_of(Rational(num, den));
}

}  // namespace

SqrtLinear grad_coeff_b(int k, int l, int m) {
    check_k(k);
    const int d = k == 1 ? 1 : 0;
    return grad_root(k, l, m, static_cast<long long>(l + m + d) * (l - m + d));
}

SqrtLinear grad_coeff_c(int k, int l, int m) {
    check_k(k);
    const int d = k == 1 ? 1 : 0;
    return SqrtLinear(k) * grad_root(k, l, m, static_cast<long long>(l + k * m + 2 * d) * (l + k * (m + 1)));
}

SqrtLinear grad_coeff_d(int k, int l, int m) {
    check_k(k);
    const int d = k == 1 ? 1 : 0;
    return SqrtLinear(-k) * grad_root(k, l, m, static_cast<long long>(l - k * m + 2 * d) * (l - k * (m - 1)));
}

std::vector<DerivTerm> apply_cartesian_derivative(GradAxis axis, int l, int m) {
    if (l < 0 || std::abs(m) > l) throw LabelError("harmonic label out of range");
    std::vector<DerivTerm> out;
    for (int k : {1, -1}) {
        DerivTerm t;
        t.k = k;
        t.bracket = (k == -1 ? 1 : 0) - k * l;
        t.l = l + k;
        switch (axis) {
            case GradAxis::z:
                t.coeff = grad_coeff_b(k, l, m);
                t.m = m;
                break;
            case GradAxis::plus:
                t.coeff = grad_coeff_c(k, l, m);
                t.m = m + 1;
                break;
            case GradAxis::minus:
                t.coeff = grad_coeff_d(k, l, m);
                t.m = m - 1;
                break;
        }
        out.push_back(t);
    }
    return out;
}

std::complex<double> eval_derivative_expansion(const std::vector<DerivTerm>& terms, double f, double df, double r,
                                               double theta, double phi) {
    std::complex<double> sum = 0;
    for (const auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        double radial = df + t.bracket * f / r;
        sum += radial * t.coeff.to_double() * static_cast<double>(phase_beta(t.m)) *
               scalar_harmonic(t.l, t.m, theta, phi);
    }
    return sum;
}

namespace {

void check_lambda(const SpinLabels& labels, int lambda) {
    if (lambda < 0 || lambda > labels.s.twice - 1 || lambda % 2 != 0) {
        throw LabelError("pair index lambda must be one of 0, 2, ..., 2s-1; got " + std::to_string(lambda));
    }
}

// integer m(lambda); the pair labels always make it integral
int m_int(const SpinLabels& labels, int lambda) { return labels.m_of(lambda).as_int(); }

}  // namespace

CouplingCoeffs coupling_coeffs(int k, const SpinLabels& labels, int lambda) {
    check_k(k);
    labels.validate();
    check_lambda(labels, lambda);
    const int l = labels.l, lt = labels.l_tilde(), ts = labels.s.twice;
    const int m0 = m_int(labels, lambda), m1 = m_int(labels, lambda + 1);
    const SqrtLinear a0 = modified_cg(labels, lambda), a1 = modified_cg(labels, lambda + 1);
    const SqrtLinear at0 = modified_cg(labels, ts - lambda, lt), at1 = modified_cg(labels, ts - (lambda + 1), lt);
    CouplingCoeffs c;
    c.A = a0 * grad_coeff_b(k, l, m0) - a1 * grad_coeff_d(k, l, m1);
    c.B = a1 * grad_coeff_b(k, l, m1) + a0 * grad_coeff_c(k, l, m0);
    c.C = at1 * grad_coeff_d(k, lt, m1) + at0 * grad_coeff_b(k, lt, m0);
    c.D = at0 * grad_coeff_c(k, lt, m0) - at1 * grad_coeff_b(k, lt, m1);
    return c;
}

ShiftedHarmonics shifted_harmonics(int k, const SpinLabels& labels, int lambda) {
    const CouplingCoeffs c = coupling_coeffs(k, labels, lambda);
    const int eta = labels.eta();
    const int m0 = m_int(labels, lambda), m1 = m_int(labels, lambda + 1);
    const int deg = labels.l + k;
    auto term = [&](ExactComplex coeff, int m) {
        HarmonicTerm h;
        h.l = deg;
        h.m = m;
        if (deg >= 0 && std::abs(m) <= deg) h.coeff = coeff * ExactComplex(SqrtLinear(phase_beta(m)));
        return h;
    };
    const ExactComplex minus_i(SqrtLinear(), SqrtLinear(-1));
    ShiftedHarmonics out;
    out.omega = {term(ExactComplex(c.A * SqrtLinear(eta)), m0), term(ExactComplex(c.B * SqrtLinear(-eta)), m1)};
    out.lambda = {term(minus_i * ExactComplex(c.C), m1), term(minus_i * ExactComplex(c.D), m0)};
    return out;
}

TwoSpinor stored_pair(Block block, const SpinLabels& labels, int lambda) {
    check_lambda(labels, lambda);
    if (block == Block::upper) {
        const auto h = tensor_harmonic_omega(labels);
        return {h.components[lambda], h.components[lambda + 1]};
    }
    // Lambda components run lambda' = 2s..0, so pair (2s-lambda, 2s-lambda-1) sits at positions lambda, lambda+1.
    const auto h = tensor_harmonic_lambda(labels);
    return {h.components[lambda], h.components[lambda + 1]};
}

TwoSpinor to_physical(Block block, const TwoSpinor& stored) {
    if (block == Block::upper) return stored;
    HarmonicTerm up = stored[1];
    up.coeff = -up.coeff;
    return {up, stored[0]};
}

TwoSpinor from_physical(Block block, const TwoSpinor& physical) {
    if (block == Block::upper) return physical;
    HarmonicTerm bottom = physical[0];
    bottom.coeff = -bottom.coeff;
    return {physical[1], bottom};
}

SigmaPExpansion sigma_p_apply(Block block, const SpinLabels& labels, int lambda) {
    labels.validate();
    check_lambda(labels, lambda);
    SigmaPExpansion e;
    e.source = block;
    e.target = block == Block::upper ? Block::lower : Block::upper;
    e.labels = labels;
    e.lambda = lambda;
    e.target_lambda = labels.s.twice - 1 - lambda;

    const TwoSpinor in = to_physical(block, stored_pair(block, labels, lambda));
    const int l = block == Block::upper ? labels.l : labels.l_tilde();
    e.orbital = l;
    // physical components: u beta Y_{l,m1} (up), v beta Y_{l,m1+1} (down); coefficients exclude beta
    const int m1 = in[0].m;
    if (in[1].m != m1 + 1) throw LabelError("two-spinor projections are not consecutive");
    const ExactComplex u = in[0].coeff * ExactComplex(SqrtLinear(phase_beta(m1)));
    const ExactComplex v = in[1].coeff * ExactComplex(SqrtLinear(phase_beta(m1 + 1)));
    const ExactComplex minus_i(SqrtLinear(), SqrtLinear(-1));

    for (int k : {1, -1}) {
        SigmaPTerm t;
        t.k = k;
        t.bracket = (k == -1 ? 1 : 0) - k * l;
        // sigma . grad: up' = d_z up + (d_x - i d_y) down, down' = (d_x + i d_y) up - d_z down
        const auto b1 = grad_coeff_b(k, l, m1), b2 = grad_coeff_b(k, l, m1 + 1);
        const auto c1 = grad_coeff_c(k, l, m1), d2 = grad_coeff_d(k, l, m1 + 1);
        ExactComplex up = u * ExactComplex(b1) + v * ExactComplex(d2);
        ExactComplex down = u * ExactComplex(c1) - v * ExactComplex(b2);
        up = minus_i * up;
        down = minus_i * down;
        TwoSpinor phys;
        phys[0].l = phys[1].l = l + k;
        phys[0].m = m1;
        phys[1].m = m1 + 1;
        const int deg = l + k;
        if (deg >= 0 && std::abs(m1) <= deg) phys[0].coeff = up * ExactComplex(SqrtLinear(phase_beta(m1)));
        if (deg >= 0 && std::abs(m1 + 1) <= deg) phys[1].coeff = down * ExactComplex(SqrtLinear(phase_beta(m1 + 1)));
        t.spinor = from_physical(e.target, phys);
        e.terms.push_back(t);
    }
    return e;
}

std::array<std::complex<double>, 2> eval_two_spinor(const TwoSpinor& sp, double theta, double phi) {
    std::array<std::complex<double>, 2> out{};
    for (int c = 0; c < 2; ++c) {
        if (sp[c].coeff.is_zero()) continue;
        out[c] = sp[c].coeff.to_complex() * scalar_harmonic(sp[c].l, sp[c].m, theta, phi);
    }
    return out;
}

std::array<std::complex<double>, 2> eval_sigma_p(const SigmaPExpansion& e, double f, double df, double r,
                                                 double theta, double phi) {
    std::array<std::complex<double>, 2> out{};
    for (const auto& t : e.terms) {
        const auto v = eval_two_spinor(to_physical(e.target, t.spinor), theta, phi);
        const double radial = df + t.bracket * f / r;
        out[0] += radial * v[0];
        out[1] += radial * v[1];
    }
    return out;
}

std::vector<CouplingRow> emit_coupling_table(HalfInt s, int l_max) {
    if (s.twice < 1 || s.is_integer()) throw LabelError("coupling tables need half-odd s");
    if (l_max < 0) throw LabelError("l_max must be nonnegative");
    std::vector<CouplingRow> rows;
    for (int lambda = 0; lambda <= s.twice - 1; lambda += 2) {
        for (int l = 0; l <= l_max; ++l) {
            for (HalfInt j : allowed_j(s, l)) {
                for (int tm = j.twice; tm >= -j.twice; tm -= 2) {
                    CouplingRow row;
                    row.labels = {s, l, j, HalfInt::from_twice(tm)};
                    row.lambda = lambda;
                    row.plus = coupling_coeffs(1, row.labels, lambda);
                    row.minus = coupling_coeffs(-1, row.labels, lambda);
                    rows.push_back(row);
                }
            }
        }
    }
    return rows;
}

}  // namespace etso
