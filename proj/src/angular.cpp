#include "etso/angular.hpp"

#include <cmath>
#include <cstdlib>

namespace etso {

namespace {

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Half-integer combination that must be a nonnegative integer for a valid coupling.
bool to_count(int twice, int& out) {
    if (twice < 0 || twice % 2 != 0) return false;
    out = twice / 2;
    return true;
}

void check_projection(HalfInt j, HalfInt m, const char* name) {
    if (j.twice < 0) throw LabelError(std::string(name) + " must be nonnegative");
    if ((j.twice - m.twice) % 2 != 0) {
        throw LabelError(std::string(name) + " = " + j.str() + " and its projection " + m.str() +
                         " differ by a non-integer");
    }
}

}  // namespace

SqrtLinear clebsch_gordan_general(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M) {
    check_projection(j1, m1, "j1");
    check_projection(j2, m2, "j2");
    check_projection(J, M, "J");
    if ((j1.twice + j2.twice + J.twice) % 2 != 0) {
        throw LabelError("j1 + j2 + J must be an integer");
    }
    if (m1 + m2 != M) return {};
    if (std::abs(m1.twice) > j1.twice || std::abs(m2.twice) > j2.twice || std::abs(M.twice) > J.twice) {
        return {};
    }
    int a, b, c;
    if (!to_count(j1.twice + j2.twice - J.twice, a) || !to_count(j1.twice - j2.twice + J.twice, b) ||
        !to_count(-j1.twice + j2.twice + J.twice, c)) {
        return {};
    }
    const int jm1 = (j1.twice - m1.twice) / 2, jp1 = (j1.twice + m1.twice) / 2;
    const int jm2 = (j2.twice - m2.twice) / 2, jp2 = (j2.twice + m2.twice) / 2;
    const int Jm = (J.twice - M.twice) / 2, Jp = (J.twice + M.twice) / 2;
    const int big = (j1.twice + j2.twice + J.twice) / 2 + 1;

    BigInt pnum = BigInt(J.twice + 1) * factorial(a) * factorial(b) * factorial(c) * factorial(Jp) *
                  factorial(Jm) * factorial(jm1) * factorial(jp1) * factorial(jm2) * factorial(jp2);
    BigInt pden = factorial(big);

    // k runs where every factorial argument is nonnegative
    const int e1 = (J.twice - j2.twice + m1.twice) / 2;
    const int e2 = (J.twice - j1.twice - m2.twice) / 2;
    int kmin = std::max({0, -e1, -e2});
    int kmax = std::min({a, jm1, jp2});
    Rational sum = 0;
    for (int k = kmin; k <= kmax; ++k) {
        BigInt den = factorial(k) * factorial(a - k) * factorial(jm1 - k) * factorial(jp2 - k) *
                     factorial(e1 + k) * factorial(e2 + k);
        Rational t(BigInt(1), den);
        sum += (k % 2 == 0) ? t : Rational(-t);
    }
    if (sum == 0) return {};
    return SqrtLinear(sum) * SqrtLinear::sqrt_of(Rational(pnum, pden));
}

SqrtLinear clebsch_gordan(int l, HalfInt s, HalfInt m_l, HalfInt m_s, HalfInt j, HalfInt m) {
    if (l < 0) throw LabelError("orbital l must be nonnegative");
    return clebsch_gordan_general(HalfInt::from_int(l), m_l, s, m_s, j, m);
}

void SpinLabels::validate() const {
    if (s.twice < 0) throw LabelError("spin must be nonnegative");
    if (s.twice != 0 && s.is_integer()) throw LabelError("spin must be 0 or half-odd: " + s.str());
    if (l < 0) throw LabelError("orbital l must be nonnegative");
    if ((j.twice - m.twice) % 2 != 0 || std::abs(m.twice) > j.twice) {
        throw LabelError("projection " + m.str() + " is not admissible for j = " + j.str());
    }
    if (s.twice == 0) {
        if (j.twice != 2 * l) throw LabelError("spin 0 requires j = l");
        return;
    }
    int tt = t();
    if (tt % 2 == 0 || std::abs(tt) > s.twice) {
        throw LabelError("t = 2(j-l) = " + std::to_string(tt) + " is not in +-1, +-3, ..., +-2s");
    }
    if (j < s) throw LabelError("j = " + j.str() + " is below s = " + s.str());
}

std::vector<HalfInt> allowed_j(HalfInt s, int l) {
    std::vector<HalfInt> out;
    if (s.twice == 0) {
        out.push_back(HalfInt::from_int(l));
        return out;
    }
    for (int t = -s.twice; t <= s.twice; t += 2) {
        if (t == 0) continue;
        HalfInt j = HalfInt::from_twice(2 * l + t);
        if (j >= s) out.push_back(j);
    }
    return out;
}

SqrtLinear modified_cg(const SpinLabels& labels, int lambda, int orbital) {
    if (lambda < 0 || lambda > labels.s.twice) {
        throw LabelError("component index lambda out of range: " + std::to_string(lambda));
    }
    if (orbital < 0) return {};
    return clebsch_gordan(orbital, labels.s, labels.m_of(lambda), labels.s - lambda, labels.j, labels.m);
}

int phase_beta(HalfInt m) {
    if (m.twice >= 0) return 1;
    if (!m.is_integer()) throw LabelError("phase beta needs an integer projection for m < 0");
    return (m.as_int() % 2 == 0) ? 1 : -1;
}

std::complex<double> scalar_harmonic(int l, int m, double theta, double phi) {
    if (l < 0 || std::abs(m) > l) return {0.0, 0.0};
    const unsigned am = static_cast<unsigned>(std::abs(m));
    // std::sph_legendre carries the Condon-Shortley sign; remove it so Y_{l,-m} = conj(Y_lm).
    double p = std::sph_legendre(static_cast<unsigned>(l), am, theta);
    if (am % 2 == 1) p = -p;
    return std::polar(p, m * phi);
}

TensorHarmonic tensor_harmonic_omega(const SpinLabels& labels) {
    labels.validate();
    TensorHarmonic h;
    h.block = Block::upper;
    h.labels = labels;
    const int eta = labels.eta();
    for (int lambda = 0; lambda < labels.dim(); ++lambda) {
        HalfInt ml = labels.m_of(lambda);
        HarmonicTerm term;
        term.l = labels.l;
        term.m = ml.as_int();
        SqrtLinear a = modified_cg(labels, lambda);
        if (!a.is_zero()) {
            int sign = (lambda % 2 == 0) ? eta : -eta;
            term.coeff = ExactComplex(a * SqrtLinear(sign * phase_beta(ml)));
        }
        h.components.push_back(term);
    }
    return h;
}

TensorHarmonic tensor_harmonic_lambda(const SpinLabels& labels) {
    labels.validate();
    TensorHarmonic h;
    h.block = Block::lower;
    h.labels = labels;
    const int lt = labels.l_tilde();
    for (int lambda = labels.dim() - 1; lambda >= 0; --lambda) {
        HalfInt ml = labels.m_of(lambda);
        HarmonicTerm term;
        term.l = lt;
        term.m = ml.as_int();
        SqrtLinear a = modified_cg(labels, lambda, lt);
        if (!a.is_zero()) {
            term.coeff = ExactComplex(SqrtLinear(), -(a * SqrtLinear(phase_beta(ml))));
        }
        h.components.push_back(term);
    }
    return h;
}

std::vector<std::complex<double>> eval_tensor_harmonic(const TensorHarmonic& h, double theta, double phi) {
    std::vector<std::complex<double>> out(h.components.size());
    for (std::size_t c = 0; c < h.components.size(); ++c) {
        const auto& term = h.components[c];
        if (term.coeff.is_zero()) continue;
        out[c] = term.coeff.to_complex() * scalar_harmonic(term.l, term.m, theta, phi);
    }
    return out;
}

}  // namespace etso
