#include "etso/verify.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

namespace etso {

std::string CheckResult::str() const {
    char buf[96];
    if (tolerance > 0) {
        std::snprintf(buf, sizeof buf, " worst=%.3g tol=%.0e", worst, tolerance);
    } else if (informational) {
        buf[0] = '\0';
    } else {
        std::snprintf(buf, sizeof buf, " exact");
    }
    std::string tag = informational ? "INFO" : (pass ? "PASS" : "FAIL");
    std::string out = tag + "  " + name + buf;
    if (!detail.empty()) out += "  " + detail;
    return out;
}

bool SuiteReport::pass() const {
    for (const auto& c : checks) {
        if (!c.informational && !c.pass) return false;
    }
    return true;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"tables",   "orthonormality", "gradients", "sigma-p",
                                                "overlap",  "scalar",         "rownorm"};
    return names;
}

std::array<std::complex<double>, 3> fd_gradient(const CartesianField& f, double x, double y, double z, double h) {
    return {(f(x + h, y, z) - f(x - h, y, z)) / (2 * h), (f(x, y + h, z) - f(x, y - h, z)) / (2 * h),
            (f(x, y, z + h) - f(x, y, z - h)) / (2 * h)};
}

namespace {

struct Point {
    double x, y, z, r, theta, phi;
};

void spherical(double x, double y, double z, double& r, double& theta, double& phi) {
    r = std::sqrt(x * x + y * y + z * z);
    theta = std::acos(std::clamp(z / r, -1.0, 1.0));
    phi = std::atan2(y, x);
}

std::vector<Point> random_points(int n, unsigned seed) {
    std::mt19937 gen(seed);
    std::uniform_real_distribution<double> ur(0.4, 4.0), uc(-0.95, 0.95), up(0.0, 2 * std::numbers::pi);
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) {
        Point p;
        p.r = ur(gen);
        double ct = uc(gen);
        p.theta = std::acos(ct);
        p.phi = up(gen);
        p.x = p.r * std::sin(p.theta) * std::cos(p.phi);
        p.y = p.r * std::sin(p.theta) * std::sin(p.phi);
        p.z = p.r * ct;
        pts.push_back(p);
    }
    return pts;
}

std::vector<HalfInt> spins(const VerifyOptions& opts, std::vector<HalfInt> defaults) {
    if (opts.s) return {*opts.s};
    return defaults;
}

HalfInt h(int twice) { return HalfInt::from_twice(twice); }

// Track the worst relative deviation with the floor used throughout.
struct Worst {
    double value = 0;
    std::string where;
    void add(std::complex<double> got, std::complex<double> want, double floor, const std::string& label) {
        double d = std::abs(got - want) / std::max(std::abs(want), floor);
        if (d > value || (std::isnan(d) && !std::isnan(value))) {
            value = d;
            where = label;
        }
    }
};

CheckResult tolerance_check(const std::string& name, double worst, double tol, const std::string& where) {
    CheckResult c;
    c.name = name;
    c.worst = worst;
    c.tolerance = tol;
    c.pass = worst <= tol;
    if (!c.pass && !where.empty()) c.detail = "at " + where;
    return c;
}

CheckResult exact_check(const std::string& name, int failures, int total, const std::string& first_failure) {
    CheckResult c;
    c.name = name;
    c.pass = failures == 0;
    c.detail = std::to_string(total - failures) + "/" + std::to_string(total) + " hold";
    if (failures) c.detail += "; first failure " + first_failure;
    return c;
}

std::string label_str(const SpinLabels& L) {
    return "s=" + L.s.str() + " l=" + std::to_string(L.l) + " j=" + L.j.str() + " m=" + L.m.str();
}

double identity_deviation(const ComplexMatrix& g, const std::vector<std::complex<double>>* diag = nullptr) {
    double worst = 0;
    for (int i = 0; i < g.rows; ++i) {
        for (int j = 0; j < g.cols; ++j) {
            std::complex<double> want = i == j ? (diag ? (*diag)[i] : 1.0) : 0.0;
            worst = std::max(worst, std::abs(g(i, j) - want));
        }
    }
    return worst;
}

}  // namespace

// ----------------------------------------------------------------- tables

SuiteReport verify_tables(const VerifyOptions& opts) {
    SuiteReport rep;
    rep.suite = "tables";
    const std::string dir = opts.data_dir.empty() ? default_data_dir() : opts.data_dir;
    std::optional<Allowlist> allow;
    if (opts.allowlist) allow = load_allowlist(*opts.allowlist);
    int parseable = 0, matched = 0;
    for (const auto& name : printed_table_names()) {
        auto cells = load_printed_table(dir + "/" + name + ".tsv");
        TableDiff d = diff_printed_table(name, cells, allow ? &*allow : nullptr);
        for (const auto& line : d.lines) rep.details.push_back(line.str());
        CheckResult c;
        c.name = name + " mismatches documented";
        c.pass = d.undocumented == 0 && d.unparseable == 0;
        c.detail = std::to_string(d.matched) + "/" + std::to_string(d.parseable) + " match, " +
                   std::to_string(d.documented) + " documented, " + std::to_string(d.undocumented) +
                   " undocumented, " + std::to_string(d.unparseable) + " unparseable";
        rep.checks.push_back(c);
        parseable += d.parseable;
        matched += d.matched;
        rep.tables.push_back(std::move(d));
    }
    CheckResult rate;
    rate.name = "overall match rate";
    rate.informational = true;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%d/%d = %.2f%%", matched, parseable, parseable ? 100.0 * matched / parseable : 0.0);
    rate.detail = buf;
    rep.checks.push_back(rate);
    return rep;
}

// ----------------------------------------------------------------- orthonormality

namespace {

// All harmonics of one block with l <= l_max and l~ <= l_max.
std::vector<TensorHarmonic> harmonic_set(HalfInt s, Block block, int l_max) {
    std::vector<TensorHarmonic> out;
    for (int l = 0; l <= l_max; ++l) {
        for (HalfInt j : allowed_j(s, l)) {
            for (int tm = j.twice; tm >= -j.twice; tm -= 2) {
                SpinLabels L{s, l, j, h(tm)};
                if (L.l_tilde() > l_max) continue;
                out.push_back(block == Block::upper ? tensor_harmonic_omega(L) : tensor_harmonic_lambda(L));
            }
        }
    }
    return out;
}

SampleMatrix sample_harmonics(const std::vector<TensorHarmonic>& set, const HarmonicTable& table) {
    const int n_comp = set.empty() ? 1 : static_cast<int>(set.front().components.size());
    SampleMatrix sm(static_cast<int>(set.size()), table.points(), n_comp);
    for (int f = 0; f < sm.n_funcs; ++f) {
        auto* dst = sm.func(f);
        for (int c = 0; c < n_comp; ++c) {
            const auto& term = set[f].components[c];
            if (term.coeff.is_zero()) continue;
            const auto k = term.coeff.to_complex();
            const auto* y = table.row(term.l, term.m);
            for (int p = 0; p < sm.n_points; ++p) dst[p * n_comp + c] = k * y[p];
        }
    }
    return sm;
}

}  // namespace

SuiteReport verify_orthonormality(const VerifyOptions& opts) {
    SuiteReport rep;
    rep.suite = "orthonormality";
    const GridSpec grid = opts.grid.value_or(GridSpec{});
    grid.validate();
    const AngularGrid ang(grid);
    const int l_max = 4;
    const HarmonicTable table(l_max, ang);
    for (HalfInt s : spins(opts, {h(1), h(3)})) {
        for (Block block : {Block::upper, Block::lower}) {
            auto set = harmonic_set(s, block, l_max);
            auto sm = sample_harmonics(set, table);
            auto g = gram(sm, sm, ang.weights(), opts.exec);
            std::string name = std::string(block == Block::upper ? "Omega" : "Lambda") + " s=" + s.str() +
                               " l,l~<=4 (" + std::to_string(set.size()) + " harmonics)";
            rep.checks.push_back(tolerance_check(name, identity_deviation(g), 1e-10, ""));
        }
    }

    // Biorthonormality of the dual and primal spinors.
    const HalfInt s = opts.s.value_or(h(1));
    std::vector<int> alphas = opts.alpha ? std::vector<int>{*opts.alpha} : std::vector<int>{1, 0, -1};
    const RadialGrid rad(grid.n_r, 2 * opts.zeta);
    for (int alpha : alphas) {
        auto primal = emit_table(s, 3, RadialMarker::psi);
        auto dual = emit_table(s, 3, RadialMarker::psi_dual);
        RadialFamily fp{RadialKind::psi_alpha, alpha, opts.zeta};
        RadialFamily fd{RadialKind::psi_alpha_dual, alpha, opts.zeta};
        fp.validate();
        HarmonicTable spin_table(max_orbital_l(primal), ang);
        const int n_comp = 2 * (s.twice + 1);
        auto g = gram_3d(spinor_shells(dual, fd, spin_table), spinor_shells(primal, fp, spin_table), n_comp, ang, rad,
                         opts.exec);
        std::string name = "biorthonormality s=" + s.str() + " alpha=" + std::to_string(alpha) + " n<=3 (" +
                           std::to_string(primal.size()) + " spinors)";
        rep.checks.push_back(tolerance_check(name, identity_deviation(g), 1e-9, ""));
    }
    return rep;
}

// ----------------------------------------------------------------- gradients

namespace {

struct HarmonicField : CartesianField {
    int l, m;
    std::function<double(double)> f;
    std::complex<double> operator()(double x, double y, double z) const override {
        double r, th, ph;
        spherical(x, y, z, r, th, ph);
        return f(r) * static_cast<double>(phase_beta(m)) * scalar_harmonic(l, m, th, ph);
    }
};

struct RadialPair {
    std::string name;
    std::function<double(double)> f, df;
};

std::vector<RadialPair> test_radials(int l) {
    return {{"exp(-r)", [](double r) { return std::exp(-r); }, [](double r) { return -std::exp(-r); }},
            {"psi alpha=1 n=" + std::to_string(l + 2),
             [l](double r) { return psi_alpha_radial(1, l + 2, l, 1.2, r); },
             [l](double r) { return psi_alpha_radial_derivative(1, l + 2, l, 1.2, r); }}};
}

}  // namespace

SuiteReport verify_gradients(const VerifyOptions& opts) {
    SuiteReport rep;
    rep.suite = "gradients";
    const auto pts = random_points(opts.points, opts.seed);
    Worst worst;
    for (int l = 0; l <= 3; ++l) {
        for (int m = -l; m <= l; ++m) {
            const auto ez = apply_cartesian_derivative(GradAxis::z, l, m);
            const auto ep = apply_cartesian_derivative(GradAxis::plus, l, m);
            const auto em = apply_cartesian_derivative(GradAxis::minus, l, m);
            for (const auto& rp : test_radials(l)) {
                HarmonicField field;
                field.l = l;
                field.m = m;
                field.f = rp.f;
                for (const auto& p : pts) {
                    auto g = fd_gradient(field, p.x, p.y, p.z);
                    const std::complex<double> I(0, 1);
                    const double f = rp.f(p.r), df = rp.df(p.r);
                    std::string where = "l=" + std::to_string(l) + " m=" + std::to_string(m) + " f=" + rp.name;
                    worst.add(g[2], eval_derivative_expansion(ez, f, df, p.r, p.theta, p.phi), 1e-3, where + " d/dz");
                    worst.add(g[0] + I * g[1], eval_derivative_expansion(ep, f, df, p.r, p.theta, p.phi), 1e-3,
                              where + " d/dx+i d/dy");
                    worst.add(g[0] - I * g[1], eval_derivative_expansion(em, f, df, p.r, p.theta, p.phi), 1e-3,
                              where + " d/dx-i d/dy");
                }
            }
        }
    }
    rep.checks.push_back(tolerance_check("Cartesian derivative expansions vs central differences, l<=3, " +
                                             std::to_string(opts.points) + " points",
                                         worst.value, 1e-6, worst.where));

    int fails = 0, total = 0;
    std::string first;
    for (int l = 0; l <= 5; ++l) {
        for (int m = -l; m <= l; ++m) {
            for (int k : {1, -1}) {
                ++total;
                if (!(grad_coeff_c(k, l, m) == -grad_coeff_d(k, l, -m))) {
                    if (!fails++) first = "k=" + std::to_string(k) + " l=" + std::to_string(l) + " m=" + std::to_string(m);
                }
            }
        }
    }
    rep.checks.push_back(exact_check("c_k^{lm} = -d_k^{l,-m}, l<=5", fails, total, first));
    return rep;
}

// ----------------------------------------------------------------- sigma . p

namespace {

struct SpinorComponentField : CartesianField {
    const TwoSpinor* spinor;
    int component;
    std::function<double(double)> f;
    std::complex<double> operator()(double x, double y, double z) const override {
        double r, th, ph;
        spherical(x, y, z, r, th, ph);
        return f(r) * eval_two_spinor(*spinor, th, ph)[component];
    }
};

bool same_term(const HarmonicTerm& a, const HarmonicTerm& b) {
    if (!(a.coeff == b.coeff)) return false;
    return a.coeff.is_zero() || (a.l == b.l && a.m == b.m);
}

bool same_spinor(const TwoSpinor& a, const TwoSpinor& b) { return same_term(a[0], b[0]) && same_term(a[1], b[1]); }

TwoSpinor negated(TwoSpinor t) {
    t[0].coeff = -t[0].coeff;
    t[1].coeff = -t[1].coeff;
    return t;
}

HarmonicTerm masked(ExactComplex coeff, int l, int m) {
    HarmonicTerm t;
    t.l = l;
    t.m = m;
    if (l >= 0 && std::abs(m) <= l) t.coeff = coeff * ExactComplex(SqrtLinear(phase_beta(m)));
    return t;
}

// Expected result from the closed-form A/B coefficients.
TwoSpinor closed_form(const SigmaPExpansion& e, int k) {
    const SpinLabels& L = e.labels;
    const ExactComplex I = ExactComplex::i();
    if (e.source == Block::upper) {
        const CouplingCoeffs c = coupling_coeffs(k, L, e.lambda);
        const ExactComplex eta(SqrtLinear(L.eta()));
        const int m0 = L.m_of(e.lambda).as_int();
        // stored Lambda pair: (-i eta B Y_{m(lambda+1)}, i eta A Y_{m(lambda)})
        return {masked(-(I * eta * ExactComplex(c.B)), L.l + k, m0 + 1),
                masked(I * eta * ExactComplex(c.A), L.l + k, m0)};
    }
    const int mu = e.target_lambda;
    const SqrtLinear a0 = modified_cg(L, mu, L.l_tilde()), a1 = modified_cg(L, mu + 1, L.l_tilde());
    const int lt = L.l_tilde();
    const int m0 = L.m_of(mu).as_int();
    const SqrtLinear A = a0 * grad_coeff_b(k, lt, m0) - a1 * grad_coeff_d(k, lt, m0 + 1);
    const SqrtLinear B = a1 * grad_coeff_b(k, lt, m0 + 1) + a0 * grad_coeff_c(k, lt, m0);
    return {masked(ExactComplex(A), lt + k, m0), masked(ExactComplex(B), lt + k, m0 + 1)};
}

std::vector<SpinLabels> coupling_labels(HalfInt s, int l_max) {
    std::vector<SpinLabels> out;
    for (int l = 0; l <= l_max; ++l) {
        for (HalfInt j : allowed_j(s, l)) {
            for (int tm = j.twice; tm >= -j.twice; tm -= 2) out.push_back({s, l, j, h(tm)});
        }
    }
    return out;
}

}  // namespace

SuiteReport verify_sigma_p(const VerifyOptions& opts) {
    SuiteReport rep;
    rep.suite = "sigma-p";
    const int n_points = std::max(1, std::min(opts.points, 20));
    const auto pts = random_points(n_points, opts.seed + 1);
    const std::complex<double> I(0, 1);

    for (HalfInt s : spins(opts, {h(1), h(3)})) {
        Worst worst;
        int cf_fail = 0, cf_total = 0;
        std::string cf_first;
        int lit_match = 0, lit_total = 0;
        for (const auto& L : coupling_labels(s, 3)) {
            for (int lambda = 0; lambda <= s.twice - 1; lambda += 2) {
                for (Block block : {Block::upper, Block::lower}) {
                    const SigmaPExpansion e = sigma_p_apply(block, L, lambda);
                    const TwoSpinor phys = to_physical(block, stored_pair(block, L, lambda));
                    const int orb = e.orbital;
                    auto f = [orb](double r) { return psi_alpha_radial(1, orb + 2, orb, 1.1, r); };
                    auto df = [orb](double r) { return psi_alpha_radial_derivative(1, orb + 2, orb, 1.1, r); };
                    SpinorComponentField up, down;
                    up.spinor = down.spinor = &phys;
                    up.component = 0;
                    down.component = 1;
                    up.f = down.f = f;
                    const std::string where = label_str(L) + " lambda=" + std::to_string(lambda) +
                                              (block == Block::upper ? " upper" : " lower");
                    for (const auto& p : pts) {
                        auto gu = fd_gradient(up, p.x, p.y, p.z);
                        auto gd = fd_gradient(down, p.x, p.y, p.z);
                        // c sigma.p = -i sigma.grad
                        std::complex<double> ru = -I * (gu[2] + gd[0] - I * gd[1]);
                        std::complex<double> rd = -I * (gu[0] + I * gu[1] - gd[2]);
                        auto want = eval_sigma_p(e, f(p.r), df(p.r), p.r, p.theta, p.phi);
                        worst.add(ru, want[0], 1e-3, where);
                        worst.add(rd, want[1], 1e-3, where);
                    }
                    for (const auto& t : e.terms) {
                        ++cf_total;
                        if (!same_spinor(t.spinor, closed_form(e, t.k))) {
                            if (!cf_fail++) cf_first = where + " k=" + std::to_string(t.k);
                        }
                        const bool nonzero = !t.spinor[0].coeff.is_zero() || !t.spinor[1].coeff.is_zero();
                        if (block == Block::upper && nonzero) {
                            ++lit_total;
                            if (same_spinor(t.spinor, shifted_harmonics(t.k, L, lambda).lambda)) ++lit_match;
                        }
                    }
                }
            }
        }
        rep.checks.push_back(tolerance_check("sigma.p expansion vs finite-difference sigma.p, s=" + s.str() +
                                                 ", l<=3, both blocks",
                                             worst.value, 1e-6, worst.where));
        rep.checks.push_back(exact_check("sigma.p result equals the A/B closed forms, s=" + s.str(), cf_fail,
                                         cf_total, cf_first));
        CheckResult lit;
        lit.name = "printed C/D shifted spinor equals the sigma.p result, s=" + s.str();
        lit.informational = true;
        lit.detail = std::to_string(lit_match) + "/" + std::to_string(lit_total) + " nonzero terms agree";
        rep.checks.push_back(lit);
    }

    // s = 1/2 collapse to a single term with kappa.
    if (!opts.s || *opts.s == h(1)) {
        int fails = 0, total = 0;
        std::string first;
        for (const auto& L : coupling_labels(h(1), 3)) {
            const int t = L.t(), kappa = L.kappa();
            for (Block block : {Block::upper, Block::lower}) {
                ++total;
                const SigmaPExpansion e = sigma_p_apply(block, L, 0);
                const int k_keep = block == Block::upper ? t : -t;
                const int bracket = block == Block::upper ? 1 - kappa : 1 + kappa;
                // The identities hold for the eta-free Omega, eta_t Omega.
                TwoSpinor want = block == Block::upper ? stored_pair(Block::lower, L, 0)
                                                       : negated(stored_pair(Block::upper, L, 0));
                if (L.eta() < 0) want = negated(want);
                bool ok = e.target_lambda == 0;
                for (const auto& term : e.terms) {
                    if (term.k == k_keep) {
                        ok = ok && term.bracket == bracket && same_spinor(term.spinor, want);
                    } else {
                        ok = ok && term.spinor[0].coeff.is_zero() && term.spinor[1].coeff.is_zero();
                    }
                }
                bool kappa_ok = kappa == (t == 1 ? L.l + 1 : -L.l);
                if (!(ok && kappa_ok) && !fails++) first = label_str(L) + (block == Block::upper ? " upper" : " lower");
            }
        }
        rep.checks.push_back(exact_check("s=1/2 collapse: eta_t[R'+(1-kappa)R/r] Lambda and -eta_t[R'+(1+kappa)R/r] Omega",
                                         fails, total, first));
    }
    return rep;
}

// ----------------------------------------------------------------- overlap

namespace {

double slater_overlap(int n, int np) {
    return std::exp(std::lgamma(n + np + 1.0) - 0.5 * (std::lgamma(2 * n + 1.0) + std::lgamma(2 * np + 1.0)));
}

}  // namespace

SuiteReport verify_overlap(const VerifyOptions& opts) {
    SuiteReport rep;
    rep.suite = "overlap";
    const GridSpec grid = opts.grid.value_or(GridSpec{24, 24, 64});
    grid.validate();
    const int n_max = 6;

    const RadialGrid rad(grid.n_r, 2 * opts.zeta);
    double worst = 0;
    std::string where;
    for (int n = 1; n <= n_max; ++n) {
        for (int np = 1; np <= n_max; ++np) {
            double sum = 0;
            for (int i = 0; i < rad.size(); ++i) {
                double r = rad.r(i);
                sum += rad.weight(i) * sto_radial(n, opts.zeta, r) * sto_radial(np, opts.zeta, r) * r * r;
            }
            double d = std::abs(sum - slater_overlap(n, np));
            if (d > worst) {
                worst = d;
                where = "n=" + std::to_string(n) + " n'=" + std::to_string(np);
            }
        }
    }
    rep.checks.push_back(tolerance_check("radial Slater overlap n,n'<=6", worst, 1e-10, where));

    const HalfInt s = opts.s.value_or(h(1));
    auto set = emit_table(s, n_max, RadialMarker::sto);
    const RadialFamily sto{RadialKind::sto, 0, opts.zeta};
    const AngularGrid ang(grid);
    HarmonicTable table(max_orbital_l(set), ang);
    auto shells = spinor_shells(set, sto, table);
    auto g = gram_3d(shells, shells, 2 * (s.twice + 1), ang, rad, opts.exec);
    double worst_same = 0, worst_half = 0;
    std::string where_same, where_half;
    for (int a = 0; a < g.rows; ++a) {
        for (int b = 0; b < g.cols; ++b) {
            const auto& A = set[a];
            const auto& B = set[b];
            const bool same = A.labels.l == B.labels.l && A.labels.j == B.labels.j && A.labels.m == B.labels.m;
            const bool lower_a = A.labels.l_tilde() < A.n, lower_b = B.labels.l_tilde() < B.n;
            double want = same ? slater_overlap(A.n, B.n) : 0.0;
            if (same && lower_a != lower_b) want /= std::numbers::sqrt2;
            double d = std::abs(g(a, b) - want);
            std::string w = "n=" + std::to_string(A.n) + " n'=" + std::to_string(B.n) + " " + label_str(A.labels);
            if (lower_a == lower_b) {
                if (d > worst_same) worst_same = d, where_same = w;
            } else if (d > worst_half) {
                worst_half = d, where_half = w;
            }
        }
    }
    rep.checks.push_back(tolerance_check("chi spinor overlap s=" + s.str() +
                                             " n,n'<=6, pairs with matching N (closed form)",
                                         worst_same, 1e-10, where_same));
    rep.checks.push_back(tolerance_check("chi spinor overlap s=" + s.str() +
                                             " n,n'<=6, pairs with differing N (closed form / sqrt 2)",
                                         worst_half, 1e-10, where_half));
    return rep;
}

// ----------------------------------------------------------------- scalar reduction

SuiteReport verify_scalar(const VerifyOptions&) {
    SuiteReport rep;
    rep.suite = "scalar";
    int f20 = 0, f21 = 0, fcg = 0, fratio = 0, total = 0;
    std::string first20, first21, firstcg, firstratio;
    const ExactComplex minus_i(SqrtLinear(), SqrtLinear(-1));
    for (int n = 1; n <= 4; ++n) {
        for (int l = 0; l < n; ++l) {
            for (int ml = -l; ml <= l; ++ml) {
                ++total;
                const SpinLabels L{h(0), l, HalfInt::from_int(l), HalfInt::from_int(ml)};
                const std::string where = "n=" + std::to_string(n) + " l=" + std::to_string(l) + " m=" + std::to_string(ml);
                // harmonics: Omega^0 = beta Y, Lambda^0 = -i beta Y
                const auto om = tensor_harmonic_omega(L), la = tensor_harmonic_lambda(L);
                const ExactComplex beta(SqrtLinear(phase_beta(ml)));
                bool ok20 = om.components.size() == 1 && la.components.size() == 1 &&
                            om.components[0].coeff == beta && la.components[0].coeff == minus_i * beta &&
                            om.components[0].l == l && om.components[0].m == ml && la.components[0].l == l &&
                            la.components[0].m == ml;
                if (!ok20 && !f20++) first20 = where;
                // a^{0 lambda}_{ljm} = 1 for lambda = 0
                if (!(modified_cg(L, 0) == SqrtLinear(1)) && !fcg++) firstcg = where;
                // K = (1/sqrt 2)(1, -i) k for psi, psi-bar and chi
                const auto k = reduce_scalar(L, n);
                bool ok21 = true;
                for (const auto& sp : {assemble_psi(L, n), assemble_psi(L, n, true), assemble_chi(L, n)}) {
                    ok21 = ok21 && sp.rows.size() == 2;
                    for (std::size_t c = 0; ok21 && c < 2; ++c) {
                        ok21 = sp.rows[c].coeff == k.rows[c].coeff && sp.rows[c].orbital == k.rows[c].orbital;
                    }
                }
                if (!ok21 && !f21++) first21 = where;
                if (!(k.rows[1].coeff == minus_i * k.rows[0].coeff) || !(k.norm_squared() == SqrtLinear(1))) {
                    if (!fratio++) firstratio = where;
                }
            }
        }
    }
    rep.checks.push_back(exact_check("s=0 harmonics: Omega = beta Y, Lambda = -i beta Y (n<=4)", f20, total, first20));
    rep.checks.push_back(exact_check("s=0 modified CG a^{00} = 1", fcg, total, firstcg));
    rep.checks.push_back(exact_check("s=0 spinors (psi, psi-bar, chi) = (1/sqrt2)(1,-i) beta k_{nlm}", f21, total,
                                     first21));
    rep.checks.push_back(exact_check("s=0 lower/upper ratio -i and unit norm", fratio, total, firstratio));
    return rep;
}

// ----------------------------------------------------------------- row norms

SuiteReport verify_rownorm(const VerifyOptions& opts) {
    SuiteReport rep;
    rep.suite = "rownorm";
    for (HalfInt s : spins(opts, {h(1), h(3), h(5)})) {
        auto rows = emit_table(s, 4);
        int fails = 0;
        std::string first;
        for (const auto& r : rows) {
            if (!(r.norm_squared() == SqrtLinear(1)) && !fails++) {
                first = "n=" + std::to_string(r.n) + " " + label_str(r.labels) + " sum=" + to_string(r.norm_squared());
            }
        }
        rep.checks.push_back(exact_check("sum |coeff|^2 = 1, s=" + s.str() + " n<=4", fails,
                                         static_cast<int>(rows.size()), first));
    }
    return rep;
}

std::vector<SuiteReport> run_suites(const std::string& name, const VerifyOptions& opts) {
    std::vector<SuiteReport> out;
    auto one = [&](const std::string& n) {
        if (n == "tables") return verify_tables(opts);
        if (n == "orthonormality") return verify_orthonormality(opts);
        if (n == "gradients") return verify_gradients(opts);
        if (n == "sigma-p") return verify_sigma_p(opts);
        if (n == "overlap") return verify_overlap(opts);
        if (n == "scalar") return verify_scalar(opts);
        if (n == "rownorm") return verify_rownorm(opts);
        throw std::invalid_argument("unknown suite \"" + n + "\"");
    };
    if (name == "all") {
        for (const auto& n : suite_names()) out.push_back(one(n));
    } else {
        out.push_back(one(name));
    }
    return out;
}

}  // namespace etso
