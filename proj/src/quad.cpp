#include "etso/quad.hpp"

#include <cmath>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace etso {

namespace {

constexpr int max_newton = 100;

}  // namespace

QuadratureRule gauss_legendre(int n) {
    if (n < 1) throw GridError("Gauss-Legendre needs at least one node");
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const long double pi = std::numbers::pi_v<long double>;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        long double z = std::cos(pi * (i + 0.75L) / (n + 0.5L));
        long double pp = 0;
        for (int it = 0; it < max_newton; ++it) {
            long double p1 = 1, p2 = 0;
            for (int j = 1; j <= n; ++j) {
                long double p3 = p2;
                p2 = p1;
                p1 = ((2 * j - 1) * z * p2 - (j - 1) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1);
            long double dz = p1 / pp;
            z -= dz;
            if (std::fabs(dz) < 1e-19L) break;
        }
        long double w = 2 / ((1 - z * z) * pp * pp);
        rule.nodes[i] = static_cast<double>(-z);
        rule.nodes[n - 1 - i] = static_cast<double>(z);
        rule.weights[i] = rule.weights[n - 1 - i] = static_cast<double>(w);
    }
    return rule;
}

QuadratureRule gauss_laguerre(int n) {
    if (n < 1) throw GridError("Gauss-Laguerre needs at least one node");
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    long double z = 0;
    for (int i = 0; i < n; ++i) {
        // asymptotic starting guesses, then Newton on L_n
        if (i == 0) {
            z = 3.0L / (1 + 2.4L * n);
        } else if (i == 1) {
            z += 15.0L / (1 + 2.5L * n);
        } else {
            long double ai = i - 1;
            z += ((1 + 2.55L * ai) / (1.9L * ai)) * (z - rule.nodes[i - 2]);
        }
        long double p1 = 1, p2 = 0, pp = 0;
        for (int it = 0; it < max_newton; ++it) {
            p1 = 1;
            p2 = 0;
            for (int j = 1; j <= n; ++j) {
                long double p3 = p2;
                p2 = p1;
                p1 = ((2 * j - 1 - z) * p2 - (j - 1) * p3) / j;
            }
            pp = (n * p1 - n * p2) / z;
            long double dz = p1 / pp;
            z -= dz;
            if (std::fabs(dz) < 1e-19L * (1 + z)) break;
        }
        rule.nodes[i] = static_cast<double>(z);
        rule.weights[i] = static_cast<double>(-1 / (pp * n * p2));
    }
    return rule;
}

void GridSpec::validate() const {
    if (n_theta < 1 || n_phi < 1 || n_r < 1) throw GridError("grid node counts must be positive");
}

std::vector<std::string> GridSpec::warnings() const {
    std::vector<std::string> out;
    if (n_theta < 8) out.push_back("n_theta = " + std::to_string(n_theta) + " is below 8; accuracy not assured");
    if (n_phi < 8) out.push_back("n_phi = " + std::to_string(n_phi) + " is below 8; accuracy not assured");
    if (n_r < 16) out.push_back("n_r = " + std::to_string(n_r) + " is below 16; accuracy not assured");
    return out;
}

AngularGrid::AngularGrid(int n_theta, int n_phi) {
    GridSpec{n_theta, n_phi, 1}.validate();
    auto gl = gauss_legendre(n_theta);
    const double dphi = 2 * std::numbers::pi / n_phi;
    for (int a = 0; a < n_theta; ++a) {
        double th = std::acos(gl.nodes[a]);
        for (int b = 0; b < n_phi; ++b) {
            theta_.push_back(th);
            phi_.push_back(b * dphi);
            weight_.push_back(gl.weights[a] * dphi);
        }
    }
}

RadialGrid::RadialGrid(int n_r, double scale) {
    if (!(scale > 0)) throw GridError("radial scale must be positive");
    GridSpec{1, 1, n_r}.validate();
    // Laguerre weights are formed in long double; w e^{x} overflows double only for n_r in the thousands.
    auto gl = gauss_laguerre(n_r);
    r_.resize(n_r);
    weight_.resize(n_r);
    for (int i = 0; i < n_r; ++i) {
        long double x = gl.nodes[i];
        r_[i] = static_cast<double>(x / scale);
        weight_[i] = static_cast<double>(static_cast<long double>(gl.weights[i]) * std::exp(x) / scale);
    }
}

std::complex<double> angular_inner(const AngularField& f, const AngularField& g, const AngularGrid& grid) {
    std::complex<double> sum = 0;
    for (int i = 0; i < grid.size(); ++i) {
        auto fv = f(grid.theta(i), grid.phi(i));
        auto gv = g(grid.theta(i), grid.phi(i));
        if (fv.size() != gv.size()) throw GridError("angular_inner: component counts differ");
        std::complex<double> dot = 0;
        for (std::size_t c = 0; c < fv.size(); ++c) dot += std::conj(fv[c]) * gv[c];
        sum += grid.weight(i) * dot;
    }
    return sum;
}

double radial_inner(const RadialFunction& f, const RadialFunction& g, int weight_power, double zeta_eff, int n_r) {
    if (!(zeta_eff > 0)) throw GridError("zeta_eff must be positive");
    RadialGrid grid(n_r, 2 * zeta_eff);
    double sum = 0;
    for (int i = 0; i < grid.size(); ++i) {
        double r = grid.r(i);
        sum += grid.weight(i) * f(r) * g(r) * std::pow(r, 2 + weight_power);
    }
    return sum;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (rows != o.rows || cols != o.cols) throw GridError("matrix shapes differ");
    for (std::size_t i = 0; i < data.size(); ++i) data[i] += o.data[i];
    return *this;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& o) const {
    if (rows != o.rows || cols != o.cols) throw GridError("matrix shapes differ");
    double worst = 0;
    for (std::size_t i = 0; i < data.size(); ++i) worst = std::max(worst, std::abs(data[i] - o.data[i]));
    return worst;
}

namespace {

std::complex<double> weighted_dot(const std::complex<double>* a, const std::complex<double>* b,
                                  const std::vector<double>& w, int n_comp) {
    std::complex<double> sum = 0;
    const int n_points = static_cast<int>(w.size());
    for (int p = 0; p < n_points; ++p) {
        std::complex<double> dot = 0;
        for (int c = 0; c < n_comp; ++c) dot += std::conj(a[p * n_comp + c]) * b[p * n_comp + c];
        sum += w[p] * dot;
    }
    return sum;
}

void check_shapes(const SampleMatrix& left, const SampleMatrix& right, const std::vector<double>& weights,
                  const ComplexMatrix& gram) {
    if (left.n_points != right.n_points || left.n_comp != right.n_comp ||
        static_cast<int>(weights.size()) != left.n_points) {
        throw GridError("sample shapes do not match");
    }
    if (gram.rows != left.n_funcs || gram.cols != right.n_funcs) throw GridError("gram shape does not match");
}

}  // namespace

void accumulate_gram(const SampleMatrix& left, const SampleMatrix& right, const std::vector<double>& weights,
                     double scale, ComplexMatrix& gram, Exec exec) {
    check_shapes(left, right, weights, gram);
    const int n = left.n_funcs * right.n_funcs;
    if (exec == Exec::serial) {
        for (int a = 0; a < left.n_funcs; ++a) {
            for (int b = 0; b < right.n_funcs; ++b) {
                gram(a, b) += scale * weighted_dot(left.func(a), right.func(b), weights, left.n_comp);
            }
        }
        return;
    }
#pragma omp parallel for schedule(dynamic)
    for (int ab = 0; ab < n; ++ab) {
        int a = ab / right.n_funcs, b = ab % right.n_funcs;
        gram(a, b) += scale * weighted_dot(left.func(a), right.func(b), weights, left.n_comp);
    }
}

ComplexMatrix gram(const SampleMatrix& left, const SampleMatrix& right, const std::vector<double>& weights,
                   Exec exec) {
    ComplexMatrix g(left.n_funcs, right.n_funcs);
    accumulate_gram(left, right, weights, 1.0, g, exec);
    return g;
}

ComplexMatrix gram_3d(const ShellSet& left, const ShellSet& right, int n_comp, const AngularGrid& angular,
                      const RadialGrid& radial, Exec exec) {
    ComplexMatrix total(left.n_funcs, right.n_funcs);
    const int n_ang = angular.size();
    if (exec == Exec::serial) {
        SampleMatrix ls(left.n_funcs, n_ang, n_comp), rs(right.n_funcs, n_ang, n_comp);
        for (int i = 0; i < radial.size(); ++i) {
            left.sample(radial.r(i), ls);
            right.sample(radial.r(i), rs);
            accumulate_gram(ls, rs, angular.weights(), radial.weight(i) * radial.r(i) * radial.r(i), total,
                            Exec::serial);
        }
        return total;
    }
#pragma omp parallel
    {
        ComplexMatrix part(left.n_funcs, right.n_funcs);
        SampleMatrix ls(left.n_funcs, n_ang, n_comp), rs(right.n_funcs, n_ang, n_comp);
#pragma omp for schedule(dynamic)
        for (int i = 0; i < radial.size(); ++i) {
            left.sample(radial.r(i), ls);
            right.sample(radial.r(i), rs);
            accumulate_gram(ls, rs, angular.weights(), radial.weight(i) * radial.r(i) * radial.r(i), part,
                            Exec::serial);
        }
#pragma omp critical
        total += part;
    }
    return total;
}

}  // namespace etso
