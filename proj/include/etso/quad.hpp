#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace etso {

struct GridError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Nodes and weights on [-1, 1].
QuadratureRule gauss_legendre(int n);
// Weight e^{-x} on [0, inf).
QuadratureRule gauss_laguerre(int n);

struct GridSpec {
    int n_theta = 64;
    int n_phi = 64;
    int n_r = 64;

    // Throws for non-positive counts.
    void validate() const;
    // Counts below the recommended minimum (8, 8, 16) give a warning, not an error.
    std::vector<std::string> warnings() const;
};

// Gauss-Legendre in cos(theta) times trapezoid in phi; weights include sin(theta) d(theta) d(phi).
class AngularGrid {
public:
    AngularGrid(int n_theta, int n_phi);
    explicit AngularGrid(const GridSpec& spec) : AngularGrid(spec.n_theta, spec.n_phi) {}

    int size() const { return static_cast<int>(weight_.size()); }
    double theta(int i) const { return theta_[i]; }
    double phi(int i) const { return phi_[i]; }
    double weight(int i) const { return weight_[i]; }
    const std::vector<double>& weights() const { return weight_; }

private:
    std::vector<double> theta_, phi_, weight_;
};

// Sum_i weight(i) F(r_i) approximates int_0^inf F(r) dr for F ~ poly(r) e^{-scale r}.
class RadialGrid {
public:
    RadialGrid(int n_r, double scale);

    int size() const { return static_cast<int>(r_.size()); }
    double r(int i) const { return r_[i]; }
    double weight(int i) const { return weight_[i]; }

private:
    std::vector<double> r_, weight_;
};

using AngularField = std::function<std::vector<std::complex<double>>(double theta, double phi)>;
using RadialFunction = std::function<double(double r)>;

// Sum over components of int f^dagger g dOmega.
std::complex<double> angular_inner(const AngularField& f, const AngularField& g, const AngularGrid& grid);

// int_0^inf f g r^{2+weight_power} dr with x = 2 zeta_eff r.
double radial_inner(const RadialFunction& f, const RadialFunction& g, int weight_power, double zeta_eff,
                    int n_r = 64);

enum class Exec { serial, parallel };

struct ComplexMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::complex<double>> data;

    ComplexMatrix() = default;
    ComplexMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}
    std::complex<double>& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    const std::complex<double>& operator()(int i, int j) const {
        return data[static_cast<std::size_t>(i) * cols + j];
    }
    ComplexMatrix& operator+=(const ComplexMatrix& o);
    double max_abs_diff(const ComplexMatrix& o) const;
};

// Sampled functions: value of function f, point p, component c.
struct SampleMatrix {
    int n_funcs = 0;
    int n_points = 0;
    int n_comp = 0;
    std::vector<std::complex<double>> data;

    SampleMatrix() = default;
    SampleMatrix(int f, int p, int c)
        : n_funcs(f), n_points(p), n_comp(c), data(static_cast<std::size_t>(f) * p * c) {}
    std::complex<double>* func(int f) { return data.data() + static_cast<std::size_t>(f) * n_points * n_comp; }
    const std::complex<double>* func(int f) const {
        return data.data() + static_cast<std::size_t>(f) * n_points * n_comp;
    }
};

// G(a, b) = scale * sum_p w_p sum_c conj(L_a[p, c]) R_b[p, c]
void accumulate_gram(const SampleMatrix& left, const SampleMatrix& right, const std::vector<double>& weights,
                     double scale, ComplexMatrix& gram, Exec exec);
ComplexMatrix gram(const SampleMatrix& left, const SampleMatrix& right, const std::vector<double>& weights,
                   Exec exec);

// Fills out (sized n_funcs x angular points x n_comp) with the functions on the shell of radius r.
// Called concurrently in parallel mode, so it must not mutate shared state.
using ShellSampler = std::function<void(double r, SampleMatrix& out)>;

struct ShellSet {
    ShellSampler sample;
    int n_funcs = 0;
};

// Full 3D Gram matrix: radial shells times the angular grid. The parallel version splits shells
// across threads with per-thread partial sums.
ComplexMatrix gram_3d(const ShellSet& left, const ShellSet& right, int n_comp, const AngularGrid& angular,
                      const RadialGrid& radial, Exec exec);

}  // namespace etso
