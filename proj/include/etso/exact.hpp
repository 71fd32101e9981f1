#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace etso {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct ExactError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : ExactError {
    using ExactError::ExactError;
};

// n = k^2 * d with d square-free. Throws ExactError when n cannot be factored
// far enough to isolate the square-free part.
std::pair<BigInt, std::uint64_t> square_free_split(const BigInt& n);

// Sum of q * sqrt(d) over square-free d >= 1; d = 1 holds the rational part.
class SqrtLinear {
public:
    using Terms = std::map<std::uint64_t, Rational>;

    SqrtLinear() = default;
    SqrtLinear(long long v);
    SqrtLinear(const Rational& q);

    // q * sqrt(d) for any d >= 1; d is reduced to its square-free part.
    static SqrtLinear term(const Rational& q, std::uint64_t d);
    // sqrt(q) for a rational q >= 0.
    static SqrtLinear sqrt_of(const Rational& q);

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    Rational rational_part() const;
    double to_double() const;

    SqrtLinear operator-() const;
    SqrtLinear& operator+=(const SqrtLinear& o);
    SqrtLinear& operator-=(const SqrtLinear& o);
    SqrtLinear& operator*=(const SqrtLinear& o);
    SqrtLinear& operator/=(const SqrtLinear& o);

    // Multiplicative inverse; defined only for nonzero values with at most two terms.
    SqrtLinear inverse() const;

    friend SqrtLinear operator+(SqrtLinear a, const SqrtLinear& b) { return a += b; }
    friend SqrtLinear operator-(SqrtLinear a, const SqrtLinear& b) { return a -= b; }
    friend SqrtLinear operator*(SqrtLinear a, const SqrtLinear& b) { return a *= b; }
    friend SqrtLinear operator/(SqrtLinear a, const SqrtLinear& b) { return a /= b; }
    friend bool operator==(const SqrtLinear& a, const SqrtLinear& b) { return a.terms_ == b.terms_; }

private:
    void add_term(std::uint64_t d, const Rational& q);

    Terms terms_;
};

class ExactComplex {
public:
    ExactComplex() = default;
    ExactComplex(long long v) : re_(v) {}
    ExactComplex(SqrtLinear re, SqrtLinear im = {}) : re_(std::move(re)), im_(std::move(im)) {}

    static ExactComplex i() { return ExactComplex(SqrtLinear(), SqrtLinear(1)); }

    const SqrtLinear& re() const { return re_; }
    const SqrtLinear& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    ExactComplex conj() const { return ExactComplex(re_, -im_); }
    // |z|^2 = re^2 + im^2
    SqrtLinear norm() const { return re_ * re_ + im_ * im_; }
    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

    ExactComplex operator-() const { return ExactComplex(-re_, -im_); }
    ExactComplex& operator+=(const ExactComplex& o);
    ExactComplex& operator-=(const ExactComplex& o);
    ExactComplex& operator*=(const ExactComplex& o);
    ExactComplex& operator/=(const ExactComplex& o);

    friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
    friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
    friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
    friend ExactComplex operator/(ExactComplex a, const ExactComplex& b) { return a /= b; }
    friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    SqrtLinear re_;
    SqrtLinear im_;
};

// Canonical form: "(p/q)*sqrt(d) + ... + i*(...)", terms by ascending d, "0" for zero.
std::string to_string(const Rational& q);
std::string to_string(const SqrtLinear& v);
std::string to_string(const ExactComplex& v);

// Compact form for aligned text output, e.g. "-i√(2/5)" or "√(1/3) - √(2/7)".
std::string to_display(const ExactComplex& v);

// Accepts integers, + - * /, parentheses, sqrt(<rational>), and i.
// The canonical form is a subset of this grammar.
ExactComplex parse_exact(std::string_view text);

}  // namespace etso
