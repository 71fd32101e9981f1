#include "etso/exact.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>
#include <vector>

namespace etso {

namespace {

constexpr std::uint64_t kTrialLimit = 1000000;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw ExactError("radicand product exceeds 64 bits");
    }
    return out;
}

}  // namespace

std::pair<BigInt, std::uint64_t> square_free_split(const BigInt& n) {
    if (n <= 0) {
        throw ExactError("square_free_split: argument must be positive");
    }
    BigInt rem = n;
    BigInt k = 1;
    BigInt d = 1;
    bool exhausted = true;
    for (std::uint64_t p = 2; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
        if (BigInt(p) * p > rem) {
            exhausted = false;
            break;
        }
        if (rem % p != 0) continue;
        int e = 0;
        while (rem % p == 0) {
            rem /= p;
            ++e;
        }
        for (int q = 0; q < e / 2; ++q) k *= p;
        if (e % 2) d *= p;
    }
    if (rem > 1) {
        if (!exhausted) {
            d *= rem;  // no factor up to sqrt(rem): prime
        } else {
            BigInt s = boost::multiprecision::sqrt(rem);
            if (s * s == rem) {
                k *= s;
            } else if (rem <= BigInt(kTrialLimit) * kTrialLimit) {
                d *= rem;
            } else {
                throw ExactError("radicand has an unresolved large factor");
            }
        }
    }
    if (d > std::numeric_limits<std::uint64_t>::max()) {
        throw ExactError("square-free part exceeds 64 bits");
    }
    return {k, static_cast<std::uint64_t>(d)};
}

// ---------------------------------------------------------------- SqrtLinear

SqrtLinear::SqrtLinear(long long v) {
    if (v != 0) terms_.emplace(1, Rational(v));
}

SqrtLinear::SqrtLinear(const Rational& q) {
    if (q != 0) terms_.emplace(1, q);
}

SqrtLinear SqrtLinear::term(const Rational& q, std::uint64_t d) {
    SqrtLinear out;
    if (q == 0 || d == 0) return out;
    auto [k, sf] = square_free_split(BigInt(d));
    out.add_term(sf, q * Rational(k));
    return out;
}

SqrtLinear SqrtLinear::sqrt_of(const Rational& q) {
    if (q < 0) throw ExactError("sqrt of a negative rational");
    if (q == 0) return {};
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    // sqrt(num/den) = sqrt(num*den)/den
    auto [k, d] = square_free_split(num * den);
    SqrtLinear out;
    out.add_term(d, Rational(k, den));
    return out;
}

bool SqrtLinear::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational SqrtLinear::rational_part() const {
    auto it = terms_.find(1);
    return it == terms_.end() ? Rational(0) : it->second;
}

double SqrtLinear::to_double() const {
    long double acc = 0;
    for (const auto& [d, q] : terms_) {
        long double r = q.convert_to<long double>();
        acc += d == 1 ? r : r * std::sqrt(static_cast<long double>(d));
    }
    return static_cast<double>(acc);
}

void SqrtLinear::add_term(std::uint64_t d, const Rational& q) {
    if (q == 0) return;
    auto [it, inserted] = terms_.emplace(d, q);
    if (!inserted) {
        it->second += q;
        if (it->second == 0) terms_.erase(it);
    }
}

SqrtLinear SqrtLinear::operator-() const {
    SqrtLinear out = *this;
    for (auto& kv : out.terms_) kv.second = -kv.second;
    return out;
}

SqrtLinear& SqrtLinear::operator+=(const SqrtLinear& o) {
    for (const auto& [d, q] : o.terms_) add_term(d, q);
    return *this;
}

SqrtLinear& SqrtLinear::operator-=(const SqrtLinear& o) {
    for (const auto& [d, q] : o.terms_) add_term(d, -q);
    return *this;
}

SqrtLinear& SqrtLinear::operator*=(const SqrtLinear& o) {
    SqrtLinear out;
    for (const auto& [d1, q1] : terms_) {
        for (const auto& [d2, q2] : o.terms_) {
            // sqrt(d1)*sqrt(d2) = g*sqrt((d1/g)*(d2/g)) for square-free d1, d2
            std::uint64_t g = std::gcd(d1, d2);
            std::uint64_t d = checked_mul(d1 / g, d2 / g);
            out.add_term(d, q1 * q2 * Rational(g));
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

SqrtLinear SqrtLinear::inverse() const {
    if (terms_.empty()) throw ExactError("division by zero");
    if (terms_.size() > 2) {
        throw ExactError("division by a value with more than two radical terms");
    }
    auto it = terms_.begin();
    if (terms_.size() == 1) {
        // 1/(q sqrt(d)) = sqrt(d)/(q d)
        const auto& [d, q] = *it;
        SqrtLinear out;
        out.add_term(d, Rational(1) / (q * Rational(d)));
        return out;
    }
    const auto [d1, a] = *it++;
    const auto [d2, b] = *it;
    // (a sqrt(d1) - b sqrt(d2)) / (a^2 d1 - b^2 d2)
    Rational den = a * a * Rational(d1) - b * b * Rational(d2);
    SqrtLinear out;
    out.add_term(d1, a / den);
    out.add_term(d2, -b / den);
    return out;
}

SqrtLinear& SqrtLinear::operator/=(const SqrtLinear& o) {
    if (o.is_rational()) {
        if (o.is_zero()) throw ExactError("division by zero");
        Rational q = o.rational_part();
        for (auto& kv : terms_) kv.second /= q;
        return *this;
    }
    return *this *= o.inverse();
}

// -------------------------------------------------------------- ExactComplex

ExactComplex& ExactComplex::operator+=(const ExactComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

ExactComplex& ExactComplex::operator-=(const ExactComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

ExactComplex& ExactComplex::operator*=(const ExactComplex& o) {
    SqrtLinear re = re_ * o.re_ - im_ * o.im_;
    SqrtLinear im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

ExactComplex& ExactComplex::operator/=(const ExactComplex& o) {
    if (o.im_.is_zero()) {
        if (o.re_.is_zero()) throw ExactError("division by zero");
        SqrtLinear inv = o.re_.is_rational() ? SqrtLinear(Rational(1) / o.re_.rational_part())
                                             : o.re_.inverse();
        re_ *= inv;
        im_ *= inv;
        return *this;
    }
    SqrtLinear den_inv = o.norm().inverse();
    *this *= o.conj();
    re_ *= den_inv;
    im_ *= den_inv;
    return *this;
}

// ------------------------------------------------------------------ strings

std::string to_string(const Rational& q) {
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string to_string(const SqrtLinear& v) {
    if (v.is_zero()) return "0";
    std::string out;
    for (const auto& [d, q] : v.terms()) {
        if (!out.empty()) out += " + ";
        out += "(" + to_string(q) + ")";
        if (d != 1) out += "*sqrt(" + std::to_string(d) + ")";
    }
    return out;
}

std::string to_string(const ExactComplex& v) {
    if (v.is_zero()) return "0";
    std::string out;
    if (!v.re().is_zero()) out = to_string(v.re());
    if (!v.im().is_zero()) {
        if (!out.empty()) out += " + ";
        out += "i*(" + to_string(v.im()) + ")";
    }
    return out;
}

namespace {

// |q| sqrt(d) written as a single radical, e.g. 2 sqrt(2/15) -> √(8/15).
std::string magnitude_text(const Rational& q, std::uint64_t d) {
    Rational a = q < 0 ? Rational(-q) : q;
    if (d == 1) return to_string(a);
    Rational r = a * a * Rational(d);
    std::string inner = to_string(r);
    if (boost::multiprecision::denominator(r) == 1) return "√" + inner;
    return "√(" + inner + ")";
}

std::string display_real(const SqrtLinear& v, const std::string& unit) {
    std::string out;
    bool first = true;
    for (const auto& [d, q] : v.terms()) {
        bool neg = q < 0;
        std::string mag = magnitude_text(q, d);
        if (!unit.empty() && mag == "1") mag.clear();
        if (first) {
            out += neg ? "-" : "";
        } else {
            out += neg ? " - " : " + ";
        }
        out += unit + mag;
        first = false;
    }
    return out;
}

}  // namespace

std::string to_display(const ExactComplex& v) {
    if (v.is_zero()) return "0";
    std::string re = v.re().is_zero() ? "" : display_real(v.re(), "");
    std::string im;
    if (!v.im().is_zero()) {
        if (v.im().size() == 1) {
            im = display_real(v.im(), "i");
        } else {
            im = "i(" + display_real(v.im(), "") + ")";
        }
    }
    if (re.empty()) return im;
    if (im.empty()) return re;
    if (im[0] == '-') return re + " - " + im.substr(1);
    return re + " + " + im;
}

// ------------------------------------------------------------------- parser

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    ExactComplex parse() {
        ExactComplex v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream os;
        os << what << " at offset " << pos_ << " in \"" << s_ << "\"";
        throw ParseError(os.str());
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ExactComplex expr() {
        ExactComplex v = term();
        for (;;) {
            if (eat('+')) {
                v += term();
            } else if (eat('-')) {
                v -= term();
            } else {
                return v;
            }
        }
    }

    ExactComplex term() {
        ExactComplex v = unary();
        for (;;) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                ExactComplex d = unary();
                if (d.is_zero()) fail("division by zero");
                try {
                    v /= d;
                } catch (const ExactError& e) {
                    fail(e.what());
                }
            } else {
                return v;
            }
        }
    }

    ExactComplex unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return primary();
    }

    ExactComplex primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            ExactComplex v = expr();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return ExactComplex(SqrtLinear(Rational(BigInt(std::string(s_.substr(start, pos_ - start))))));
        }
        if (s_.substr(pos_, 4) == "sqrt") {
            pos_ += 4;
            if (!eat('(')) fail("expected '(' after sqrt");
            ExactComplex arg = expr();
            if (!eat(')')) fail("missing ')'");
            if (!arg.is_real() || !arg.re().is_rational()) fail("sqrt of a non-rational value");
            Rational q = arg.re().rational_part();
            if (q < 0) fail("sqrt of a negative value");
            return ExactComplex(SqrtLinear::sqrt_of(q));
        }
        if (c == 'i') {
            ++pos_;
            return ExactComplex::i();
        }
        fail("unexpected character");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

ExactComplex parse_exact(std::string_view text) {
    return Parser(text).parse();
}

}  // namespace etso
