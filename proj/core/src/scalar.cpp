#include "twoarc/scalar.hpp"

#include <algorithm>
#include <cmath>

namespace twoarc {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

double rational_to_double(const Rational& q) { return q.get_d(); }

std::complex<double> GaussianRational::to_complex() const {
    return {re.get_d(), im.get_d()};
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    Rational n = b.norm();
    GaussianRational t = a * b.conj();
    return {t.re / n, t.im / n};
}

const GaussianRational& Scalar::exact_value() const {
    if (!is_exact()) throw mode_error("exact_value() on an Approx scalar");
    return std::get<GaussianRational>(v_);
}

std::complex<double> Scalar::to_complex() const {
    if (is_exact()) return std::get<GaussianRational>(v_).to_complex();
    return std::get<std::complex<double>>(v_);
}

bool Scalar::is_zero() const {
    if (is_exact()) return std::get<GaussianRational>(v_).is_zero();
    return std::get<std::complex<double>>(v_) == std::complex<double>(0.0, 0.0);
}

bool Scalar::is_real() const {
    if (is_exact()) return std::get<GaussianRational>(v_).is_real();
    return std::get<std::complex<double>>(v_).imag() == 0.0;
}

Scalar Scalar::conj() const {
    if (is_exact()) return Scalar(std::get<GaussianRational>(v_).conj());
    return Scalar(std::conj(std::get<std::complex<double>>(v_)));
}

Scalar Scalar::pow_k(unsigned k) const {
    Scalar result = Scalar::one(mode());
    Scalar base = *this;
    while (k) {
        if (k & 1u) result = result * base;
        base = base * base;
        k >>= 1u;
    }
    return result;
}

namespace {

template <class ExactOp, class ApproxOp>
Scalar binary(const Scalar& a, const Scalar& b, ExactOp eop, ApproxOp aop) {
    if (a.is_exact() && b.is_exact()) return Scalar::exact(eop(a.exact_value(), b.exact_value()));
    return Scalar::approx(aop(a.to_complex(), b.to_complex()));
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
    return binary(a, b, [](auto& x, auto& y) { return x + y; }, [](auto x, auto y) { return x + y; });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    return binary(a, b, [](auto& x, auto& y) { return x - y; }, [](auto x, auto y) { return x - y; });
}

Scalar operator-(const Scalar& a) { return Scalar::zero(a.mode()) - a; }

Scalar operator*(const Scalar& a, const Scalar& b) {
    return binary(a, b, [](auto& x, auto& y) { return x * y; }, [](auto x, auto y) { return x * y; });
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return binary(a, b, [](auto& x, auto& y) { return x / y; }, [](auto x, auto y) { return x / y; });
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return a.exact_value() == b.exact_value();
    return a.to_complex() == b.to_complex();
}

bool scalar_less(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) {
        const auto& x = a.exact_value();
        const auto& y = b.exact_value();
        int c = cmp(x.re, y.re);
        if (c != 0) return c < 0;
        return cmp(x.im, y.im) < 0;
    }
    auto x = a.to_complex();
    auto y = b.to_complex();
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
}

namespace {

// Round a rational to the nearest integer (ties toward zero).
mpz_class round_nearest(const Rational& q) {
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class twice = 2 * num;
    mpz_class r;
    // floor((2*num + den) / (2*den)) gives round-half-up for positive values
    mpz_fdiv_q(r.get_mpz_t(), mpz_class(twice + den).get_mpz_t(), mpz_class(2 * den).get_mpz_t());
    return r;
}

}  // namespace

GaussianRational gaussian_int_gcd(GaussianRational a, GaussianRational b) {
    // Euclid with nearest-lattice-point quotients; norms strictly decrease.
    while (!b.is_zero()) {
        GaussianRational q = a / b;
        GaussianRational qr(Rational(round_nearest(q.re)), Rational(round_nearest(q.im)));
        GaussianRational r = a - qr * b;
        a = b;
        b = r;
    }
    return a;
}

namespace {

// Best rational approximation via continued fractions, denominator capped.
bool rationalize_real(double x, Rational& out, unsigned long max_den, double tol) {
    if (!std::isfinite(x)) return false;
    double scale = std::max(1.0, std::abs(x));
    // convergents p/q of the continued fraction of x
    long long p0 = 1, q0 = 0;  // p_{-1}/q_{-1}
    long long p1 = 0, q1 = 1;  // guarded below; start from a0
    double v = x;
    p1 = static_cast<long long>(std::floor(v));
    q1 = 1;
    double frac = v - std::floor(v);
    for (int it = 0; it < 64; ++it) {
        double approxv = static_cast<double>(p1) / static_cast<double>(q1);
        if (std::abs(x - approxv) <= tol * scale) {
            out = make_rational(p1, q1);
            return true;
        }
        if (frac == 0.0) break;
        v = 1.0 / frac;
        if (v > 9.0e15) break;
        long long a = static_cast<long long>(std::floor(v));
        frac = v - std::floor(v);
        long long p2 = a * p1 + p0;
        long long q2 = a * q1 + q0;
        if (q2 < 0 || static_cast<unsigned long long>(q2) > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    }
    double approxv = static_cast<double>(p1) / static_cast<double>(q1);
    if (std::abs(x - approxv) <= tol * scale) {
        out = make_rational(p1, q1);
        return true;
    }
    return false;
}

}  // namespace

bool rationalize(std::complex<double> z, GaussianRational& out, unsigned long max_den, double tol) {
    Rational re, im;
    if (!rationalize_real(z.real(), re, max_den, tol)) return false;
    if (!rationalize_real(z.imag(), im, max_den, tol)) return false;
    out = GaussianRational(std::move(re), std::move(im));
    return true;
}

}  // namespace twoarc
