#ifndef TWOARC_SCALAR_HPP
#define TWOARC_SCALAR_HPP

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace twoarc {

using Rational = mpq_class;

/// Thrown when Exact and Approx values meet in a context that forbids
/// silent promotion (polynomial arithmetic, exact pipelines).
struct mode_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Rational from a numerator/denominator pair, reduced, denominator > 0.
Rational make_rational(long num, long den = 1);

double rational_to_double(const Rational& q);

/* Complex number with rational real and imaginary parts. Closed under
 * +,-,*,/ which is all the endpoint machinery ever needs. */
struct GaussianRational {
    Rational re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }
    /// re^2 + im^2 (the field norm; zero iff value is zero).
    Rational norm() const { return re * re + im * im; }

    std::complex<double> to_complex() const;

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

enum class Mode { Exact, Approx };

/* The coefficient domain of the whole library: either an exact Gaussian
 * rational or an approximate complex double.
 *
 * Scalar-level arithmetic between the two modes promotes Exact to Approx;
 * contexts that must stay exact (Poly arithmetic, fraction-free
 * elimination) reject mixed modes instead, see mode_error.
 */
class Scalar {
public:
    Scalar() : v_(GaussianRational()) {}
    Scalar(long n) : v_(GaussianRational(Rational(n))) {}

    static Scalar exact(GaussianRational g) { return Scalar(std::move(g)); }
    static Scalar exact(Rational q) { return Scalar(GaussianRational(std::move(q))); }
    static Scalar rational(long num, long den) { return exact(make_rational(num, den)); }
    static Scalar gaussian(Rational re, Rational im) {
        return exact(GaussianRational(std::move(re), std::move(im)));
    }
    static Scalar approx(std::complex<double> z) { return Scalar(z); }
    static Scalar approx(double x) { return Scalar(std::complex<double>(x, 0.0)); }
    static Scalar zero(Mode m) { return m == Mode::Exact ? Scalar() : approx(0.0); }
    static Scalar one(Mode m) { return m == Mode::Exact ? Scalar(1) : approx(1.0); }

    Mode mode() const { return std::holds_alternative<GaussianRational>(v_) ? Mode::Exact : Mode::Approx; }
    bool is_exact() const { return mode() == Mode::Exact; }

    const GaussianRational& exact_value() const;
    std::complex<double> to_complex() const;
    Scalar to_approx() const { return approx(to_complex()); }

    bool is_zero() const;
    bool is_real() const;
    double abs() const { return std::abs(to_complex()); }

    Scalar conj() const;
    Scalar pow_k(unsigned k) const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    /// Throws std::domain_error on division by zero.
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    explicit Scalar(GaussianRational g) : v_(std::move(g)) {}
    explicit Scalar(std::complex<double> z) : v_(z) {}
    std::variant<GaussianRational, std::complex<double>> v_;
};

/// Ordering by (real part, imaginary part); mixed modes compare as complex.
bool scalar_less(const Scalar& a, const Scalar& b);

/// Gaussian integer gcd (both inputs with integer re/im); result is some
/// associate of the gcd, gcd(0,0) = 0.
GaussianRational gaussian_int_gcd(GaussianRational a, GaussianRational b);

/* Nearest Gaussian rational with bounded denominator, by continued
 * fractions on each part. Returns false if no candidate within
 * tol * max(1,|z|) exists. Used to lift numeric roots back into the
 * exact domain before verifying them exactly. */
bool rationalize(std::complex<double> z, GaussianRational& out,
                 unsigned long max_den = 1000000UL, double tol = 1e-9);

}  // namespace twoarc

#endif
