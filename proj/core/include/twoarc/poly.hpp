#ifndef TWOARC_POLY_HPP
#define TWOARC_POLY_HPP

#include <span>
#include <utility>
#include <vector>

#include "twoarc/scalar.hpp"

namespace twoarc {

/* Dense univariate polynomial, coefficients low-to-high, trailing zeros
 * trimmed after every operation. The zero polynomial is the empty list, so
 * degree() is -1 there and equality is structural.
 *
 * All coefficients share one Mode; binary operations on mixed modes throw
 * mode_error rather than promote.
 */
class Poly {
public:
    explicit Poly(Mode m = Mode::Exact) : mode_(m) {}

    static Poly zero(Mode m) { return Poly(m); }
    static Poly constant(Scalar c);
    static Poly identity(Mode m) { return monomial(m, 1); }
    static Poly monomial(Mode m, int k, Scalar coeff = Scalar(1));
    static Poly from_coeffs(std::vector<Scalar> coeffs);
    /// Monic product of (z - r) over the given roots.
    static Poly from_roots(Mode m, std::span<const Scalar> roots);

    Mode mode() const { return mode_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// Coefficient of z^i, zero outside the stored range.
    Scalar coeff(int i) const;
    const Scalar& leading() const;
    const std::vector<Scalar>& coeffs() const { return c_; }

    Poly to_approx() const;

    Scalar eval(const Scalar& x) const;  // Horner, high to low
    Poly derivative() const;
    Poly scale(const Scalar& k) const;
    Poly pow(unsigned k) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void trim();
    Mode mode_;
    std::vector<Scalar> c_;
};

/// Quotient and remainder with deg(rem) < deg(q); q must be nonzero.
std::pair<Poly, Poly> poly_divrem(const Poly& p, const Poly& q);

/// Division known to be exact; throws std::logic_error on nonzero remainder.
Poly poly_exact_div(const Poly& p, const Poly& q);

/* Unique polynomial of degree < samples.size() through the given
 * (point, value) pairs, by Newton divided differences. Duplicate points
 * throw std::invalid_argument. */
Poly poly_interpolate(std::span<const std::pair<Scalar, Scalar>> samples);

/* Canonical scaling for comparing polynomials up to a nonzero factor.
 * Exact mode: Gaussian-integer coefficients, content 1, leading
 * coefficient rotated into re > 0 (or re = 0, im > 0). Approx mode: monic. */
Poly primitive_normalize(const Poly& p);

double max_coeff_magnitude(const Poly& p);

}  // namespace twoarc

#endif
