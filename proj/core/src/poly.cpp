#include "twoarc/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace twoarc {

namespace {

void require_same_mode(const Poly& a, const Poly& b) {
    if (a.mode() != b.mode()) throw mode_error("polynomial mode mismatch");
}

}  // namespace

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(Scalar c) {
    Poly p(c.mode());
    if (!c.is_zero()) p.c_.push_back(std::move(c));
    return p;
}

Poly Poly::monomial(Mode m, int k, Scalar coeff) {
    if (k < 0) throw std::invalid_argument("negative monomial degree");
    if (coeff.mode() != m) coeff = m == Mode::Approx ? coeff.to_approx() : coeff;
    if (coeff.mode() != m) throw mode_error("monomial coefficient mode mismatch");
    Poly p(m);
    if (coeff.is_zero()) return p;
    p.c_.assign(static_cast<size_t>(k) + 1, Scalar::zero(m));
    p.c_.back() = std::move(coeff);
    return p;
}

Poly Poly::from_coeffs(std::vector<Scalar> coeffs) {
    if (coeffs.empty()) return Poly(Mode::Exact);
    Mode m = coeffs.front().mode();
    for (const auto& c : coeffs)
        if (c.mode() != m) throw mode_error("mixed coefficient modes");
    Poly p(m);
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

Poly Poly::from_roots(Mode m, std::span<const Scalar> roots) {
    Poly p = Poly::constant(Scalar::one(m));
    for (const auto& r : roots) {
        Scalar rr = r.mode() == m ? r : (m == Mode::Approx ? r.to_approx() : r);
        if (rr.mode() != m) throw mode_error("root mode mismatch");
        std::vector<Scalar> lin = {-rr, Scalar::one(m)};
        p = p * Poly::from_coeffs(std::move(lin));
    }
    return p;
}

Scalar Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar::zero(mode_);
    return c_[static_cast<size_t>(i)];
}

const Scalar& Poly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::to_approx() const {
    Poly p(Mode::Approx);
    p.c_.reserve(c_.size());
    for (const auto& c : c_) p.c_.push_back(c.to_approx());
    p.trim();
    return p;
}

Scalar Poly::eval(const Scalar& x) const {
    if (c_.empty()) return Scalar::zero(mode_);
    Scalar r = c_.back();
    for (auto it = c_.rbegin() + 1; it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Poly Poly::derivative() const {
    Poly p(mode_);
    if (c_.size() <= 1) return p;
    p.c_.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) p.c_.push_back(c_[i] * Scalar(static_cast<long>(i)));
    p.trim();
    return p;
}

Poly Poly::scale(const Scalar& k) const {
    if (k.mode() != mode_) throw mode_error("scale factor mode mismatch");
    Poly p(mode_);
    if (k.is_zero()) return p;
    p.c_.reserve(c_.size());
    for (const auto& c : c_) p.c_.push_back(c * k);
    p.trim();
    return p;
}

Poly Poly::pow(unsigned k) const {
    Poly result = Poly::constant(Scalar::one(mode_));
    Poly base = *this;
    while (k) {
        if (k & 1u) result = result * base;
        base = base * base;
        k >>= 1u;
    }
    return result;
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_mode(a, b);
    Poly p(a.mode_);
    p.c_.resize(std::max(a.c_.size(), b.c_.size()), Scalar::zero(a.mode_));
    for (size_t i = 0; i < p.c_.size(); ++i) p.c_[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    p.trim();
    return p;
}

Poly operator-(const Poly& a, const Poly& b) {
    require_same_mode(a, b);
    Poly p(a.mode_);
    p.c_.resize(std::max(a.c_.size(), b.c_.size()), Scalar::zero(a.mode_));
    for (size_t i = 0; i < p.c_.size(); ++i) p.c_[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    p.trim();
    return p;
}

Poly operator-(const Poly& a) { return Poly::zero(a.mode()) - a; }

Poly operator*(const Poly& a, const Poly& b) {
    require_same_mode(a, b);
    Poly p(a.mode_);
    if (a.is_zero() || b.is_zero()) return p;
    p.c_.assign(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.mode_));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            p.c_[i + j] = p.c_[i + j] + a.c_[i] * b.c_[j];
    p.trim();
    return p;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.mode_ != b.mode_ || a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

std::pair<Poly, Poly> poly_divrem(const Poly& p, const Poly& q) {
    require_same_mode(p, q);
    if (q.is_zero()) throw std::domain_error("division by zero polynomial");
    Mode m = p.mode();
    if (p.degree() < q.degree()) return {Poly::zero(m), p};
    std::vector<Scalar> rem(p.coeffs());
    int dq = q.degree();
    int dquot = p.degree() - dq;
    std::vector<Scalar> quot(static_cast<size_t>(dquot) + 1, Scalar::zero(m));
    const Scalar& lead = q.leading();
    for (int k = dquot; k >= 0; --k) {
        Scalar f = rem[static_cast<size_t>(k + dq)] / lead;
        quot[static_cast<size_t>(k)] = f;
        if (f.is_zero()) continue;
        for (int j = 0; j <= dq; ++j)
            rem[static_cast<size_t>(k + j)] = rem[static_cast<size_t>(k + j)] - f * q.coeff(j);
    }
    rem.resize(static_cast<size_t>(dq));
    Poly remainder = rem.empty() ? Poly::zero(m) : Poly::from_coeffs(std::move(rem));
    return {Poly::from_coeffs(std::move(quot)), std::move(remainder)};
}

Poly poly_exact_div(const Poly& p, const Poly& q) {
    auto [quot, rem] = poly_divrem(p, q);
    if (!rem.is_zero()) {
        if (p.mode() == Mode::Exact) throw std::logic_error("polynomial division expected to be exact");
        // Approx mode: tolerate roundoff in the remainder, return the quotient.
    }
    return quot;
}

Poly poly_interpolate(std::span<const std::pair<Scalar, Scalar>> samples) {
    if (samples.empty()) throw std::invalid_argument("no interpolation samples");
    Mode m = samples.front().first.mode();
    size_t n = samples.size();
    std::vector<Scalar> x, dd;
    x.reserve(n);
    dd.reserve(n);
    for (const auto& [pt, val] : samples) {
        if (pt.mode() != m || val.mode() != m) throw mode_error("mixed sample modes");
        x.push_back(pt);
        dd.push_back(val);
    }
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) {
            Scalar dx = x[i] - x[i - j];
            if (dx.is_zero()) throw std::invalid_argument("duplicate interpolation points");
            dd[i] = (dd[i] - dd[i - 1]) / dx;
        }
    Poly result = Poly::zero(m);
    Poly basis = Poly::constant(Scalar::one(m));
    for (size_t j = 0; j < n; ++j) {
        result = result + basis.scale(dd[j]);
        if (j + 1 < n)
            basis = basis * Poly::from_coeffs({-x[j], Scalar::one(m)});
    }
    return result;
}

namespace {

// Unit in {1, i, -1, -i} rotating g into re > 0, or re = 0 with im > 0.
GaussianRational canonical_unit_for(const GaussianRational& g) {
    auto positive = [](const GaussianRational& v) {
        return v.re > 0 || (v.re == 0 && v.im > 0);
    };
    GaussianRational unit(Rational(1), Rational(0));
    GaussianRational i(Rational(0), Rational(1));
    GaussianRational r = g;
    for (int k = 0; k < 4; ++k) {
        if (positive(r)) return unit;
        r = r * i;
        unit = unit * i;
    }
    return unit;  // g == 0
}

}  // namespace

Poly primitive_normalize(const Poly& p) {
    if (p.is_zero()) return p;
    if (p.mode() == Mode::Approx) {
        Scalar inv = Scalar::one(Mode::Approx) / p.leading();
        return p.scale(inv);
    }
    // Clear denominators across re and im of every coefficient.
    mpz_class den_lcm(1);
    for (const auto& c : p.coeffs()) {
        const auto& g = c.exact_value();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), g.re.get_den().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), g.im.get_den().get_mpz_t());
    }
    Scalar scale = Scalar::exact(Rational(den_lcm));
    Poly q = p.scale(scale);
    // Divide by the Gaussian-integer content.
    GaussianRational g(Rational(0), Rational(0));
    for (const auto& c : q.coeffs()) g = gaussian_int_gcd(g, c.exact_value());
    Poly r = q.scale(Scalar::exact(GaussianRational(Rational(1))) / Scalar::exact(g));
    GaussianRational unit = canonical_unit_for(r.leading().exact_value());
    return r.scale(Scalar::exact(unit));
}

double max_coeff_magnitude(const Poly& p) {
    double m = 0.0;
    for (const auto& c : p.coeffs()) m = std::max(m, c.abs());
    return m;
}

}  // namespace twoarc
