#include "twoarc/newton.hpp"

#include <stdexcept>

namespace twoarc {

bool variant_is_even(Variant v) {
    return v == Variant::EvenEndpoint || v == Variant::EvenY || v == Variant::EvenX;
}

std::array<int, 4> variant_signs(Variant v) {
    switch (v) {
        case Variant::OddEndpoint: return {-1, -1, -1, -1};
        case Variant::OddY: return {+1, +1, +1, +1};
        case Variant::OddX: return {+1, -1, -1, +1};
        case Variant::EvenEndpoint: return {-1, +1, -1, -1};
        case Variant::EvenY: return {+1, +1, +1, -1};
        case Variant::EvenX: return {+1, -1, +1, +1};
    }
    throw std::logic_error("unreachable");
}

SystemShape SystemShape::make(int n, Variant v) {
    SystemShape s;
    s.n = n;
    s.variant = v;
    s.even = variant_is_even(v);
    if (s.even) {
        if (n < 2 || n % 2 != 0) throw std::invalid_argument("even variant needs even n >= 2");
        s.m = (n - 2) / 2;
    } else {
        if (n < 3 || n % 2 != 1) throw std::invalid_argument("odd variant needs odd n >= 3");
        s.m = (n - 1) / 2;
    }
    switch (v) {
        case Variant::OddEndpoint: s.nu = s.m - 1; s.mu = s.m + 1; break;
        case Variant::OddY: s.nu = s.m + 1; s.mu = s.m - 1; break;
        case Variant::OddX: s.nu = s.m; s.mu = s.m; break;
        case Variant::EvenEndpoint: s.nu = s.m; s.mu = s.m + 1; break;
        case Variant::EvenY: s.nu = s.m + 1; s.mu = s.m; break;
        case Variant::EvenX: s.nu = s.m + 1; s.mu = s.m; break;
    }
    return s;
}

namespace {

Scalar half_in(Mode m) { return m == Mode::Exact ? Scalar::rational(1, 2) : Scalar::approx(0.5); }
Scalar inverse_int_in(Mode m, long k) {
    return m == Mode::Exact ? Scalar::rational(1, k) : Scalar::approx(1.0 / static_cast<double>(k));
}

Mode mode_of(const Scalar& x) { return x.mode(); }
Mode mode_of(const Poly& x) { return x.mode(); }

Scalar apply_scale(const Scalar& x, const Scalar& f) { return x * f; }
Poly apply_scale(const Poly& x, const Scalar& f) { return x.scale(f); }

template <class R>
std::vector<R> power_sums_impl(const SystemShape& shape, const std::array<R, 4>& pts) {
    int K = shape.data_length();
    auto signs = variant_signs(shape.variant);
    Mode m = mode_of(pts[0]);
    Scalar half = half_in(m);
    std::array<R, 4> pw = pts;  // running k-th powers
    std::vector<R> s;
    s.reserve(static_cast<size_t>(K));
    for (int k = 1; k <= K; ++k) {
        if (k > 1)
            for (int i = 0; i < 4; ++i) pw[i] = pw[i] * pts[i];
        R acc = pw[0];
        if (signs[0] < 0) acc = -acc;
        for (int i = 1; i < 4; ++i) acc = signs[i] > 0 ? acc + pw[i] : acc - pw[i];
        s.push_back(apply_scale(acc, half));
    }
    return s;
}

template <class R>
std::vector<R> f_sequence_impl(const std::vector<R>& s, const R& one) {
    Mode m = mode_of(one);
    std::vector<R> F;
    F.reserve(s.size() + 1);
    F.push_back(one);
    for (size_t k = 1; k <= s.size(); ++k) {
        R acc = s[0] * F[k - 1];
        for (size_t i = 2; i <= k; ++i) acc = acc + s[i - 1] * F[k - i];
        F.push_back(apply_scale(-acc, inverse_int_in(m, static_cast<long>(k))));
    }
    return F;
}

Rational factorial(int k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(f);
}

}  // namespace

std::vector<Scalar> power_sums(const SystemShape& shape, const std::array<Scalar, 4>& pts) {
    return power_sums_impl(shape, pts);
}

std::vector<Poly> power_sums(const SystemShape& shape, const std::array<Poly, 4>& pts) {
    return power_sums_impl(shape, pts);
}

std::vector<Scalar> f_sequence(const std::vector<Scalar>& s) {
    Mode m = s.empty() ? Mode::Exact : s.front().mode();
    return f_sequence_impl(s, Scalar::one(m));
}

std::vector<Poly> f_sequence(const std::vector<Poly>& s) {
    Mode m = s.empty() ? Mode::Exact : s.front().mode();
    return f_sequence_impl(s, Poly::constant(Scalar::one(m)));
}

Scalar f_from_determinant(const std::vector<Scalar>& s, int k) {
    if (k < 0) return Scalar(0);
    if (k == 0) return Scalar(1);
    if (static_cast<size_t>(k) > s.size()) throw std::invalid_argument("not enough power sums");
    Mode m = s.front().mode();
    std::vector<Scalar> a(static_cast<size_t>(k) * static_cast<size_t>(k), Scalar::zero(m));
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) {
            if (c <= r)
                a[static_cast<size_t>(r) * k + c] = s[static_cast<size_t>(r - c)];
            else if (c == r + 1)
                a[static_cast<size_t>(r) * k + c] =
                    m == Mode::Exact ? Scalar(r + 1) : Scalar::approx(static_cast<double>(r + 1));
        }
    Scalar det = detail::scalar_det(std::move(a), k);
    Scalar fac = m == Mode::Exact ? Scalar::exact(factorial(k))
                                  : Scalar::approx(factorial(k).get_d());
    Scalar sign = (k % 2 == 0) ? Scalar::one(m) : -Scalar::one(m);
    return sign * det / fac;
}

Poly f_from_determinant(const std::vector<Poly>& s, int k) {
    if (k < 0) return Poly::zero(Mode::Exact);
    if (k == 0) return Poly::constant(Scalar(1));
    if (static_cast<size_t>(k) > s.size()) throw std::invalid_argument("not enough power sums");
    Mode m = s.front().mode();
    std::vector<Poly> a(static_cast<size_t>(k) * static_cast<size_t>(k), Poly::zero(m));
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) {
            if (c <= r)
                a[static_cast<size_t>(r) * k + c] = s[static_cast<size_t>(r - c)];
            else if (c == r + 1)
                a[static_cast<size_t>(r) * k + c] = Poly::constant(Scalar(r + 1));
        }
    Poly det = detail::poly_det_bareiss(std::move(a), k, m);
    Scalar fac = Scalar::exact(factorial(k));
    Scalar sign = (k % 2 == 0) ? Scalar(1) : Scalar(-1);
    return det.scale(sign / fac);
}

namespace {

template <class R>
std::vector<R> v_equation_impl(const std::vector<R>& F_seq, int nu, int mu, const R& zero,
                               auto det_fn) {
    if (nu < 0 || mu < 0) throw std::invalid_argument("negative side size");
    if (F_seq.size() < static_cast<size_t>(nu + mu) + 1)
        throw std::invalid_argument("F sequence too short");
    auto F = [&](int j) -> R { return j < 0 ? zero : F_seq[static_cast<size_t>(j)]; };
    std::vector<R> out;
    out.reserve(static_cast<size_t>(mu) + 1);
    // base matrix, entry (r, c) = F_{nu + r - c} with 0-based r, c
    std::vector<R> base(static_cast<size_t>(mu) * static_cast<size_t>(mu), zero);
    for (int r = 0; r < mu; ++r)
        for (int c = 0; c < mu; ++c) base[static_cast<size_t>(r) * mu + c] = F(nu + r - c);
    out.push_back(det_fn(base, mu));
    for (int i = 1; i <= mu; ++i) {
        std::vector<R> a = base;
        for (int r = 0; r < mu; ++r) a[static_cast<size_t>(r) * mu + (i - 1)] = -F(nu + 1 + r);
        out.push_back(det_fn(std::move(a), mu));
    }
    return out;
}

}  // namespace

std::vector<Scalar> v_equation_coefficients(const std::vector<Scalar>& s, int nu, int mu) {
    if (static_cast<int>(s.size()) < nu + mu)
        throw std::invalid_argument("need nu+mu power sums");
    auto F = f_sequence(s);
    Mode m = s.empty() ? Mode::Exact : s.front().mode();
    return v_equation_impl<Scalar>(F, nu, mu, Scalar::zero(m),
                                   [](std::vector<Scalar> a, int n) { return detail::scalar_det(std::move(a), n); });
}

std::vector<Poly> v_equation_coefficients(const std::vector<Poly>& s, int nu, int mu) {
    if (static_cast<int>(s.size()) < nu + mu)
        throw std::invalid_argument("need nu+mu power sums");
    auto F = f_sequence(s);
    Mode m = s.empty() ? Mode::Exact : s.front().mode();
    return v_equation_impl<Poly>(F, nu, mu, Poly::zero(m), [m](std::vector<Poly> a, int n) {
        return detail::poly_det_bareiss(std::move(a), n, m);
    });
}

VRecovery recover_v_polynomial(const std::vector<Scalar>& s, int nu, int mu) {
    auto coeffs = v_equation_coefficients(s, nu, mu);
    Scalar det_f = coeffs.front();
    if (det_f.is_zero())
        throw std::domain_error("det F vanishes: u and v sides are not disjoint");
    Mode m = det_f.mode();
    std::vector<Scalar> monic(static_cast<size_t>(mu) + 1, Scalar::zero(m));
    monic[static_cast<size_t>(mu)] = Scalar::one(m);
    for (int i = 1; i <= mu; ++i)
        monic[static_cast<size_t>(mu - i)] = coeffs[static_cast<size_t>(i)] / det_f;
    return {Poly::from_coeffs(std::move(monic)), det_f};
}

}  // namespace twoarc
