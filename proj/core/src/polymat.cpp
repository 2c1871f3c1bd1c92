#include "twoarc/polymat.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace twoarc {

PolyMat::PolyMat(int rows, int cols, Mode m) : rows_(rows), cols_(cols), mode_(m) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimensions");
    e_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Poly::zero(m));
}

PolyMat PolyMat::from_entries(int rows, int cols, std::vector<Poly> entries) {
    if (entries.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols))
        throw std::invalid_argument("entry count does not match dimensions");
    Mode m = entries.empty() ? Mode::Exact : entries.front().mode();
    PolyMat mat(rows, cols, m);
    for (auto& p : entries)
        if (p.mode() != m) throw mode_error("mixed entry modes");
    mat.e_ = std::move(entries);
    return mat;
}

const Poly& PolyMat::at(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    return e_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)];
}

void PolyMat::set(int r, int c, Poly p) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    if (p.mode() != mode_) throw mode_error("entry mode mismatch");
    e_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)] = std::move(p);
}

namespace detail {

std::complex<double> complex_det(std::vector<std::complex<double>>& a, int n) {
    auto at = [&](int r, int c) -> std::complex<double>& {
        return a[static_cast<size_t>(r) * static_cast<size_t>(n) + static_cast<size_t>(c)];
    };
    std::complex<double> det = 1.0;
    for (int k = 0; k < n; ++k) {
        int pivot = k;
        double best = std::abs(at(k, k));
        for (int i = k + 1; i < n; ++i)
            if (std::abs(at(i, k)) > best) {
                best = std::abs(at(i, k));
                pivot = i;
            }
        if (best == 0.0) return 0.0;
        if (pivot != k) {
            for (int c = 0; c < n; ++c) std::swap(at(k, c), at(pivot, c));
            det = -det;
        }
        det *= at(k, k);
        for (int i = k + 1; i < n; ++i) {
            std::complex<double> f = at(i, k) / at(k, k);
            for (int c = k; c < n; ++c) at(i, c) -= f * at(k, c);
        }
    }
    return det;
}

namespace {

template <class R, class IsZero, class ExactDiv>
R bareiss(std::vector<R>& a, int n, R one, IsZero is_zero, ExactDiv exact_div) {
    auto at = [&](int r, int c) -> R& {
        return a[static_cast<size_t>(r) * static_cast<size_t>(n) + static_cast<size_t>(c)];
    };
    if (n == 0) return one;
    bool negate = false;
    R prev = one;
    for (int k = 0; k + 1 < n; ++k) {
        if (is_zero(at(k, k))) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!is_zero(at(i, k))) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return one - one;  // zero column, singular
            for (int c = k; c < n; ++c) std::swap(at(k, c), at(swap_row, c));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                at(i, j) = exact_div(at(i, j) * at(k, k) - at(i, k) * at(k, j), prev);
            at(i, k) = at(i, k) - at(i, k);  // zero of the right kind
        }
        prev = at(k, k);
    }
    R det = at(n - 1, n - 1);
    return negate ? (one - one) - det : det;
}

}  // namespace

Scalar scalar_det(std::vector<Scalar> a, int n) {
    if (n == 0) return Scalar(1);
    if (a.front().mode() == Mode::Approx) {
        std::vector<std::complex<double>> m(a.size());
        for (size_t i = 0; i < a.size(); ++i) m[i] = a[i].to_complex();
        return Scalar::approx(complex_det(m, n));
    }
    return bareiss<Scalar>(
        a, n, Scalar(1), [](const Scalar& s) { return s.is_zero(); },
        [](const Scalar& x, const Scalar& y) { return x / y; });
}

Poly poly_det_bareiss(std::vector<Poly> a, int n, Mode m) {
    if (m == Mode::Approx)
        throw mode_error("fraction-free elimination requires exact entries");
    return bareiss<Poly>(
        a, n, Poly::constant(Scalar::one(m)), [](const Poly& p) { return p.is_zero(); },
        [](const Poly& x, const Poly& y) { return poly_exact_div(x, y); });
}

std::vector<std::complex<double>> det_sample_nodes(const ApproxDetOptions& opts) {
    int count = opts.degree_bound + 1;
    std::vector<std::complex<double>> nodes;
    nodes.reserve(static_cast<size_t>(count));
    if (opts.nodes == ApproxDetOptions::Nodes::Circle) {
        for (int k = 0; k < count; ++k) {
            double th = 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.5) / count;
            nodes.emplace_back(opts.center + opts.radius * std::cos(th), opts.radius * std::sin(th));
        }
    } else {
        for (int k = 0; k < count; ++k) {
            double th = std::numbers::pi * (2.0 * k + 1.0) / (2.0 * count);
            nodes.emplace_back(opts.center + opts.radius * std::cos(th), 0.0);
        }
    }
    return nodes;
}

}  // namespace detail

Poly polymat_det(const PolyMat& m, const std::optional<ApproxDetOptions>& opts) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    int n = m.rows();
    if (m.mode() == Mode::Exact) {
        std::vector<Poly> a;
        a.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) a.push_back(m.at(r, c));
        return detail::poly_det_bareiss(std::move(a), n, m.mode());
    }
    if (!opts) throw std::invalid_argument("approx determinant requires a degree bound");
    auto nodes = detail::det_sample_nodes(*opts);
    std::vector<std::pair<Scalar, Scalar>> samples;
    samples.reserve(nodes.size());
    for (auto z : nodes) {
        Scalar x = Scalar::approx(z);
        std::vector<std::complex<double>> vals(static_cast<size_t>(n) * static_cast<size_t>(n));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                vals[static_cast<size_t>(r) * n + c] = m.at(r, c).eval(x).to_complex();
        samples.emplace_back(x, Scalar::approx(detail::complex_det(vals, n)));
    }
    return poly_interpolate(samples);
}

}  // namespace twoarc
