#ifndef TWOARC_POLYMAT_HPP
#define TWOARC_POLYMAT_HPP

#include <complex>
#include <optional>
#include <vector>

#include "twoarc/poly.hpp"

namespace twoarc {

/// Rectangular matrix of polynomials, row major, uniform Scalar mode.
class PolyMat {
public:
    PolyMat(int rows, int cols, Mode m);
    static PolyMat from_entries(int rows, int cols, std::vector<Poly> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Mode mode() const { return mode_; }

    const Poly& at(int r, int c) const;
    void set(int r, int c, Poly p);

private:
    int rows_, cols_;
    Mode mode_;
    std::vector<Poly> e_;
};

struct ApproxDetOptions {
    /// Upper bound on the degree of the determinant; sample count is bound+1.
    int degree_bound = 0;
    enum class Nodes { Circle, Interval } nodes = Nodes::Circle;
    double radius = 1.0;
    double center = 0.0;
};

/* Determinant of a square PolyMat.
 *
 * Exact mode: fraction-free (Bareiss) elimination, every division exact.
 * Approx mode: evaluation at degree_bound+1 sample points followed by
 * interpolation; options are mandatory there. Sample points sit on a circle
 * or a real interval around `center` with the given radius.
 */
Poly polymat_det(const PolyMat& m, const std::optional<ApproxDetOptions>& opts = std::nullopt);

namespace detail {

/// LU determinant with partial pivoting; `a` is n x n row major, clobbered.
std::complex<double> complex_det(std::vector<std::complex<double>>& a, int n);

/// Determinant of a square Scalar matrix (Bareiss when exact, LU otherwise).
Scalar scalar_det(std::vector<Scalar> a, int n);

/// Fraction-free determinant of a square Poly matrix; entries must be exact.
Poly poly_det_bareiss(std::vector<Poly> a, int n, Mode m);

/// degree_bound+1 sample points per the options.
std::vector<std::complex<double>> det_sample_nodes(const ApproxDetOptions& opts);

}  // namespace detail

}  // namespace twoarc

#endif
