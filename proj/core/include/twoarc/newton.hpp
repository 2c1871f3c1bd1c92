#ifndef TWOARC_NEWTON_HPP
#define TWOARC_NEWTON_HPP

#include <array>
#include <vector>

#include "twoarc/polymat.hpp"

namespace twoarc {

/* Power-sum system machinery.
 *
 * Everything here revolves around signed power sums
 *   s_k = (u_1^k + ... + u_nu^k) - (v_1^k + ... + v_mu^k)
 * and the derived sequence F_0 = 1, k F_k = -(s_1 F_{k-1} + ... + s_k F_0),
 * whose generating function is prod(1 - u_j t) / prod(1 - v_j t). The
 * unknown v-side values are recovered as roots of a single polynomial whose
 * coefficients are determinants of Toeplitz-like matrices in the F_k.
 *
 * Each variant fixes the sign pattern over the four endpoint slots
 * (a, b, c, d) together with the side sizes (nu, mu):
 *
 *   variant        (nu, mu)      signs          u-side            v-side
 *   OddEndpoint    (m-1, m+1)    (-,-,-,-)/2    {y_j}             {x_j, d}
 *   OddY           (m+1, m-1)    (+,+,+,+)/2    {x_j, d}          {y_j}
 *   OddX           (m,   m  )    (+,-,-,+)/2    {y_j, a}          {x_j}
 *   EvenEndpoint   (m,   m+1)    (-,+,-,-)/2    {x_j}             {y_j, a}
 *   EvenY          (m+1, m  )    (+,+,+,-)/2    {x_j, c}          {y_j}
 *   EvenX          (m+1, m  )    (+,-,+,+)/2    {y_j, a}          {x_j}
 *
 * with n = 2m+1 (odd variants) or n = 2m+2 (even variants).
 */
enum class Variant { OddEndpoint, OddY, OddX, EvenEndpoint, EvenY, EvenX };

bool variant_is_even(Variant v);
std::array<int, 4> variant_signs(Variant v);

struct SystemShape {
    int n = 0;
    int m = 0;
    bool even = false;
    Variant variant = Variant::OddEndpoint;
    int nu = 0;
    int mu = 0;

    /// Validates the parity of n against the variant.
    static SystemShape make(int n, Variant v);
    /// Number of power sums the variant consumes: nu + mu.
    int data_length() const { return nu + mu; }
};

/// s_1 .. s_K for K = shape.data_length(), over the endpoint slots (a,b,c,d).
std::vector<Scalar> power_sums(const SystemShape& shape, const std::array<Scalar, 4>& pts);
/// Same with polynomial-valued slots (the unknown endpoint as the monomial z).
std::vector<Poly> power_sums(const SystemShape& shape, const std::array<Poly, 4>& pts);

/// F_0 .. F_K from s_1 .. s_K by the recurrence k F_k = -sum s_i F_{k-i}.
std::vector<Scalar> f_sequence(const std::vector<Scalar>& s);
std::vector<Poly> f_sequence(const std::vector<Poly>& s);

/// F_k computed directly as (-1)^k/k! times the k x k Newton-identity
/// determinant; agrees with f_sequence and exists as an independent route.
Scalar f_from_determinant(const std::vector<Scalar>& s, int k);
Poly f_from_determinant(const std::vector<Poly>& s, int k);

/* Coefficients [det F, det F_1, ..., det F_mu] of the v-side equation
 *   v^mu det F + v^{mu-1} det F_1 + ... + det F_mu = 0,
 * where F is the mu x mu matrix with entry (r, c) = F_{nu+r-c} (1-based)
 * and F_i replaces column i by (-F_{nu+1}, ..., -F_{nu+mu}). */
std::vector<Scalar> v_equation_coefficients(const std::vector<Scalar>& s, int nu, int mu);
std::vector<Poly> v_equation_coefficients(const std::vector<Poly>& s, int nu, int mu);

struct VRecovery {
    Poly monic;    ///< z^mu + Lambda_1 z^{mu-1} + ... + Lambda_mu
    Scalar det_f;  ///< det F, exposed so callers can judge near-degeneracy
};

/// Monic polynomial whose roots are the v-side values. Throws
/// std::domain_error when det F = 0 (u and v sides not disjoint).
VRecovery recover_v_polynomial(const std::vector<Scalar>& s, int nu, int mu);

}  // namespace twoarc

#endif
