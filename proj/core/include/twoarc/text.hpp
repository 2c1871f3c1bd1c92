#ifndef TWOARC_TEXT_HPP
#define TWOARC_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "twoarc/poly.hpp"

namespace twoarc {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Scalar text syntax.
 *
 * Exact values: `p`, `-p/q`, `R+Si`, `R-Si` with integer p, q and rational
 * R, S (e.g. `-1/2`, `3/4+1/3i`). Decimal or scientific literals parse as
 * Approx values, with an optional `i` suffix in the same two-part form.
 */
Scalar parse_scalar(std::string_view text);

/// Inverse of parse_scalar: rational syntax for exact values, 17 significant
/// digits for approximate ones.
std::string format_scalar(const Scalar& s);

std::string format_complex(std::complex<double> z);

/// Comma-separated scalar list.
std::vector<Scalar> parse_scalar_list(std::string_view text);

/// Polynomials serialize as JSON arrays of coefficient strings, low to high.
nlohmann::ordered_json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

}  // namespace twoarc

#endif
