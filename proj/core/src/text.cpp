#include "twoarc/text.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>

namespace twoarc {

namespace {

bool looks_exact(std::string_view t) {
    for (char c : t) {
        if (std::isdigit(static_cast<unsigned char>(c))) continue;
        if (c == '+' || c == '-' || c == '/' || c == 'i') continue;
        return false;
    }
    return !t.empty();
}

Rational parse_rational_token(std::string_view t) {
    if (t.empty()) throw parse_error("empty rational token");
    std::string s(t);
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class num(s);
            return Rational(num);
        }
        mpz_class num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) throw parse_error("zero denominator in '" + s + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw parse_error("bad rational '" + s + "'");
    }
}

// Split "R+Si" / "R-Si" / "Si" / "R" at the sign separating the two parts.
// Returns {real_token, imag_token_with_sign}; empty imag means none.
std::pair<std::string, std::string> split_complex_parts(std::string_view t) {
    if (t.empty() || t.back() != 'i') return {std::string(t), ""};
    std::string_view body = t.substr(0, t.size() - 1);
    // scan backwards for the separating sign (not the leading one)
    for (size_t i = body.size(); i-- > 1;) {
        if (body[i] == '+' || body[i] == '-') {
            return {std::string(body.substr(0, i)), std::string(body.substr(i))};
        }
    }
    return {"", std::string(body)};
}

Rational parse_signed_rational(std::string_view t) {
    if (t.empty() || t == "+") return Rational(1);
    if (t == "-") return Rational(-1);
    return parse_rational_token(t);
}

double parse_double_token(std::string_view t) {
    if (t.empty()) throw parse_error("empty numeric token");
    if (t == "+") return 1.0;
    if (t == "-") return -1.0;
    double v = 0.0;
    auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (res.ec != std::errc() || res.ptr != t.data() + t.size())
        throw parse_error("bad numeric literal '" + std::string(t) + "'");
    return v;
}

// Split a decimal complex literal; the separating sign must not follow e/E.
std::pair<std::string, std::string> split_complex_parts_approx(std::string_view t) {
    if (t.empty() || t.back() != 'i') return {std::string(t), ""};
    std::string_view body = t.substr(0, t.size() - 1);
    for (size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            return {std::string(body.substr(0, i)), std::string(body.substr(i))};
        }
    }
    return {"", std::string(body)};
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

}  // namespace

Scalar parse_scalar(std::string_view text) {
    // trim
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw parse_error("empty scalar");
    if (looks_exact(text)) {
        auto [re_tok, im_tok] = split_complex_parts(text);
        if (im_tok.empty()) return Scalar::exact(parse_rational_token(re_tok));
        Rational re = re_tok.empty() ? Rational(0) : parse_rational_token(re_tok);
        return Scalar::gaussian(std::move(re), parse_signed_rational(im_tok));
    }
    auto [re_tok, im_tok] = split_complex_parts_approx(text);
    if (im_tok.empty()) return Scalar::approx(parse_double_token(re_tok));
    double re = re_tok.empty() ? 0.0 : parse_double_token(re_tok);
    return Scalar::approx(std::complex<double>(re, parse_double_token(im_tok)));
}

std::string format_scalar(const Scalar& s) {
    if (s.is_exact()) {
        const auto& g = s.exact_value();
        if (g.im == 0) return format_rational(g.re);
        std::string out = g.re == 0 ? "" : format_rational(g.re);
        if (g.im > 0 && !out.empty()) out += "+";
        Rational im = g.im;
        if (im < 0) {
            out += "-";
            im = -im;
        }
        out += format_rational(im) + "i";
        return out;
    }
    return format_complex(s.to_complex());
}

std::string format_complex(std::complex<double> z) {
    if (z.imag() == 0.0) return format_double(z.real());
    std::string out = z.real() == 0.0 ? "" : format_double(z.real());
    double im = z.imag();
    if (im >= 0.0 && !out.empty()) out += "+";
    if (im < 0.0) {
        out += "-";
        im = -im;
    }
    out += format_double(im) + "i";
    return out;
}

std::vector<Scalar> parse_scalar_list(std::string_view text) {
    std::vector<Scalar> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        out.push_back(parse_scalar(text.substr(start, comma - start)));
        start = comma + 1;
        if (comma == text.size()) break;
    }
    return out;
}

nlohmann::ordered_json poly_to_json(const Poly& p) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : p.coeffs()) arr.push_back(format_scalar(c));
    return arr;
}

Poly poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw parse_error("polynomial JSON must be an array");
    std::vector<Scalar> coeffs;
    bool any_approx = false;
    for (const auto& item : j) {
        Scalar s = item.is_string() ? parse_scalar(item.get<std::string>())
                                    : Scalar::approx(item.get<double>());
        any_approx = any_approx || !s.is_exact();
        coeffs.push_back(std::move(s));
    }
    if (coeffs.empty()) return Poly::zero(Mode::Exact);
    if (any_approx)
        for (auto& c : coeffs) c = c.to_approx();
    return Poly::from_coeffs(std::move(coeffs));
}

}  // namespace twoarc
