#include "synpath/numeric.hpp"

#include "synpath/errors.hpp"

#include <cctype>

namespace synpath {

namespace {

BigInt pow10(unsigned e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto fail = [&] { throw InvalidInput("not a rational number: '" + std::string(text) + "'"); };
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) fail();

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Rational num = parse_rational(text.substr(0, slash));
        Rational den = parse_rational(text.substr(slash + 1));
        if (den == 0) fail();
        Rational r = num / den;
        r.canonicalize();
        return r;
    }

    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_point = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (seen_point) ++frac_digits;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (digits.empty()) fail();
    long exponent = 0;
    if (i < text.size()) {
        if (text[i] != 'e' && text[i] != 'E') fail();
        ++i;
        std::string exp_text(text.substr(i));
        if (exp_text.empty()) fail();
        std::size_t used = 0;
        try {
            exponent = std::stol(exp_text, &used);
        } catch (const std::exception&) {
            fail();
        }
        if (used != exp_text.size()) fail();
    }
    Rational r{BigInt(digits, 10)};
    long shift = exponent - frac_digits;
    if (shift > 4000 || shift < -4000) fail();
    if (shift >= 0) {
        r *= pow10(static_cast<unsigned>(shift));
    } else {
        r /= pow10(static_cast<unsigned>(-shift));
    }
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
    Rational c = value;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_str();
}

std::string to_decimal(const Rational& value, int digits) {
    BigInt scale = pow10(static_cast<unsigned>(digits));
    Rational scaled = abs(value) * scale;
    // round half up
    BigInt q = (scaled.get_num() * 2 + scaled.get_den()) / (scaled.get_den() * 2);
    std::string s = q.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    bool zero = q == 0;
    return (value < 0 && !zero ? "-" : "") + s;
}

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace synpath
