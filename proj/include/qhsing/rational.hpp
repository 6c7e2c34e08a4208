// Exact arbitrary-precision rational arithmetic, backed by GMP. Everything
// in this library is exact; no floating point anywhere.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace qhsing {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer rational_floor(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

inline Integer rational_ceil(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

// Accepts "p" or "p/q" with an optional leading sign, arbitrary precision.
// Returns nothing on any other syntax (decimals are deliberately rejected)
// or when q = 0.
inline std::optional<Rational> parse_rational(const std::string& text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = (text[i] == '-');
        ++i;
    }
    std::size_t num_begin = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == num_begin) return std::nullopt;
    std::string num = text.substr(num_begin, i - num_begin);
    std::string den = "1";
    if (i < text.size() && text[i] == '/') {
        ++i;
        std::size_t den_begin = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == den_begin) return std::nullopt;
        den = text.substr(den_begin, i - den_begin);
    }
    if (i != text.size()) return std::nullopt;
    Integer d(den);
    if (d == 0) return std::nullopt;
    Rational r = make_rational(Integer(num), d);
    if (negative) r = -r;
    return r;
}

}  // namespace qhsing
