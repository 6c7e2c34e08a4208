// Multivariate polynomials over exact rationals. Values are immutable in
// spirit: every operation returns a fresh canonical polynomial (no zero
// coefficients stored, all monomial keys of length nvars), so concurrent
// reads need no synchronization.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qhsing/monomial.hpp"
#include "qhsing/rational.hpp"

namespace qhsing {

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexLess>;

    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial zero(std::size_t nvars) { return Polynomial(nvars); }

    static Polynomial constant(std::size_t nvars, const Rational& c) {
        Polynomial p(nvars);
        p.add_term(Monomial::one(nvars), c);
        return p;
    }

    static Polynomial from_monomial(const Monomial& m, const Rational& c = 1) {
        Polynomial p(m.nvars());
        p.add_term(m, c);
        return p;
    }

    static Polynomial variable(std::size_t i, std::size_t nvars) {
        return from_monomial(Monomial::variable(i, nvars));
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rational& c) {
        if (m.nvars() != nvars_) throw std::invalid_argument("monomial has wrong variable count");
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.check_same_nvars(b);
        Polynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        a.check_same_nvars(b);
        Polynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }

    friend Polynomial operator-(const Polynomial& a) { return a.scaled(-1); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_same_nvars(b);
        Polynomial r(a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    Polynomial scaled(const Rational& c) const {
        Polynomial r(nvars_);
        if (c == 0) return r;
        for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
        return r;
    }

    Polynomial pow(unsigned k) const {
        Polynomial acc = constant(nvars_, 1);
        Polynomial base = *this;
        while (k > 0) {
            if (k & 1u) acc = acc * base;
            base = (k >>= 1u) ? base * base : base;
        }
        return acc;
    }

    // Exact formal partial derivative with respect to variable i.
    Polynomial derivative(std::size_t i) const {
        if (i >= nvars_) throw std::out_of_range("derivative variable index out of range");
        Polynomial r(nvars_);
        for (const auto& [m, c] : terms_) {
            const int e = m[i];
            if (e == 0) continue;
            Monomial dm = m;
            dm.exps[i] = e - 1;
            r.add_term(dm, c * e);
        }
        return r;
    }

    bool operator==(const Polynomial& other) const {
        return nvars_ == other.nvars_ && terms_ == other.terms_;
    }
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

private:
    void check_same_nvars(const Polynomial& other) const {
        if (nvars_ != other.nvars_)
            throw std::invalid_argument("polynomials live in different variable counts");
    }

    std::size_t nvars_;
    TermMap terms_;
};

// Canonical rendering: terms in graded-lex descending order, explicit '*',
// rationals as p/q in lowest terms. parse_polynomial(to_string(p)) == p.
inline std::string to_string(const Polynomial& p, const std::vector<std::string>& names) {
    if (names.size() != p.nvars())
        throw std::invalid_argument("variable name list has wrong length");
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (m.is_one()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += m.to_string(names);
        } else {
            out += to_string(mag) + "*" + m.to_string(names);
        }
    }
    return out;
}

// Fallback variable names for contexts that have none (tests, debugging).
inline std::vector<std::string> default_variable_names(std::size_t n) {
    static const char* kShort[] = {"x", "y", "z", "w"};
    std::vector<std::string> names;
    if (n <= 4) {
        for (std::size_t i = 0; i < n; ++i) names.emplace_back(kShort[i]);
    } else {
        for (std::size_t i = 0; i < n; ++i) names.emplace_back("x" + std::to_string(i + 1));
    }
    return names;
}

}  // namespace qhsing
