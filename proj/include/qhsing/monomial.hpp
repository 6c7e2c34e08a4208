// Power products as exponent vectors. The ambient variable count is the
// length of the vector; mixing lengths is a caller bug and throws.
#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhsing {

struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
    Monomial(std::initializer_list<int> e) : exps(e) {}
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

    static Monomial one(std::size_t nvars) { return Monomial(nvars); }

    static Monomial variable(std::size_t i, std::size_t nvars, int power = 1) {
        Monomial m(nvars);
        m.exps.at(i) = power;
        return m;
    }

    std::size_t nvars() const { return exps.size(); }

    int operator[](std::size_t i) const { return exps[i]; }

    bool is_one() const {
        return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
    }

    std::int64_t total_degree() const {
        return std::accumulate(exps.begin(), exps.end(), std::int64_t{0});
    }

    bool divides(const Monomial& other) const {
        check_same_size(other);
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > other.exps[i]) return false;
        return true;
    }

    // Quotient by a divisor; caller guarantees divisibility.
    Monomial divided_by(const Monomial& other) const {
        check_same_size(other);
        Monomial q(exps.size());
        for (std::size_t i = 0; i < exps.size(); ++i) {
            q.exps[i] = exps[i] - other.exps[i];
            if (q.exps[i] < 0) throw std::invalid_argument("monomial quotient with negative exponent");
        }
        return q;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        a.check_same_size(b);
        Monomial p(a.exps.size());
        for (std::size_t i = 0; i < a.exps.size(); ++i) p.exps[i] = a.exps[i] + b.exps[i];
        return p;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        a.check_same_size(b);
        Monomial m(a.exps.size());
        for (std::size_t i = 0; i < a.exps.size(); ++i) m.exps[i] = std::max(a.exps[i], b.exps[i]);
        return m;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        a.check_same_size(b);
        for (std::size_t i = 0; i < a.exps.size(); ++i)
            if (a.exps[i] > 0 && b.exps[i] > 0) return false;
        return true;
    }

    // x_i^k with every other exponent zero, k >= 1.
    bool is_pure_power(std::size_t i) const {
        if (exps[i] < 1) return false;
        for (std::size_t j = 0; j < exps.size(); ++j)
            if (j != i && exps[j] != 0) return false;
        return true;
    }

    bool operator==(const Monomial& other) const { return exps == other.exps; }
    bool operator!=(const Monomial& other) const { return exps != other.exps; }

    std::string to_string(const std::vector<std::string>& names) const {
        std::string out;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (!out.empty()) out += "*";
            out += names.at(i);
            if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
        }
        return out.empty() ? "1" : out;
    }

private:
    void check_same_size(const Monomial& other) const {
        if (exps.size() != other.exps.size())
            throw std::invalid_argument("monomials live in different variable counts");
    }
};

// Total degree first, then lexicographic on the exponent sequence. This is
// the canonical storage/printing order of Polynomial; it knows nothing
// about weights.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.exps.size() != b.exps.size())
            throw std::invalid_argument("monomials live in different variable counts");
        const auto da = a.total_degree();
        const auto db = b.total_degree();
        if (da != db) return da < db;
        return a.exps < b.exps;
    }
};

}  // namespace qhsing
