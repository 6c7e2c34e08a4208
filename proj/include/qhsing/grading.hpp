// Positive integer gradings: decide whether f is quasi-homogeneous and, if
// so, produce the canonical weight vector and weighted degree.
//
// Canonical choice when several gradings exist: among all positive integer
// weight vectors making f homogeneous, take the one minimizing the weighted
// degree d, breaking ties by lexicographically smallest (m_1, ..., m_n).
// Minimality forces gcd(m_1, ..., m_n) = 1.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "qhsing/errors.hpp"
#include "qhsing/polynomial.hpp"
#include "qhsing/rational.hpp"

namespace qhsing {

struct Grading {
    std::vector<std::int64_t> weights;  // m_i >= 1, gcd 1
    std::int64_t degree = 0;            // d = |f| >= 1

    std::size_t nvars() const { return weights.size(); }

    std::int64_t weight_sum() const {
        return std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
    }

    // Top degree of the Jacobi ring of a quasi-homogeneous isolated
    // singularity: sigma = sum_i (d - 2 m_i).
    std::int64_t socle_degree() const {
        return static_cast<std::int64_t>(weights.size()) * degree - 2 * weight_sum();
    }

    bool operator==(const Grading& other) const {
        return weights == other.weights && degree == other.degree;
    }
};

inline std::int64_t weighted_degree(const Monomial& m, const std::vector<std::int64_t>& weights) {
    if (m.nvars() != weights.size())
        throw std::invalid_argument("monomial length does not match weight count");
    std::int64_t d = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) d += static_cast<std::int64_t>(m[i]) * weights[i];
    return d;
}

inline std::int64_t weighted_degree(const Monomial& m, const Grading& g) {
    return weighted_degree(m, g.weights);
}

// Degree of f if it is homogeneous under the given weights, nothing
// otherwise. f must be nonzero.
inline std::optional<std::int64_t> homogeneous_degree(const Polynomial& f,
                                                      const std::vector<std::int64_t>& weights) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial has no degree");
    std::optional<std::int64_t> d;
    for (const auto& [m, c] : f.terms()) {
        const std::int64_t dm = weighted_degree(m, weights);
        if (!d) {
            d = dm;
        } else if (*d != dm) {
            return std::nullopt;
        }
    }
    return d;
}

// Number of monomials in nvars variables with the given weighted degree.
inline std::int64_t count_monomials_of_weighted_degree(const std::vector<std::int64_t>& weights,
                                                       std::int64_t target) {
    if (target < 0) return 0;
    std::vector<std::int64_t> ways(static_cast<std::size_t>(target) + 1, 0);
    ways[0] = 1;
    for (std::int64_t w : weights) {
        if (w <= 0) throw std::invalid_argument("weights must be positive");
        for (std::int64_t s = w; s <= target; ++s)
            ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - w)];
    }
    return ways[static_cast<std::size_t>(target)];
}

namespace detail {

// One linear inequality sum_j coeffs[j] * t_j >= rhs.
struct LinearIneq {
    std::vector<Rational> coeffs;
    Rational rhs;
};

// Fourier-Motzkin elimination: find a rational point satisfying every
// inequality, or report infeasibility. Dimensions here are tiny (at most
// the variable count of f), so the quadratic blowup is irrelevant.
inline std::optional<std::vector<Rational>> feasible_point(std::vector<LinearIneq> system,
                                                           std::size_t nvars) {
    // bounds[j] stores, for variable j, the lower/upper bound rows in terms
    // of variables 0..j-1 as (coeffs over t_0..t_{j-1}, constant).
    struct Bounds {
        std::vector<LinearIneq> lower;  // t_j >= expr
        std::vector<LinearIneq> upper;  // t_j <= expr
    };
    std::vector<Bounds> bounds(nvars);

    for (std::size_t j = nvars; j-- > 0;) {
        std::vector<LinearIneq> rest;
        for (auto& ineq : system) {
            const Rational c = ineq.coeffs[j];
            if (c == 0) {
                rest.push_back(std::move(ineq));
                continue;
            }
            // Normalize to t_j >= / <= (rhs - sum_{i<j} a_i t_i) / c.
            LinearIneq bound;
            bound.coeffs.assign(ineq.coeffs.begin(), ineq.coeffs.begin() + static_cast<std::ptrdiff_t>(j));
            for (auto& a : bound.coeffs) a /= c;
            bound.rhs = ineq.rhs / c;
            if (c > 0)
                bounds[j].lower.push_back(std::move(bound));
            else
                bounds[j].upper.push_back(std::move(bound));
        }
        // A bound row encodes the value rhs - sum coeffs[i] t_i; feasibility
        // of t_j needs lower <= upper for every pair, i.e.
        // sum (lo.c - hi.c) t >= lo.rhs - hi.rhs.
        for (const auto& lo : bounds[j].lower) {
            for (const auto& hi : bounds[j].upper) {
                LinearIneq combined;
                combined.coeffs.resize(j);
                for (std::size_t i = 0; i < j; ++i) combined.coeffs[i] = lo.coeffs[i] - hi.coeffs[i];
                combined.rhs = lo.rhs - hi.rhs;
                rest.push_back(std::move(combined));
            }
        }
        system = std::move(rest);
    }

    // Only constant rows remain: 0 >= rhs.
    for (const auto& ineq : system)
        if (ineq.rhs > 0) return std::nullopt;

    // Back-substitute, preferring the value 1, then small integers.
    std::vector<Rational> point(nvars, 0);
    auto evaluate = [&](const LinearIneq& b, std::size_t j) {
        Rational v = b.rhs;
        for (std::size_t i = 0; i < j; ++i) v -= b.coeffs[i] * point[i];
        return v;
    };
    for (std::size_t j = 0; j < nvars; ++j) {
        std::optional<Rational> lo, hi;
        for (const auto& b : bounds[j].lower) {
            Rational v = evaluate(b, j);
            if (!lo || v > *lo) lo = v;
        }
        for (const auto& b : bounds[j].upper) {
            Rational v = evaluate(b, j);
            if (!hi || v < *hi) hi = v;
        }
        Rational chosen;
        const Rational one(1);
        if ((!lo || *lo <= one) && (!hi || *hi >= one)) {
            chosen = one;
        } else if (lo) {
            Rational candidate(rational_ceil(*lo));
            if (!hi || candidate <= *hi)
                chosen = candidate;
            else
                chosen = (*lo + *hi) / 2;
        } else {
            chosen = Rational(rational_floor(*hi));
        }
        point[j] = chosen;
    }
    return point;
}

}  // namespace detail

// Detect the canonical positive integer grading of f, or throw
// NotQuasiHomogeneous. See the header comment for the normalization rule.
inline Grading find_weights(const Polynomial& f) {
    if (f.is_zero())
        throw NotQuasiHomogeneous("zero polynomial admits no positive grading");
    if (f.is_constant())
        throw NotQuasiHomogeneous("constant polynomial admits no positive grading");
    const std::size_t n = f.nvars();

    std::vector<Monomial> mons;
    mons.reserve(f.term_count());
    for (const auto& [m, c] : f.terms()) mons.push_back(m);

    // Homogeneity constraints (a_j - a_0) . m = 0, solved exactly.
    std::vector<std::vector<Rational>> rows;
    for (std::size_t j = 1; j < mons.size(); ++j) {
        std::vector<Rational> row(n);
        bool nonzero = false;
        for (std::size_t i = 0; i < n; ++i) {
            row[i] = Rational(mons[j][i] - mons[0][i]);
            if (row[i] != 0) nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
    }

    // Gauss-Jordan elimination; record pivot rows per column.
    std::vector<int> pivot_row_of_col(n, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        const Rational inv = rows[rank][col];
        for (auto& v : rows[rank]) v /= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const Rational factor = rows[r][col];
            for (std::size_t i = 0; i < n; ++i) rows[r][i] -= factor * rows[rank][i];
        }
        pivot_row_of_col[col] = static_cast<int>(rank);
        ++rank;
    }

    std::vector<std::size_t> free_cols;
    for (std::size_t i = 0; i < n; ++i)
        if (pivot_row_of_col[i] < 0) free_cols.push_back(i);
    const std::size_t k = free_cols.size();
    if (k == 0)
        throw NotQuasiHomogeneous("only the zero weight vector is consistent with f");

    // Express m_i as a linear form in the free variables t_0..t_{k-1}:
    // free column -> unit form, pivot column -> minus the reduced row.
    std::vector<std::vector<Rational>> form(n, std::vector<Rational>(k, 0));
    for (std::size_t j = 0; j < k; ++j) form[free_cols[j]][j] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const int pr = pivot_row_of_col[i];
        if (pr < 0) continue;
        for (std::size_t j = 0; j < k; ++j) form[i][j] = -rows[static_cast<std::size_t>(pr)][free_cols[j]];
    }

    // Strict positivity: m_i >= 1 for all i, via Fourier-Motzkin.
    std::vector<detail::LinearIneq> system;
    for (std::size_t i = 0; i < n; ++i) system.push_back({form[i], Rational(1)});
    auto t0 = detail::feasible_point(std::move(system), k);
    if (!t0)
        throw NotQuasiHomogeneous("no positive weight vector makes f homogeneous");

    // Scale the rational solution to an integral one; its degree bounds the
    // search for the canonical minimum.
    std::vector<Rational> m_rat(n);
    Integer denom_lcm(1);
    for (std::size_t i = 0; i < n; ++i) {
        Rational v(0);
        for (std::size_t j = 0; j < k; ++j) v += form[i][j] * (*t0)[j];
        m_rat[i] = v;
        mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), v.get_den().get_mpz_t());
    }
    std::int64_t degree_ub = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Rational scaled = m_rat[i] * Rational(denom_lcm);
        degree_ub += scaled.get_num().get_si() * mons[0][i];
    }

    // Every coordinate of a degree-minimal solution lies in [1, degree_ub],
    // so enumerating free coordinates over that box finds the optimum.
    std::vector<std::int64_t> best_weights;
    std::int64_t best_degree = 0;
    std::vector<std::int64_t> t(k, 1);
    const std::int64_t box = degree_ub;
    long double budget = 1.0L;
    for (std::size_t j = 0; j < k; ++j) budget *= static_cast<long double>(box);
    if (budget > 5e7L)
        throw std::runtime_error("weight normalization search exceeded its budget");
    std::vector<std::int64_t> m_int(n);
    for (;;) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            Rational v(0);
            for (std::size_t j = 0; j < k; ++j) v += form[i][j] * Rational(static_cast<long>(t[j]));
            if (!is_integer(v) || v < 1) {
                ok = false;
            } else {
                m_int[i] = v.get_num().get_si();
            }
        }
        if (ok) {
            std::int64_t d = 0;
            for (std::size_t i = 0; i < n; ++i) d += m_int[i] * mons[0][i];
            if (best_weights.empty() || d < best_degree ||
                (d == best_degree && m_int < best_weights)) {
                best_weights = m_int;
                best_degree = d;
            }
        }
        // Odometer over [1, box]^k.
        std::size_t j = 0;
        while (j < k && ++t[j] > box) t[j++] = 1;
        if (j == k) break;
    }
    if (best_weights.empty())
        throw NotQuasiHomogeneous("no positive integer weight vector makes f homogeneous");

    Grading g{std::move(best_weights), best_degree};
    // Minimality of d forces primitivity; a violation here is a bug.
    std::int64_t gcd_all = 0;
    for (auto w : g.weights) gcd_all = std::gcd(gcd_all, w);
    if (gcd_all != 1) throw InternalCheckFailure("canonical weight vector is not primitive");
    const auto check = homogeneous_degree(f, g.weights);
    if (!check || *check != g.degree)
        throw InternalCheckFailure("weight detection produced a non-homogeneous grading");
    return g;
}

// Validate a user-supplied weight vector against f and normalize it to the
// primitive (gcd 1) representative.
inline Grading grading_from_weights(const Polynomial& f, std::vector<std::int64_t> weights) {
    if (weights.size() != f.nvars())
        throw std::invalid_argument("weight count does not match variable count");
    for (auto w : weights)
        if (w < 1) throw std::invalid_argument("weights must be positive integers");
    if (f.is_zero() || f.is_constant())
        throw NotQuasiHomogeneous("zero or constant polynomial admits no positive grading");
    std::int64_t gcd_all = 0;
    for (auto w : weights) gcd_all = std::gcd(gcd_all, w);
    for (auto& w : weights) w /= gcd_all;
    auto d = homogeneous_degree(f, weights);
    if (!d)
        throw NotQuasiHomogeneous("f is not homogeneous under the supplied weights");
    return Grading{std::move(weights), *d};
}

}  // namespace qhsing
