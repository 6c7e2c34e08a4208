// Buchberger's algorithm over the rationals, normal forms, and
// standard-monomial extraction for zero-dimensional ideals.
//
// The engine keeps polynomials as term vectors sorted descending under the
// order, normalizes intermediate results to integer content 1 to bound
// coefficient growth, and prunes critical pairs with the two classical
// criteria (coprime leading terms, chain). Pair selection is the normal
// strategy on (lcm degree, lcm, indices), so a run is fully deterministic;
// the reduced basis it ends at is unique anyway.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "qhsing/errors.hpp"
#include "qhsing/order.hpp"
#include "qhsing/polynomial.hpp"

namespace qhsing {

namespace detail {

inline constexpr std::int64_t kDefaultDegreeCap = 1'000'000;

struct SortedPoly {
    // Descending under the engine order; leading term first.
    std::vector<std::pair<Monomial, Rational>> terms;

    bool is_zero() const { return terms.empty(); }
    const Monomial& leading_monomial() const { return terms.front().first; }
    const Rational& leading_coefficient() const { return terms.front().second; }
};

inline SortedPoly to_sorted(const Polynomial& p, const MonomialOrder& order) {
    SortedPoly sp;
    sp.terms.assign(p.terms().begin(), p.terms().end());
    std::sort(sp.terms.begin(), sp.terms.end(),
              [&](const auto& a, const auto& b) { return order.greater(a.first, b.first); });
    return sp;
}

inline Polynomial to_polynomial(const SortedPoly& sp, std::size_t nvars) {
    Polynomial p(nvars);
    for (const auto& [m, c] : sp.terms) p.add_term(m, c);
    return p;
}

// result := a - c * x^shift * b, both inputs descending, result descending.
inline SortedPoly subtract_multiple(const SortedPoly& a, const Rational& c, const Monomial& shift,
                                    const SortedPoly& b, const MonomialOrder& order) {
    SortedPoly out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size()) {
            out.terms.push_back(a.terms[i++]);
            continue;
        }
        const Monomial bm = b.terms[j].first * shift;
        if (i == a.terms.size()) {
            out.terms.emplace_back(bm, -c * b.terms[j].second);
            ++j;
            continue;
        }
        const int cmp = order.compare(a.terms[i].first, bm);
        if (cmp > 0) {
            out.terms.push_back(a.terms[i++]);
        } else if (cmp < 0) {
            out.terms.emplace_back(bm, -c * b.terms[j].second);
            ++j;
        } else {
            Rational coef = a.terms[i].second - c * b.terms[j].second;
            if (coef != 0) out.terms.emplace_back(a.terms[i].first, std::move(coef));
            ++i;
            ++j;
        }
    }
    return out;
}

// Scale to integer coefficients with content 1 and positive leading
// coefficient. Only valid where the result is needed up to a nonzero
// scalar (candidate basis elements), never inside normal_form.
inline void normalize_content(SortedPoly& p) {
    if (p.is_zero()) return;
    Integer den_lcm(1), num_gcd(0);
    for (const auto& [m, c] : p.terms)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& [m, c] : p.terms) {
        Integer scaled_num = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
    }
    Rational factor = make_rational(den_lcm, num_gcd);
    if (p.leading_coefficient() < 0) factor = -factor;
    for (auto& [m, c] : p.terms) {
        c *= factor;
        c.canonicalize();
    }
}

inline void make_monic(SortedPoly& p) {
    if (p.is_zero()) return;
    const Rational lead = p.leading_coefficient();
    for (auto& [m, c] : p.terms) c /= lead;
}

// Full reduction of p modulo the basis: every term of the result is
// irreducible. Deterministic (first reducer in basis order wins).
inline SortedPoly reduce_full(SortedPoly p, const std::vector<SortedPoly>& basis,
                              const MonomialOrder& order, bool content_normalize) {
    SortedPoly result;
    while (!p.is_zero()) {
        const Monomial& lead = p.leading_monomial();
        const SortedPoly* reducer = nullptr;
        for (const auto& g : basis) {
            if (!g.is_zero() && g.leading_monomial().divides(lead)) {
                reducer = &g;
                break;
            }
        }
        if (reducer == nullptr) {
            result.terms.push_back(p.terms.front());
            p.terms.erase(p.terms.begin());
            continue;
        }
        const Rational c = p.leading_coefficient() / reducer->leading_coefficient();
        const Monomial shift = lead.divided_by(reducer->leading_monomial());
        p = subtract_multiple(p, c, shift, *reducer, order);
    }
    if (content_normalize) normalize_content(result);
    return result;
}

inline SortedPoly s_polynomial(const SortedPoly& f, const SortedPoly& g,
                               const MonomialOrder& order) {
    const Monomial gamma = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    SortedPoly sf;
    sf.terms = f.terms;
    const Monomial shift_f = gamma.divided_by(f.leading_monomial());
    for (auto& [m, c] : sf.terms) {
        m = m * shift_f;
        c /= f.leading_coefficient();
    }
    const Rational one(1);
    return subtract_multiple(sf, one / g.leading_coefficient(),
                             gamma.divided_by(g.leading_monomial()), g, order);
}

}  // namespace detail

struct GroebnerBasis {
    std::vector<Polynomial> generators;  // monic, reduced, ascending leading monomials
    std::vector<Monomial> leading;       // leading monomial of each generator
    MonomialOrder order;

    // All input generators were zero: the zero ideal.
    bool is_zero_ideal() const { return generators.empty(); }

    bool contains_unit() const {
        return generators.size() == 1 && leading.front().is_one();
    }
};

// Full normal form: no term of the result is divisible by any leading term
// of the basis, and p - result lies in the ideal.
inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    std::vector<detail::SortedPoly> basis;
    basis.reserve(gb.generators.size());
    for (const auto& g : gb.generators) basis.push_back(detail::to_sorted(g, gb.order));
    auto r = detail::reduce_full(detail::to_sorted(p, gb.order), basis, gb.order,
                                 /*content_normalize=*/false);
    return detail::to_polynomial(r, p.nvars());
}

// Reduced Groebner basis of the ideal generated by gens. Throws
// DegreeCapExceeded when a surviving critical pair has lcm degree beyond
// max_pair_degree.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                                std::int64_t max_pair_degree = detail::kDefaultDegreeCap) {
    if (gens.empty()) throw std::invalid_argument("buchberger requires at least one generator");
    const std::size_t nvars = gens.front().nvars();
    for (const auto& g : gens)
        if (g.nvars() != nvars) throw std::invalid_argument("generators have mixed variable counts");

    std::vector<detail::SortedPoly> basis;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        auto sp = detail::to_sorted(g, order);
        detail::normalize_content(sp);
        basis.push_back(std::move(sp));
    }

    GroebnerBasis out;
    out.order = order;
    if (basis.empty()) return out;  // zero ideal, flagged by is_zero_ideal()

    struct Pair {
        std::int64_t degree;
        Monomial lcm;
        std::size_t i, j;
    };
    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        const int cmp = order.compare(a.lcm, b.lcm);
        if (cmp != 0) return cmp < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::vector<Pair> queue;
    auto push_pairs_for = [&](std::size_t jnew) {
        for (std::size_t i = 0; i < jnew; ++i) {
            Monomial l = Monomial::lcm(basis[i].leading_monomial(), basis[jnew].leading_monomial());
            queue.push_back(Pair{order.degree(l), std::move(l), i, jnew});
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

    std::set<std::pair<std::size_t, std::size_t>> done;
    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), pair_less);
        Pair pair = std::move(*it);
        queue.erase(it);
        done.emplace(pair.i, pair.j);

        const Monomial& lm_i = basis[pair.i].leading_monomial();
        const Monomial& lm_j = basis[pair.j].leading_monomial();
        if (Monomial::coprime(lm_i, lm_j)) continue;
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pair.i || k == pair.j) continue;
            if (!basis[k].leading_monomial().divides(pair.lcm)) continue;
            auto key = [&](std::size_t a, std::size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (done.count(key(pair.i, k)) && done.count(key(pair.j, k))) chained = true;
        }
        if (chained) continue;

        if (pair.degree > max_pair_degree)
            throw DegreeCapExceeded("S-polynomial degree " + std::to_string(pair.degree) +
                                    " exceeds the configured cap " +
                                    std::to_string(max_pair_degree));

        auto s = detail::s_polynomial(basis[pair.i], basis[pair.j], order);
        auto h = detail::reduce_full(std::move(s), basis, order, /*content_normalize=*/true);
        if (!h.is_zero()) {
            basis.push_back(std::move(h));
            push_pairs_for(basis.size() - 1);
        }
    }

    // Minimal basis: drop generators whose leading monomial is divisible by
    // another kept one; process ascending so the kept set is the unique
    // minimal leading-term set.
    std::vector<std::size_t> idx(basis.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return order.less(basis[a].leading_monomial(), basis[b].leading_monomial());
    });
    std::vector<detail::SortedPoly> minimal;
    for (std::size_t id : idx) {
        const Monomial& lm = basis[id].leading_monomial();
        bool redundant = false;
        for (const auto& kept : minimal)
            if (kept.leading_monomial().divides(lm)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(basis[id]);
    }

    // Inter-reduce tails; leading terms are untouched by construction.
    std::vector<detail::SortedPoly> reduced = minimal;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        std::vector<detail::SortedPoly> others;
        for (std::size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        reduced[i] = detail::reduce_full(std::move(reduced[i]), others, order,
                                         /*content_normalize=*/true);
        detail::make_monic(reduced[i]);
    }

    for (auto& sp : reduced) {
        out.leading.push_back(sp.leading_monomial());
        out.generators.push_back(detail::to_polynomial(sp, nvars));
    }
    return out;
}

struct StandardMonomialBasis {
    std::vector<Monomial> monomials;       // ascending under the basis order
    std::vector<std::int64_t> degrees;     // weighted degrees, parallel array

    std::size_t size() const { return monomials.size(); }
};

// Monomials not divisible by any leading term. Finite exactly when every
// variable has a pure power among the leading terms; returns nothing when
// the quotient is infinite-dimensional (callers branch on it).
inline std::optional<StandardMonomialBasis> standard_monomials(const GroebnerBasis& gb) {
    const std::size_t n = gb.order.weights.size();
    if (gb.is_zero_ideal()) return std::nullopt;
    if (gb.contains_unit()) return StandardMonomialBasis{};  // quotient ring is 0

    std::vector<int> bound(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& lm : gb.leading) {
            if (lm.is_pure_power(i)) {
                if (bound[i] < 0 || lm[i] < bound[i]) bound[i] = lm[i];
            }
        }
        if (bound[i] < 0) return std::nullopt;
    }

    StandardMonomialBasis basis;
    Monomial m(n);
    for (;;) {
        bool standard = true;
        for (const auto& lm : gb.leading)
            if (lm.divides(m)) {
                standard = false;
                break;
            }
        if (standard) basis.monomials.push_back(m);
        std::size_t i = 0;
        while (i < n && ++m.exps[i] >= bound[i]) m.exps[i++] = 0;
        if (i == n) break;
    }
    std::sort(basis.monomials.begin(), basis.monomials.end(),
              [&](const Monomial& a, const Monomial& b) { return gb.order.less(a, b); });
    basis.degrees.reserve(basis.monomials.size());
    for (const auto& mon : basis.monomials) basis.degrees.push_back(gb.order.degree(mon));
    return basis;
}

}  // namespace qhsing
