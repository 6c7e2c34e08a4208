// The graded Jacobi ring J = R / (df/dx_1, ..., df/dx_n) of a
// quasi-homogeneous polynomial: standard-monomial basis, Hilbert function,
// Milnor number.
#pragma once

#include <cstdint>
#include <map>

#include "qhsing/errors.hpp"
#include "qhsing/grading.hpp"
#include "qhsing/groebner.hpp"

namespace qhsing {

struct GradedQuotientBasis {
    Grading grading;
    StandardMonomialBasis basis;
    std::map<std::int64_t, std::int64_t> hilbert;  // weighted degree -> dim J_k
    std::int64_t mu = 0;                           // Milnor number, = basis size

    std::int64_t dim_at(std::int64_t degree) const {
        auto it = hilbert.find(degree);
        return it == hilbert.end() ? 0 : it->second;
    }
};

// Classical product formula for the Milnor number of a quasi-homogeneous
// isolated singularity: prod_i (d - m_i) / m_i. Exact rational; an integer
// whenever the hypotheses hold, which cmd_check and the tests verify
// against the Groebner count.
inline Rational milnor_product(const Grading& g) {
    Rational mu(1);
    for (auto m : g.weights) mu *= make_rational(g.degree - m, m);
    return mu;
}

inline bool is_singular_at_origin(const Polynomial& f) {
    for (const auto& [m, c] : f.terms())
        if (m.total_degree() == 1) return false;  // a linear term makes grad f(0) != 0
    return true;
}

// Compute the graded Jacobi ring data. Throws SmoothAtOrigin when the
// gradient of f does not vanish at 0 and NonIsolatedSingularity when the
// Jacobian ideal is not zero-dimensional.
inline GradedQuotientBasis jacobi_ring(const Polynomial& f, const Grading& g,
                                       std::int64_t max_pair_degree = detail::kDefaultDegreeCap) {
    if (f.nvars() != g.nvars())
        throw std::invalid_argument("grading does not match the variable count of f");
    if (!is_singular_at_origin(f))
        throw SmoothAtOrigin("the gradient of f does not vanish at the origin");

    std::vector<Polynomial> partials;
    partials.reserve(f.nvars());
    for (std::size_t i = 0; i < f.nvars(); ++i) partials.push_back(f.derivative(i));

    const auto gb = buchberger(partials, MonomialOrder::for_grading(g), max_pair_degree);
    auto basis = standard_monomials(gb);
    if (!basis)
        throw NonIsolatedSingularity("the Jacobian ideal of f is not zero-dimensional");

    GradedQuotientBasis out;
    out.grading = g;
    out.basis = std::move(*basis);
    out.mu = static_cast<std::int64_t>(out.basis.size());
    for (auto deg : out.basis.degrees) ++out.hilbert[deg];
    return out;
}

}  // namespace qhsing
