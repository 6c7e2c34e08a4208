// Closed-form invariants of a quasi-homogeneous isolated hypersurface
// singularity, all read off the graded Jacobi ring: Milnor number, reduced
// genus, the monodromy-invariant dimension h = dim H^{n-2}(X\0, C) of the
// punctured zero locus, the Bernstein-Sato roots with multiplicities, the
// lengths of the D-module quotients D f^lambda / D f^(lambda+1) and
// D[s] f^s / D[s] f^(s+1), the composition-series report, and the
// Steenbrink-style spectrum table.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qhsing/errors.hpp"
#include "qhsing/jacobi.hpp"
#include "qhsing/rational.hpp"

namespace qhsing {

struct BRoot {
    Rational value;    // negative rational
    int multiplicity;  // 1, or 2 for -1 when the genus is positive

    bool operator==(const BRoot& other) const {
        return value == other.value && multiplicity == other.multiplicity;
    }
};

struct BFunction {
    std::vector<BRoot> roots;  // sorted descending by value

    bool has_root(const Rational& v) const {
        for (const auto& r : roots)
            if (r.value == v) return true;
        return false;
    }
};

struct SpectrumEntry {
    Rational alpha;    // (k + sum m_i) / d, ascending across the table
    Rational beta;     // fractional part of alpha in [0, 1); the monodromy
                       // eigenvalue is exp(-2*pi*i*beta)
    std::int64_t j;    // integer part, so alpha = j + beta and lambda = -alpha
    std::int64_t dim;  // dim J_k
};

// D[s] f^s / D[s] f^(s+1) decomposes as delta^(mu - g) (+) N with N
// indecomposable of three layers; bottom to top: delta^h, IC(X), delta^g.
struct StructureDecomposition {
    std::int64_t delta_summand = 0;      // mu - g
    std::int64_t layer_bottom_delta = 0; // h
    std::int64_t layer_top_delta = 0;    // g
};

struct InvariantReport {
    Grading grading;
    GradedQuotientBasis jacobi;
    std::int64_t mu = 0;
    std::int64_t genus = 0;  // reduced genus g
    std::int64_t h = 0;      // dim H^(n-2)(X\0, C)
    BFunction bfunction;
    // One row per b-root, aligned with bfunction.roots (descending lambda).
    std::vector<std::pair<Rational, std::int64_t>> lengths;
    std::int64_t len_ds = 0;    // length of D[s] f^s / D[s] f^(s+1)
    std::int64_t len_mf = 0;    // length of M(f), equal to len_ds
    std::int64_t len_h1f = 0;   // length of H^1_f(R)
    std::int64_t ker_p = 0;     // delta-multiplicity of ker p
    std::int64_t ker_q_minus1 = 0;  // delta-multiplicity of ker q_{-1}
    std::int64_t ker_pi = 0;    // delta-multiplicity of ker pi
    bool generated_by_inverse = false;  // R[1/f] generated by 1/f over D
    StructureDecomposition structure;
    std::vector<SpectrumEntry> spectrum;
};

// Reduced genus: the dimension of the weighted-degree d - sum(m_i) piece of
// the coordinate ring, where no Jacobian generator can reach (their degrees
// d - m_i all exceed it for n >= 2).
inline std::int64_t reduced_genus(const Grading& g) {
    return count_monomials_of_weighted_degree(g.weights, g.degree - g.weight_sum());
}

// h = dim H^(n-2)(X\0, C): the monodromy-eigenvalue-1 part of the Milnor
// cohomology, i.e. the total Jacobi dimension in degrees congruent to
// -sum(m_i) mod d.
inline std::int64_t link_cohomology_dim(const GradedQuotientBasis& jb) {
    const std::int64_t d = jb.grading.degree;
    const std::int64_t target = ((-jb.grading.weight_sum()) % d + d) % d;
    std::int64_t h = 0;
    for (const auto& [k, dim] : jb.hilbert)
        if (k % d == target) h += dim;
    return h;
}

// Roots of the Bernstein-Sato polynomial: -1 together with
// -(k + sum m_i)/d over the occupied Jacobi degrees k. Every root other
// than -1 is simple; -1 is double exactly when the genus is positive.
inline BFunction b_function(const GradedQuotientBasis& jb, std::int64_t genus) {
    const Rational minus_one(-1);
    const std::int64_t wsum = jb.grading.weight_sum();
    std::vector<BRoot> roots;
    for (const auto& [k, dim] : jb.hilbert) {
        (void)dim;
        roots.push_back(BRoot{make_rational(-(k + wsum), jb.grading.degree), 1});
    }
    bool has_minus_one = false;
    for (auto& r : roots)
        if (r.value == minus_one) {
            r.multiplicity = 2;  // overwritten below when genus == 0
            has_minus_one = true;
        }
    if (!has_minus_one) roots.push_back(BRoot{minus_one, 1});
    if (genus == 0) {
        for (auto& r : roots)
            if (r.value == minus_one) r.multiplicity = 1;
    }
    std::sort(roots.begin(), roots.end(),
              [](const BRoot& a, const BRoot& b) { return a.value > b.value; });
    BFunction bf;
    bf.roots = std::move(roots);
    return bf;
}

// Length of D f^lambda / D f^(lambda+1): 1 + g at lambda = -1, otherwise
// the Jacobi dimension in degree -d*lambda - sum(m_i) (zero when that is
// not a nonnegative integer).
inline std::int64_t length_quotient(const Rational& lambda, const GradedQuotientBasis& jb,
                                    std::int64_t genus) {
    if (lambda == -1) return 1 + genus;
    const Rational target =
        -Rational(static_cast<long>(jb.grading.degree)) * lambda -
        Rational(static_cast<long>(jb.grading.weight_sum()));
    if (!is_integer(target) || target < 0) return 0;
    return jb.dim_at(target.get_num().get_si());
}

// The length bookkeeping of the report; throws when h < g, which no valid
// input can produce.
inline void fill_length_summary(InvariantReport& r) {
    if (r.h < r.genus)
        throw InternalCheckFailure("link dimension h is smaller than the reduced genus");
    r.len_ds = 1 + r.mu + r.h;
    r.len_mf = r.len_ds;
    r.len_h1f = 1 + r.h;
    r.ker_p = r.h;
    r.ker_q_minus1 = r.h - r.genus;
    r.ker_pi = r.genus;
    r.generated_by_inverse = (r.h == r.genus);
}

inline StructureDecomposition structure_report(std::int64_t mu, std::int64_t genus,
                                               std::int64_t h) {
    return StructureDecomposition{mu - genus, h, genus};
}

inline std::vector<SpectrumEntry> steenbrink_table(const GradedQuotientBasis& jb) {
    std::vector<SpectrumEntry> table;
    const std::int64_t wsum = jb.grading.weight_sum();
    for (const auto& [k, dim] : jb.hilbert) {
        const Rational alpha = make_rational(k + wsum, jb.grading.degree);
        const Integer j_int = rational_floor(alpha);
        const Rational beta = alpha - Rational(j_int);
        // Distinct degrees give distinct alphas, so (beta, j) never repeats;
        // merge defensively all the same.
        if (!table.empty() && table.back().beta == beta && table.back().j == j_int.get_si()) {
            table.back().dim += dim;
        } else {
            table.push_back(SpectrumEntry{alpha, beta, j_int.get_si(), dim});
        }
    }
    return table;
}

// True iff every b-root has a nonzero quotient D f^lambda / D f^(lambda+1).
// Must hold for every quasi-homogeneous isolated singularity; a false
// return indicates a bug, not a property of the input.
inline bool check_nonvanishing(const BFunction& bf,
                               const std::vector<std::pair<Rational, std::int64_t>>& lengths) {
    for (const auto& root : bf.roots) {
        bool found = false;
        for (const auto& [lambda, len] : lengths)
            if (lambda == root.value) {
                found = (len > 0);
                break;
            }
        if (!found) return false;
    }
    return true;
}

// Run the whole pipeline below the grading: Jacobi ring and every derived
// invariant. The grading must already be validated for f.
inline InvariantReport analyze(const Polynomial& f, const Grading& g,
                               std::int64_t max_pair_degree = detail::kDefaultDegreeCap) {
    if (f.nvars() < 3)
        throw std::invalid_argument("the invariant pipeline requires at least 3 variables");
    InvariantReport r;
    r.grading = g;
    r.jacobi = jacobi_ring(f, g, max_pair_degree);
    r.mu = r.jacobi.mu;
    r.genus = reduced_genus(g);
    r.h = link_cohomology_dim(r.jacobi);
    r.bfunction = b_function(r.jacobi, r.genus);
    for (const auto& root : r.bfunction.roots)
        r.lengths.emplace_back(root.value, length_quotient(root.value, r.jacobi, r.genus));
    fill_length_summary(r);
    r.structure = structure_report(r.mu, r.genus, r.h);
    r.spectrum = steenbrink_table(r.jacobi);
    if (!check_nonvanishing(r.bfunction, r.lengths))
        throw InternalCheckFailure("a b-function root has a vanishing quotient");
    return r;
}

}  // namespace qhsing
