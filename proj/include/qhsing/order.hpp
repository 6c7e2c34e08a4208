// Term order used by the Groebner engine: weighted degree first, reverse
// lexicographic tie-break. With strictly positive weights this is a global
// order (1 is minimal, multiplication preserves comparisons), and for a
// weighted-homogeneous ideal it keeps every Groebner datum homogeneous, so
// Hilbert-function extraction is a plain bucket count.
#pragma once

#include <cstdint>
#include <vector>

#include "qhsing/grading.hpp"
#include "qhsing/monomial.hpp"

namespace qhsing {

struct MonomialOrder {
    std::vector<std::int64_t> weights;

    static MonomialOrder for_grading(const Grading& g) { return MonomialOrder{g.weights}; }

    // All weights 1: plain graded reverse-lexicographic.
    static MonomialOrder graded_revlex(std::size_t nvars) {
        return MonomialOrder{std::vector<std::int64_t>(nvars, 1)};
    }

    std::int64_t degree(const Monomial& m) const { return weighted_degree(m, weights); }

    // -1, 0, +1 for a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        const std::int64_t da = degree(a);
        const std::int64_t db = degree(b);
        if (da != db) return da < db ? -1 : 1;
        // Reverse lex: the later a monomial drops below the other, the bigger
        // it is; equivalently the last nonzero entry of a - b decides.
        for (std::size_t i = a.nvars(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};

}  // namespace qhsing
