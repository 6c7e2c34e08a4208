// Polynomial differential forms and vector fields on affine space, and the
// Hamiltonian fields xi_alpha obtained by contracting d(alpha) ^ df with
// the standard top polyvector. These fields are tangent to {f=0} and,
// together with f itself, present the D-module M(f).
//
// Sign convention for the contraction: component i of the field is
// (-1)^(i-1) times the coefficient of the (n-1)-form omitting dx_i
// (1-based i). Fixed once so exported generators are reproducible.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qhsing/grading.hpp"
#include "qhsing/polynomial.hpp"

namespace qhsing {

using IndexTuple = std::vector<int>;  // strictly increasing variable indices

struct PolyForm {
    std::size_t nvars = 0;
    int degree = 0;  // form degree k, 0 <= k <= nvars
    std::map<IndexTuple, Polynomial> coeffs;  // no zero coefficients stored

    static PolyForm zero(std::size_t nvars, int degree) { return PolyForm{nvars, degree, {}}; }

    static PolyForm function(const Polynomial& p) {
        PolyForm w{p.nvars(), 0, {}};
        w.add_term({}, p);
        return w;
    }

    // x^m dx_{i1} ^ ... ^ dx_{ik} with strictly increasing indices.
    static PolyForm monomial_form(const Monomial& m, const IndexTuple& indices,
                                  const Rational& c = 1) {
        PolyForm w{m.nvars(), static_cast<int>(indices.size()), {}};
        w.add_term(indices, Polynomial::from_monomial(m, c));
        return w;
    }

    bool is_zero() const { return coeffs.empty(); }

    // Adds c dx_I; `indices` may be unsorted, the antisymmetry sign is
    // applied and repeated indices annihilate the term.
    void add_term(IndexTuple indices, const Polynomial& c) {
        if (static_cast<int>(indices.size()) != degree)
            throw std::invalid_argument("index tuple does not match form degree");
        if (c.is_zero()) return;
        int sign = 1;
        for (std::size_t a = 0; a + 1 < indices.size(); ++a)
            for (std::size_t b = a + 1; b < indices.size(); ++b) {
                if (indices[a] == indices[b]) return;
                if (indices[a] > indices[b]) sign = -sign;
            }
        std::sort(indices.begin(), indices.end());
        const Polynomial signed_c = sign > 0 ? c : -c;
        auto [it, inserted] = coeffs.emplace(std::move(indices), signed_c);
        if (!inserted) {
            it->second = it->second + signed_c;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }

    friend PolyForm operator+(const PolyForm& a, const PolyForm& b) {
        if (a.nvars != b.nvars || a.degree != b.degree)
            throw std::invalid_argument("form mismatch in addition");
        PolyForm out = a;
        for (const auto& [idx, c] : b.coeffs) out.add_term(idx, c);
        return out;
    }

    PolyForm scaled(const Rational& c) const {
        PolyForm out = zero(nvars, degree);
        for (const auto& [idx, coef] : coeffs) out.add_term(idx, coef.scaled(c));
        return out;
    }
};

struct PolyVectorField {
    std::vector<Polynomial> components;  // coefficient of d/dx_i

    static PolyVectorField zero(std::size_t nvars) {
        return PolyVectorField{std::vector<Polynomial>(nvars, Polynomial::zero(nvars))};
    }

    std::size_t nvars() const { return components.size(); }

    bool is_zero() const {
        for (const auto& c : components)
            if (!c.is_zero()) return false;
        return true;
    }

    // Derivation: xi(p) = sum_i xi_i dp/dx_i.
    Polynomial apply(const Polynomial& p) const {
        Polynomial out = Polynomial::zero(p.nvars());
        for (std::size_t i = 0; i < components.size(); ++i)
            out = out + components[i] * p.derivative(i);
        return out;
    }

    friend PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b) {
        if (a.nvars() != b.nvars()) throw std::invalid_argument("field mismatch in addition");
        PolyVectorField out = a;
        for (std::size_t i = 0; i < out.components.size(); ++i)
            out.components[i] = out.components[i] + b.components[i];
        return out;
    }

    PolyVectorField scaled(const Rational& c) const {
        PolyVectorField out = *this;
        for (auto& comp : out.components) comp = comp.scaled(c);
        return out;
    }

    bool operator==(const PolyVectorField& other) const { return components == other.components; }
};

inline PolyForm wedge(const PolyForm& a, const PolyForm& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("form mismatch in wedge");
    PolyForm out = PolyForm::zero(a.nvars, a.degree + b.degree);
    for (const auto& [ia, ca] : a.coeffs)
        for (const auto& [ib, cb] : b.coeffs) {
            IndexTuple merged = ia;
            merged.insert(merged.end(), ib.begin(), ib.end());
            out.add_term(std::move(merged), ca * cb);
        }
    return out;
}

inline PolyForm exterior_derivative(const PolyForm& w) {
    PolyForm out = PolyForm::zero(w.nvars, w.degree + 1);
    for (const auto& [idx, c] : w.coeffs) {
        for (std::size_t i = 0; i < w.nvars; ++i) {
            const Polynomial dc = c.derivative(i);
            if (dc.is_zero()) continue;
            IndexTuple extended;
            extended.push_back(static_cast<int>(i));
            extended.insert(extended.end(), idx.begin(), idx.end());
            out.add_term(std::move(extended), dc);
        }
    }
    return out;
}

// Interior product iota_xi: contracts the first slot of each dx tuple.
inline PolyForm interior_product(const PolyVectorField& xi, const PolyForm& w) {
    if (xi.nvars() != w.nvars) throw std::invalid_argument("field/form mismatch");
    if (w.degree == 0) return PolyForm::zero(w.nvars, 0);
    PolyForm out = PolyForm::zero(w.nvars, w.degree - 1);
    for (const auto& [idx, c] : w.coeffs) {
        for (std::size_t t = 0; t < idx.size(); ++t) {
            const Polynomial& comp = xi.components[static_cast<std::size_t>(idx[t])];
            if (comp.is_zero()) continue;
            IndexTuple rest;
            for (std::size_t u = 0; u < idx.size(); ++u)
                if (u != t) rest.push_back(idx[u]);
            Polynomial term = comp * c;
            if (t % 2 == 1) term = -term;
            out.add_term(std::move(rest), term);
        }
    }
    return out;
}

// Cartan formula: L_xi = d iota_xi + iota_xi d. For a 0-form the first
// summand is vacuous and the result is just xi applied as a derivation.
inline PolyForm lie_derivative(const PolyVectorField& xi, const PolyForm& w) {
    PolyForm second = interior_product(xi, exterior_derivative(w));
    if (w.degree == 0) return second;
    return exterior_derivative(interior_product(xi, w)) + second;
}

// df as a 1-form.
inline PolyForm differential(const Polynomial& f) {
    return exterior_derivative(PolyForm::function(f));
}

// Contraction of an (n-1)-form with the top polyvector d/dx_1 ^...^ d/dx_n.
inline PolyVectorField contract_with_top(const PolyForm& w) {
    const std::size_t n = w.nvars;
    if (w.degree != static_cast<int>(n) - 1)
        throw std::invalid_argument("contraction expects an (n-1)-form");
    PolyVectorField out = PolyVectorField::zero(n);
    for (const auto& [idx, c] : w.coeffs) {
        // idx omits exactly one variable i.
        std::size_t omitted = 0;
        for (std::size_t i = 0, t = 0; i < n; ++i) {
            if (t < idx.size() && idx[t] == static_cast<int>(i)) {
                ++t;
            } else {
                omitted = i;
            }
        }
        const Polynomial signed_c = (omitted % 2 == 0) ? c : -c;
        out.components[omitted] = out.components[omitted] + signed_c;
    }
    return out;
}

// xi_alpha for an (n-3)-form alpha: contract d(alpha) ^ df with the top
// polyvector. Satisfies xi_alpha(f) = 0 identically.
inline PolyVectorField xi_field(const PolyForm& alpha, const Polynomial& f) {
    if (alpha.nvars != f.nvars())
        throw std::invalid_argument("form/polynomial variable count mismatch");
    if (alpha.degree != static_cast<int>(alpha.nvars) - 3)
        throw std::invalid_argument("xi_field expects an (n-3)-form");
    return contract_with_top(wedge(exterior_derivative(alpha), differential(f)));
}

// {alpha, beta} = L_{xi_alpha}(beta); for n = 3 this is the polynomial
// xi_alpha(beta), the Jacobian-determinant Poisson bracket with f fixed.
inline PolyForm bracket(const PolyForm& alpha, const PolyForm& beta, const Polynomial& f) {
    if (alpha.degree != beta.degree)
        throw std::invalid_argument("bracket expects forms of equal degree");
    return lie_derivative(xi_field(alpha, f), beta);
}

inline Polynomial bracket_function(const Polynomial& g, const Polynomial& h,
                                   const Polynomial& f) {
    return xi_field(PolyForm::function(g), f).apply(h);
}

// One generator of the left ideal presenting M(f): either f itself or a
// Hamiltonian field xi_alpha for a monomial (n-3)-form alpha.
struct MfGenerator {
    bool is_f = false;
    Polynomial poly;            // f when is_f
    Monomial form_monomial;     // the monomial of alpha
    IndexTuple form_indices;    // the dx part of alpha
    PolyVectorField field;      // xi_alpha

    MfGenerator() : poly(0) {}
};

// Generators {f} and {xi_alpha : alpha a monomial (n-3)-form of weighted
// degree <= degree_bound}, zero fields omitted. The weighted degree of
// x^a dx_I counts the dx weights: wdeg(a) + sum_{i in I} m_i. Ordered by
// (weighted degree, index tuple, monomial), so output is deterministic.
inline std::vector<MfGenerator> mf_generators(const Polynomial& f, const Grading& g,
                                              std::int64_t degree_bound) {
    if (degree_bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
    const std::size_t n = f.nvars();
    if (n < 3) throw std::invalid_argument("Hamiltonian fields need at least 3 variables");
    if (g.nvars() != n) throw std::invalid_argument("grading mismatch");

    std::vector<MfGenerator> out;
    MfGenerator head;
    head.is_f = true;
    head.poly = f;
    out.push_back(std::move(head));

    const int form_deg = static_cast<int>(n) - 3;

    // All strictly increasing index tuples of length form_deg.
    std::vector<IndexTuple> tuples;
    IndexTuple current;
    auto recurse_tuples = [&](auto&& self, int start) -> void {
        if (static_cast<int>(current.size()) == form_deg) {
            tuples.push_back(current);
            return;
        }
        for (int i = start; i < static_cast<int>(n); ++i) {
            current.push_back(i);
            self(self, i + 1);
            current.pop_back();
        }
    };
    recurse_tuples(recurse_tuples, 0);

    struct Candidate {
        std::int64_t wdeg;
        IndexTuple indices;
        Monomial mon;
    };
    std::vector<Candidate> candidates;
    for (const auto& idx : tuples) {
        std::int64_t base = 0;
        for (int i : idx) base += g.weights[static_cast<std::size_t>(i)];
        if (base > degree_bound) continue;
        // Enumerate monomials of weighted degree <= degree_bound - base.
        const std::int64_t room = degree_bound - base;
        Monomial m(n);
        auto recurse_mons = [&](auto&& self, std::size_t var, std::int64_t used) -> void {
            if (var == n) {
                candidates.push_back(Candidate{base + used, idx, m});
                return;
            }
            for (int e = 0;; ++e) {
                const std::int64_t next = used + e * g.weights[var];
                if (next > room) break;
                m.exps[var] = e;
                self(self, var + 1, next);
            }
            m.exps[var] = 0;
        };
        recurse_mons(recurse_mons, 0, 0);
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.wdeg != b.wdeg) return a.wdeg < b.wdeg;
        if (a.indices != b.indices) return a.indices < b.indices;
        return GradedLexLess{}(b.mon, a.mon);  // x before y before z, like printing
    });

    for (const auto& cand : candidates) {
        PolyForm alpha = PolyForm::monomial_form(cand.mon, cand.indices);
        PolyVectorField xi = xi_field(alpha, f);
        if (xi.is_zero()) continue;
        MfGenerator gen;
        gen.form_monomial = cand.mon;
        gen.form_indices = cand.indices;
        gen.field = std::move(xi);
        out.push_back(std::move(gen));
    }
    return out;
}

// Plain-text serialization, one generator per line:
//   f: <polynomial>
//   xi[<alpha>]: (<coef>)*d<var> + ...
inline std::string render_generator(const MfGenerator& gen,
                                    const std::vector<std::string>& names) {
    if (gen.is_f) return "f: " + to_string(gen.poly, names);
    std::string label = gen.form_monomial.is_one() && !gen.form_indices.empty()
                            ? std::string()
                            : gen.form_monomial.to_string(names);
    for (int i : gen.form_indices) {
        if (!label.empty()) label += "*";
        label += "d" + names.at(static_cast<std::size_t>(i));
    }
    std::string rhs;
    for (std::size_t i = 0; i < gen.field.components.size(); ++i) {
        const Polynomial& comp = gen.field.components[i];
        if (comp.is_zero()) continue;
        if (!rhs.empty()) rhs += " + ";
        rhs += "(" + to_string(comp, names) + ")*d" + names[i];
    }
    if (rhs.empty()) rhs = "0";
    return "xi[" + label + "]: " + rhs;
}

inline std::string render_generators(const std::vector<MfGenerator>& gens,
                                     const std::vector<std::string>& names) {
    std::string out;
    for (const auto& g : gens) {
        out += render_generator(g, names);
        out += "\n";
    }
    return out;
}

}  // namespace qhsing
