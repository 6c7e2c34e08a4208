// Acceptance suite: every exit criterion of the project, run end to end,
// one PASS/FAIL line per criterion. All quantities are exact integers or
// rationals, so every comparison is equality; there are no tolerances.
//
// Usage: acceptance <path-to-qhsing-cli>
// The CLI path is needed for the exit-code criterion.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "qhsing/forms.hpp"
#include "qhsing/invariants.hpp"
#include "qhsing/parser.hpp"
#include "qh_samples.hpp"

using namespace qhsing;

namespace {

const std::vector<std::string> kXYZ = {"x", "y", "z"};
const std::vector<std::string> kXYZW = {"x", "y", "z", "w"};

int g_failures = 0;

void report(int criterion, const std::string& label, bool pass) {
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << criterion << ": " << label
              << "\n";
    if (!pass) ++g_failures;
}

InvariantReport analyze_text(const std::string& text,
                             const std::vector<std::string>& names = kXYZ) {
    Polynomial f = parse_polynomial(text, names);
    return analyze(f, find_weights(f));
}

std::int64_t length_at(const InvariantReport& r, const Rational& lambda) {
    return length_quotient(lambda, r.jacobi, r.genus);
}

// 1. Plane-curve cones x^d + y^d + z^d, d = 3..6: reduced genus
//    (d-1)(d-2)/2, length of D(1/f)/R = 1 + g, length of H^1_f(R) = 1 + 2g.
void criterion_1() {
    bool pass = true;
    for (int d = 3; d <= 6; ++d) {
        const std::string text = "x^" + std::to_string(d) + "+y^" + std::to_string(d) + "+z^" +
                                 std::to_string(d);
        auto r = analyze_text(text);
        const std::int64_t g = static_cast<std::int64_t>(d - 1) * (d - 2) / 2;
        pass = pass && (r.genus == g);
        pass = pass && (length_at(r, make_rational(-1)) == 1 + g);
        pass = pass && (r.len_h1f == 1 + 2 * g);
    }
    report(1, "plane-curve cones d=3..6: genus, length of D(1/f)/R, length of H^1_f(R)", pass);
}

// 2. len(D[s] f^s / D[s] f^(s+1)) = 1 + mu + h on the corpus.
void criterion_2() {
    bool pass = true;
    const std::vector<std::pair<std::string, std::int64_t>> corpus = {
        {"x^2+y^2+z^2", 2}, {"x^3+y^3+z^3", 11}, {"x^4+y^4+z^4", 34}, {"x^2+y^3+z^5", 9}};
    for (const auto& [text, expected] : corpus) {
        auto r = analyze_text(text);
        pass = pass && (r.len_ds == expected);
        pass = pass && (r.len_ds == 1 + r.mu + r.h);
    }
    report(2, "length of D[s]f^s/D[s]f^(s+1) = 1 + mu + h on the corpus {2, 11, 34, 9}", pass);
}

// 3. ker q_{-1} = delta^(h-g) and ker p = delta^h on the corpus.
void criterion_3() {
    bool pass = true;
    const std::vector<std::pair<std::string, std::int64_t>> kq = {
        {"x^3+y^3+z^3", 1}, {"x^4+y^4+z^4", 3}, {"x^2+y^3+z^5", 0}};
    for (const auto& [text, expected] : kq) {
        auto r = analyze_text(text);
        pass = pass && (r.ker_q_minus1 == expected);
        pass = pass && (r.ker_p == r.h);
    }
    auto quadric = analyze_text("x^2+y^2+z^2");
    pass = pass && (quadric.ker_q_minus1 == 0) && (quadric.ker_p == quadric.h);
    report(3, "kernel multiplicities: ker q_(-1) = h - g {1, 3, 0}, ker p = h", pass);
}

// 4. b-functions equal the classical values for the quadric and the cubic.
void criterion_4() {
    auto quadric = analyze_text("x^2+y^2+z^2");
    std::vector<BRoot> expected_quadric = {{make_rational(-1), 1}, {make_rational(-3, 2), 1}};
    bool pass = (quadric.bfunction.roots == expected_quadric);

    auto cubic = analyze_text("x^3+y^3+z^3");
    std::vector<BRoot> expected_cubic = {{make_rational(-1), 2},
                                         {make_rational(-4, 3), 1},
                                         {make_rational(-5, 3), 1},
                                         {make_rational(-2), 1}};
    pass = pass && (cubic.bfunction.roots == expected_cubic);
    report(4, "b-function oracle: (s+1)(s+3/2) and (s+1)^2(s+4/3)(s+5/3)(s+2)", pass);
}

// 5. Nonvanishing at every b-root, corpus plus 20 randomized inputs.
void criterion_5() {
    bool pass = true;
    for (const char* text : {"x^2+y^2+z^2", "x^3+y^3+z^3", "x^4+y^4+z^4", "x^2+y^3+z^5"}) {
        auto r = analyze_text(text);
        pass = pass && check_nonvanishing(r.bfunction, r.lengths);
    }
    qhtest::Rng rng(424242);
    for (int trial = 0; trial < 20; ++trial) {
        auto sample = qhtest::random_qh_sample(rng);
        auto r = analyze(sample.f, sample.grading);
        pass = pass && check_nonvanishing(r.bfunction, r.lengths);
        for (const auto& [lambda, len] : r.lengths) pass = pass && (len > 0);
    }
    report(5, "every b-root has a nonzero quotient (corpus + 20 randomized)", pass);
}

// 6. Property suite: mu product formula, Hilbert symmetry, sum of lengths,
//    genus double computation, spectrum dimension sum.
void criterion_6() {
    bool pass = true;
    auto run_properties = [&](const InvariantReport& r) {
        pass = pass && (Rational(static_cast<long>(r.mu)) == milnor_product(r.grading));
        const std::int64_t sigma = r.grading.socle_degree();
        for (const auto& [k, dim] : r.jacobi.hilbert)
            pass = pass && (dim == r.jacobi.dim_at(sigma - k));
        std::int64_t total = 0;
        for (const auto& [lambda, len] : r.lengths) total += len;
        pass = pass && (total == 1 + r.mu);
        const std::int64_t genus_degree = r.grading.degree - r.grading.weight_sum();
        const std::int64_t genus_via_jacobi =
            genus_degree < 0 ? 0 : r.jacobi.dim_at(genus_degree);
        pass = pass && (r.genus == genus_via_jacobi);
        pass = pass &&
               (r.genus == count_monomials_of_weighted_degree(r.grading.weights, genus_degree));
        std::int64_t spec_total = 0;
        for (const auto& e : r.spectrum) spec_total += e.dim;
        pass = pass && (spec_total == r.mu);
    };
    for (const char* text : {"x^2+y^2+z^2", "x^3+y^3+z^3", "x^4+y^4+z^4", "x^2+y^3+z^5"})
        run_properties(analyze_text(text));
    qhtest::Rng rng(987654321);
    for (int trial = 0; trial < 20; ++trial) {
        auto sample = qhtest::random_qh_sample(rng);
        run_properties(analyze(sample.f, sample.grading));
    }
    report(6, "mu product, hilbert symmetry, length sum, genus two ways, spectrum sum", pass);
}

// 7. Tangency xi_alpha(f) = 0 for all monomial (n-3)-forms of weighted
//    degree <= 6 on n = 3 and n = 4 samples; bracket antisymmetry and the
//    Jacobi identity on 50 random triples.
void criterion_7() {
    bool pass = true;
    auto check_tangency = [&](const Polynomial& f, const Grading& g) {
        for (const auto& gen : mf_generators(f, g, 6))
            if (!gen.is_f) pass = pass && gen.field.apply(f).is_zero();
    };
    for (const char* text : {"x^2+y^2+z^2", "x^3+y^3+z^3", "x^2+y^3+z^5", "x^4+y^4+z^4",
                             "x^3+y^3+z^3+x*y*z"}) {
        Polynomial f = parse_polynomial(text, kXYZ);
        check_tangency(f, find_weights(f));
    }
    for (const char* text : {"x^2+y^2+z^2+w^2", "x^3+y^3+z^3+w^3", "x^4+y^4+z^4+w^2"}) {
        Polynomial f = parse_polynomial(text, kXYZW);
        check_tangency(f, find_weights(f));
    }

    qhtest::Rng rng(1111);
    Polynomial f = parse_polynomial("x^3+y^3+z^3", kXYZ);
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial g = qhtest::random_polynomial(rng, 3, 3, 2);
        Polynomial h = qhtest::random_polynomial(rng, 3, 3, 2);
        Polynomial k = qhtest::random_polynomial(rng, 3, 3, 2);
        pass = pass && (bracket_function(g, h, f) == -bracket_function(h, g, f));
        Polynomial jacobi = bracket_function(g, bracket_function(h, k, f), f) +
                            bracket_function(h, bracket_function(k, g, f), f) +
                            bracket_function(k, bracket_function(g, h, f), f);
        pass = pass && jacobi.is_zero();
    }
    report(7, "tangency for weighted degree <= 6 (n = 3, 4); bracket antisymmetry + Jacobi",
           pass);
}

// 8. CLI exit-code contract on degenerate inputs.
void criterion_8(const char* cli_path) {
    if (cli_path == nullptr) {
        report(8, "CLI exit codes (no CLI path given on the command line)", false);
        return;
    }
    auto exit_code_of = [&](const std::string& arg) {
        const std::string cmd = std::string(cli_path) + " analyze \"" + arg + "\" >/dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    };
    bool pass = exit_code_of("x^2*y+z^2") == 3;
    pass = pass && (exit_code_of("x+y+z") == 4);
    pass = pass && (exit_code_of("x^3+y^3+z^3+x*y") == 2);
    pass = pass && (exit_code_of("x^3+y^3+z^3") == 0);
    report(8, "CLI exit codes: non-isolated 3, smooth 4, inhomogeneous 2", pass);
}

}  // namespace

int main(int argc, char** argv) {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8(argc > 1 ? argv[1] : nullptr);

    if (g_failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " criterion/criteria FAILED\n";
    return 1;
}
