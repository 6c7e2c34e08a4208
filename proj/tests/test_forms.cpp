#include <catch2/catch.hpp>

#include "qhsing/forms.hpp"
#include "qhsing/parser.hpp"
#include "qh_samples.hpp"

using namespace qhsing;

namespace {
const std::vector<std::string> kXYZ = {"x", "y", "z"};
const std::vector<std::string> kXYZW = {"x", "y", "z", "w"};

Polynomial P(const std::string& text) { return parse_polynomial(text, kXYZ); }
Polynomial P4(const std::string& text) { return parse_polynomial(text, kXYZW); }
}  // namespace

TEST_CASE("xi field of a coordinate function on the Fermat cubic") {
    Polynomial f = P("x^3+y^3+z^3");
    PolyVectorField xi = xi_field(PolyForm::function(P("x")), f);
    REQUIRE(xi.components[0].is_zero());
    REQUIRE(xi.components[1] == P("-3*z^2"));
    REQUIRE(xi.components[2] == P("3*y^2"));
    REQUIRE(xi.apply(f).is_zero());
}

TEST_CASE("constant forms give the zero field") {
    Polynomial f = P("x^3+y^3+z^3");
    REQUIRE(xi_field(PolyForm::function(P("1")), f).is_zero());
    REQUIRE(xi_field(PolyForm::function(P("0")), f).is_zero());
}

TEST_CASE("xi is linear in the form") {
    Polynomial f = P("x^2*y + y^2*z + z^4");
    PolyForm a = PolyForm::function(P("x"));
    PolyForm b = PolyForm::function(P("y^2"));
    const Rational ca = make_rational(2, 3);
    const Rational cb = make_rational(-5);
    PolyVectorField combined = xi_field(a.scaled(ca) + b.scaled(cb), f);
    PolyVectorField split = xi_field(a, f).scaled(ca) + xi_field(b, f).scaled(cb);
    REQUIRE(combined == split);
    REQUIRE(xi_field(a + b, f) == xi_field(a, f) + xi_field(b, f));
}

TEST_CASE("bracket values on the Fermat cubic") {
    Polynomial f = P("x^3+y^3+z^3");
    REQUIRE(bracket_function(P("x"), P("y"), f) == P("-3*z^2"));
    REQUIRE(bracket_function(P("x"), P("x"), f).is_zero());
    REQUIRE(bracket_function(P("1"), P("y^2 + z"), f).is_zero());

    // The form-level bracket agrees with the function-level one for n = 3.
    PolyForm result = bracket(PolyForm::function(P("x")), PolyForm::function(P("y")), f);
    REQUIRE(result.degree == 0);
    REQUIRE(result.coeffs.at(IndexTuple{}) == P("-3*z^2"));
}

TEST_CASE("bracket is antisymmetric and satisfies the Jacobi identity") {
    qhtest::Rng rng(777);
    Polynomial f = P("x^3+y^3+z^3");
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial g = qhtest::random_polynomial(rng, 3, 3, 2);
        Polynomial h = qhtest::random_polynomial(rng, 3, 3, 2);
        Polynomial k = qhtest::random_polynomial(rng, 3, 3, 2);
        REQUIRE(bracket_function(g, h, f) == -bracket_function(h, g, f));
        Polynomial jacobi = bracket_function(g, bracket_function(h, k, f), f) +
                            bracket_function(h, bracket_function(k, g, f), f) +
                            bracket_function(k, bracket_function(g, h, f), f);
        REQUIRE(jacobi.is_zero());
    }
}

TEST_CASE("four-variable contraction follows the sign convention") {
    Polynomial f = P4("x^2+y^2+z^2+w^2");
    // alpha = x dy: d(alpha) ^ df = dx^dy^(2z dz + 2w dw).
    PolyForm alpha = PolyForm::monomial_form(Monomial{1, 0, 0, 0}, IndexTuple{1});
    PolyVectorField xi = xi_field(alpha, f);
    REQUIRE(xi.components[0].is_zero());
    REQUIRE(xi.components[1].is_zero());
    REQUIRE(xi.components[2] == P4("2*w"));
    REQUIRE(xi.components[3] == P4("-2*z"));
    REQUIRE(xi.apply(f).is_zero());
}

TEST_CASE("wedge and exterior derivative sanity") {
    // d is a complex: d(d(alpha)) = 0.
    PolyForm alpha = PolyForm::function(P4("x^2*y + z*w"));
    PolyForm dd = exterior_derivative(exterior_derivative(alpha));
    REQUIRE(dd.is_zero());

    // Graded commutativity for 1-forms: a ^ b = -(b ^ a).
    PolyForm a = exterior_derivative(PolyForm::function(P4("x*y")));
    PolyForm b = exterior_derivative(PolyForm::function(P4("z^2 + w")));
    PolyForm ab = wedge(a, b);
    PolyForm ba_neg = wedge(b, a).scaled(-1);
    REQUIRE(ab.coeffs == ba_neg.coeffs);

    // Associativity on a mixed product.
    PolyForm c = exterior_derivative(PolyForm::function(P4("w^2")));
    REQUIRE(wedge(wedge(a, b), c).coeffs == wedge(a, wedge(b, c)).coeffs);
}

TEST_CASE("tangency holds for every monomial form up to weighted degree 6") {
    qhtest::Rng rng(31337);
    for (int trial = 0; trial < 10; ++trial) {
        auto sample = qhtest::random_qh_sample(rng);
        for (const auto& gen : mf_generators(sample.f, sample.grading, 6)) {
            if (gen.is_f) continue;
            REQUIRE(gen.field.apply(sample.f).is_zero());
        }
    }
}

TEST_CASE("generator lists for M(f)") {
    Polynomial quadric = P("x^2+y^2+z^2");
    auto gens0 = mf_generators(quadric, Grading{{1, 1, 1}, 2}, 0);
    REQUIRE(gens0.size() == 1);  // xi_1 = 0 is omitted
    REQUIRE(gens0[0].is_f);

    Polynomial cubic = P("x^3+y^3+z^3");
    auto gens1 = mf_generators(cubic, Grading{{1, 1, 1}, 3}, 1);
    REQUIRE(gens1.size() == 4);  // f, xi_x, xi_y, xi_z
    REQUIRE(gens1[0].is_f);
    REQUIRE(gens1[1].form_monomial == Monomial{1, 0, 0});
    REQUIRE(gens1[2].form_monomial == Monomial{0, 1, 0});
    REQUIRE(gens1[3].form_monomial == Monomial{0, 0, 1});
    // Cyclic analogues of the worked xi_x.
    REQUIRE(gens1[2].field.components[0] == P("3*z^2"));
    REQUIRE(gens1[2].field.components[1].is_zero());
    REQUIRE(gens1[2].field.components[2] == P("-3*x^2"));
}

TEST_CASE("generator serialization") {
    Polynomial cubic = P("x^3+y^3+z^3");
    auto gens = mf_generators(cubic, Grading{{1, 1, 1}, 3}, 1);
    const std::string rendered = render_generators(gens, kXYZ);
    REQUIRE(rendered ==
            "f: x^3 + y^3 + z^3\n"
            "xi[x]: (-3*z^2)*dy + (3*y^2)*dz\n"
            "xi[y]: (3*z^2)*dx + (-3*x^2)*dz\n"
            "xi[z]: (-3*y^2)*dx + (3*x^2)*dy\n");

    Polynomial sphere = P4("x^2+y^2+z^2+w^2");
    auto gens4 = mf_generators(sphere, Grading{{1, 1, 1, 1}, 2}, 2);
    bool found = false;
    for (const auto& g : gens4) {
        if (!g.is_f && g.form_monomial == Monomial{1, 0, 0, 0} && g.form_indices == IndexTuple{1}) {
            REQUIRE(render_generator(g, kXYZW) == "xi[x*dy]: (2*w)*dz + (-2*z)*dw");
            found = true;
        }
    }
    REQUIRE(found);
}

TEST_CASE("degree and dimension guards") {
    Polynomial f = P("x^2+y^2+z^2");
    PolyForm one_form = exterior_derivative(PolyForm::function(P("x*y")));
    REQUIRE_THROWS_AS(xi_field(one_form, f), std::invalid_argument);
    REQUIRE_THROWS_AS(mf_generators(f, Grading{{1, 1, 1}, 2}, -1), std::invalid_argument);
}
