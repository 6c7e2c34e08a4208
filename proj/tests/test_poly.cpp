#include <catch2/catch.hpp>

#include "qhsing/parser.hpp"
#include "qhsing/polynomial.hpp"
#include "rng.hpp"

using namespace qhsing;

namespace {
const std::vector<std::string> kXYZ = {"x", "y", "z"};

Polynomial P(const std::string& text) { return parse_polynomial(text, kXYZ); }
}  // namespace

TEST_CASE("parsing literal transcriptions") {
    Polynomial fermat = P("x^3+y^3+z^3");
    REQUIRE(fermat.term_count() == 3);
    REQUIRE(fermat.coefficient(Monomial{3, 0, 0}) == 1);
    REQUIRE(fermat.coefficient(Monomial{0, 3, 0}) == 1);
    REQUIRE(fermat.coefficient(Monomial{0, 0, 3}) == 1);

    Polynomial zero = P("0");
    REQUIRE(zero.is_zero());
    REQUIRE(zero.nvars() == 3);
}

TEST_CASE("parsing expands and cancels") {
    REQUIRE(P("(x+y)^2 - x^2 - 2*x*y") == P("y^2"));
    REQUIRE(P("2/4*x") == Polynomial::from_monomial(Monomial{1, 0, 0}, make_rational(1, 2)));
    REQUIRE(P("2(x+y)") == P("2*x + 2*y"));
    REQUIRE(P("-x + x") == P("0"));
}

TEST_CASE("parse errors carry positions") {
    REQUIRE_THROWS_AS(P("x^-2"), ParseError);
    REQUIRE_THROWS_AS(P("x + w"), ParseError);
    REQUIRE_THROWS_AS(P("x +"), ParseError);
    REQUIRE_THROWS_AS(P("x y"), ParseError);   // juxtaposition is not multiplication
    REQUIRE_THROWS_AS(P("2x"), ParseError);
    REQUIRE_THROWS_AS(P("x / 2"), ParseError);  // '/' only inside rational literals
    try {
        P("x + w");
    } catch (const ParseError& e) {
        REQUIRE(e.position() == 4);
    }
    try {
        P("x^-2");
    } catch (const ParseError& e) {
        REQUIRE(std::string(e.what()).find("negative exponent") != std::string::npos);
    }
}

TEST_CASE("partial derivatives") {
    REQUIRE(P("x^3+y^3+z^3").derivative(0) == P("3*x^2"));
    REQUIRE(P("x^2+y^3+z^5").derivative(1) == P("3*y^2"));
    REQUIRE(P("x*y*z").derivative(0) == P("y*z"));
    REQUIRE_THROWS_AS(P("x").derivative(3), std::out_of_range);
}

TEST_CASE("ring operations on small inputs") {
    REQUIRE(P("x+y") + P("x-y") == P("2*x"));
    REQUIRE(P("x+y") * P("x-y") == P("x^2-y^2"));
    REQUIRE(P("x^2").scaled(0).is_zero());
    Polynomial two_vars(2);
    REQUIRE_THROWS_AS(P("x") + two_vars, std::invalid_argument);
}

TEST_CASE("ring axioms hold exactly on random inputs") {
    qhtest::Rng rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial a = qhtest::random_polynomial(rng, 3, 4, 3);
        Polynomial b = qhtest::random_polynomial(rng, 3, 4, 3);
        Polynomial c = qhtest::random_polynomial(rng, 3, 4, 3);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("Leibniz rule holds exactly") {
    qhtest::Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial p = qhtest::random_polynomial(rng, 3, 4, 3);
        Polynomial q = qhtest::random_polynomial(rng, 3, 4, 3);
        const std::size_t i = rng.below(3);
        REQUIRE((p * q).derivative(i) == p * q.derivative(i) + q * p.derivative(i));
    }
}

TEST_CASE("print/parse round trip on random polynomials") {
    qhtest::Rng rng(1234);
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial p = qhtest::random_polynomial(rng, 3, 6, 4);
        REQUIRE(parse_polynomial(to_string(p, kXYZ), kXYZ) == p);
    }
    REQUIRE(to_string(P("0"), kXYZ) == "0");
    REQUIRE(to_string(P("x^3+y^3+z^3"), kXYZ) == "x^3 + y^3 + z^3");
    REQUIRE(to_string(P("-x^2*y + 1/2"), kXYZ) == "-x^2*y + 1/2");
}

TEST_CASE("identifier scan for variable auto-detection") {
    REQUIRE(scan_identifiers("y^2 + x*alpha - x") ==
            std::vector<std::string>{"alpha", "x", "y"});
}
