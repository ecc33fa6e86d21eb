#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bfun/mpoly.hpp"
#include "bfun/parse.hpp"

using namespace bfun;

namespace {

MPoly random_poly(std::mt19937_64& rng, unsigned nvars, unsigned max_deg, int max_terms) {
    std::uniform_int_distribution<int> coeff(-6, 6);
    std::uniform_int_distribution<unsigned> expo(0, max_deg);
    std::uniform_int_distribution<int> count(1, max_terms);
    MPoly p(nvars);
    int terms = count(rng);
    for (int t = 0; t < terms; ++t) {
        Exponents e(nvars);
        for (auto& x : e) x = expo(rng);
        p.add_term(e, Rational(coeff(rng)));
    }
    return p;
}

std::vector<Rational> random_point(std::mt19937_64& rng, unsigned nvars) {
    std::uniform_int_distribution<int> v(-5, 5);
    std::uniform_int_distribution<int> d(1, 4);
    std::vector<Rational> pt;
    for (unsigned i = 0; i < nvars; ++i) pt.emplace_back(v(rng), d(rng));
    return pt;
}

} // namespace

TEST_CASE("ring operations commute with evaluation") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        MPoly p = random_poly(rng, 2, 4, 5);
        MPoly q = random_poly(rng, 2, 4, 5);
        auto pt = random_point(rng, 2);
        CHECK((p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt));
        CHECK((p - q).evaluate(pt) == p.evaluate(pt) - q.evaluate(pt));
        CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
    }
}

TEST_CASE("no zero terms are stored") {
    MPoly p(2);
    p.add_term({1, 0}, Rational(3));
    p.add_term({1, 0}, Rational(-3));
    CHECK(p.is_zero());
    CHECK(p == MPoly(2));

    MPoly x = MPoly::variable(2, 0);
    CHECK((x - x).is_zero());
}

TEST_CASE("derivative satisfies the Leibniz rule") {
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 40; ++trial) {
        MPoly p = random_poly(rng, 2, 3, 4);
        MPoly q = random_poly(rng, 2, 3, 4);
        for (unsigned v = 0; v < 2; ++v)
            CHECK((p * q).derivative(v) == p.derivative(v) * q + p * q.derivative(v));
    }
}

TEST_CASE("exact division") {
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 40; ++trial) {
        MPoly p = random_poly(rng, 2, 3, 4);
        MPoly q = random_poly(rng, 2, 3, 4);
        if (q.is_zero()) continue;
        auto quot = try_divide_exact(p * q, q);
        REQUIRE(quot.has_value());
        CHECK(*quot == p);
    }
    MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
    CHECK_FALSE(try_divide_exact(x + y, x).has_value());
    CHECK(divides(x, x * x + x * y));
}

TEST_CASE("serialization round-trips in canonical order") {
    MPoly p = parse_mpoly("x^2 + 3/2*x*y - y^3 + 2", 2);
    auto terms = mpoly_to_terms(p);
    // descending graded-lex: y^3 first (degree 3), then x^2, xy, constant
    REQUIRE(terms.size() == 4);
    CHECK(terms[0].second == Exponents{0, 3});
    CHECK(terms[0].first == "-1");
    CHECK(terms[1].second == Exponents{2, 0});
    CHECK(terms[2].second == Exponents{1, 1});
    CHECK(terms[2].first == "3/2");
    CHECK(terms[3].second == Exponents{0, 0});
    CHECK(mpoly_from_terms(2, terms) == p);

    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 40; ++trial) {
        MPoly q = random_poly(rng, 3, 4, 6);
        CHECK(mpoly_from_terms(3, mpoly_to_terms(q)) == q);
    }
}

TEST_CASE("infix parsing") {
    CHECK(parse_mpoly("x^2+y^3", 2) ==
          MPoly::variable(2, 0).pow(2) + MPoly::variable(2, 1).pow(3));
    CHECK(parse_mpoly("(x+y)^2", 2) == parse_mpoly("x^2+2x y+y^2", 2));
    CHECK(parse_mpoly("-x + 1/2", 1) == MPoly::constant(1, Rational(1, 2)) - MPoly::variable(1, 0));
    CHECK(parse_mpoly("x1*x2^2", 2) == parse_mpoly("x*y^2", 2));
    CHECK(parse_mpoly("2", 0).constant_value() == 2);
    CHECK_THROWS_AS(parse_mpoly("z", 2), PreconditionViolated);
    CHECK_THROWS_AS(parse_mpoly("x^", 1), PreconditionViolated);
    CHECK_THROWS_AS(parse_mpoly("x+", 1), PreconditionViolated);
}

TEST_CASE("gcd and square-freeness") {
    MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
    MPoly xy = x * y;
    CHECK(mpoly_gcd(xy, y) == normalized(y));
    CHECK(mpoly_gcd(x, y) == MPoly::constant(2, Rational(1)));

    MPoly sum = x + y;
    CHECK(mpoly_gcd(sum * sum, Rational(2) * sum) == normalized(sum));
    CHECK(mpoly_gcd(sum * x, sum * y) == normalized(sum));

    CHECK(is_squarefree(xy));
    CHECK(is_squarefree(x * x + y * y * y));
    CHECK_FALSE(is_squarefree(x * x * y));
    CHECK_FALSE(is_squarefree(sum * sum));
    CHECK_FALSE(is_squarefree(sum * sum * y));
    CHECK(is_squarefree(parse_mpoly("x^2+x*y+y^3", 2)));

    std::mt19937_64 rng(505);
    for (int trial = 0; trial < 25; ++trial) {
        MPoly p = random_poly(rng, 2, 2, 3);
        MPoly q = random_poly(rng, 2, 2, 3);
        if (p.is_zero() || q.is_zero()) continue;
        CHECK(mpoly_gcd(p * q, p) == normalized(p));
    }
}

TEST_CASE("rendering") {
    CHECK(mpoly_to_string(parse_mpoly("x^2+y^3", 2)) == "y^3 + x^2");
    CHECK(mpoly_to_string(parse_mpoly("-3/2x y", 2)) == "-3/2*x*y");
    CHECK(mpoly_to_string(MPoly(2)) == "0");
}
