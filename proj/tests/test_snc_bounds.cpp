#include <catch2/catch_amalgamated.hpp>

#include "bfun/snc_bounds.hpp"

using namespace bfun;

namespace {

BFunction roots(std::initializer_list<Rational> rs) { return BFunction::from_roots(rs); }

} // namespace

TEST_CASE("general bound") {
    CHECK(monomial_bound_general(MonomialData({2}, {1}, 1)) ==
          roots({Rational(-1), Rational(0), Rational(-1, 2)}));
    CHECK(monomial_bound_general(MonomialData({0}, {0}, 0)) == roots({Rational(-1)}));
    CHECK(monomial_bound_general(MonomialData({1, 1}, {0, 0}, 0)) ==
          roots({Rational(-1), Rational(-1), Rational(-1)}));
}

TEST_CASE("m = 0 bound") {
    CHECK(monomial_bound_m0(MonomialData({2}, {0})) ==
          roots({Rational(-1, 2), Rational(-1)}));
    CHECK(monomial_bound_m0(MonomialData({2}, {1})) ==
          roots({Rational(-1), Rational(-3, 2)}));
    CHECK(monomial_bound_m0(MonomialData({2, 3}, {0, 0})) ==
          roots({Rational(-1, 2), Rational(-1), Rational(-1, 3), Rational(-2, 3),
                 Rational(-1)}));
    CHECK_THROWS_AS(monomial_bound_m0(MonomialData({2}, {0}, 1)), NonzeroShift);
}

TEST_CASE("smooth-factor bound") {
    CHECK(monomial_bound_smooth_factor(MonomialData({1, 2}, {0, 0}, 1)) ==
          roots({Rational(-1), Rational(1, 2), Rational(0)}));
    CHECK(monomial_bound_smooth_factor(MonomialData({1}, {0}, 5)) == roots({Rational(-1)}));
    CHECK(monomial_bound_smooth_factor(MonomialData({1, 1}, {0, 0}, 0)) ==
          roots({Rational(-1), Rational(-1)}));
    CHECK_THROWS_AS(monomial_bound_smooth_factor(MonomialData({2, 1}, {0, 0}, 0)),
                    PreconditionViolated);
    CHECK_THROWS_AS(monomial_bound_smooth_factor(MonomialData({1, 1}, {1, 0}, 0)),
                    PreconditionViolated);
}

TEST_CASE("shift bound") {
    BFunction b = roots({Rational(-1), Rational(-1, 2)});
    CHECK(shift_bound(b, 1) == roots({Rational(-1), Rational(1, 2)}));
    CHECK(shift_bound(b, 0) == b);

    BFunction cusp = roots({Rational(-1), Rational(-5, 6), Rational(-7, 6)});
    CHECK(shift_bound(cusp, 2) ==
          roots({Rational(-1), Rational(7, 6), Rational(5, 6)}));

    CHECK_THROWS_AS(shift_bound(roots({Rational(-1, 2)}), 1), MissingRootMinusOne);
}

TEST_CASE("internal consistency between the variants") {
    for (unsigned a1 = 0; a1 <= 3; ++a1) {
        for (unsigned a2 = 0; a2 <= 2; ++a2) {
            for (unsigned b1 = 0; b1 <= 2; ++b1) {
                for (unsigned b2 = 0; b2 <= 1; ++b2) {
                    MonomialData d({a1, a2}, {b1, b2}, 0);
                    BFunction m0 = monomial_bound_m0(d);
                    BFunction general = monomial_bound_general(d);
                    // m0 divides the general bound after discounting the
                    // forced -1 when g/f is not a polynomial
                    BFunction discount = m0;
                    if ((a1 > b1 || a2 > b2) && discount.has_root(Rational(-1)))
                        discount = reduced_bfunction(discount);
                    CHECK(discount.divides(general));
                    if (a1 == 1 && b1 == 0) {
                        CHECK(monomial_bound_smooth_factor(d).divides(general));
                    }
                }
            }
        }
    }
}

TEST_CASE("largest root of the m0 bound is minus the identity-resolution lct") {
    for (unsigned a1 = 1; a1 <= 3; ++a1) {
        for (unsigned a2 = 0; a2 <= 3; ++a2) {
            for (unsigned b1 = 0; b1 <= 2; ++b1) {
                for (unsigned b2 = 0; b2 <= 2; ++b2) {
                    MonomialData d({a1, a2}, {b1, b2}, 0);
                    std::optional<Rational> lct;
                    for (size_t i = 0; i < 2; ++i) {
                        if (d.a[i] == 0) continue;
                        Rational q = make_rational(Int(d.b[i]) + 1, Int(d.a[i]));
                        if (!lct || q < *lct) lct = q;
                    }
                    CHECK(monomial_bound_m0(d).largest_root() == -*lct);
                }
            }
        }
    }
}

TEST_CASE("oracle result divides the m0 bound on a small grid") {
    for (unsigned a1 = 0; a1 <= 2; ++a1) {
        for (unsigned a2 = 0; a2 <= 2; ++a2) {
            if (a1 + a2 == 0 || a1 + a2 > 3) continue;
            for (unsigned b1 = 0; b1 <= 1; ++b1) {
                for (unsigned b2 = 0; b2 <= 1; ++b2) {
                    MPoly f = MPoly::monomial(2, {a1, a2}, Rational(1));
                    MPoly g = MPoly::monomial(2, {b1, b2}, Rational(1));
                    BFunction b =
                        solve_bfunction(f, g, monomial_oracle_bounds({a1, a2})).b;
                    CHECK(b.divides(monomial_bound_m0(MonomialData({a1, a2}, {b1, b2}))));
                }
            }
        }
    }
}
