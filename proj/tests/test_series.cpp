#include "tropsym/series.hpp"

#include "doctest.h"

#include <cmath>

using namespace tropsym;

namespace {

PuiseuxSeries mono(double c, const Rational& e, const Rational& trunc) {
    return PuiseuxSeries::monomial({c, 0.0}, e, trunc);
}

bool close(const std::complex<double>& a, const std::complex<double>& b,
           double tol = 1e-10) {
    return std::abs(a - b) <= tol;
}

}  // namespace

TEST_CASE("monomial, degree, and zero handling") {
    Rational tau = 10;
    PuiseuxSeries z = PuiseuxSeries::zero(tau);
    CHECK(z.is_zero());
    CHECK(z.degree_or_trunc() == tau);
    CHECK_THROWS_AS(z.degree(), TropsymError);

    PuiseuxSeries m = mono(2.0, Rational(3) / 2, tau);
    CHECK(m.degree() == Rational(3) / 2);
    CHECK(close(m.leading_coeff(), 2.0));

    // a monomial at or above trunc collapses to zero
    CHECK(mono(1.0, 10, tau).is_zero());
    CHECK(mono(1.0, 11, tau).is_zero());
}

TEST_CASE("addition cancels exactly opposite terms") {
    Rational tau = 8;
    PuiseuxSeries a = add(mono(1.0, 0, tau), mono(2.0, 1, tau));
    PuiseuxSeries b = add(mono(-1.0, 0, tau), mono(3.0, 2, tau));
    PuiseuxSeries s = add(a, b);
    CHECK(s.degree() == 1);  // the degree-0 terms cancel to hard zero
    CHECK(s.terms.size() == 2);
}

TEST_CASE("multiplication tracks truncation by valuation") {
    // (1 + t^5) known mod t^8, times t^3: product known mod t^11
    Rational tau = 8;
    PuiseuxSeries a = add(mono(1.0, 0, tau), mono(1.0, 5, tau));
    PuiseuxSeries b = mono(1.0, 3, 100);
    PuiseuxSeries p = mul(a, b);
    CHECK(p.trunc == 11);
    CHECK(p.terms.size() == 2);
    CHECK(p.degree() == 3);
}

TEST_CASE("invert is a two-sided inverse up to truncation") {
    Rational tau = 9;
    PuiseuxSeries a = add(add(mono(2.0, -1, tau), mono(1.0, 0, tau)), mono(-3.0, 2, tau));
    PuiseuxSeries inv = invert(a);
    PuiseuxSeries prod = mul(a, inv);
    REQUIRE(!prod.is_zero());
    CHECK(prod.degree() == 0);
    CHECK(close(prod.leading_coeff(), 1.0));
    CHECK(prod.terms.size() == 1);  // all non-constant terms cancel below hard zero
    CHECK_THROWS_AS(invert(PuiseuxSeries::zero(tau)), TropsymError);
}

TEST_CASE("sqrt squares back to the input") {
    Rational tau = 9;
    PuiseuxSeries a = add(mono(4.0, 2, tau + 2), mono(1.0, 3, tau + 2));
    PuiseuxSeries r = sqrt_series(a);
    CHECK(r.degree() == 1);
    CHECK(close(r.leading_coeff(), 2.0));
    PuiseuxSeries back = sub(mul(r, r), a);
    CHECK(back.is_zero());
}

TEST_CASE("quadratic_roots finds both branches without cancellation") {
    Rational tau = 12;
    // (x - 1)(x - t) = x^2 - (1 + t) x + t
    PuiseuxSeries a = mono(1.0, 0, tau);
    PuiseuxSeries b = add(mono(-1.0, 0, tau), mono(-1.0, 1, tau));
    PuiseuxSeries c = mono(1.0, 1, tau);
    auto [x1, x2] = quadratic_roots(a, b, c);
    CHECK(x1.degree() == 0);  // roots ordered by degree
    CHECK(x2.degree() == 1);
    // residual of each root
    for (const auto& x : {x1, x2}) {
        PuiseuxSeries res = add(add(mul(a, mul(x, x)), mul(b, x)), c);
        CHECK(res.max_coeff_magnitude() < 1e-9);
    }
}

TEST_CASE("quadratic_roots degenerate cases") {
    Rational tau = 6;
    PuiseuxSeries one = mono(1.0, 0, tau);
    // x^2 = 0: double root
    CHECK_THROWS_AS(quadratic_roots(one, PuiseuxSeries::zero(tau), PuiseuxSeries::zero(tau)),
                    DegenerateDiscriminant);
    // x^2 - 2x + 1: vanishing discriminant
    CHECK_THROWS_AS(quadratic_roots(one, mono(-2.0, 0, tau), one), DegenerateDiscriminant);
    // a x^2 + b x: zero root sorts last
    auto [y1, y2] = quadratic_roots(one, mono(3.0, 0, tau), PuiseuxSeries::zero(tau));
    CHECK(close(y1.leading_coeff(), -3.0));
    CHECK(y2.is_zero());
}

TEST_CASE("generic_constant is deterministic per seed with magnitude in [1,2]") {
    std::mt19937_64 a(5), b(5), c(6);
    Rational tau = 4;
    PuiseuxSeries g1 = generic_constant(a, tau);
    PuiseuxSeries g2 = generic_constant(b, tau);
    PuiseuxSeries g3 = generic_constant(c, tau);
    CHECK(g1.leading_coeff() == g2.leading_coeff());
    CHECK(g1.leading_coeff() != g3.leading_coeff());
    double m = std::abs(g1.leading_coeff());
    CHECK(m >= 1.0);
    CHECK(m <= 2.0);
    CHECK(g1.degree() == 0);
}

TEST_CASE("series matrix serialization round-trips") {
    Rational tau = 7;
    SeriesMatrix m = SeriesMatrix::filled(2, 2, tau, true);
    m.at(0, 0) = add(mono(1.5, 0, tau), mono(-0.25, Rational(1) / 3, tau));
    m.at(0, 1) = PuiseuxSeries::monomial({0.5, -2.0}, 1, tau);
    m.at(1, 0) = m.at(0, 1);
    m.at(1, 1) = mono(3.0, 2, tau);
    SeriesMatrix back = parse_series_matrix_string(format_series_matrix(m));
    CHECK(back.rows == 2);
    CHECK(back.symmetric);
    CHECK(back.trunc == tau);
    CHECK(format_series_matrix(back) == format_series_matrix(m));

    // symmetric flag with asymmetric entries rejected
    m.at(1, 0) = mono(9.0, 0, tau);
    CHECK_THROWS_AS(parse_series_matrix_string(format_series_matrix(m)), ParseError);
}
