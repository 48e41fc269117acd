#include "tropsym/lift.hpp"

#include "tropsym/rank.hpp"
#include "tropsym/witness.hpp"

#include "doctest.h"

#include <random>

using namespace tropsym;

TEST_CASE("default truncation scales with target rank and spread") {
    TropicalMatrix a = parse_matrix_string("0 3\n3 0\n");
    CHECK(default_trunc(a, 1) == 16);  // 2*2*(1+3)
    CHECK(default_trunc(a, 2) == 24);
}

TEST_CASE("rank1_lift: monomial lift of an additive rank-1 matrix") {
    TropicalMatrix a = parse_matrix_string("0 1\n1 2\n");
    LiftCertificate cert = rank1_lift(a);
    CHECK(cert.valid());
    CHECK(cert.matrix.at(1, 1).degree() == 2);
    CHECK(cert.matrix.at(0, 1).terms.size() == 1);

    CHECK_THROWS_AS(rank1_lift(parse_matrix_string("0 0\n0 1\n")), TropsymError);
}

TEST_CASE("rank2_symmetric_lift on the singular conic") {
    TropicalMatrix c1 = catalog("c1").matrix;
    LiftCertificate cert = rank2_symmetric_lift(c1, 1);
    CHECK(cert.valid());
    CHECK(cert.checks.degree_match);
    CHECK(cert.checks.symmetry);
    CHECK(cert.checks.minor_residual < 1e-6);
    CHECK(cert.checks.witness_leading > 1e-3);
    CHECK(cert.matrix.degrees() == c1);
}

TEST_CASE("rank2_symmetric_lift rejects the nonsingular conic at precondition") {
    TropicalMatrix c2 = catalog("c2").matrix;
    CHECK_THROWS_AS(rank2_symmetric_lift(c2), TropsymError);
}

TEST_CASE("lift is deterministic per seed") {
    TropicalMatrix c1 = catalog("c1").matrix;
    LiftCertificate a = rank2_symmetric_lift(c1, 9);
    LiftCertificate b = rank2_symmetric_lift(c1, 9);
    LiftCertificate c = rank2_symmetric_lift(c1, 10);
    CHECK(format_series_matrix(a.matrix) == format_series_matrix(b.matrix));
    CHECK(format_series_matrix(a.matrix) != format_series_matrix(c.matrix));
}

TEST_CASE("lift handles each block shape") {
    // no zero row: two positive blocks
    TropicalMatrix two_blocks = parse_matrix_string("1 1 0\n1 2 0\n0 0 3\n");
    // one zero row between blocks
    TropicalMatrix z1 = parse_matrix_string("1 0 0\n0 0 0\n0 0 2\n");
    // bipartite tail with a zero row
    TropicalMatrix bip = parse_matrix_string("0 0 0\n0 0 1\n0 1 0\n");
    // repeated zero rows
    TropicalMatrix z2 = parse_matrix_string("0 0 0\n0 0 0\n0 0 1\n");
    for (const TropicalMatrix& a : {two_blocks, z1, bip, z2}) {
        REQUIRE(symmetric_tropical_rank(a).rank == 2);
        LiftCertificate cert = rank2_symmetric_lift(a, 3);
        CHECK(cert.valid());
        CHECK(cert.matrix.degrees() == a);
    }
}

TEST_CASE("lift of a 4x4 with a nontrivial bipartite tail") {
    TropicalMatrix a = parse_matrix_string(
        "0 0 0 0\n"
        "0 0 1 2\n"
        "0 1 0 0\n"
        "0 2 0 0\n");
    if (symmetric_tropical_rank(a).rank == 2) {
        LiftCertificate cert = rank2_symmetric_lift(a, 5);
        CHECK(cert.valid());
    }
}

TEST_CASE("unnormalized and scaled inputs lift too") {
    // symmetric scaling of c1 must not change liftability
    TropicalMatrix c1 = catalog("c1").matrix;
    TropicalMatrix scaled = symmetric_scale(c1, {{Rational(-2), Rational(1) / 2, Rational(3)}});
    REQUIRE(symmetric_tropical_rank(scaled).rank == 2);
    LiftCertificate cert = rank2_symmetric_lift(scaled, 2);
    CHECK(cert.valid());
    CHECK(cert.matrix.degrees() == scaled);
}

TEST_CASE("standard_rank2_lift covers a tropical-segment matrix") {
    std::mt19937_64 rng(31);
    TropicalMatrix u = parse_matrix_string("0 1 2\n0 1 2\n0 0 0\n");
    REQUIRE(tropical_rank(u).rank == 2);
    SeriesMatrix l = standard_rank2_lift(u, rng, Rational(12));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(l.at(i, j).degree() == u.at(i, j));
    LiftCertificate cert = verify_lift(u, l, 2);
    CHECK(cert.checks.degree_match);
    CHECK(cert.checks.minors_vanish);
    CHECK(cert.checks.witness_nonsingular);
}

TEST_CASE("verify_lift flags the asymmetric singular lift of c2") {
    TropicalMatrix c2 = catalog("c2").matrix;
    Rational tau = 10;
    SeriesMatrix l = SeriesMatrix::filled(3, 3, tau, false);
    auto t = PuiseuxSeries::monomial(1.0, 1, tau);
    auto one = PuiseuxSeries::monomial(1.0, 0, tau);
    auto one_plus_t = add(one, t);
    l.at(0, 0) = t;
    l.at(0, 1) = one;
    l.at(0, 2) = one_plus_t;
    l.at(1, 0) = one;
    l.at(1, 1) = t;
    l.at(1, 2) = one_plus_t;
    l.at(2, 0) = one_plus_t;
    l.at(2, 1) = PuiseuxSeries::monomial(-1.0, 0, tau);
    l.at(2, 2) = t;
    LiftCertificate cert = verify_lift(c2, l, 2);
    CHECK(cert.checks.degree_match);
    CHECK(cert.checks.minors_vanish);  // the lift is genuinely singular
    CHECK(cert.checks.witness_nonsingular);
    CHECK_FALSE(cert.checks.symmetry);  // but it is not symmetric
    CHECK_FALSE(cert.valid());
}

TEST_CASE("kapranov_rank_3x3 and conic classification") {
    CHECK(kapranov_rank_3x3(catalog("c1").matrix) == 2);
    CHECK(kapranov_rank_3x3(catalog("c2").matrix) == 3);
    CHECK(classify_conic(1, 0, 1, 0, 0, 0) == ConicClass::SingularTwoLines);
    CHECK(classify_conic(1, 0, 1, 0, 0, 1) == ConicClass::Nonsingular);
    CHECK_THROWS_AS(kapranov_rank_3x3(parse_matrix_string("0 1\n1 0\n")), DimensionError);
}
