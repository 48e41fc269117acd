#include "tropsym/rank.hpp"
#include "tropsym/witness.hpp"

#include "doctest.h"

#include <random>

using namespace tropsym;

namespace {

TropicalMatrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> num(-3, 4);
    std::vector<Rational> flat(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Rational v = num(rng);
            flat[i * n + j] = v;
            flat[j * n + i] = v;
        }
    return TropicalMatrix(n, n, std::move(flat), true);
}

}  // namespace

TEST_CASE("conic matrices: the rank gap between the two notions") {
    TropicalMatrix c1 = catalog("c1").matrix;
    TropicalMatrix c2 = catalog("c2").matrix;
    CHECK(symmetric_tropical_rank(c1).rank == 2);
    CHECK(tropical_rank(c2).rank == 2);
    CHECK(symmetric_tropical_rank(c2).rank == 3);
}

TEST_CASE("rank_one_test: columns differ by tropical scalars") {
    CHECK(rank_one_test(parse_matrix_string("0 1\n1 2\n")));
    CHECK(rank_one_test(parse_matrix_string("2 3 1\n2 3 1\n")));
    CHECK_FALSE(rank_one_test(parse_matrix_string("0 0\n0 1\n")));
    TropicalMatrix r1 = parse_matrix_string("0 1\n1 2\n");
    CHECK(tropical_rank(r1).rank == 1);
}

TEST_CASE("rank witness submatrix is nonsingular and lexicographically first") {
    TropicalMatrix c2 = parse_matrix_string("1 0 0\n0 1 0\n0 0 1\n");
    RankReport r = tropical_rank(c2);
    CHECK(r.rank == 2);
    CHECK(r.row_idx == std::vector<std::size_t>{0, 1});
    CHECK(r.col_idx == std::vector<std::size_t>{0, 1});
}

TEST_CASE("exhaustive scan agrees and marks the report") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        TropicalMatrix a = random_symmetric(rng, 4);
        RankReport fast = symmetric_tropical_rank(a, false);
        RankReport full = symmetric_tropical_rank(a, true);
        CHECK(fast.rank == full.rank);
        CHECK_FALSE(fast.exhaustive);
        CHECK(full.exhaustive);
    }
}

TEST_CASE("threaded scan matches sequential") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 10; ++trial) {
        TropicalMatrix a = random_symmetric(rng, 5);
        RankReport seq = symmetric_tropical_rank(a, false, 1);
        RankReport par = symmetric_tropical_rank(a, false, 4);
        CHECK(seq.rank == par.rank);
        CHECK(seq.row_idx == par.row_idx);
        CHECK(seq.col_idx == par.col_idx);
    }
}

TEST_CASE("both notions agree with the brute-force oracle on small matrices") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + rng() % 4;
        TropicalMatrix a = random_symmetric(rng, n);
        CHECK(tropical_rank(a).rank == brute_rank_oracle(a, RankMode::Standard));
        CHECK(symmetric_tropical_rank(a).rank ==
              brute_rank_oracle(a, RankMode::Symmetric));
    }
}

TEST_CASE("symmetric rank is at least standard rank") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 30; ++trial) {
        TropicalMatrix a = random_symmetric(rng, 4);
        CHECK(symmetric_tropical_rank(a).rank >= tropical_rank(a).rank);
    }
}
