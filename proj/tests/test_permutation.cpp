#include "tropsym/permutation.hpp"

#include "doctest.h"

#include <algorithm>
#include <numeric>

using namespace tropsym;

TEST_CASE("cycle decomposition and notation") {
    Permutation id = Permutation::identity(4);
    CHECK(id.cycle_notation() == "id");
    CHECK(id.is_even());

    Permutation p = Permutation::from_cycles(7, {{2, 7}, {3, 6}, {4, 5}});
    CHECK(p(1) == 6);  // 2 -> 7 in 1-based terms
    CHECK(p(0) == 0);
    CHECK(p.cycle_notation() == "(2 7)(3 6)(4 5)");
    CHECK_FALSE(p.is_even());
    CHECK(p.inverse() == p);

    Permutation q({1, 2, 0});  // 3-cycle
    CHECK(q.cycles() == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
    CHECK(q.is_even());
    CHECK(q.compose(q.inverse()) == Permutation::identity(3));
}

TEST_CASE("cycle_similar identifies cycles up to inversion") {
    Permutation c({1, 2, 0});       // (1 2 3)
    Permutation cinv({2, 0, 1});    // (1 3 2)
    CHECK(cycle_similar(c, cinv));
    CHECK(cycle_similar(c, c));
    Permutation t({1, 0, 2});  // (1 2)
    CHECK_FALSE(cycle_similar(c, t));

    // 4-cycles: (1 2 3 4) ~ (1 4 3 2) but not (1 3 2 4)
    Permutation a = Permutation::from_cycles(4, {{1, 2, 3, 4}});
    Permutation b = Permutation::from_cycles(4, {{1, 4, 3, 2}});
    Permutation d = Permutation::from_cycles(4, {{1, 3, 2, 4}});
    CHECK(cycle_similar(a, b));
    CHECK_FALSE(cycle_similar(a, d));
}

TEST_CASE("CycleClass members invert cycles in every combination") {
    Permutation p = Permutation::from_cycles(6, {{1, 2, 3}, {4, 5, 6}});
    auto members = CycleClass(p).members(6);
    CHECK(members.size() == 4);  // two invertible 3-cycles
    for (const auto& m : members) CHECK(cycle_similar(p, m));

    // transpositions and fixed points are self-inverse
    Permutation t = Permutation::from_cycles(4, {{1, 2}});
    CHECK(CycleClass(t).members(4).size() == 1);
}

TEST_CASE("PairMultiset identifies a bijection with its mirror") {
    std::vector<std::size_t> idx = {0, 1, 2};
    // sigma = (1 2 3) and its inverse give the same unordered pair multiset
    PairMultiset a(idx, idx, {1, 2, 0});
    PairMultiset b(idx, idx, {2, 0, 1});
    CHECK(a == b);
    PairMultiset c(idx, idx, {0, 1, 2});
    CHECK_FALSE(a == c);

    // off-principal bijections: rows {0,1} -> cols {1,2}
    PairMultiset d({0, 1}, {1, 2}, {0, 1});  // {0,1},{1,2}
    PairMultiset e({0, 1}, {1, 2}, {1, 0});  // {0,2},{1,1}
    CHECK_FALSE(d == e);
}
