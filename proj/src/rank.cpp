#include "tropsym/rank.hpp"

#include "tropsym/permutation.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace tropsym {

namespace {

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t r) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(r);
    for (std::size_t i = 0; i < r; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        // advance to the next combination in lexicographic order
        std::size_t k = r;
        while (k > 0 && cur[k - 1] == n - r + (k - 1)) --k;
        if (k == 0) break;
        ++cur[k - 1];
        for (std::size_t i = k; i < r; ++i) cur[i] = cur[i - 1] + 1;
    }
    return out;
}

// Scan all r x r submatrices at one level; returns the index (into the
// row-major (I, J) grid) of the lexicographically first nonsingular one,
// or SIZE_MAX if the level is empty.
std::size_t scan_level(const TropicalMatrix& a, BijectionMode mode,
                       const std::vector<std::vector<std::size_t>>& row_combos,
                       const std::vector<std::vector<std::size_t>>& col_combos,
                       unsigned threads) {
    const std::size_t total = row_combos.size() * col_combos.size();
    auto nonsingular = [&](std::size_t k) {
        const auto& I = row_combos[k / col_combos.size()];
        const auto& J = col_combos[k % col_combos.size()];
        return enumerate_optimal_bijections(a, I, J, mode, 2).size() < 2;
    };
    if (threads <= 1 || total < 64) {
        for (std::size_t k = 0; k < total; ++k)
            if (nonsingular(k)) return k;
        return SIZE_MAX;
    }
    std::atomic<std::size_t> next{0}, best{SIZE_MAX};
    auto worker = [&] {
        while (true) {
            std::size_t k = next.fetch_add(1);
            if (k >= total || k >= best.load()) return;
            if (!nonsingular(k)) continue;
            std::size_t cur = best.load();
            while (k < cur && !best.compare_exchange_weak(cur, k)) {}
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return best.load();
}

RankReport rank_scan(const TropicalMatrix& a, BijectionMode mode, bool exhaustive,
                     unsigned threads) {
    RankReport rep;
    rep.exhaustive = exhaustive;
    std::size_t cap = std::min(a.n_rows(), a.n_cols());
    bool hit_empty_level = false;
    for (std::size_t r = 1; r <= cap; ++r) {
        auto row_combos = combinations(a.n_rows(), r);
        auto col_combos =
            (a.n_rows() == a.n_cols()) ? row_combos : combinations(a.n_cols(), r);
        std::size_t k = scan_level(a, mode, row_combos, col_combos, threads);
        if (k == SIZE_MAX) {
            if (!exhaustive) break;
            hit_empty_level = true;
            continue;
        }
        if (hit_empty_level)
            throw TropsymError("rank scan: minor monotonicity violated at level " +
                               std::to_string(r));
        rep.rank = r;
        rep.row_idx = row_combos[k / col_combos.size()];
        rep.col_idx = col_combos[k % col_combos.size()];
    }
    return rep;
}

}  // namespace

RankReport tropical_rank(const TropicalMatrix& a, bool exhaustive, unsigned threads) {
    return rank_scan(a, BijectionMode::Standard, exhaustive, threads);
}

RankReport symmetric_tropical_rank(const TropicalMatrix& a, bool exhaustive,
                                   unsigned threads) {
    if (!a.symmetric())
        throw DimensionError("symmetric_tropical_rank requires a symmetric matrix");
    return rank_scan(a, BijectionMode::Symmetric, exhaustive, threads);
}

bool rank_one_test(const TropicalMatrix& a) {
    for (std::size_t j = 1; j < a.n_cols(); ++j) {
        Rational d = a.at(0, j) - a.at(0, 0);
        for (std::size_t i = 1; i < a.n_rows(); ++i)
            if (a.at(i, j) - a.at(i, 0) != d) return false;
    }
    return true;
}

namespace {

bool brute_nonsingular(const TropicalMatrix& a, const std::vector<std::size_t>& I,
                       const std::vector<std::size_t>& J, RankMode mode) {
    std::size_t r = I.size();
    std::vector<std::size_t> perm(r);
    for (std::size_t i = 0; i < r; ++i) perm[i] = i;
    bool have_min = false;
    Rational best;
    std::size_t standard_count = 0;
    std::set<PairMultiset> classes;
    do {
        Rational s = 0;
        for (std::size_t i = 0; i < r; ++i) s += a.at(I[i], J[perm[i]]);
        if (!have_min || s < best) {
            have_min = true;
            best = s;
            standard_count = 1;
            classes.clear();
            classes.insert(PairMultiset(I, J, perm));
        } else if (s == best) {
            ++standard_count;
            classes.insert(PairMultiset(I, J, perm));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return (mode == RankMode::Standard ? standard_count : classes.size()) < 2;
}

}  // namespace

std::size_t brute_rank_oracle(const TropicalMatrix& a, RankMode mode) {
    if (a.n_rows() > 7 || a.n_cols() > 7)
        throw DimensionError("brute_rank_oracle is limited to n <= 7");
    if (mode == RankMode::Symmetric && !a.symmetric())
        throw DimensionError("symmetric oracle requires a symmetric matrix");
    std::size_t rank = 0;
    for (std::size_t r = 1; r <= std::min(a.n_rows(), a.n_cols()); ++r) {
        for (const auto& I : combinations(a.n_rows(), r))
            for (const auto& J : combinations(a.n_cols(), r))
                if (brute_nonsingular(a, I, J, mode)) {
                    rank = r;
                    goto next_level;
                }
    next_level:;
    }
    return rank;
}

}  // namespace tropsym
