#include "tropsym/matching.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace tropsym {

Permutation OptimalBijection::as_ambient_permutation(std::size_t n) const {
    std::vector<std::size_t> imgs(n);
    for (std::size_t i = 0; i < n; ++i) imgs[i] = i;
    for (std::size_t k = 0; k < row_idx.size(); ++k)
        imgs[row_idx[k]] = col_idx[assignment[k]];
    return Permutation(std::move(imgs));
}

namespace detail {

AssignmentResult solve_assignment(const std::vector<std::vector<Rational>>& cost) {
    const std::size_t n = cost.size();
    // Shortest augmenting paths with potentials; exact rationals throughout.
    // 1-based with column 0 as the virtual start, nullopt as +infinity.
    std::vector<Rational> u(n + 1), v(n + 1);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::vector<std::optional<Rational>> minv(n + 1);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            std::size_t i0 = p[j0], j1 = 0;
            std::optional<Rational> delta;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                Rational cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (!minv[j] || cur < *minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (!delta || *minv[j] < *delta) {
                    delta = *minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += *delta;
                    v[j] -= *delta;
                } else if (minv[j]) {
                    *minv[j] -= *delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    AssignmentResult res;
    res.assignment.assign(n, 0);
    for (std::size_t j = 1; j <= n; ++j) res.assignment[p[j] - 1] = j - 1;
    res.u.assign(n, Rational(0));
    res.v.assign(n, Rational(0));
    for (std::size_t i = 1; i <= n; ++i) res.u[i - 1] = u[i];
    for (std::size_t j = 1; j <= n; ++j) res.v[j - 1] = v[j];
    res.value = 0;
    for (std::size_t i = 0; i < n; ++i) res.value += cost[i][res.assignment[i]];
    return res;
}

namespace {

// Perfect matching feasibility for rows [from, r) against unused columns
// of the tight subgraph (Kuhn's algorithm).
bool matching_feasible(const std::vector<std::vector<bool>>& tight, std::size_t from,
                       const std::vector<bool>& col_used) {
    std::size_t r = tight.size();
    std::vector<std::size_t> match_col(r, r);  // column -> row, r = free
    for (std::size_t j = 0; j < r; ++j)
        if (col_used[j]) match_col[j] = r + 1;  // blocked
    std::vector<bool> visited(r);
    std::function<bool(std::size_t)> try_row = [&](std::size_t i) -> bool {
        for (std::size_t j = 0; j < r; ++j) {
            if (!tight[i][j] || col_used[j] || visited[j]) continue;
            visited[j] = true;
            if (match_col[j] == r || try_row(match_col[j])) {
                match_col[j] = i;
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = from; i < r; ++i) {
        std::fill(visited.begin(), visited.end(), false);
        if (!try_row(i)) return false;
    }
    return true;
}

}  // namespace

}  // namespace detail

Rational trop_det(const TropicalMatrix& a) {
    if (!a.is_square()) throw DimensionError("trop_det requires a square matrix");
    std::size_t n = a.n_rows();
    std::vector<std::vector<Rational>> cost(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cost[i][j] = a.at(i, j);
    return detail::solve_assignment(cost).value;
}

std::vector<OptimalBijection> enumerate_optimal_bijections(
    const TropicalMatrix& a, const std::vector<std::size_t>& row_idx,
    const std::vector<std::size_t>& col_idx, BijectionMode mode, std::size_t limit) {
    if (row_idx.size() != col_idx.size())
        throw DimensionError("enumerate_optimal_bijections: |I| != |J|");
    if (mode == BijectionMode::Symmetric && !a.symmetric())
        throw DimensionError("symmetric mode requires a symmetric ambient matrix");
    const std::size_t r = row_idx.size();
    if (r == 0 || limit == 0) return {};

    std::vector<std::vector<Rational>> cost(r, std::vector<Rational>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) cost[i][j] = a.at(row_idx[i], col_idx[j]);
    auto sol = detail::solve_assignment(cost);

    // Complementary slackness: a bijection is optimal iff it uses only
    // edges with zero reduced cost.
    std::vector<std::vector<bool>> tight(r, std::vector<bool>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            tight[i][j] = (cost[i][j] == sol.u[i] + sol.v[j]);

    std::vector<OptimalBijection> out;
    std::vector<PairMultiset> seen_keys;
    std::vector<std::size_t> assign(r, 0);
    std::vector<bool> col_used(r, false);
    bool done = false;

    std::function<void(std::size_t)> dfs = [&](std::size_t i) {
        if (done) return;
        if (i == r) {
            OptimalBijection w{row_idx, col_idx, assign};
            if (mode == BijectionMode::Standard) {
                out.push_back(std::move(w));
            } else {
                PairMultiset key = w.pair_multiset();
                if (std::find(seen_keys.begin(), seen_keys.end(), key) == seen_keys.end()) {
                    seen_keys.push_back(std::move(key));
                    out.push_back(std::move(w));
                }
            }
            if (out.size() >= limit) done = true;
            return;
        }
        for (std::size_t j = 0; j < r && !done; ++j) {
            if (!tight[i][j] || col_used[j]) continue;
            col_used[j] = true;
            assign[i] = j;
            if (detail::matching_feasible(tight, i + 1, col_used)) dfs(i + 1);
            col_used[j] = false;
        }
    };
    dfs(0);
    return out;
}

bool is_trop_singular(const TropicalMatrix& a, const std::vector<std::size_t>& row_idx,
                      const std::vector<std::size_t>& col_idx) {
    return enumerate_optimal_bijections(a, row_idx, col_idx, BijectionMode::Standard, 2)
               .size() >= 2;
}

bool is_sym_trop_singular(const TropicalMatrix& a, const std::vector<std::size_t>& row_idx,
                          const std::vector<std::size_t>& col_idx) {
    return enumerate_optimal_bijections(a, row_idx, col_idx, BijectionMode::Symmetric, 2)
               .size() >= 2;
}

DetResult det_report(const TropicalMatrix& a) {
    if (!a.is_square()) throw DimensionError("det_report requires a square matrix");
    std::size_t n = a.n_rows();
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    DetResult res{trop_det(a), 0, 0, {}, {}};
    res.standard_witnesses =
        enumerate_optimal_bijections(a, all, all, BijectionMode::Standard, 2);
    res.distinct_monomials = res.standard_witnesses.size();
    if (a.symmetric()) {
        res.symmetric_witnesses =
            enumerate_optimal_bijections(a, all, all, BijectionMode::Symmetric, 2);
        res.distinct_classes = res.symmetric_witnesses.size();
    }
    return res;
}

}  // namespace tropsym
