#include "tropsym/blocks.hpp"

#include "tropsym/rank.hpp"

#include <algorithm>
#include <map>

namespace tropsym {

TropicalMatrix BlockDecomposition::b1() const {
    std::vector<std::size_t> idx(b1_size);
    for (std::size_t i = 0; i < b1_size; ++i) idx[i] = b1_offset() + i;
    return permuted.submatrix(idx, idx);
}

TropicalMatrix BlockDecomposition::b2() const {
    std::vector<std::size_t> idx(b2_size);
    for (std::size_t i = 0; i < b2_size; ++i) idx[i] = b2_offset() + i;
    return permuted.submatrix(idx, idx);
}

TropicalMatrix BlockDecomposition::c() const {
    std::vector<std::size_t> pi(p_size), qi(q_size);
    for (std::size_t i = 0; i < p_size; ++i) pi[i] = p_offset() + i;
    for (std::size_t i = 0; i < q_size; ++i) qi[i] = q_offset() + i;
    return permuted.submatrix(pi, qi);
}

std::vector<std::size_t> cosupport(const TropicalMatrix& a, std::size_t j) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < a.n_rows(); ++i)
        if (a.at(i, j) != 0) out.push_back(i);
    return out;
}

TropicalMatrix border_zero(const TropicalMatrix& a) {
    std::size_t n = a.n_rows(), m = a.n_cols();
    std::vector<Rational> out((n + 1) * (m + 1), Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) out[(i + 1) * (m + 1) + (j + 1)] = a.at(i, j);
    return TropicalMatrix(n + 1, m + 1, std::move(out), a.symmetric());
}

BlockDecomposition block_decompose(const TropicalMatrix& a, bool check_rank) {
    if (!a.symmetric()) throw DimensionError("block_decompose requires a symmetric matrix");
    std::size_t n = a.n_rows();
    for (std::size_t i = 0; i < n; ++i) {
        bool zero = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (a.at(i, j) < 0)
                throw TropsymError("block_decompose requires a normalized matrix");
            if (a.at(i, j) == 0) zero = true;
        }
        if (!zero) throw TropsymError("block_decompose requires a normalized matrix");
    }
    if (check_rank && symmetric_tropical_rank(a).rank != 2)
        throw StructureViolation("block_decompose: symmetric tropical rank is not 2", {}, {});

    TropicalMatrix ap = border_zero(a);
    std::size_t np = n + 1;

    std::vector<std::vector<std::size_t>> cos(np);
    for (std::size_t j = 1; j < np; ++j) cos[j] = cosupport(ap, j);

    // Any two bordered columns must have equal or disjoint cosupports.
    for (std::size_t j1 = 1; j1 < np; ++j1) {
        for (std::size_t j2 = j1 + 1; j2 < np; ++j2) {
            if (cos[j1] == cos[j2]) continue;
            std::vector<std::size_t> both, only1, only2;
            std::set_intersection(cos[j1].begin(), cos[j1].end(), cos[j2].begin(),
                                  cos[j2].end(), std::back_inserter(both));
            if (both.empty()) continue;
            std::set_difference(cos[j1].begin(), cos[j1].end(), cos[j2].begin(),
                                cos[j2].end(), std::back_inserter(only1));
            std::set_difference(cos[j2].begin(), cos[j2].end(), cos[j1].begin(),
                                cos[j1].end(), std::back_inserter(only2));
            // Orient so the second column has a positive entry the first lacks;
            // row 0 of A+ is zero, closing the [[0,+,+],[0,0,+],[0,?,0]] pattern.
            std::size_t ja = j1, jb = j2;
            if (only2.empty()) {
                std::swap(ja, jb);
                only2 = std::move(only1);
            }
            throw StructureViolation("cosupports of columns neither equal nor disjoint",
                                     {both[0], only2[0], 0}, {0, ja, jb});
        }
    }

    // Cluster the positive-diagonal columns; at most two clusters can occur
    // (three give a nonsingular diag(a,b,c) principal submatrix).
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> classes;
    for (std::size_t j = 1; j < np; ++j)
        if (ap.at(j, j) != 0) classes[cos[j]].push_back(j);
    if (classes.size() > 2) {
        std::vector<std::size_t> reps;
        for (const auto& [key, cols] : classes) {
            reps.push_back(cols[0]);
            if (reps.size() == 3) break;
        }
        std::sort(reps.begin(), reps.end());
        throw StructureViolation("three positive diagonal clusters", reps, reps);
    }
    std::vector<std::vector<std::size_t>> bclasses;
    for (const auto& [key, cols] : classes) bclasses.push_back(cols);
    std::sort(bclasses.begin(), bclasses.end());  // B1 holds the smallest index

    std::vector<bool> in_b(np, false);
    for (const auto& cls : bclasses)
        for (std::size_t j : cls) in_b[j] = true;

    std::vector<std::size_t> zeros, rest;
    for (std::size_t j = 1; j < np; ++j) {
        if (in_b[j]) continue;
        (cos[j].empty() ? zeros : rest).push_back(j);
    }

    // Grow the principal zero block of the residual A'': repeatedly absorb
    // the lowest-index column that is zero against everything absorbed.
    std::vector<std::size_t> p_cols;
    std::vector<bool> in_p(np, false);
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t q : rest) {
            if (in_p[q]) continue;
            bool ok = true;
            for (std::size_t p : p_cols)
                if (ap.at(p, q) != 0) { ok = false; break; }
            if (ok) {
                p_cols.push_back(q);
                in_p[q] = true;
                grew = true;
                break;
            }
        }
    }
    std::vector<std::size_t> q_cols;
    for (std::size_t q : rest)
        if (!in_p[q]) q_cols.push_back(q);

    BlockDecomposition dec{Permutation::identity(n), a, zeros.size(), 0, 0,
                           p_cols.size(), q_cols.size()};
    dec.b1_size = bclasses.empty() ? 0 : bclasses[0].size();
    dec.b2_size = bclasses.size() < 2 ? 0 : bclasses[1].size();

    if (zeros.size() == n)
        throw StructureViolation("the zero matrix is excluded", {}, {});
    if (dec.b1_size == n || dec.b2_size == n)
        throw StructureViolation("a single positive block is excluded", {}, {});

    std::vector<std::size_t> order;  // A+ indices in block order
    order.insert(order.end(), zeros.begin(), zeros.end());
    if (!bclasses.empty()) order.insert(order.end(), bclasses[0].begin(), bclasses[0].end());
    if (bclasses.size() > 1)
        order.insert(order.end(), bclasses[1].begin(), bclasses[1].end());
    order.insert(order.end(), p_cols.begin(), p_cols.end());
    order.insert(order.end(), q_cols.begin(), q_cols.end());
    std::vector<std::size_t> imgs(n);
    for (std::size_t i = 0; i < n; ++i) imgs[i] = order[i] - 1;
    dec.sigma = Permutation(std::move(imgs));
    dec.permuted = diagonal_permute(a, dec.sigma);

    // Confirm the assembled pattern entry by entry; a mismatch means the
    // rank-2 precondition failed in a way the earlier checks missed.
    auto block_of = [&](std::size_t i) {
        if (i < dec.b1_offset()) return 0;  // zero rows
        if (i < dec.b2_offset()) return 1;
        if (i < dec.p_offset()) return 2;
        if (i < dec.q_offset()) return 3;
        return 4;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            int bi = block_of(i), bj = block_of(j);
            const Rational& v = dec.permuted.at(i, j);
            bool in_diag_block = (bi == bj && (bi == 1 || bi == 2));
            bool in_c = (bi == 3 && bj == 4) || (bi == 4 && bj == 3);
            if (in_diag_block && v == 0)
                throw StructureViolation("positive block contains a zero",
                                         {order[i], order[j]}, {order[i], order[j]});
            if (!in_diag_block && !in_c && v != 0)
                throw StructureViolation("off-pattern entry is nonzero",
                                         {order[i], order[j]}, {order[i], order[j]});
        }
    }
    for (std::size_t qj = 0; qj < dec.q_size; ++qj) {
        bool nonzero = false;
        for (std::size_t pi = 0; pi < dec.p_size; ++pi)
            if (dec.permuted.at(dec.p_offset() + pi, dec.q_offset() + qj) != 0)
                nonzero = true;
        if (!nonzero)
            throw StructureViolation("C has a zero column", {}, {order[dec.q_offset() + qj]});
    }
    return dec;
}

}  // namespace tropsym
