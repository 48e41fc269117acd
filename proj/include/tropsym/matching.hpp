#pragma once

#include "tropsym/matrix.hpp"
#include "tropsym/permutation.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace tropsym {

enum class BijectionMode {
    Standard,   // witnesses distinct as permutations
    Symmetric,  // witnesses distinct as PairMultisets (X_{i,j} = X_{j,i})
};

/// One bijection I -> J achieving the tropical determinant of the submatrix.
struct OptimalBijection {
    std::vector<std::size_t> row_idx;     // I, ambient indices
    std::vector<std::size_t> col_idx;     // J, ambient indices
    std::vector<std::size_t> assignment;  // row_idx[k] -> col_idx[assignment[k]]

    PairMultiset pair_multiset() const {
        return PairMultiset(row_idx, col_idx, assignment);
    }
    /// Only meaningful when I == J as sets (principal submatrix).
    Permutation as_ambient_permutation(std::size_t n) const;
};

/// Min over all permutations sigma of sum_i A[i][sigma(i)], by exact
/// min-cost assignment.
Rational trop_det(const TropicalMatrix& a);

struct DetResult {
    Rational value;
    std::size_t distinct_monomials;  // capped at the enumeration limit
    std::size_t distinct_classes;    // PairMultiset count; 0 if not applicable
    std::vector<OptimalBijection> standard_witnesses;
    std::vector<OptimalBijection> symmetric_witnesses;
};

/// Determinant value plus up-to-two inequivalent witnesses per notion.
/// The class count is filled only for symmetric ambient matrices.
DetResult det_report(const TropicalMatrix& a);

/// Optimal bijections I -> J of the submatrix of `a`, deduplicated per
/// `mode`, stopping once `limit` inequivalent witnesses are found. Walks
/// only tight edges of the optimal dual solution.
std::vector<OptimalBijection> enumerate_optimal_bijections(
    const TropicalMatrix& a, const std::vector<std::size_t>& row_idx,
    const std::vector<std::size_t>& col_idx, BijectionMode mode, std::size_t limit);

bool is_trop_singular(const TropicalMatrix& a, const std::vector<std::size_t>& row_idx,
                      const std::vector<std::size_t>& col_idx);

/// Symmetric-equivalence singularity; requires a symmetric ambient matrix.
bool is_sym_trop_singular(const TropicalMatrix& a, const std::vector<std::size_t>& row_idx,
                          const std::vector<std::size_t>& col_idx);

namespace detail {

/// Exact min-cost assignment on an r x r cost grid. Returns the optimal value,
/// one optimal assignment, and dual potentials (u, v) with u_i + v_j <= c_ij
/// everywhere and equality on every edge of every optimal assignment.
struct AssignmentResult {
    Rational value;
    std::vector<std::size_t> assignment;  // row k -> column assignment[k]
    std::vector<Rational> u, v;
};

AssignmentResult solve_assignment(const std::vector<std::vector<Rational>>& cost);

}  // namespace detail

}  // namespace tropsym
