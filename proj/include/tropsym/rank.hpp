#pragma once

#include "tropsym/matching.hpp"
#include "tropsym/matrix.hpp"

#include <cstddef>
#include <vector>

namespace tropsym {

struct RankReport {
    std::size_t rank = 0;
    // Lexicographically first nonsingular rank x rank submatrix.
    std::vector<std::size_t> row_idx, col_idx;
    // True when all levels above `rank` were scanned and confirmed empty.
    bool exhaustive = false;
};

/// Largest r such that some r x r submatrix is tropically nonsingular.
/// With exhaustive=false the ascending scan stops at the first empty level;
/// with exhaustive=true every level is scanned and minor monotonicity is
/// asserted rather than assumed. `threads` splits the per-level submatrix
/// scan; the witness is the lexicographic minimum either way.
RankReport tropical_rank(const TropicalMatrix& a, bool exhaustive = false,
                         unsigned threads = 1);

/// Same scan with symmetric tropical singularity (monomials identified under
/// X_{i,j} = X_{j,i}). Requires a symmetric matrix.
RankReport symmetric_tropical_rank(const TropicalMatrix& a, bool exhaustive = false,
                                   unsigned threads = 1);

/// Tropical rank one: every column is a tropical scalar multiple of the
/// first. For symmetric matrices this coincides with symmetric tropical
/// rank one.
bool rank_one_test(const TropicalMatrix& a);

enum class RankMode { Standard, Symmetric };

/// Independent oracle: exhaustive permutation enumeration per submatrix,
/// no assignment solver, no early exits. Guarded to n <= 7.
std::size_t brute_rank_oracle(const TropicalMatrix& a, RankMode mode);

}  // namespace tropsym
