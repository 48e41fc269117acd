#pragma once

#include "tropsym/matrix.hpp"
#include "tropsym/permutation.hpp"

#include <cstddef>
#include <vector>

namespace tropsym {

/// The canonical block form of a normalized symmetric matrix of symmetric
/// tropical rank two: after a diagonal permutation,
///
///   [ 0  0   0   0   0  ]
///   [ 0  B1  0   0   0  ]
///   [ 0  0   B2  0   0  ]
///   [ 0  0   0   0   C  ]
///   [ 0  0   0   C'  0  ]
///
/// with B1, B2 positive symmetric, C nonnegative with no zero column.
struct BlockDecomposition {
    Permutation sigma;        // permuted = diagonal_permute(input, sigma)
    TropicalMatrix permuted;  // the matrix in block form
    std::size_t zero_rows;    // leading all-zero rows/columns
    std::size_t b1_size, b2_size;
    std::size_t p_size, q_size;  // halves of the [[0,C],[C',0]] tail

    // Offsets of each block along the diagonal of `permuted`.
    std::size_t b1_offset() const { return zero_rows; }
    std::size_t b2_offset() const { return zero_rows + b1_size; }
    std::size_t p_offset() const { return zero_rows + b1_size + b2_size; }
    std::size_t q_offset() const { return p_offset() + p_size; }

    TropicalMatrix b1() const;  // requires b1_size > 0
    TropicalMatrix b2() const;  // requires b2_size > 0
    TropicalMatrix c() const;   // p_size x q_size, requires both > 0
};

/// Raised when the input cannot have the canonical block structure: either the
/// cosupports of two bordered columns are neither equal nor disjoint, or
/// three positive diagonal clusters exist, or the residual block fails the
/// [[0,C],[C',0]] pattern. Witness indices refer to the bordered matrix
/// A+ (index 0 is the border row/column, i >= 1 is input row i-1) and,
/// when present, select a symmetrically nonsingular 3x3 submatrix.
class StructureViolation : public TropsymError {
  public:
    StructureViolation(const std::string& what, std::vector<std::size_t> rows,
                       std::vector<std::size_t> cols)
        : TropsymError(what), witness_rows(std::move(rows)),
          witness_cols(std::move(cols)) {}
    std::vector<std::size_t> witness_rows, witness_cols;
};

/// {i : A[i][j] != 0}, ascending.
std::vector<std::size_t> cosupport(const TropicalMatrix& a, std::size_t j);

/// A bordered with a zero row and column in front.
TropicalMatrix border_zero(const TropicalMatrix& a);

/// Decompose a normalized symmetric matrix into the canonical block form. The
/// symmetric-tropical-rank-2 precondition is trusted unless check_rank is
/// set; StructureViolation is the backstop either way.
BlockDecomposition block_decompose(const TropicalMatrix& a, bool check_rank = false);

}  // namespace tropsym
