#pragma once

#include "tropsym/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropsym {

class TropsymError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public TropsymError {
  public:
    using TropsymError::TropsymError;
};

class ParseError : public TropsymError {
  public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : TropsymError(what), line(line), column(column) {}
    std::size_t line;    // 1-based
    std::size_t column;  // 1-based token position within the line
};

struct Permutation;

/// Dense matrix over the min-plus semiring with exact rational entries.
/// Immutable after construction; all operations return new matrices.
class TropicalMatrix {
  public:
    TropicalMatrix(std::size_t rows, std::size_t cols,
                   std::vector<Rational> entries, bool symmetric = false);

    static TropicalMatrix from_rows(const std::vector<std::vector<Rational>>& rows,
                                    bool symmetric = false);

    std::size_t n_rows() const { return rows_; }
    std::size_t n_cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool symmetric() const { return symmetric_; }

    const Rational& at(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    /// Symmetry by inspection (independent of the flag).
    bool entries_symmetric() const;

    Rational min_entry() const;
    Rational max_entry() const;
    /// max entry - min entry
    Rational spread() const;

    TropicalMatrix submatrix(const std::vector<std::size_t>& row_idx,
                             const std::vector<std::size_t>& col_idx) const;

    bool operator==(const TropicalMatrix& other) const;

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
    bool symmetric_;
};

/// Per-index constants of a symmetric scaling: c_i is added to row i and column i.
struct ScalingVector {
    std::vector<Rational> c;
};

/// result[i][j] = A[sigma(i)][sigma(j)] (same permutation on rows and columns).
TropicalMatrix diagonal_permute(const TropicalMatrix& a, const Permutation& sigma);

/// Row-only permutation: result row i = A row sigma(i). Does not require symmetry.
TropicalMatrix permute_rows(const TropicalMatrix& a, const Permutation& sigma);

/// Column-only permutation: result column j = A column sigma(j).
TropicalMatrix permute_cols(const TropicalMatrix& a, const Permutation& sigma);

/// result[i][j] = A[i][j] + c_i + c_j.
TropicalMatrix symmetric_scale(const TropicalMatrix& a, const ScalingVector& c);

struct NormalizeResult {
    TropicalMatrix matrix;
    ScalingVector scaling;
};

/// Symmetrically scale A so the result is nonnegative with a zero in every
/// row (hence every column). Always succeeds: c_i is set greedily, in index
/// order, to the largest value keeping A[i][j] + c_i + c_j >= 0, which makes
/// row i tight and leaves previously tight rows tight.
NormalizeResult normalize(const TropicalMatrix& a);

/// Text format: one row per line, whitespace-separated rationals; '#' starts
/// a comment; an optional leading "symmetric" line asserts the flag (otherwise
/// symmetry is auto-detected).
TropicalMatrix parse_matrix(std::istream& in);
TropicalMatrix parse_matrix_string(const std::string& text);
std::string format_matrix(const TropicalMatrix& a, bool header = true);

}  // namespace tropsym
