#include "tropsym/matrix.hpp"

#include "tropsym/permutation.hpp"

#include <algorithm>
#include <sstream>

namespace tropsym {

TropicalMatrix::TropicalMatrix(std::size_t rows, std::size_t cols,
                               std::vector<Rational> entries, bool symmetric)
    : rows_(rows), cols_(cols), entries_(std::move(entries)), symmetric_(symmetric) {
    if (rows_ == 0 || cols_ == 0)
        throw DimensionError("matrix dimensions must be positive");
    if (entries_.size() != rows_ * cols_)
        throw DimensionError("entry count does not match dimensions");
    if (symmetric_) {
        if (rows_ != cols_)
            throw DimensionError("symmetric matrix must be square");
        if (!entries_symmetric())
            throw DimensionError("symmetric flag set but entries are not symmetric");
    }
}

TropicalMatrix TropicalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows,
                                         bool symmetric) {
    if (rows.empty()) throw DimensionError("matrix dimensions must be positive");
    std::size_t cols = rows[0].size();
    std::vector<Rational> flat;
    flat.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw DimensionError("ragged rows");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return TropicalMatrix(rows.size(), cols, std::move(flat), symmetric);
}

bool TropicalMatrix::entries_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

Rational TropicalMatrix::min_entry() const {
    return *std::min_element(entries_.begin(), entries_.end());
}

Rational TropicalMatrix::max_entry() const {
    return *std::max_element(entries_.begin(), entries_.end());
}

Rational TropicalMatrix::spread() const { return max_entry() - min_entry(); }

TropicalMatrix TropicalMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                                         const std::vector<std::size_t>& col_idx) const {
    std::vector<Rational> sub;
    sub.reserve(row_idx.size() * col_idx.size());
    for (std::size_t i : row_idx) {
        if (i >= rows_) throw DimensionError("row index out of range");
        for (std::size_t j : col_idx) {
            if (j >= cols_) throw DimensionError("column index out of range");
            sub.push_back(at(i, j));
        }
    }
    return TropicalMatrix(row_idx.size(), col_idx.size(), std::move(sub));
}

bool TropicalMatrix::operator==(const TropicalMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

TropicalMatrix diagonal_permute(const TropicalMatrix& a, const Permutation& sigma) {
    if (!a.is_square() || sigma.size() != a.n_rows())
        throw DimensionError("diagonal_permute: permutation size mismatch");
    std::size_t n = a.n_rows();
    std::vector<Rational> out;
    out.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.push_back(a.at(sigma(i), sigma(j)));
    return TropicalMatrix(n, n, std::move(out), a.symmetric());
}

TropicalMatrix permute_rows(const TropicalMatrix& a, const Permutation& sigma) {
    if (sigma.size() != a.n_rows())
        throw DimensionError("permute_rows: permutation size mismatch");
    std::vector<Rational> out;
    out.reserve(a.n_rows() * a.n_cols());
    for (std::size_t i = 0; i < a.n_rows(); ++i)
        for (std::size_t j = 0; j < a.n_cols(); ++j) out.push_back(a.at(sigma(i), j));
    return TropicalMatrix(a.n_rows(), a.n_cols(), std::move(out));
}

TropicalMatrix permute_cols(const TropicalMatrix& a, const Permutation& sigma) {
    if (sigma.size() != a.n_cols())
        throw DimensionError("permute_cols: permutation size mismatch");
    std::vector<Rational> out;
    out.reserve(a.n_rows() * a.n_cols());
    for (std::size_t i = 0; i < a.n_rows(); ++i)
        for (std::size_t j = 0; j < a.n_cols(); ++j) out.push_back(a.at(i, sigma(j)));
    return TropicalMatrix(a.n_rows(), a.n_cols(), std::move(out));
}

TropicalMatrix symmetric_scale(const TropicalMatrix& a, const ScalingVector& c) {
    if (!a.symmetric()) throw DimensionError("symmetric_scale requires a symmetric matrix");
    if (c.c.size() != a.n_rows())
        throw DimensionError("symmetric_scale: scaling vector length mismatch");
    std::size_t n = a.n_rows();
    std::vector<Rational> out;
    out.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.push_back(a.at(i, j) + c.c[i] + c.c[j]);
    return TropicalMatrix(n, n, std::move(out), true);
}

NormalizeResult normalize(const TropicalMatrix& a) {
    if (!a.symmetric()) throw DimensionError("normalize requires a symmetric matrix");
    std::size_t n = a.n_rows();
    // Feasible start: A[i][j] + x_i + x_j >= 0 for x_i = M.
    Rational m = a.min_entry();
    Rational big = (m < 0) ? -m : Rational(0);
    std::vector<Rational> x(n, big + 1);
    // One sweep: drop x_i to its greatest lower bound. This makes row i
    // tight; any row already tight stays tight because its binding
    // constraint is itself one of the lower bounds.
    for (std::size_t i = 0; i < n; ++i) {
        Rational bound = -a.at(i, i) / 2;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            Rational b = -a.at(i, j) - x[j];
            if (b > bound) bound = b;
        }
        x[i] = bound;
    }
    ScalingVector c{std::move(x)};
    TropicalMatrix b = symmetric_scale(a, c);
    // Post-condition: nonnegative with a zero in every row.
    for (std::size_t i = 0; i < n; ++i) {
        bool has_zero = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (b.at(i, j) < 0)
                throw TropsymError("normalize: internal error, negative entry");
            if (b.at(i, j) == 0) has_zero = true;
        }
        if (!has_zero) throw TropsymError("normalize: internal error, row without zero");
    }
    return NormalizeResult{std::move(b), std::move(c)};
}

TropicalMatrix parse_matrix(std::istream& in) {
    std::vector<std::vector<Rational>> rows;
    bool force_symmetric = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string tok;
        std::vector<Rational> row;
        std::size_t col = 0;
        while (ls >> tok) {
            ++col;
            if (rows.empty() && row.empty() && tok == "symmetric") {
                force_symmetric = true;
                continue;
            }
            auto v = parse_rational(tok);
            if (!v)
                throw ParseError("invalid matrix entry '" + tok + "'", lineno, col);
            row.push_back(std::move(*v));
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty matrix", lineno, 1);
    std::size_t cols = rows[0].size();
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].size() != cols)
            throw ParseError("row has wrong number of entries", i + 1, rows[i].size());
    TropicalMatrix m = TropicalMatrix::from_rows(rows);
    bool sym = force_symmetric || m.entries_symmetric();
    if (sym && !m.entries_symmetric())
        throw ParseError("matrix declared symmetric but entries are not", 1, 1);
    if (sym) return TropicalMatrix::from_rows(rows, true);
    return m;
}

TropicalMatrix parse_matrix_string(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

std::string format_matrix(const TropicalMatrix& a, bool header) {
    std::ostringstream out;
    if (header && a.symmetric()) out << "symmetric\n";
    for (std::size_t i = 0; i < a.n_rows(); ++i) {
        for (std::size_t j = 0; j < a.n_cols(); ++j) {
            if (j) out << ' ';
            out << format_rational(a.at(i, j));
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace tropsym
