#pragma once

#include "tropsym/matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace tropsym {

/// A matrix together with its claimed rank and how it was derived. The
/// Kapranov-gap flag is carried as certified provenance from the catalog
/// bases (the Fano and Shitov arguments are imported as axioms), not
/// re-proven computationally.
struct WitnessRecord {
    TropicalMatrix matrix;
    // Symmetric tropical rank for symmetric matrices; standard tropical
    // rank for the two non-symmetric catalog bases.
    std::size_t claimed_sym_trop_rank = 0;
    // Whether the (symmetric) Kapranov rank is claimed to exceed the
    // (symmetric) tropical rank.
    bool claimed_kapranov_gap = false;
    std::vector<std::string> provenance;  // catalog entry + extend operations
};

/// The foundational examples: fano7, fano7_symmetric, fano13, shitov6,
/// shitov6_symmetric, c1, c2. Entries are transcribed verbatim. Throws
/// TropsymError on an unknown name.
WitnessRecord catalog(const std::string& name);
std::vector<std::string> catalog_names();

/// Append a copy of the last column, then of the last row: the result is
/// (n+1) x (n+1), contains the input as a principal submatrix, and keeps
/// both the symmetric tropical rank and the gap flag.
WitnessRecord duplicate_extend(const WitnessRecord& w);

/// Border with a row/column of P and corner M, where M < every entry and
/// P > every entry (defaults: max+1 and min-1). Raises the symmetric
/// tropical rank by one and keeps the gap flag.
WitnessRecord border_extend(const WitnessRecord& w, const Rational* p = nullptr,
                            const Rational* m = nullptr);

/// An n x n symmetric matrix with symmetric tropical rank r-1 and a
/// Kapranov gap, defined for 4 < r < n or r = 4, n > 12. Built from
/// fano13 (r = 4) or shitov6_symmetric (r >= 5) by bordering until the
/// rank claim reaches r-1, then duplicating until the size reaches n.
WitnessRecord witness(std::size_t r, std::size_t n);

/// Recompute the claimed rank with the rank module (symmetric scan for
/// symmetric matrices, standard otherwise).
bool verify_claim(const WitnessRecord& w, unsigned threads = 1);

}  // namespace tropsym
