#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace tropsym {

/// A permutation of {0,...,n-1}. User-facing rendering is 1-based.
struct Permutation {
    std::vector<std::size_t> images;  // i -> images[i]

    explicit Permutation(std::vector<std::size_t> imgs);
    static Permutation identity(std::size_t n);
    /// Build from 1-based disjoint cycles, e.g. {{2,7},{3,6},{4,5}} on n points.
    static Permutation from_cycles(std::size_t n,
                                   const std::vector<std::vector<std::size_t>>& cycles1);

    std::size_t size() const { return images.size(); }
    std::size_t operator()(std::size_t i) const { return images[i]; }
    Permutation inverse() const;
    Permutation compose(const Permutation& then) const;  // (*this then then)

    /// Disjoint cycle decomposition, fixed points included as 1-cycles.
    /// Each cycle starts at its smallest element; cycles sorted by first element.
    std::vector<std::vector<std::size_t>> cycles() const;

    bool is_even() const;
    /// 1-based cycle notation, e.g. "(1 2 5 7)(3 4 6)"; identity prints "id".
    std::string cycle_notation() const;

    bool operator==(const Permutation& other) const = default;
};

/// Canonical form of a permutation under inversion of individual cycles.
/// Each cycle is rotated so its smallest element comes first, and of the two
/// orientations the lexicographically smaller word is kept; 1-cycles stay.
struct CycleClass {
    std::vector<std::vector<std::size_t>> canonical_cycles;

    explicit CycleClass(const Permutation& p);
    bool operator==(const CycleClass& other) const = default;
    bool operator<(const CycleClass& other) const {
        return canonical_cycles < other.canonical_cycles;
    }

    /// All permutations in the class (cycles inverted in every combination).
    std::vector<Permutation> members(std::size_t n) const;
};

/// True iff s and t share the same disjoint cycle decomposition up to
/// inversion of the cycles.
bool cycle_similar(const Permutation& s, const Permutation& t);

/// Monomial of a bijection rho: I -> J inside a symmetric ambient matrix,
/// under the identification X_{i,j} = X_{j,i}: the sorted multiset of
/// unordered ambient index pairs {i, rho(i)}.
struct PairMultiset {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;

    /// assignment[k] = position in col_idx matched to row row_idx[k].
    PairMultiset(const std::vector<std::size_t>& row_idx,
                 const std::vector<std::size_t>& col_idx,
                 const std::vector<std::size_t>& assignment);
    bool operator==(const PairMultiset& other) const = default;
    bool operator<(const PairMultiset& other) const { return pairs < other.pairs; }
};

}  // namespace tropsym
