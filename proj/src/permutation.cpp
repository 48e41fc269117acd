#include "tropsym/permutation.hpp"

#include "tropsym/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace tropsym {

Permutation::Permutation(std::vector<std::size_t> imgs) : images(std::move(imgs)) {
    std::vector<bool> seen(images.size(), false);
    for (std::size_t v : images) {
        if (v >= images.size() || seen[v])
            throw DimensionError("permutation images are not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> imgs(n);
    for (std::size_t i = 0; i < n; ++i) imgs[i] = i;
    return Permutation(std::move(imgs));
}

Permutation Permutation::from_cycles(std::size_t n,
                                     const std::vector<std::vector<std::size_t>>& cycles1) {
    std::vector<std::size_t> imgs(n);
    for (std::size_t i = 0; i < n; ++i) imgs[i] = i;
    for (const auto& cyc : cycles1) {
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            std::size_t from = cyc[k], to = cyc[(k + 1) % cyc.size()];
            if (from < 1 || from > n || to < 1 || to > n)
                throw DimensionError("cycle element out of range");
            imgs[from - 1] = to - 1;
        }
    }
    return Permutation(std::move(imgs));
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) inv[images[i]] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& then) const {
    if (then.size() != size()) throw DimensionError("compose: size mismatch");
    std::vector<std::size_t> imgs(size());
    for (std::size_t i = 0; i < size(); ++i) imgs[i] = then(images[i]);
    return Permutation(std::move(imgs));
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(images.size(), false);
    for (std::size_t start = 0; start < images.size(); ++start) {
        if (seen[start]) continue;
        std::vector<std::size_t> cyc;
        std::size_t cur = start;
        do {
            seen[cur] = true;
            cyc.push_back(cur);
            cur = images[cur];
        } while (cur != start);
        out.push_back(std::move(cyc));
    }
    return out;
}

bool Permutation::is_even() const {
    std::size_t transpositions = 0;
    for (const auto& cyc : cycles()) transpositions += cyc.size() - 1;
    return transpositions % 2 == 0;
}

std::string Permutation::cycle_notation() const {
    std::ostringstream out;
    bool any = false;
    for (const auto& cyc : cycles()) {
        if (cyc.size() < 2) continue;
        any = true;
        out << '(';
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            if (k) out << ' ';
            out << cyc[k] + 1;
        }
        out << ')';
    }
    if (!any) return "id";
    return out.str();
}

namespace {

// Smallest element first; of the two orientations keep the lexicographically
// smaller word. 1-cycles are their own inverses and are kept.
std::vector<std::size_t> canonical_cycle(const std::vector<std::size_t>& cyc) {
    auto rotate_to_min = [](std::vector<std::size_t> c) {
        auto it = std::min_element(c.begin(), c.end());
        std::rotate(c.begin(), it, c.end());
        return c;
    };
    std::vector<std::size_t> fwd = rotate_to_min(cyc);
    std::vector<std::size_t> rev(cyc.rbegin(), cyc.rend());
    rev = rotate_to_min(rev);
    return std::min(fwd, rev);
}

}  // namespace

CycleClass::CycleClass(const Permutation& p) {
    for (const auto& cyc : p.cycles()) canonical_cycles.push_back(canonical_cycle(cyc));
    std::sort(canonical_cycles.begin(), canonical_cycles.end());
}

std::vector<Permutation> CycleClass::members(std::size_t n) const {
    std::vector<Permutation> out;
    std::size_t k = canonical_cycles.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::vector<std::size_t> imgs(n);
        for (std::size_t i = 0; i < n; ++i) imgs[i] = i;
        for (std::size_t c = 0; c < k; ++c) {
            std::vector<std::size_t> cyc = canonical_cycles[c];
            if (mask & (std::size_t{1} << c)) std::reverse(cyc.begin() + 1, cyc.end());
            for (std::size_t t = 0; t < cyc.size(); ++t)
                imgs[cyc[t]] = cyc[(t + 1) % cyc.size()];
        }
        Permutation p(std::move(imgs));
        bool dup = false;
        for (const auto& q : out)
            if (q == p) { dup = true; break; }
        if (!dup) out.push_back(std::move(p));
    }
    return out;
}

bool cycle_similar(const Permutation& s, const Permutation& t) {
    if (s.size() != t.size()) throw DimensionError("cycle_similar: size mismatch");
    return CycleClass(s) == CycleClass(t);
}

PairMultiset::PairMultiset(const std::vector<std::size_t>& row_idx,
                           const std::vector<std::size_t>& col_idx,
                           const std::vector<std::size_t>& assignment) {
    pairs.reserve(row_idx.size());
    for (std::size_t k = 0; k < row_idx.size(); ++k) {
        std::size_t i = row_idx[k];
        std::size_t j = col_idx[assignment[k]];
        pairs.emplace_back(std::min(i, j), std::max(i, j));
    }
    std::sort(pairs.begin(), pairs.end());
}

}  // namespace tropsym
