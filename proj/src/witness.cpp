#include "tropsym/witness.hpp"

#include "tropsym/rank.hpp"

#include <algorithm>
#include <initializer_list>

namespace tropsym {

namespace {

TropicalMatrix from_ints(std::initializer_list<std::initializer_list<int>> rows) {
    std::size_t n = rows.size();
    std::vector<Rational> flat;
    flat.reserve(n * rows.begin()->size());
    for (const auto& row : rows)
        for (int v : row) flat.push_back(v);
    TropicalMatrix probe(n, rows.begin()->size(), flat);
    return TropicalMatrix(n, rows.begin()->size(), std::move(flat),
                          probe.is_square() && probe.entries_symmetric());
}

WitnessRecord make(const std::string& name,
                   std::initializer_list<std::initializer_list<int>> rows,
                   std::size_t rank, bool gap) {
    return {from_ints(rows), rank, gap, {"catalog:" + name}};
}

}  // namespace

WitnessRecord catalog(const std::string& name) {
    // cocircuit matrix of the Fano matroid: tropical rank 3, Kapranov rank 4
    if (name == "fano7")
        return make(name,
                    {{1, 1, 0, 1, 0, 0, 0},
                     {0, 1, 1, 0, 1, 0, 0},
                     {0, 0, 1, 1, 0, 1, 0},
                     {0, 0, 0, 1, 1, 0, 1},
                     {1, 0, 0, 0, 1, 1, 0},
                     {0, 1, 0, 0, 0, 1, 1},
                     {1, 0, 1, 0, 0, 0, 1}},
                    3, true);
    // fano7 with rows permuted by (27)(36)(45): standard tropical rank 3,
    // but symmetric tropical rank 4, so no symmetric rank gap
    if (name == "fano7_symmetric")
        return make(name,
                    {{1, 1, 0, 1, 0, 0, 0},
                     {1, 0, 1, 0, 0, 0, 1},
                     {0, 1, 0, 0, 0, 1, 1},
                     {1, 0, 0, 0, 1, 1, 0},
                     {0, 0, 0, 1, 1, 0, 1},
                     {0, 0, 1, 1, 0, 1, 0},
                     {0, 1, 1, 0, 1, 0, 0}},
                    4, false);
    // symmetric tropical rank 3; a rank-3 symmetric lift would restrict to
    // a standard rank-3 lift of the fano7_symmetric corner block
    if (name == "fano13")
        return make(name,
                    {{0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 0, 0},
                     {0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1},
                     {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1},
                     {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0},
                     {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1},
                     {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0},
                     {1, 1, 0, 1, 0, 0, 0, 1, 1, 0, 1, 0, 0},
                     {1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
                     {0, 1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0},
                     {1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0},
                     {0, 0, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0},
                     {0, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0},
                     {0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
                    3, true);
    // Shitov's matrix: tropical rank 4, Kapranov rank 5
    if (name == "shitov6")
        return make(name,
                    {{0, 0, 4, 4, 4, 4},
                     {0, 0, 2, 4, 1, 4},
                     {4, 4, 0, 0, 4, 4},
                     {2, 4, 0, 0, 2, 4},
                     {4, 4, 4, 4, 0, 0},
                     {2, 4, 1, 4, 0, 0}},
                    4, true);
    // symmetric rearrangement of shitov6: symmetric tropical rank 4,
    // symmetric Kapranov rank 5
    if (name == "shitov6_symmetric")
        return make(name,
                    {{0, 0, 2, 4, 1, 4},
                     {0, 0, 4, 4, 4, 4},
                     {2, 4, 2, 4, 0, 0},
                     {4, 4, 4, 4, 0, 0},
                     {1, 4, 0, 0, 2, 4},
                     {4, 4, 0, 0, 4, 4}},
                    4, true);
    // quadratic-form matrices of the two tropical conics
    if (name == "c1")
        return make(name, {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}, 2, false);
    if (name == "c2")
        return make(name, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3, false);
    throw TropsymError("unknown catalog entry: " + name);
}

std::vector<std::string> catalog_names() {
    return {"fano7", "fano7_symmetric", "fano13", "shitov6", "shitov6_symmetric",
            "c1",    "c2"};
}

WitnessRecord duplicate_extend(const WitnessRecord& w) {
    const TropicalMatrix& a = w.matrix;
    if (!a.symmetric())
        throw DimensionError("duplicate_extend requires a symmetric matrix");
    std::size_t n = a.n_rows();
    std::vector<Rational> flat;
    flat.reserve((n + 1) * (n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) flat.push_back(a.at(i, j));
        flat.push_back(a.at(i, n - 1));
    }
    for (std::size_t j = 0; j < n; ++j) flat.push_back(a.at(n - 1, j));
    flat.push_back(a.at(n - 1, n - 1));
    WitnessRecord out{TropicalMatrix(n + 1, n + 1, std::move(flat), true),
                      w.claimed_sym_trop_rank, w.claimed_kapranov_gap, w.provenance};
    out.provenance.push_back("duplicate_extend");
    return out;
}

WitnessRecord border_extend(const WitnessRecord& w, const Rational* p,
                            const Rational* m) {
    const TropicalMatrix& a = w.matrix;
    if (!a.symmetric())
        throw DimensionError("border_extend requires a symmetric matrix");
    Rational pv = p ? *p : Rational(a.max_entry() + 1);
    Rational mv = m ? *m : Rational(a.min_entry() - 1);
    if (pv <= a.max_entry())
        throw TropsymError("border_extend: P must exceed every entry");
    if (mv >= a.min_entry())
        throw TropsymError("border_extend: M must be below every entry");
    std::size_t n = a.n_rows();
    std::vector<Rational> flat;
    flat.reserve((n + 1) * (n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) flat.push_back(a.at(i, j));
        flat.push_back(pv);
    }
    for (std::size_t j = 0; j < n; ++j) flat.push_back(pv);
    flat.push_back(mv);
    WitnessRecord out{TropicalMatrix(n + 1, n + 1, std::move(flat), true),
                      w.claimed_sym_trop_rank + 1, w.claimed_kapranov_gap,
                      w.provenance};
    out.provenance.push_back("border_extend P=" + format_rational(pv) +
                             " M=" + format_rational(mv));
    return out;
}

WitnessRecord witness(std::size_t r, std::size_t n) {
    if (!((4 < r && r < n) || (r == 4 && n > 12)))
        throw TropsymError("witness: need 4 < r < n, or r = 4 and n > 12");
    WitnessRecord w = catalog(r == 4 ? "fano13" : "shitov6_symmetric");
    // raise the rank claim to r - 1 first, then grow to size n
    for (std::size_t k = 5; k < r; ++k) w = border_extend(w);
    while (w.matrix.n_rows() < n) w = duplicate_extend(w);
    return w;
}

bool verify_claim(const WitnessRecord& w, unsigned threads) {
    RankReport rep = w.matrix.symmetric()
                         ? symmetric_tropical_rank(w.matrix, false, threads)
                         : tropical_rank(w.matrix, false, threads);
    return rep.rank == w.claimed_sym_trop_rank;
}

}  // namespace tropsym
