#include "tropsym/lift.hpp"

#include "tropsym/blocks.hpp"
#include "tropsym/rank.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <set>

namespace tropsym {

Rational default_trunc(const TropicalMatrix& a, std::size_t r) {
    return Rational(2 * (r + 1)) * (1 + a.spread());
}

namespace {

/// Monomial seed for the lift recursion under the substitution t -> c t.
/// Internal inverses make coefficients grow geometrically with the degree;
/// c < 1 flattens that growth so deep recursions stay inside double range.
/// The substitution preserves degrees, symmetry, and rank, so the result
/// is still a lift of the same matrix.
PuiseuxSeries scaled_monomial(double varc, const Rational& exp, const Rational& trunc) {
    return PuiseuxSeries::monomial(std::pow(varc, exp.convert_to<double>()), exp, trunc);
}

PuiseuxSeries div_series(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    return mul(a, invert(b));
}

PuiseuxSeries det2(const PuiseuxSeries& a, const PuiseuxSeries& b,
                   const PuiseuxSeries& c, const PuiseuxSeries& d) {
    return sub(mul(a, d), mul(b, c));
}

PuiseuxSeries det3(const std::array<PuiseuxSeries, 9>& m) {
    return add(sub(mul(m[0], det2(m[4], m[5], m[7], m[8])),
                   mul(m[1], det2(m[3], m[5], m[6], m[8]))),
               mul(m[2], det2(m[3], m[4], m[6], m[7])));
}

/// The unique value at position (ur, uc) making the 3x3 singular; the cell
/// passed there is ignored.
PuiseuxSeries solve_singular3(std::array<PuiseuxSeries, 9> m, int ur, int uc) {
    Rational trunc = m[0].trunc;
    m[ur * 3 + uc] = PuiseuxSeries::zero(trunc);
    PuiseuxSeries rest = det3(m);
    int r1 = (ur + 1) % 3, r2 = (ur + 2) % 3, c1 = (uc + 1) % 3, c2 = (uc + 2) % 3;
    if (r1 > r2) std::swap(r1, r2);
    if (c1 > c2) std::swap(c1, c2);
    PuiseuxSeries cof =
        det2(m[r1 * 3 + c1], m[r1 * 3 + c2], m[r2 * 3 + c1], m[r2 * 3 + c2]);
    if ((ur + uc) % 2 == 1) cof = negate(cof);
    if (cof.is_zero()) throw LiftFailed("singular-3x3 solve: vanishing cofactor");
    return negate(div_series(rest, cof));
}

/// Coefficients (x, y) with x*colA + y*colB = colJ, solved on two rows of
/// the region where all three columns are known. Rows are tried in order.
LiftCombination column_combination(const SeriesMatrix& l,
                                   const std::vector<std::size_t>& rows,
                                   std::size_t ca, std::size_t cb, std::size_t cj) {
    for (std::size_t u = 0; u < rows.size(); ++u) {
        for (std::size_t v = u + 1; v < rows.size(); ++v) {
            std::size_t r1 = rows[u], r2 = rows[v];
            PuiseuxSeries d = det2(l.at(r1, ca), l.at(r1, cb), l.at(r2, ca), l.at(r2, cb));
            if (d.is_zero()) continue;
            PuiseuxSeries x =
                div_series(det2(l.at(r1, cj), l.at(r1, cb), l.at(r2, cj), l.at(r2, cb)), d);
            PuiseuxSeries y =
                div_series(det2(l.at(r1, ca), l.at(r1, cj), l.at(r2, ca), l.at(r2, cj)), d);
            return {std::move(x), std::move(y)};
        }
    }
    throw LiftFailed("column combination: no invertible row pair");
}

TropicalMatrix principal(const TropicalMatrix& m, const std::vector<std::size_t>& idx) {
    TropicalMatrix sub = m.submatrix(idx, idx);
    std::vector<Rational> flat;
    flat.reserve(idx.size() * idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) flat.push_back(sub.at(i, j));
    return TropicalMatrix(idx.size(), idx.size(), std::move(flat), true);
}

void mirror_upper(SeriesMatrix& l) {
    for (std::size_t i = 0; i < l.rows; ++i)
        for (std::size_t j = i + 1; j < l.cols; ++j) l.at(j, i) = l.at(i, j);
    l.symmetric = true;
}

std::array<PuiseuxSeries, 9> cells(const SeriesMatrix& l, std::array<std::size_t, 3> r,
                                   std::array<std::size_t, 3> c) {
    return {l.at(r[0], c[0]), l.at(r[0], c[1]), l.at(r[0], c[2]),
            l.at(r[1], c[0]), l.at(r[1], c[1]), l.at(r[1], c[2]),
            l.at(r[2], c[0]), l.at(r[2], c[1]), l.at(r[2], c[2])};
}

SeriesMatrix lift_normalized(const TropicalMatrix& m, std::mt19937_64& rng,
                             const Rational& trunc, double varc, int depth);

SeriesMatrix standard_rank2_lift_scaled(const TropicalMatrix& u, std::mt19937_64& rng,
                                        const Rational& trunc, double varc);

/// Direct lift for the zero-rows-plus-one-positive-block form, which the
/// recursive constructions above do not reach. With a zero row present any rank-2
/// symmetric lift can be diagonally rescaled to L_ij = B_i + B_j, so it
/// suffices to realize val(B_i + B_j) = A_ij. Working through the
/// exponent levels in ascending order, the coefficient x_i of t^e in B_i
/// must vanish below the diagonal valuation, satisfy x_i = -x_j exactly
/// on pairs with A_ij > e, and stay generic otherwise; a signed
/// union-find per level produces the coefficients or detects an
/// unrealizable parity conflict.
SeriesMatrix sum_realization_lift(const TropicalMatrix& m, std::mt19937_64& rng,
                                  const Rational& trunc, double varc) {
    std::size_t n = m.n_rows();
    std::set<Rational> levels;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) levels.insert(m.at(i, j));
    std::vector<PuiseuxSeries> b(n, PuiseuxSeries::zero(trunc));
    for (const Rational& e : levels) {
        // active variables: coefficients below the diagonal valuation are zero
        std::vector<bool> active(n);
        for (std::size_t i = 0; i < n; ++i) active[i] = m.at(i, i) <= e;
        // pairs that must still cancel at this level force x_i = -x_j
        std::vector<std::vector<std::size_t>> adj(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (active[i] && active[j] && m.at(i, j) > e) {
                    adj[i].push_back(j);
                    adj[j].push_back(i);
                }
        std::vector<int> comp(n, -1), side(n, 0);
        std::vector<std::complex<double>> coeff(n);
        int ncomp = 0;
        for (std::size_t s = 0; s < n; ++s) {
            if (!active[s] || comp[s] != -1) continue;
            comp[s] = ncomp;
            side[s] = 1;
            std::vector<std::size_t> queue = {s};
            while (!queue.empty()) {
                std::size_t u = queue.back();
                queue.pop_back();
                for (std::size_t v : adj[u]) {
                    if (comp[v] == -1) {
                        comp[v] = ncomp;
                        side[v] = -side[u];
                        queue.push_back(v);
                    } else if (side[v] != -side[u]) {
                        throw LiftFailed(
                            "sum realization: odd cancellation cycle at one level");
                    }
                }
            }
            PuiseuxSeries g = generic_constant(rng, trunc);
            for (std::size_t i = 0; i < n; ++i)
                if (comp[i] == ncomp)
                    coeff[i] = double(side[i]) * g.leading_coeff() *
                               std::pow(varc, e.convert_to<double>());
            ++ncomp;
        }
        for (std::size_t i = 0; i < n; ++i)
            if (active[i] && e < trunc) b[i].terms.push_back({e, coeff[i]});
    }
    // reject structural cancellations the level graph could not express
    for (std::size_t i = 0; i < n; ++i) {
        if (b[i].is_zero() || b[i].degree() != m.at(i, i))
            throw LiftFailed("sum realization: diagonal valuation missed");
        for (std::size_t j = i + 1; j < n; ++j) {
            PuiseuxSeries s = add(b[i], b[j]);
            if (s.is_zero() || s.degree() != m.at(i, j))
                throw LiftFailed("sum realization: pair valuation missed");
        }
    }
    SeriesMatrix l = SeriesMatrix::filled(n, n, trunc, false);
    for (std::size_t i = 0; i < n; ++i) {
        l.at(i, i) = scalar_mul(2.0, b[i]);
        for (std::size_t j = i + 1; j < n; ++j) l.at(i, j) = add(b[i], b[j]);
    }
    mirror_upper(l);
    return l;
}

/// One zero row, no positive blocks, nonempty C: the zero row is placed
/// between the halves (rows/cols < c and > c), the quadrant through the
/// zero row is lifted by the standard rank-2 construction, and the two
/// zero diagonal blocks are filled by singular-3x3 propagation plus
/// column combinations.
SeriesMatrix lift_bipartite(const TropicalMatrix& g, std::size_t c, std::mt19937_64& rng,
                            const Rational& trunc, double varc) {
    std::size_t n = g.n_rows();
    std::vector<std::size_t> top(c + 1), right(n - c);
    for (std::size_t i = 0; i <= c; ++i) top[i] = i;
    for (std::size_t j = 0; j < n - c; ++j) right[j] = c + j;
    TropicalMatrix u = g.submatrix(top, right);
    SeriesMatrix lur = standard_rank2_lift_scaled(u, rng, trunc, varc);

    SeriesMatrix l = SeriesMatrix::filled(n, n, trunc, false);
    for (std::size_t i = 0; i <= c; ++i)
        for (std::size_t j = c; j < n; ++j) {
            l.at(i, j) = lur.at(i, j - c);
            l.at(j, i) = l.at(i, j);
        }
    std::size_t m1 = c - 1, p1 = c + 1;
    l.at(p1, p1) = generic_constant(rng, trunc);
    l.at(m1, m1) = solve_singular3(cells(l, {m1, c, p1}, {m1, c, p1}), 0, 0);
    for (std::size_t i = 0; i < m1; ++i) {
        l.at(i, m1) = solve_singular3(cells(l, {i, c, p1}, {m1, c, p1}), 0, 0);
        l.at(m1, i) = l.at(i, m1);
    }
    for (std::size_t j = p1 + 1; j < n; ++j) {
        l.at(j, p1) = solve_singular3(cells(l, {m1, c, j}, {m1, c, p1}), 2, 2);
        l.at(p1, j) = l.at(j, p1);
    }
    // lower-right interior from combinations against columns (c, p1)
    std::vector<std::size_t> ur_rows(c + 1);
    for (std::size_t i = 0; i <= c; ++i) ur_rows[i] = i;
    for (std::size_t j = p1 + 1; j < n; ++j) {
        LiftCombination lc = column_combination(l, ur_rows, c, p1, j);
        for (std::size_t i = p1 + 1; i < j; ++i) {
            l.at(i, j) = add(mul(lc.first, l.at(i, c)), mul(lc.second, l.at(i, p1)));
            l.at(j, i) = l.at(i, j);
        }
        l.at(j, j) = add(mul(lc.first, l.at(j, c)), mul(lc.second, l.at(j, p1)));
    }
    // upper-left interior from combinations against columns (c, m1)
    std::vector<std::size_t> lo_rows(n - c);
    for (std::size_t i = 0; i < n - c; ++i) lo_rows[i] = c + i;
    for (std::size_t j = 0; j < m1; ++j) {
        LiftCombination lc = column_combination(l, lo_rows, c, m1, j);
        for (std::size_t i = 0; i < j; ++i) {
            l.at(i, j) = add(mul(lc.first, l.at(i, c)), mul(lc.second, l.at(i, m1)));
            l.at(j, i) = l.at(i, j);
        }
        l.at(j, j) = add(mul(lc.first, l.at(j, c)), mul(lc.second, l.at(j, m1)));
    }
    mirror_upper(l);
    return l;
}

/// One zero row at position c separating two recursively lifted principal
/// halves; the off-diagonal quadrants come from the central quadratic,
/// singular-3x3 propagation, and column combinations.
SeriesMatrix lift_two_blocks(const TropicalMatrix& g, std::size_t c, std::mt19937_64& rng,
                             const Rational& trunc, double varc, int depth) {
    std::size_t n = g.n_rows();
    std::vector<std::size_t> ul(c + 1), lr(n - c);
    for (std::size_t i = 0; i <= c; ++i) ul[i] = i;
    for (std::size_t i = 0; i < n - c; ++i) lr[i] = c + i;
    SeriesMatrix lul = lift_normalized(principal(g, ul), rng, trunc, varc, depth + 1);
    SeriesMatrix llr = lift_normalized(principal(g, lr), rng, trunc, varc, depth + 1);
    // align the shared corner entry by scaling the first row/column of the
    // lower-right lift by the same degree-zero constant
    PuiseuxSeries gamma = sqrt_series(div_series(lul.at(c, c), llr.at(0, 0)));
    for (std::size_t k = 0; k < llr.cols; ++k) llr.at(0, k) = mul(gamma, llr.at(0, k));
    for (std::size_t k = 1; k < llr.rows; ++k) llr.at(k, 0) = mul(gamma, llr.at(k, 0));

    SeriesMatrix l = SeriesMatrix::filled(n, n, trunc, false);
    for (std::size_t i = c; i < n; ++i)
        for (std::size_t j = c; j < n; ++j) l.at(i, j) = llr.at(i - c, j - c);
    for (std::size_t i = 0; i <= c; ++i)
        for (std::size_t j = 0; j <= c; ++j) l.at(i, j) = lul.at(i, j);

    std::size_t m1 = c - 1, p1 = c + 1;
    PuiseuxSeries qa = negate(l.at(c, c));
    PuiseuxSeries qb = add(mul(l.at(m1, c), l.at(c, p1)), mul(l.at(c, m1), l.at(p1, c)));
    PuiseuxSeries qc =
        sub(mul(l.at(m1, m1),
                det2(l.at(c, c), l.at(c, p1), l.at(p1, c), l.at(p1, p1))),
            mul(mul(l.at(m1, c), l.at(c, m1)), l.at(p1, p1)));
    PuiseuxSeries x = quadratic_roots(qa, qb, qc).first;  // the degree-zero root
    l.at(m1, p1) = x;
    l.at(p1, m1) = x;
    for (std::size_t i = 0; i < m1; ++i) {
        l.at(i, p1) = solve_singular3(cells(l, {i, c, p1}, {m1, c, p1}), 0, 2);
        l.at(p1, i) = l.at(i, p1);
    }
    for (std::size_t j = p1 + 1; j < n; ++j) {
        l.at(j, m1) = solve_singular3(cells(l, {m1, c, j}, {m1, c, p1}), 2, 0);
        l.at(m1, j) = l.at(j, m1);
    }
    std::vector<std::size_t> lo_rows(n - c);
    for (std::size_t i = 0; i < n - c; ++i) lo_rows[i] = c + i;
    for (std::size_t j = p1 + 1; j < n; ++j) {
        LiftCombination lc = column_combination(l, lo_rows, c, p1, j);
        for (std::size_t i = 0; i < m1; ++i) {
            l.at(i, j) = add(mul(lc.first, l.at(i, c)), mul(lc.second, l.at(i, p1)));
            l.at(j, i) = l.at(i, j);
        }
    }
    mirror_upper(l);
    return l;
}

SeriesMatrix lift_z1(const TropicalMatrix& m, const BlockDecomposition& dec,
                     std::mt19937_64& rng, const Rational& trunc, double varc, int depth) {
    std::size_t n = m.n_rows();
    std::size_t k1 = dec.b1_size, k2 = dec.b2_size, p = dec.p_size, q = dec.q_size;
    if (p == 0 && (k1 == 0 || k2 == 0)) return sum_realization_lift(m, rng, trunc, varc);

    // Reorder [zero, B1, B2, P, Q] so the zero row sits between the halves.
    std::vector<std::size_t> order;
    std::size_t c;
    if (k1 + k2 == 0) {
        // bipartite case: halves are P and Q; arrange a positive entry at
        // (c-1, c+1) — first P row hitting the first Q column goes last
        std::size_t qj = 1 + p;
        std::size_t pi = 0;
        for (std::size_t i = 1; i <= p; ++i)
            if (m.at(i, qj) != 0) { pi = i; break; }
        for (std::size_t i = 1; i <= p; ++i)
            if (i != pi) order.push_back(i);
        order.push_back(pi);
        order.push_back(0);
        order.push_back(qj);
        for (std::size_t j = 1 + p + 1; j < n; ++j) order.push_back(j);
        c = p;
    } else {
        // two-block case: halves are B1 u B2 | P u Q (or B1 | B2 when C is empty)
        c = (p == 0) ? k1 : k1 + k2;
        for (std::size_t i = 1; i <= c; ++i) order.push_back(i);
        order.push_back(0);
        for (std::size_t i = c + 1; i < n; ++i) order.push_back(i);
    }
    Permutation perm{std::vector<std::size_t>(order)};
    TropicalMatrix g = diagonal_permute(m, perm);
    SeriesMatrix lg = (k1 + k2 == 0) ? lift_bipartite(g, c, rng, trunc, varc)
                                     : lift_two_blocks(g, c, rng, trunc, varc, depth);
    SeriesMatrix out = SeriesMatrix::filled(n, n, trunc, true);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(order[i], order[j]) = lg.at(i, j);
    return out;
}

SeriesMatrix lift_normalized(const TropicalMatrix& m, std::mt19937_64& rng,
                             const Rational& trunc, double varc, int depth) {
    if (depth > 64) throw LiftFailed("lift recursion too deep");
    std::size_t n = m.n_rows();
    BlockDecomposition dec = block_decompose(m);
    const TropicalMatrix& w = dec.permuted;
    SeriesMatrix lw = SeriesMatrix::filled(n, n, trunc, true);
    if (dec.zero_rows == 0) {
        TropicalMatrix wp = border_zero(w);
        SeriesMatrix lb = lift_normalized(wp, rng, trunc, varc, depth + 1);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) lw.at(i, j) = lb.at(i + 1, j + 1);
    } else if (dec.zero_rows >= 2) {
        std::vector<std::size_t> rest(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) rest[i] = i + 1;
        TropicalMatrix wm = principal(w, rest);
        // re-border needs two nonzero columns with disjoint cosupports; a
        // lone positive block has none, so that shape goes to the direct lift
        std::size_t ci = n, cj = n;
        for (std::size_t i = 0; i + 1 < n && ci == n; ++i) {
            auto cos_i = cosupport(wm, i);
            if (cos_i.empty()) continue;
            for (std::size_t j = i + 1; j + 1 < n; ++j) {
                auto cos_j = cosupport(wm, j);
                if (cos_j.empty()) continue;
                std::vector<std::size_t> both;
                std::set_intersection(cos_i.begin(), cos_i.end(), cos_j.begin(),
                                      cos_j.end(), std::back_inserter(both));
                if (both.empty()) { ci = i; cj = j; break; }
            }
        }
        if (ci == n) {
            lw = sum_realization_lift(w, rng, trunc, varc);
        } else {
            SeriesMatrix lm = lift_normalized(wm, rng, trunc, varc, depth + 1);
            PuiseuxSeries lam = generic_constant(rng, trunc);
            PuiseuxSeries mu = generic_constant(rng, trunc);
            for (std::size_t k = 0; k + 1 < n; ++k) {
                PuiseuxSeries v = add(mul(lam, lm.at(k, ci)), mul(mu, lm.at(k, cj)));
                lw.at(0, k + 1) = v;
                lw.at(k + 1, 0) = std::move(v);
            }
            lw.at(0, 0) = add(add(mul(mul(lam, lam), lm.at(ci, ci)),
                                  scalar_mul(2.0, mul(mul(lam, mu), lm.at(ci, cj)))),
                              mul(mul(mu, mu), lm.at(cj, cj)));
            for (std::size_t i = 0; i + 1 < n; ++i)
                for (std::size_t j = 0; j + 1 < n; ++j) lw.at(i + 1, j + 1) = lm.at(i, j);
        }
    } else {
        lw = lift_z1(w, dec, rng, trunc, varc, depth);
    }
    SeriesMatrix out = SeriesMatrix::filled(n, n, trunc, true);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(dec.sigma(i), dec.sigma(j)) = lw.at(i, j);
    return out;
}

std::vector<std::vector<std::size_t>> index_combinations(std::size_t n, std::size_t r) {
    std::vector<std::vector<std::size_t>> out;
    if (r > n) return out;
    std::vector<std::size_t> cur(r);
    for (std::size_t i = 0; i < r; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t k = r;
        while (k > 0 && cur[k - 1] == n - r + (k - 1)) --k;
        if (k == 0) break;
        ++cur[k - 1];
        for (std::size_t i = k; i < r; ++i) cur[i] = cur[i - 1] + 1;
    }
    return out;
}

PuiseuxSeries minor_det(const SeriesMatrix& l, const std::vector<std::size_t>& I,
                        const std::vector<std::size_t>& J) {
    std::size_t r = I.size();
    std::vector<std::size_t> perm(r);
    for (std::size_t i = 0; i < r; ++i) perm[i] = i;
    PuiseuxSeries acc = PuiseuxSeries::zero(l.trunc);
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i + 1; j < r; ++j)
                if (perm[i] > perm[j]) ++inversions;
        PuiseuxSeries prod = PuiseuxSeries::monomial(1.0, 0, l.trunc);
        for (std::size_t i = 0; i < r; ++i) prod = mul(prod, l.at(I[i], J[perm[i]]));
        acc = add(acc, inversions % 2 ? negate(prod) : prod);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

double minor_scale(const SeriesMatrix& l, const std::vector<std::size_t>& I,
                   const std::vector<std::size_t>& J) {
    double scale = 1.0;
    for (std::size_t i : I) {
        double row = 0.0;
        for (std::size_t j : J)
            if (!l.at(i, j).is_zero())
                row = std::max(row, std::abs(l.at(i, j).leading_coeff()));
        scale *= (row > 0.0 ? row : 1.0);
    }
    return scale;
}

SeriesMatrix standard_rank2_lift_scaled(const TropicalMatrix& u, std::mt19937_64& rng,
                                        const Rational& trunc, double varc) {
    std::size_t m = u.n_rows(), n = u.n_cols();
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = 0; t < n; ++t) {
            if (t == s) continue;
            // tropical segment with extremes s, t: every column must be a
            // min-combination of the two
            std::vector<Rational> a(n), b(n);
            for (std::size_t j = 0; j < n; ++j) {
                a[j] = u.at(0, j) - u.at(0, s);
                b[j] = u.at(0, j) - u.at(0, t);
                for (std::size_t i = 1; i < m; ++i) {
                    a[j] = std::max(a[j], Rational(u.at(i, j) - u.at(i, s)));
                    b[j] = std::max(b[j], Rational(u.at(i, j) - u.at(i, t)));
                }
            }
            bool ok = true;
            for (std::size_t i = 0; i < m && ok; ++i)
                for (std::size_t j = 0; j < n && ok; ++j)
                    if (std::min(Rational(a[j] + u.at(i, s)), Rational(b[j] + u.at(i, t))) !=
                        u.at(i, j))
                        ok = false;
            if (!ok) continue;
            SeriesMatrix l = SeriesMatrix::filled(m, n, trunc, false);
            std::vector<PuiseuxSeries> ga(m, PuiseuxSeries::zero(trunc)), gb = ga,
                ca(n, PuiseuxSeries::zero(trunc)), cb = ca;
            for (std::size_t i = 0; i < m; ++i) {
                ga[i] = generic_constant(rng, trunc);
                gb[i] = generic_constant(rng, trunc);
            }
            for (std::size_t j = 0; j < n; ++j) {
                ca[j] = generic_constant(rng, trunc);
                cb[j] = generic_constant(rng, trunc);
            }
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    PuiseuxSeries t1 = mul(mul(ga[i], ca[j]),
                        scaled_monomial(varc, u.at(i, s) + a[j], trunc));
                    PuiseuxSeries t2 = mul(mul(gb[i], cb[j]),
                        scaled_monomial(varc, u.at(i, t) + b[j], trunc));
                    l.at(i, j) = add(t1, t2);
                }
            return l;
        }
    }
    throw LiftFailed("standard_rank2_lift: columns do not fit a tropical segment");
}

}  // namespace

SeriesMatrix standard_rank2_lift(const TropicalMatrix& u, std::mt19937_64& rng,
                                 const Rational& trunc) {
    return standard_rank2_lift_scaled(u, rng, trunc, 1.0);
}

LiftCertificate verify_lift(const TropicalMatrix& a, const SeriesMatrix& l,
                            std::size_t r) {
    constexpr double kVanishTol = 1e-6, kWitnessTol = 1e-3;
    LiftCertificate cert;
    cert.matrix = l;
    cert.target_rank = r;
    cert.checks.minor_bound = kVanishTol;
    cert.checks.witness_bound = kWitnessTol;
    if (a.n_rows() != l.rows || a.n_cols() != l.cols) return cert;

    bool degrees = true;
    for (std::size_t i = 0; i < l.rows && degrees; ++i)
        for (std::size_t j = 0; j < l.cols && degrees; ++j)
            if (l.at(i, j).is_zero() || l.at(i, j).degree() != a.at(i, j)) degrees = false;
    cert.checks.degree_match = degrees;

    bool symmetric = true;
    if (a.symmetric()) {
        for (std::size_t i = 0; i < l.rows && symmetric; ++i)
            for (std::size_t j = i + 1; j < l.cols && symmetric; ++j) {
                const auto& s = l.at(i, j).terms;
                const auto& t = l.at(j, i).terms;
                if (s.size() != t.size()) { symmetric = false; break; }
                for (std::size_t k = 0; k < s.size(); ++k)
                    if (s[k].exp != t[k].exp || s[k].coeff != t[k].coeff) {
                        symmetric = false;
                        break;
                    }
            }
    }
    cert.checks.symmetry = symmetric;

    double worst = 0.0;
    auto rows1 = index_combinations(l.rows, r + 1);
    auto cols1 = index_combinations(l.cols, r + 1);
    for (const auto& I : rows1)
        for (const auto& J : cols1) {
            PuiseuxSeries d = minor_det(l, I, J);
            double residual = d.max_coeff_magnitude() / minor_scale(l, I, J);
            worst = std::max(worst, residual);
        }
    cert.checks.minor_residual = worst;
    cert.checks.minors_vanish = worst <= kVanishTol;

    auto rows0 = index_combinations(l.rows, r);
    auto cols0 = index_combinations(l.cols, r);
    for (const auto& I : rows0) {
        for (const auto& J : cols0) {
            PuiseuxSeries d = minor_det(l, I, J);
            if (d.is_zero()) continue;
            double lead = std::abs(d.leading_coeff()) / minor_scale(l, I, J);
            if (lead > kWitnessTol) {
                cert.checks.witness_leading = lead;
                cert.checks.witness_nonsingular = true;
                return cert;
            }
            cert.checks.witness_leading = std::max(cert.checks.witness_leading, lead);
        }
    }
    return cert;
}

LiftCertificate rank1_lift(const TropicalMatrix& a, const Rational* trunc) {
    if (!rank_one_test(a)) throw TropsymError("rank1_lift requires tropical rank one");
    Rational tau = trunc ? *trunc : default_trunc(a, 1);
    SeriesMatrix l = SeriesMatrix::filled(a.n_rows(), a.n_cols(), tau, true);
    for (std::size_t i = 0; i < a.n_rows(); ++i)
        for (std::size_t j = 0; j < a.n_cols(); ++j)
            l.at(i, j) = PuiseuxSeries::monomial(1.0, a.at(i, j), tau);
    return verify_lift(a, l, 1);
}

LiftCertificate rank2_symmetric_lift(const TropicalMatrix& a, std::uint64_t seed,
                                     const Rational* trunc) {
    if (!a.symmetric())
        throw TropsymError("rank2_symmetric_lift requires a symmetric matrix");
    if (symmetric_tropical_rank(a).rank != 2)
        throw TropsymError("rank2_symmetric_lift requires symmetric tropical rank 2");
    Rational tau = trunc ? *trunc : default_trunc(a, 2);
    NormalizeResult norm = normalize(a);
    LiftCertificate last;
    // Work in the substituted variable t -> varc * t: the construction nests
    // inversions and square roots, and a contraction of the variable keeps the
    // higher-order coefficients from swamping double precision. The result is
    // still a lift of the same matrix.
    const double varc = 0.12;
    for (std::uint64_t attempt = 0; attempt < 8; ++attempt) {
        std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + attempt + 1);
        try {
            SeriesMatrix ln = lift_normalized(norm.matrix, rng, tau, varc, 0);
            SeriesMatrix l = SeriesMatrix::filled(a.n_rows(), a.n_cols(), tau, true);
            for (std::size_t i = 0; i < a.n_rows(); ++i)
                for (std::size_t j = 0; j < a.n_cols(); ++j)
                    l.at(i, j) =
                        shift(ln.at(i, j), -norm.scaling.c[i] - norm.scaling.c[j]);
            last = verify_lift(a, l, 2);
            last.attempts_used = attempt + 1;
            if (last.valid()) return last;
        } catch (const LiftFailed&) {
        } catch (const DegenerateDiscriminant&) {
        } catch (const StructureViolation&) {
        }
    }
    throw LiftFailed("rank2_symmetric_lift: retry budget exhausted");
}

std::size_t kapranov_rank_3x3(const TropicalMatrix& a) {
    if (a.n_rows() != 3 || !a.symmetric())
        throw DimensionError("kapranov_rank_3x3 requires a symmetric 3x3 matrix");
    // at this size the symmetric Kapranov and tropical ranks coincide
    return symmetric_tropical_rank(a).rank;
}

ConicClass classify_conic(const Rational& a, const Rational& b, const Rational& c,
                          const Rational& d, const Rational& e, const Rational& f) {
    TropicalMatrix m(3, 3, {a, b, d, b, c, e, d, e, f}, true);
    return kapranov_rank_3x3(m) < 3 ? ConicClass::SingularTwoLines
                                    : ConicClass::Nonsingular;
}

}  // namespace tropsym
