#include "tropsym/series.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <numbers>
#include <sstream>

namespace tropsym {

namespace {

constexpr double kHardZero = 1e-12;

double magnitude_scale(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    return std::max(a.max_coeff_magnitude(), b.max_coeff_magnitude());
}

}  // namespace

PuiseuxSeries PuiseuxSeries::zero(Rational trunc) { return {{}, std::move(trunc)}; }

PuiseuxSeries PuiseuxSeries::monomial(std::complex<double> coeff, Rational exp,
                                      Rational trunc) {
    PuiseuxSeries s{{}, std::move(trunc)};
    if (exp < s.trunc && std::abs(coeff) > 0.0) s.terms.push_back({std::move(exp), coeff});
    return s;
}

Rational PuiseuxSeries::degree() const {
    if (is_zero()) throw TropsymError("degree of the zero series");
    return terms[0].exp;
}

std::complex<double> PuiseuxSeries::leading_coeff() const {
    if (is_zero()) throw TropsymError("leading coefficient of the zero series");
    return terms[0].coeff;
}

double PuiseuxSeries::max_coeff_magnitude() const {
    double m = 0.0;
    for (const auto& t : terms) m = std::max(m, std::abs(t.coeff));
    return m;
}

void PuiseuxSeries::prune(double scale) {
    if (scale <= 0.0) scale = max_coeff_magnitude();
    double thresh = kHardZero * scale;
    std::erase_if(terms, [&](const Term& t) {
        return t.exp >= trunc || std::abs(t.coeff) <= thresh;
    });
}

PuiseuxSeries add(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    PuiseuxSeries out{{}, std::min(a.trunc, b.trunc)};
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size() || (i < a.terms.size() && a.terms[i].exp < b.terms[j].exp)) {
            out.terms.push_back(a.terms[i++]);
        } else if (i == a.terms.size() || b.terms[j].exp < a.terms[i].exp) {
            out.terms.push_back(b.terms[j++]);
        } else {
            out.terms.push_back({a.terms[i].exp, a.terms[i].coeff + b.terms[j].coeff});
            ++i, ++j;
        }
    }
    out.prune(magnitude_scale(a, b));
    return out;
}

PuiseuxSeries negate(const PuiseuxSeries& a) {
    PuiseuxSeries out = a;
    for (auto& t : out.terms) t.coeff = -t.coeff;
    return out;
}

PuiseuxSeries sub(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    return add(a, negate(b));
}

PuiseuxSeries mul(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    // Known mod t^ta and t^tb implies the product is known mod
    // t^min(ta + val b, tb + val a).
    Rational trunc = std::min(a.trunc + b.degree_or_trunc(), b.trunc + a.degree_or_trunc());
    if (a.is_zero() || b.is_zero()) return PuiseuxSeries::zero(std::move(trunc));
    std::map<Rational, std::complex<double>> acc;
    for (const auto& s : a.terms)
        for (const auto& t : b.terms) {
            Rational e = s.exp + t.exp;
            if (e >= trunc) continue;
            acc[e] += s.coeff * t.coeff;
        }
    PuiseuxSeries out{{}, std::move(trunc)};
    for (auto& [e, c] : acc) out.terms.push_back({e, c});
    out.prune(a.max_coeff_magnitude() * b.max_coeff_magnitude());
    return out;
}

PuiseuxSeries scalar_mul(std::complex<double> c, const PuiseuxSeries& a) {
    if (std::abs(c) == 0.0) return PuiseuxSeries::zero(a.trunc);
    PuiseuxSeries out = a;
    for (auto& t : out.terms) t.coeff *= c;
    return out;
}

PuiseuxSeries shift(const PuiseuxSeries& a, const Rational& e) {
    PuiseuxSeries out = a;
    out.trunc += e;
    for (auto& t : out.terms) t.exp += e;
    return out;
}

PuiseuxSeries invert(const PuiseuxSeries& a) {
    if (a.is_zero()) throw TropsymError("invert of the zero series");
    Rational v = a.degree();
    std::complex<double> c = a.leading_coeff();
    // a = c t^v (1 + w) with val w > 0; divide out the unit by long
    // division, killing the leading residual term at each step. This is
    // triangular coefficient solving, which avoids the catastrophic
    // cancellation a term-by-term geometric series would accumulate.
    Rational rel = a.trunc - v;
    std::vector<PuiseuxSeries::Term> w;
    for (std::size_t k = 1; k < a.terms.size(); ++k)
        w.push_back({a.terms[k].exp - v, a.terms[k].coeff / c});
    PuiseuxSeries acc{{{Rational(0), 1.0}}, rel};
    std::map<Rational, std::complex<double>> res;  // (1 + w) * acc - 1
    for (const auto& t : w) res[t.exp] += t.coeff;
    double floor_scale = kHardZero;
    while (!res.empty()) {
        auto it = res.begin();
        Rational e0 = it->first;
        std::complex<double> c0 = it->second;
        res.erase(it);
        if (e0 >= rel) break;  // everything later is at least this high
        if (std::abs(c0) <= floor_scale) continue;
        acc.terms.push_back({e0, -c0});
        floor_scale = std::max(floor_scale, kHardZero * std::abs(c0));
        for (const auto& t : w) {
            Rational e = e0 + t.exp;
            if (e < rel) res[e] -= c0 * t.coeff;
        }
    }
    acc.prune();
    return shift(scalar_mul(1.0 / c, acc), -v);
}

PuiseuxSeries sqrt_series(const PuiseuxSeries& a) {
    if (a.is_zero()) throw TropsymError("sqrt of the zero series");
    Rational v = a.degree();
    std::complex<double> c = a.leading_coeff();
    // a = c t^v (1 + w); take the square root of the unit by residual
    // elimination: each new term of x cancels the current leading term of
    // x^2 - (1 + w), so the residual valuation strictly increases.
    Rational rel = a.trunc - v;
    PuiseuxSeries x{{{Rational(0), 1.0}}, rel};
    std::map<Rational, std::complex<double>> res;  // x^2 - (1 + w)
    for (std::size_t k = 1; k < a.terms.size(); ++k)
        res[a.terms[k].exp - v] -= a.terms[k].coeff / c;
    double floor_scale = kHardZero;
    while (!res.empty()) {
        auto it = res.begin();
        Rational e0 = it->first;
        std::complex<double> c0 = it->second;
        res.erase(it);
        if (e0 >= rel) break;
        if (std::abs(c0) <= floor_scale) continue;
        std::complex<double> d = -c0 / 2.0;
        floor_scale = std::max(floor_scale, kHardZero * std::abs(d));
        // res += 2 d t^{e0} x + d^2 t^{2 e0}; the constant term of x yields
        // exactly the cancellation of the popped entry, so skip it.
        for (std::size_t k = 1; k < x.terms.size(); ++k) {
            Rational e = e0 + x.terms[k].exp;
            if (e < rel) res[e] += 2.0 * d * x.terms[k].coeff;
        }
        if (2 * e0 < rel) res[2 * e0] += d * d;
        x.terms.push_back({e0, d});
    }
    x.prune();
    return shift(scalar_mul(std::sqrt(c), x), v / 2);
}

std::pair<PuiseuxSeries, PuiseuxSeries> quadratic_roots(const PuiseuxSeries& a,
                                                        const PuiseuxSeries& b,
                                                        const PuiseuxSeries& c) {
    if (a.is_zero()) throw TropsymError("quadratic_roots: leading coefficient is zero");
    if (c.is_zero()) {
        // x (a x + b) = 0
        if (b.is_zero())
            throw DegenerateDiscriminant("quadratic_roots: double root at zero");
        PuiseuxSeries x1 = negate(mul(b, invert(a)));
        return {std::move(x1), PuiseuxSeries::zero(x1.trunc)};
    }
    PuiseuxSeries disc = sub(mul(b, b), scalar_mul(4.0, mul(a, c)));
    if (disc.is_zero())
        throw DegenerateDiscriminant("quadratic_roots: discriminant vanishes to truncation");
    PuiseuxSeries s = sqrt_series(disc);
    // Pick the non-cancelling branch for the first root, the other via Vieta.
    PuiseuxSeries t1 = sub(s, b), t2 = negate(add(b, s));
    const PuiseuxSeries& tbig =
        (t1.degree_or_trunc() <= t2.degree_or_trunc()) ? t1 : t2;
    if (tbig.is_zero())
        throw DegenerateDiscriminant("quadratic_roots: both branches cancel");
    PuiseuxSeries x1 = mul(tbig, invert(scalar_mul(2.0, a)));
    PuiseuxSeries x2 = mul(mul(c, invert(a)), invert(x1));
    if (x2.is_zero() || x1.degree() <= x2.degree()) return {x1, x2};
    return {x2, x1};
}

PuiseuxSeries generic_constant(std::mt19937_64& rng, const Rational& trunc) {
    std::uniform_real_distribution<double> mag(1.0, 2.0), ang(0.0, 2 * std::numbers::pi);
    double m = mag(rng), t = ang(rng);
    return PuiseuxSeries::monomial({m * std::cos(t), m * std::sin(t)}, 0, trunc);
}

SeriesMatrix SeriesMatrix::filled(std::size_t rows, std::size_t cols,
                                  const Rational& trunc, bool symmetric) {
    SeriesMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.symmetric = symmetric;
    m.trunc = trunc;
    m.entries.assign(rows * cols, PuiseuxSeries::zero(trunc));
    return m;
}

TropicalMatrix SeriesMatrix::degrees() const {
    std::vector<Rational> out;
    out.reserve(rows * cols);
    for (const auto& e : entries) out.push_back(e.degree());
    return TropicalMatrix(rows, cols, std::move(out), symmetric);
}

namespace {

std::string fmt_double(double v) {
    std::ostringstream out;
    out << std::setprecision(17) << v;
    return out.str();
}

}  // namespace

std::string format_series(const PuiseuxSeries& s) {
    std::ostringstream out;
    for (std::size_t k = 0; k < s.terms.size(); ++k) {
        if (k) out << " + ";
        const auto& t = s.terms[k];
        out << '(' << fmt_double(t.coeff.real());
        if (t.coeff.imag() >= 0) out << '+';
        out << fmt_double(t.coeff.imag()) << "i)";
        if (t.exp != 0) out << " t^" << format_rational(t.exp);
    }
    if (!s.terms.empty()) out << " + ";
    out << "O(t^" << format_rational(s.trunc) << ')';
    return out.str();
}

std::string format_series_matrix(const SeriesMatrix& m) {
    std::ostringstream out;
    out << "series-matrix " << m.rows << ' ' << m.cols << ' ' << (m.symmetric ? 1 : 0)
        << '\n';
    out << "trunc " << format_rational(m.trunc) << '\n';
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) {
            const auto& s = m.at(i, j);
            out << "entry " << i << ' ' << j << ' ' << s.terms.size() << '\n';
            for (const auto& t : s.terms)
                out << fmt_double(t.coeff.real()) << ' ' << fmt_double(t.coeff.imag())
                    << ' ' << format_rational(t.exp) << '\n';
        }
    return out.str();
}

SeriesMatrix parse_series_matrix(std::istream& in) {
    std::string kw;
    std::size_t rows, cols;
    int sym;
    if (!(in >> kw >> rows >> cols >> sym) || kw != "series-matrix")
        throw ParseError("expected series-matrix header", 1, 1);
    std::string tkw, tval;
    if (!(in >> tkw >> tval) || tkw != "trunc")
        throw ParseError("expected trunc line", 2, 1);
    auto trunc = parse_rational(tval);
    if (!trunc) throw ParseError("invalid truncation order", 2, 2);
    SeriesMatrix m = SeriesMatrix::filled(rows, cols, *trunc, sym != 0);
    for (std::size_t k = 0; k < rows * cols; ++k) {
        std::size_t i, j, nterms;
        if (!(in >> kw >> i >> j >> nterms) || kw != "entry" || i >= rows || j >= cols)
            throw ParseError("bad entry header", 3 + k, 1);
        PuiseuxSeries s = PuiseuxSeries::zero(*trunc);
        for (std::size_t t = 0; t < nterms; ++t) {
            double re, im;
            std::string etok;
            if (!(in >> re >> im >> etok)) throw ParseError("bad term line", 3 + k, 1);
            auto e = parse_rational(etok);
            if (!e) throw ParseError("invalid term exponent", 3 + k, 3);
            s.terms.push_back({*e, {re, im}});
        }
        std::sort(s.terms.begin(), s.terms.end(),
                  [](const auto& x, const auto& y) { return x.exp < y.exp; });
        m.at(i, j) = std::move(s);
    }
    if (m.symmetric)
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (format_series(m.at(i, j)) != format_series(m.at(j, i)))
                    throw ParseError("symmetric flag set but entries differ", 1, 1);
    return m;
}

SeriesMatrix parse_series_matrix_string(const std::string& text) {
    std::istringstream in(text);
    return parse_series_matrix(in);
}

}  // namespace tropsym
