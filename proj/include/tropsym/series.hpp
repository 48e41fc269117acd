#pragma once

#include "tropsym/matrix.hpp"
#include "tropsym/rational.hpp"

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace tropsym {

class DegenerateDiscriminant : public TropsymError {
  public:
    using TropsymError::TropsymError;
};

/// Truncated Puiseux series: complex coefficients, exact rational exponents,
/// known modulo t^trunc. The tropicalization lives in the exponents, which
/// never touch floating point.
struct PuiseuxSeries {
    struct Term {
        Rational exp;
        std::complex<double> coeff;
    };

    std::vector<Term> terms;  // strictly increasing exponents, all < trunc
    Rational trunc;

    static PuiseuxSeries zero(Rational trunc);
    static PuiseuxSeries monomial(std::complex<double> coeff, Rational exp,
                                  Rational trunc);

    bool is_zero() const { return terms.empty(); }
    /// Leading exponent; throws on the zero series.
    Rational degree() const;
    /// Leading exponent, or trunc for the zero series (valuation bound).
    Rational degree_or_trunc() const { return is_zero() ? trunc : terms[0].exp; }
    std::complex<double> leading_coeff() const;
    double max_coeff_magnitude() const;

    /// Drop terms at or above trunc and coefficients below the hard-zero
    /// threshold relative to `scale` (default: own max magnitude).
    void prune(double scale = 0.0);
};

PuiseuxSeries add(const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries sub(const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries negate(const PuiseuxSeries& a);
PuiseuxSeries mul(const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries scalar_mul(std::complex<double> c, const PuiseuxSeries& a);
/// Multiply by t^e (exact exponent shift).
PuiseuxSeries shift(const PuiseuxSeries& a, const Rational& e);

/// Multiplicative inverse via geometric series; throws on the zero series.
PuiseuxSeries invert(const PuiseuxSeries& a);

/// Principal-branch square root of the leading coefficient, Newton for the
/// tail. Throws on the zero series.
PuiseuxSeries sqrt_series(const PuiseuxSeries& a);

/// The two roots of a x^2 + b x + c, ordered by degree ascending (a zero
/// root sorts last). Throws DegenerateDiscriminant when the discriminant
/// vanishes identically to truncation.
std::pair<PuiseuxSeries, PuiseuxSeries> quadratic_roots(const PuiseuxSeries& a,
                                                        const PuiseuxSeries& b,
                                                        const PuiseuxSeries& c);

/// Degree-0 single-term series, coefficient magnitude in [1,2], uniform phase.
PuiseuxSeries generic_constant(std::mt19937_64& rng, const Rational& trunc);

struct SeriesMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<PuiseuxSeries> entries;  // row-major
    bool symmetric = false;
    Rational trunc;

    const PuiseuxSeries& at(std::size_t i, std::size_t j) const {
        return entries[i * cols + j];
    }
    PuiseuxSeries& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }

    static SeriesMatrix filled(std::size_t rows, std::size_t cols,
                               const Rational& trunc, bool symmetric = false);
    /// Entrywise valuations; throws if any entry is the zero series.
    TropicalMatrix degrees() const;
};

/// Round-trip text serialization, 17 significant digits per coefficient.
std::string format_series_matrix(const SeriesMatrix& m);
SeriesMatrix parse_series_matrix(std::istream& in);
SeriesMatrix parse_series_matrix_string(const std::string& text);

std::string format_series(const PuiseuxSeries& s);

}  // namespace tropsym
