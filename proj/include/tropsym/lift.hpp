#pragma once

#include "tropsym/matrix.hpp"
#include "tropsym/series.hpp"

#include <cstddef>
#include <cstdint>
#include <random>

namespace tropsym {

class LiftFailed : public TropsymError {
  public:
    using TropsymError::TropsymError;
};

/// Expresses one column as a combination of two basis columns.
struct LiftCombination {
    PuiseuxSeries first, second;  // coefficients on the two basis columns
};

struct LiftChecks {
    bool degree_match = false;
    bool symmetry = false;
    // Largest coefficient magnitude over all (r+1)x(r+1) minors, and the
    // threshold it was held against.
    double minor_residual = 0.0;
    double minor_bound = 0.0;
    bool minors_vanish = false;
    // Leading magnitude of the first sufficiently nonsingular r x r minor.
    double witness_leading = 0.0;
    double witness_bound = 0.0;
    bool witness_nonsingular = false;
};

struct LiftCertificate {
    SeriesMatrix matrix;
    std::size_t target_rank = 0;
    std::size_t attempts_used = 0;  // reseeds consumed by rank2_symmetric_lift
    LiftChecks checks;

    bool valid() const {
        return checks.degree_match && checks.symmetry && checks.minors_vanish &&
               checks.witness_nonsingular;
    }
};

/// 2(r+1)(1 + spread): cancellations among (r+1)-minor monomials live at
/// exponents bounded by (r+1)*spread; the factor 2 is margin.
Rational default_trunc(const TropicalMatrix& a, std::size_t r);

/// Monomial lift t^{A[i][j]} of an additive-rank-1 symmetric matrix.
LiftCertificate rank1_lift(const TropicalMatrix& a, const Rational* trunc = nullptr);

/// Rank-2 lift of a (not necessarily symmetric) tropical-rank-2 matrix whose
/// columns lie on a tropical line: two extreme columns are lifted with
/// generic coefficients and every column is a combination of them. Throws
/// LiftFailed when no extreme pair fits.
SeriesMatrix standard_rank2_lift(const TropicalMatrix& u, std::mt19937_64& rng,
                                 const Rational& trunc);

/// Symmetric rank-2 lift of a symmetric-tropical-rank-2 matrix: normalize,
/// block-decompose, and recurse on the block structure (border when there is
/// no zero row, strip extra zero rows, quadratic + propagation fill at one
/// zero row). Deterministic given (input, seed); retries up to 8 reseeds
/// before LiftFailed.
LiftCertificate rank2_symmetric_lift(const TropicalMatrix& a, std::uint64_t seed = 0,
                                     const Rational* trunc = nullptr);

/// Check degrees, symmetry, vanishing of all (r+1)-minors, and existence of
/// a nonvanishing r-minor. Failures are recorded, never thrown.
LiftCertificate verify_lift(const TropicalMatrix& a, const SeriesMatrix& l,
                            std::size_t r);

/// Symmetric Kapranov rank of a 3x3 symmetric matrix (equals its symmetric
/// tropical rank at this size).
std::size_t kapranov_rank_3x3(const TropicalMatrix& a);

enum class ConicClass { SingularTwoLines, Nonsingular };

/// A tropical conic a x^2 + b xy + c y^2 + d xz + e yz + f z^2 is a union of
/// two tropical lines iff [[a,b,d],[b,c,e],[d,e,f]] has symmetric Kapranov
/// rank below three.
ConicClass classify_conic(const Rational& a, const Rational& b, const Rational& c,
                          const Rational& d, const Rational& e, const Rational& f);

}  // namespace tropsym
