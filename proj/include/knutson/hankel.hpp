#ifndef KNUTSON_HANKEL_HPP
#define KNUTSON_HANKEL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "knutson/groebner.hpp"
#include "knutson/hilbert.hpp"
#include "knutson/knutson_family.hpp"
#include "knutson/rational.hpp"

namespace knutson {

// A generic Hankel matrix: `rows` rows filled with the variables
// x_first .. x_last, constant along antidiagonals:
//     entry(i, j) = x_{first + i + j - 2}    (1-based i, j).
// The column count is forced by the variable range.
struct HankelShape {
    std::size_t rows = 0;
    std::size_t first = 0;
    std::size_t last = 0;

    std::size_t cols() const { return last + 2 - rows - first; }
    std::size_t span() const { return last - first + 1; } // distinct entries
    bool is_square() const { return cols() == rows; }
    bool is_almost_square() const { return cols() == rows + 1; }
    std::string str() const;

    friend bool operator==(const HankelShape&, const HankelShape&) = default;
};

// Throws unless rows >= 1, first >= 1 and the range x_first..x_last is long
// enough for at least one column.
void require_valid(const HankelShape& shape);

// 1-based variable index of entry (i, j).
std::size_t hankel_entry(const HankelShape& shape, std::size_t i, std::size_t j);

// The matrix itself, as 1-based variable indices.
std::vector<std::vector<std::size_t>> hankel_entries(const HankelShape& shape);

// The four submatrices the verification pipeline works with.  For a square
// matrix X of size m (span n = 2m - 1):
//     P1 = first m-1 rows of X          (drops the last row)
//     P2 = last m-1 columns of X        (drops the first column)
//     Q  = both of the above            (drops last row and first column)
// For an almost-square matrix X of size m x (m+1) (span n = 2m):
//     P1 = first m columns of X         (drops the last column)
//     P2 = last m columns of X          (drops the first column)
//     Q  = middle m-1 columns of X      (drops both outer columns)
enum class SubmatrixRole { X, P1, P2, Q };

std::string role_name(SubmatrixRole role);

HankelShape submatrix(const HankelShape& shape, SubmatrixRole role);

// Determinant of the square submatrix on the given strictly increasing
// 1-based row and column index lists, by Laplace expansion memoized over
// column subsets.  After expansion the leading term is checked to equal the
// product of the main-diagonal entries; a mismatch means the supplied term
// order is not diagonal for Hankel matrices and raises Error.
Polynomial<Rational> hankel_minor(const HankelShape& shape,
                                  const std::vector<std::size_t>& row_idx,
                                  const std::vector<std::size_t>& col_idx,
                                  std::size_t nvars, const TermOrderPtr& ord);

// Determinant of the full (square) matrix.
Polynomial<Rational> hankel_determinant(const HankelShape& shape, std::size_t nvars,
                                        const TermOrderPtr& ord);

// Ideal generated by all t x t minors, in an ambient ring of nvars
// variables.  t = 0 yields the unit ideal (empty minors have determinant 1);
// otherwise t must satisfy 1 <= t <= min(rows, cols).
Ideal<Rational> minor_ideal(const HankelShape& shape, std::size_t t, std::size_t nvars,
                            const TermOrderPtr& ord);

// The closure seed attached to a shape:
//     square          f = det(X) * det(Q)
//     almost-square   f = det(P1) * det(P2)
// Its leading term is checked to be x_first * ... * x_last.
Polynomial<Rational> seed_polynomial(const HankelShape& shape, std::size_t nvars,
                                     const TermOrderPtr& ord);

// All t-minors of X, P1, P2 and Q for every valid t, deduplicated.  Used as
// the user-supplied part of the closure witness pool: colons by these
// minors are what split sums into their components, and the generator-only
// default pool provably misses some of them.
std::vector<Polynomial<Rational>> default_hankel_witnesses(const HankelShape& shape,
                                                           std::size_t nvars,
                                                           const TermOrderPtr& ord);

// I_t of a Hankel matrix with span n depends only on t and n, not on the
// row count: verified by comparing the ideals for row counts m1 and m2.
// Requires t <= mi <= n + 1 - t for both row counts.
bool verify_independence_of_m(std::size_t t, std::size_t n, std::size_t m1,
                              std::size_t m2, const TermOrderPtr& ord);

// One verified claim: a printable name, the expected and computed values,
// and whether they agree.
struct CheckLine {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

bool all_pass(const std::vector<CheckLine>& checks);
std::vector<std::string> failed_names(const std::vector<CheckLine>& checks);

// Computed-vs-closed-form invariants of I_t(shape) in an nvars ambient
// ring: h-vector, multiplicity and height of the quotient, read off the
// initial ideal and compared to the closed forms with s = span - t + 1.
std::vector<CheckLine> verify_minor_invariants(const HankelShape& shape, std::size_t t,
                                               std::size_t nvars,
                                               const TermOrderPtr& ord);

// The two decomposition identities at level t (2 <= t <= rows, square
// shapes only):
//     I_t(X) + I_{t-1}(Q)      =  I_{t-1}(P1) meet I_{t-1}(P2)
//     I_{t-1}(P1) + I_{t-1}(P2) =  I_{t-1}(X) meet I_{t-2}(Q)
// together with the height, multiplicity and h-vector bookkeeping of all
// six ideals involved (I_0 = (1) by convention).
struct PrimaryDecReport {
    std::size_t t = 0;
    std::vector<CheckLine> checks;
    bool ok() const { return all_pass(checks); }
};

PrimaryDecReport verify_primary_dec(const HankelShape& shape, std::size_t t,
                                    const TermOrderPtr& ord);

// The characterization list for a square shape: every proper nonzero ideal
// of the six shapes
//     I_t(X), I_t(P1), I_t(P2), I_t(Q),
//     I_t(X) + I_{t-1}(Q), I_{t-1}(P1) + I_{t-1}(P2)
// over their valid t ranges, deduplicated by reduced basis.
struct NamedIdeal {
    std::string name;
    Ideal<Rational> ideal;
};

std::vector<NamedIdeal> characterization_shapes(const HankelShape& shape,
                                                const TermOrderPtr& ord);

// Set comparison of a computed family against the characterization list.
// The seed (a product, not a minor ideal) and the unit ideal are not on the
// list but are legitimately produced by the closure; they are reported as
// boundary extras, never silently dropped.  Anything else outside the list
// is unexpected.
struct FamilyComparison {
    std::size_t expected_count = 0;
    std::size_t computed_count = 0;
    std::vector<std::string> missing;           // shape names absent from the family
    std::vector<std::string> boundary_extras;   // the seed and/or the unit ideal
    std::vector<std::string> unexpected_extras; // member keys off the list
    bool matches_up_to_boundary() const {
        return missing.empty() && unexpected_extras.empty();
    }
};

FamilyComparison compare_family_to_characterization(const KnutsonFamily<Rational>& fam,
                                                    const HankelShape& shape,
                                                    const TermOrderPtr& ord);

// Full membership verification for a square or almost-square shape with
// first = 1: run the closure from seed_polynomial with the default Hankel
// witness pool, then check that every I_t(X), I_t(P1), I_t(P2), I_t(Q) is a
// member.  Square shapes additionally compare the family against the
// characterization list.
struct MembershipReport {
    KnutsonFamily<Rational> family;
    std::vector<CheckLine> checks;
    FamilyComparison comparison; // square shapes only; empty otherwise
    bool ok() const { return all_pass(checks); }
};

MembershipReport verify_theorem_membership(const HankelShape& shape,
                                           const TermOrderPtr& ord,
                                           const ClosureCaps& caps = {});

} // namespace knutson

#endif
