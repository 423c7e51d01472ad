#ifndef KNUTSON_HILBERT_HPP
#define KNUTSON_HILBERT_HPP

#include <string>
#include <vector>

#include "knutson/monomial_ideal.hpp"

namespace knutson {

// Graded invariants of S/I for a monomial ideal I in S = K[x1..xn],
// derived from the Hilbert series written as h(z) / (1-z)^dim with
// h(1) != 0:
//
//   h_vector       coefficients of h(z)
//   dim            Krull dimension of S/I   (-1 when S/I is the zero ring)
//   height         n - dim                  (n when S/I is the zero ring)
//   multiplicity   h(1)                     (0 when S/I is the zero ring)
//
// The invariants of an arbitrary ideal under a fixed term order coincide
// with those of its initial ideal, so this is also the engine behind the
// polynomial-ideal summaries.
struct HilbertSummary {
    bool unit = false; // S/I = 0
    std::vector<long long> h_vector;
    long long dim = 0;
    long long height = 0;
    long long multiplicity = 0;

    friend bool operator==(const HilbertSummary&, const HilbertSummary&) = default;
    std::string str() const;
};

// Numerator of the Hilbert series of S/I over the common denominator
// (1-z)^n, as a coefficient vector indexed by degree.  Computed by the
// standard generator-splitting recursion
//     HN(J + (m)) = HN(J) - z^deg(m) * HN(J : m)
// with a product shortcut when the generators are pairwise coprime.
std::vector<long long> hilbert_numerator(const MonomialIdeal& ideal);

HilbertSummary hilbert_summary(const MonomialIdeal& ideal);

long long binomial(long long n, long long k);

// Closed-form invariants of the t-minor ideal of a generic Hankel matrix
// whose entries span s + t - 1 variables (equivalently, a t x s Hankel
// matrix after normalizing the row count to t).  The quotient has a linear
// resolution, so
//     h_i = binom(s - t + i, i)   for i = 0..t-1,
//     e   = sum of the h_i        = binom(s, t - 1),
//     height = n - 2t + 2         in an ambient ring with n variables.
// Requires 1 <= t <= s.
std::vector<long long> hankel_minor_hvector(long long t, long long s);
long long hankel_minor_multiplicity(long long t, long long s);
long long hankel_minor_height(long long t, long long n);

// Which of the two studied sums of Hankel minor ideals an h-vector
// combination rule applies to.
enum class SumHVectorCase {
    p1_plus_p2, // I_t(P1) + I_t(P2): palindrome with the full partial sum once
    x_plus_q,   // I_t(X) + I_{t-1}(Q): palindrome with the next-to-full sum twice
};

// h-vector of the studied sums, rebuilt from the h-vector (h_0..h_{t-1})
// of the reference summand via its partial sums S_j = h_0 + ... + h_j:
//     p1_plus_p2 -> (S_0, ..., S_{t-1}, S_{t-2}, ..., S_0)
//     x_plus_q   -> (S_0, ..., S_{t-2}, S_{t-2}, ..., S_0)
// Both outputs are palindromic; x_plus_q with t = 1 yields the empty
// vector (the sum collapses to the unit ideal).
std::vector<long long> sum_hvector_from_parts(const std::vector<long long>& h,
                                              SumHVectorCase which);

} // namespace knutson

#endif
