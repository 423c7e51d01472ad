#ifndef KNUTSON_MODP_HPP
#define KNUTSON_MODP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "knutson/fields.hpp"
#include "knutson/knutson_family.hpp"

namespace knutson {

// A polynomial rewritten with integer coefficients and content 1:
//     poly = multiplier * input,
// where the multiplier is the positive rational lcm(denominators) /
// gcd(numerators) of the coefficients in lowest terms.  Signs are
// preserved.  Throws ZeroPolynomial on zero input.
struct PrimitivePoly {
    Polynomial<Rational> poly;
    Rational multiplier;
};

PrimitivePoly primitive_integral(const Polynomial<Rational>& f);

// A rational-coefficient ideal rewritten with primitive integer generators
// (denominators cleared, content removed).  It generates the same ideal
// over the rationals; generators[i] = multipliers[i] * (input generator i).
struct IntegralForm {
    std::size_t nvars = 0;
    TermOrderPtr ord;
    std::vector<Polynomial<Rational>> generators;
    std::vector<Rational> multipliers;
};

IntegralForm integral_form(const Ideal<Rational>& ideal);

// I(p): coefficientwise reduction of the stored generators, exactly as
// given (no re-normalization).  Generators that vanish entirely are
// dropped; if there were generators and every one vanished, throws
// ZeroReduction.  The zero ideal reduces to the zero ideal.
Ideal<Fp> reduce_ideal(const IntegralForm& form, std::uint64_t p);

// Outcome of the compatibility check  lt(I(p)) = lt(I)(p)  at one prime:
// the initial ideal of the reduction must equal the initial ideal computed
// over the rationals (a monomial ideal is unchanged by reduction).  `good`
// holds exactly when the reduction ran and the two sides agree; `reason`
// says what failed or differed otherwise.
struct ReductionReport {
    std::uint64_t p = 0;
    bool good = false;
    std::string reason;
    MonomialIdeal lt_of_reduction = MonomialIdeal::zero(0); // lt(I(p)); zero ideal if the reduction failed
    MonomialIdeal reduction_of_lt = MonomialIdeal::zero(0); // lt(I)(p), i.e. lt(I) itself
    bool match = false; // the two monomial ideals are identical
};

ReductionReport compare_initials(const Ideal<Rational>& ideal, std::uint64_t p,
                                 const TermOrderPtr& ord);

// One report per entry of `primes`, in input order.  Per-prime failures
// (bad primes, zero reductions) are recorded in the reports, never thrown.
// The per-prime reductions are independent and run concurrently; the
// rational-side basis is computed once, up front.
std::vector<ReductionReport> prime_scan(const Ideal<Rational>& ideal,
                                        const std::vector<std::uint64_t>& primes,
                                        const TermOrderPtr& ord);

// The closure family of the reduced seed over F_p, computed by the same
// engine under the seed's own term order.  The seed and the user-supplied
// witnesses are cleared to primitive integer form before reduction; user
// witnesses whose reduction vanishes are dropped.  Member-generator and
// single-variable witness settings carry over unchanged.
KnutsonFamily<Fp> knutson_family_mod_p(const Polynomial<Rational>& seed,
                                       std::uint64_t p,
                                       const WitnessPolicy<Rational>& policy,
                                       const ClosureCaps& caps = {});

} // namespace knutson

#endif
