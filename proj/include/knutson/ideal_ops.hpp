#ifndef KNUTSON_IDEAL_OPS_HPP
#define KNUTSON_IDEAL_OPS_HPP

#include <vector>

#include "knutson/groebner.hpp"
#include "knutson/hilbert.hpp"

namespace knutson {

namespace detail {
template <class K>
void require_same_ring(const Ideal<K>& a, const Ideal<K>& b) {
    if (a.nvars() != b.nvars()) {
        throw AmbientMismatch("ideals in " + std::to_string(a.nvars()) + " and " +
                              std::to_string(b.nvars()) + " variables");
    }
    if (!(*a.order() == *b.order())) {
        throw AmbientMismatch("ideals stored under orders " + a.order()->key() +
                              " and " + b.order()->key());
    }
}
} // namespace detail

template <class K>
Ideal<K> ideal_sum(const Ideal<K>& a, const Ideal<K>& b) {
    detail::require_same_ring(a, b);
    std::vector<Polynomial<K>> gens = a.generators();
    for (const auto& f : b.generators()) {
        bool dup = false;
        for (const auto& g : gens) {
            if (f == g) {
                dup = true;
                break;
            }
        }
        if (!dup) gens.push_back(f);
    }
    return Ideal<K>(a.nvars(), a.order(), std::move(gens));
}

// Intersection by elimination: in K[t, x1..xn], with t the extra leading
// variable under an order that eliminates it,
//     I cap J = ( t*I + (1-t)*J ) cap K[x1..xn],
// and the t-free part of the reduced elimination basis is exactly the
// reduced basis of the intersection under the inner order, which the
// result adopts into its cache.
template <class K>
Ideal<K> ideal_intersect(const Ideal<K>& a, const Ideal<K>& b) {
    detail::require_same_ring(a, b);
    std::size_t n = a.nvars();
    TermOrderPtr inner = a.order();
    if (a.has_no_generators() || b.has_no_generators()) {
        return Ideal<K>::zero(n, inner);
    }

    TermOrderPtr elim = elimination_first_variable(inner);
    K one = coeff_one_like(a.generators()[0].leading_coeff());
    Polynomial<K> t =
        Polynomial<K>::monomial(n + 1, elim, one, Monomial::variable(n + 1, 0));
    Polynomial<K> one_minus_t =
        Polynomial<K>::constant(n + 1, elim, one) - t;

    std::vector<Polynomial<K>> gens;
    gens.reserve(a.generators().size() + b.generators().size());
    for (const auto& f : a.generators()) gens.push_back(t * f.extended(0, elim));
    for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.extended(0, elim));

    ReducedGB<K> egb = buchberger(n + 1, elim, gens);
    std::vector<Polynomial<K>> contraction;
    for (const auto& f : egb.basis) {
        bool t_free = true;
        for (const auto& term : f.terms()) {
            if (term.mono.exponent(0) != 0) {
                t_free = false;
                break;
            }
        }
        if (t_free) contraction.push_back(f.restricted(0, inner));
    }

    Ideal<K> result(n, inner, contraction);
    ReducedGB<K> rgb;
    rgb.nvars = n;
    rgb.ord = inner;
    rgb.basis = std::move(contraction);
    result.adopt_groebner(std::move(rgb));
    return result;
}

// Ideal quotient through the principal case:
//     I : (f) = (1/f) * ( I cap (f) ),
// every generator of I cap (f) being exactly divisible by f, and
//     I : J = intersection over the generators f of J of I : (f).
// The divisor must be a nonzero ideal.
template <class K>
Ideal<K> ideal_colon(const Ideal<K>& a, const Ideal<K>& b) {
    detail::require_same_ring(a, b);
    if (b.has_no_generators()) throw ZeroIdeal("colon divisor");

    bool have = false;
    Ideal<K> acc = Ideal<K>::zero(a.nvars(), a.order());
    for (const auto& f : b.generators()) {
        Ideal<K> meet = ideal_intersect(a, Ideal<K>::principal(f));
        std::vector<Polynomial<K>> quotients;
        quotients.reserve(meet.generators().size());
        for (const auto& g : meet.generators()) quotients.push_back(divide_exact(g, f));
        Ideal<K> part(a.nvars(), a.order(), std::move(quotients));
        acc = have ? ideal_intersect(acc, part) : std::move(part);
        have = true;
    }
    return acc;
}

// Colon by a single nonzero polynomial (the witness form used throughout
// the closure engine).
template <class K>
Ideal<K> ideal_colon(const Ideal<K>& a, const Polynomial<K>& witness) {
    if (witness.is_zero()) throw ZeroWitness();
    return ideal_colon(a, Ideal<K>::principal(witness));
}

// Graded invariants of S/I read off the initial ideal under `ord`.
template <class K>
HilbertSummary ideal_hilbert(const Ideal<K>& ideal, const TermOrderPtr& ord) {
    return hilbert_summary(initial_ideal(ideal, ord));
}
template <class K>
HilbertSummary ideal_hilbert(const Ideal<K>& ideal) {
    return ideal_hilbert(ideal, ideal.order());
}

} // namespace knutson

#endif
