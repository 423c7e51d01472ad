#include "knutson/modp.hpp"

#include <gmpxx.h>

#include <thread>
#include <utility>

namespace knutson {

PrimitivePoly primitive_integral(const Polynomial<Rational>& f) {
    if (f.is_zero()) throw ZeroPolynomial("integral form");

    // With every coefficient in lowest terms, the content of f is
    // gcd(numerators) / lcm(denominators); dividing by it clears the
    // denominators and removes the integer content in one step.
    mpz_class den_lcm = 1;
    mpz_class num_gcd = 0;
    for (const auto& t : f.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                t.coeff.denominator().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
                t.coeff.numerator().get_mpz_t());
    }

    PrimitivePoly out{f, Rational::from_mpz(den_lcm, num_gcd)};
    out.poly = f.times_term(out.multiplier, Monomial::one(f.nvars()));
    return out;
}

IntegralForm integral_form(const Ideal<Rational>& ideal) {
    IntegralForm form;
    form.nvars = ideal.nvars();
    form.ord = ideal.order();
    for (const auto& g : ideal.generators()) {
        PrimitivePoly pp = primitive_integral(g);
        form.generators.push_back(std::move(pp.poly));
        form.multipliers.push_back(std::move(pp.multiplier));
    }
    return form;
}

Ideal<Fp> reduce_ideal(const IntegralForm& form, std::uint64_t p) {
    check_prime_modulus(p);
    std::vector<Polynomial<Fp>> gens;
    gens.reserve(form.generators.size());
    for (const auto& g : form.generators) {
        Polynomial<Fp> r = reduce_poly_mod_p(g, p);
        if (!r.is_zero()) gens.push_back(std::move(r));
    }
    if (gens.empty() && !form.generators.empty()) throw ZeroReduction(p);
    return Ideal<Fp>(form.nvars, form.ord, std::move(gens));
}

namespace {

ReductionReport compare_one(const MonomialIdeal& over_q, const IntegralForm& form,
                            std::uint64_t p, const TermOrderPtr& ord) {
    ReductionReport rep;
    rep.p = p;
    rep.reduction_of_lt = over_q;
    rep.lt_of_reduction = MonomialIdeal::zero(over_q.nvars());
    try {
        Ideal<Fp> reduced = reduce_ideal(form, p);
        rep.lt_of_reduction = initial_ideal(reduced, ord);
        rep.match = (rep.lt_of_reduction == rep.reduction_of_lt);
        rep.good = rep.match;
        if (!rep.match) rep.reason = "initial ideals differ after reduction";
    } catch (const Error& e) {
        rep.good = false;
        rep.match = false;
        rep.reason = e.what();
    }
    return rep;
}

} // namespace

ReductionReport compare_initials(const Ideal<Rational>& ideal, std::uint64_t p,
                                 const TermOrderPtr& ord) {
    return compare_one(initial_ideal(ideal, ord), integral_form(ideal), p, ord);
}

std::vector<ReductionReport> prime_scan(const Ideal<Rational>& ideal,
                                        const std::vector<std::uint64_t>& primes,
                                        const TermOrderPtr& ord) {
    std::vector<ReductionReport> out(primes.size());
    if (primes.empty()) return out;

    // Shared read-only inputs: the rational-side initial ideal is computed
    // once, and the integral form is plain immutable data.  Each worker
    // handles a fixed stride of slots, so the merge is by construction in
    // input order and deterministic.
    MonomialIdeal over_q = initial_ideal(ideal, ord);
    IntegralForm form = integral_form(ideal);

    std::size_t workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (workers > primes.size()) workers = primes.size();

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t k = 0; k < workers; ++k) {
        pool.emplace_back([&, k] {
            for (std::size_t i = k; i < primes.size(); i += workers) {
                out[i] = compare_one(over_q, form, primes[i], ord);
            }
        });
    }
    for (auto& worker : pool) worker.join();
    return out;
}

KnutsonFamily<Fp> knutson_family_mod_p(const Polynomial<Rational>& seed,
                                       std::uint64_t p,
                                       const WitnessPolicy<Rational>& policy,
                                       const ClosureCaps& caps) {
    check_prime_modulus(p);
    Polynomial<Fp> seed_p = reduce_poly_mod_p(primitive_integral(seed).poly, p);
    if (seed_p.is_zero()) throw ZeroReduction(p); // unreachable for primitive forms

    WitnessPolicy<Fp> policy_p;
    policy_p.member_generators = policy.member_generators;
    policy_p.single_variables = policy.single_variables;
    for (const auto& w : policy.user_supplied) {
        if (w.is_zero()) continue;
        Polynomial<Fp> wp = reduce_poly_mod_p(primitive_integral(w).poly, p);
        if (!wp.is_zero()) policy_p.user_supplied.push_back(std::move(wp));
    }

    return knutson_closure(std::move(seed_p), seed.order(), policy_p, caps);
}

} // namespace knutson
