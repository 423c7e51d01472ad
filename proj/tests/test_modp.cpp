// Reduction modulo p: integral forms, reduced ideals, the compatibility
// check on initial ideals, prime scans, and closure families over F_p.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knutson/hankel.hpp"
#include "knutson/modp.hpp"
#include "knutson/poly_io.hpp"

using knutson::Fp;
using knutson::HankelShape;
using knutson::Ideal;
using knutson::IntegralForm;
using knutson::MonomialIdeal;
using knutson::Monomial;
using knutson::Polynomial;
using knutson::Rational;
using knutson::TermOrder;
using knutson::TermOrderPtr;
using knutson::WitnessPolicy;

namespace {

Polynomial<Rational> parse(const std::string& s, std::size_t n,
                           TermOrderPtr ord = TermOrder::lex()) {
    return knutson::parse_polynomial(s, n, std::move(ord));
}

MonomialIdeal mono_ideal(std::size_t nvars, const std::vector<std::string>& gens,
                         const TermOrderPtr& ord) {
    std::vector<Monomial> ms;
    for (const auto& g : gens) ms.push_back(parse(g, nvars, ord).leading_monomial());
    return MonomialIdeal(nvars, std::move(ms));
}

} // namespace

TEST_CASE("primitive integer forms clear denominators and content") {
    // (1/2)x1 - x2: denominators have lcm 2, numerators gcd 1, so the
    // multiplier is 2 and the result is x1 - 2*x2.
    auto a = knutson::primitive_integral(parse("1/2*x1 - x2", 2));
    CHECK(a.poly.str() == "x1 - 2*x2");
    CHECK(a.multiplier == Rational(2));

    // Already primitive: unchanged.
    auto b = knutson::primitive_integral(parse("x1*x3 - x2^2", 3));
    CHECK(b.poly.str() == "x1*x3 - x2^2");
    CHECK(b.multiplier == Rational(1));

    // (2/4)x1 is (1/2)x1 in lowest terms; clearing gives x1.
    auto c = knutson::primitive_integral(parse("2/4*x1", 2));
    CHECK(c.poly.str() == "x1");
    CHECK(c.multiplier == Rational(2));

    // Integer content is removed: 2x1 - 4x2 halves to x1 - 2*x2.
    auto d = knutson::primitive_integral(parse("2*x1 - 4*x2", 2));
    CHECK(d.poly.str() == "x1 - 2*x2");
    CHECK(d.multiplier == Rational(1, 2));

    // Mixed case: (2/3)x1 + (4/3)x2 times 3/2 is x1 + 2*x2.
    auto e = knutson::primitive_integral(parse("2/3*x1 + 4/3*x2", 2));
    CHECK(e.poly.str() == "x1 + 2*x2");
    CHECK(e.multiplier == Rational(3, 2));

    // The multiplier is always positive, so signs survive.
    auto f = knutson::primitive_integral(parse("-x1", 1));
    CHECK(f.poly.str() == "-x1");
    CHECK(f.multiplier == Rational(1));

    CHECK_THROWS_AS(knutson::primitive_integral(Polynomial<Rational>(2, TermOrder::lex())),
                    knutson::ZeroPolynomial);
}

TEST_CASE("integral form of an ideal") {
    auto lex = TermOrder::lex();
    Ideal<Rational> ideal(2, lex, {parse("1/2*x1 - x2", 2), parse("2/4*x1", 2)});
    IntegralForm form = knutson::integral_form(ideal);

    REQUIRE(form.generators.size() == 2);
    CHECK(form.generators[0].str() == "x1 - 2*x2");
    CHECK(form.generators[1].str() == "x1");
    CHECK(form.multipliers == std::vector<Rational>{Rational(2), Rational(2)});
    CHECK(form.nvars == 2);

    // Scaling generators by nonzero rationals does not change the ideal.
    Ideal<Rational> rebuilt(form.nvars, form.ord, form.generators);
    CHECK(knutson::ideal_equal(ideal, rebuilt));
}

TEST_CASE("reducing an ideal drops vanishing generators") {
    auto lex = TermOrder::lex();

    IntegralForm form = knutson::integral_form(
        Ideal<Rational>(2, lex, {parse("x1 - 2*x2", 2)}));
    auto at2 = knutson::reduce_ideal(form, 2);
    REQUIRE(at2.generators().size() == 1);
    CHECK(at2.generators()[0].str() == "x1");
    auto at5 = knutson::reduce_ideal(form, 5);
    REQUIRE(at5.generators().size() == 1);
    CHECK(at5.generators()[0].str() == "x1 + 3*x2"); // -2 is 3 mod 5

    IntegralForm hankel = knutson::integral_form(
        Ideal<Rational>(3, lex, {parse("x1*x3 - x2^2", 3)}));
    CHECK(knutson::reduce_ideal(hankel, 5).generators()[0].str() ==
          "x1*x3 + 4*x2^2");

    // A hand-built form that is not content-normalized can die entirely.
    IntegralForm raw;
    raw.nvars = 2;
    raw.ord = lex;
    raw.generators = {parse("3*x1", 2)};
    raw.multipliers = {Rational(1)};
    CHECK_THROWS_AS(knutson::reduce_ideal(raw, 3), knutson::ZeroReduction);

    raw.generators.push_back(parse("x2", 2));
    raw.multipliers.push_back(Rational(1));
    auto survived = knutson::reduce_ideal(raw, 3);
    REQUIRE(survived.generators().size() == 1);
    CHECK(survived.generators()[0].str() == "x2");

    // The zero ideal reduces to the zero ideal.
    IntegralForm empty = knutson::integral_form(Ideal<Rational>::zero(2, lex));
    CHECK(knutson::reduce_ideal(empty, 3).has_no_generators());
}

TEST_CASE("coefficientwise reduction is a ring homomorphism") {
    auto f = parse("x1 + 2*x2", 2);
    auto g = parse("3*x1 - x2", 2);
    auto r = [](const Polynomial<Rational>& h) {
        return knutson::reduce_poly_mod_p(h, 7);
    };
    CHECK(r(f * g) == r(f) * r(g));
    CHECK(r(f + g) == r(f) + r(g));
    CHECK(r(f - g) == r(f) - r(g));

    // Denominators coprime to p reduce through the inverse: 1/2 is 3 mod 5.
    CHECK(knutson::reduce_poly_mod_p(parse("1/2*x1", 2), 5).str() == "3*x1");
}

TEST_CASE("initial-ideal comparison at one prime") {
    auto lex = TermOrder::lex();
    Ideal<Rational> ideal(2, lex, {parse("2*x1 - x2", 2)});

    // Over the rationals the reduced basis is x1 - (1/2)x2 with leading
    // monomial x1.  Mod 2 the generator collapses to -x2, so the two
    // initial ideals differ and 2 is flagged.
    auto bad = knutson::compare_initials(ideal, 2, lex);
    CHECK(bad.p == 2);
    CHECK_FALSE(bad.match);
    CHECK_FALSE(bad.good);
    CHECK_FALSE(bad.reason.empty());
    CHECK(bad.reduction_of_lt == mono_ideal(2, {"x1"}, lex));
    CHECK(bad.lt_of_reduction == mono_ideal(2, {"x2"}, lex));

    auto good = knutson::compare_initials(ideal, 5, lex);
    CHECK(good.match);
    CHECK(good.good);
    CHECK(good.reason.empty());
    CHECK(good.lt_of_reduction == good.reduction_of_lt);

    // A non-prime modulus is recorded as a bad report, not thrown.
    auto four = knutson::compare_initials(ideal, 4, lex);
    CHECK_FALSE(four.good);
    CHECK_FALSE(four.match);
    CHECK(four.reason.find("prime") != std::string::npos);
    CHECK(four.lt_of_reduction.is_zero());

    // The 2x2 generic Hankel determinant has coefficients +1 and -1, so
    // every prime is compatible.
    auto det = knutson::minor_ideal(HankelShape{2, 1, 3}, 2, 3, lex);
    CHECK(knutson::compare_initials(det, 101, lex).match);
}

TEST_CASE("prime scans localize failures per prime") {
    auto lex = TermOrder::lex();
    Ideal<Rational> ideal(2, lex, {parse("2*x1 - x2", 2)});

    auto reports = knutson::prime_scan(ideal, {2, 3, 5, 7}, lex);
    REQUIRE(reports.size() == 4);
    CHECK_FALSE(reports[0].match);
    for (std::size_t i = 1; i < reports.size(); ++i) {
        CAPTURE(reports[i].p);
        CHECK(reports[i].match);
    }

    // All primes up to 50: exactly 2 is flagged, and everything above the
    // largest flagged prime matches.
    std::vector<std::uint64_t> primes = {2,  3,  5,  7,  11, 13, 17, 19,
                                         23, 29, 31, 37, 41, 43, 47};
    auto scan = knutson::prime_scan(ideal, primes, lex);
    REQUIRE(scan.size() == primes.size());
    std::vector<std::uint64_t> flagged;
    for (std::size_t i = 0; i < scan.size(); ++i) {
        CHECK(scan[i].p == primes[i]); // reports come back in input order
        if (!scan[i].match) flagged.push_back(scan[i].p);
    }
    CHECK(flagged == std::vector<std::uint64_t>{2});

    CHECK(knutson::prime_scan(ideal, {}, lex).empty());
}

TEST_CASE("closure families persist modulo a good prime") {
    auto lex = TermOrder::lex();

    // The 3x3 catalecticant seed: over the rationals the family has 8
    // members; over F_101 the reduced seed generates a family of the same
    // size, and every member keeps a squarefree initial ideal.
    auto seed = knutson::seed_polynomial(HankelShape{2, 1, 3}, 3, lex);
    WitnessPolicy<Rational> policy;
    policy.user_supplied = {parse("x1*x3 - x2^2", 3)};
    auto over_q = knutson::knutson_closure(seed, lex, policy);
    auto mod101 = knutson::knutson_family_mod_p(seed, 101, policy);
    CHECK(over_q.size() == 8);
    CHECK(mod101.size() == over_q.size());
    CHECK(knutson::certify_family(mod101).ok());

    // Monomial seeds are insensitive to the characteristic.
    auto mod3 = knutson::knutson_family_mod_p(parse("x1*x2", 2), 3,
                                              WitnessPolicy<Rational>{});
    CHECK(mod3.size() == 5);

    // Content is cleared before reducing, so a seed like 2*x1*x2 survives
    // even at p = 2.
    auto mod2 = knutson::knutson_family_mod_p(parse("2*x1*x2", 2), 2,
                                              WitnessPolicy<Rational>{});
    CHECK(mod2.size() == 5);
    CHECK(mod2.seed().str() == "x1*x2");
}
