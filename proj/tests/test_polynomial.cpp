// Monomials, term orders, sparse polynomials, and the text parser.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "knutson/poly_io.hpp"
#include "knutson/polynomial.hpp"

using knutson::AmbientMismatch;
using knutson::Error;
using knutson::Fp;
using knutson::Monomial;
using knutson::ParseError;
using knutson::Polynomial;
using knutson::Rational;
using knutson::TermOrder;
using knutson::ZeroPolynomial;

namespace {
Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

Polynomial<Rational> parse(const std::string& s, std::size_t n,
                           knutson::TermOrderPtr ord = TermOrder::lex()) {
    return knutson::parse_polynomial(s, n, std::move(ord));
}
} // namespace

TEST_CASE("monomial arithmetic") {
    Monomial a = mono({1, 0, 2}); // x1*x3^2
    Monomial b = mono({0, 3, 1}); // x2^3*x3

    CHECK(a.degree() == 3);
    CHECK((a * b) == mono({1, 3, 3}));
    CHECK(Monomial::lcm(a, b) == mono({1, 3, 2}));
    CHECK(Monomial::gcd(a, b) == mono({0, 0, 1}));
    CHECK(!Monomial::coprime(a, b));
    CHECK(Monomial::coprime(mono({1, 0, 0}), mono({0, 2, 0})));

    CHECK(mono({0, 1, 1}).divides(a * b));
    CHECK(!a.divides(b));
    CHECK((a * b).divide(b) == a);
    CHECK_THROWS_AS(a.divide(b), Error);

    CHECK(mono({1, 1, 0}).is_squarefree());
    CHECK(!a.is_squarefree());
    CHECK(Monomial::one(3).is_one());
    CHECK(a.support() == std::vector<std::size_t>{0, 2});

    CHECK(a.str() == "x1*x3^2");
    CHECK(Monomial::one(3).str() == "1");

    // Ambient checks.
    CHECK_THROWS_AS(a * Monomial::one(2), AmbientMismatch);

    // Slot surgery used by the elimination ring.
    CHECK(a.extended(0) == mono({0, 1, 0, 2}));
    CHECK(mono({0, 1, 0, 2}).restricted(0) == a);
    CHECK_THROWS_AS(mono({1, 1}).restricted(0), Error);
}

TEST_CASE("lex order") {
    auto lex = TermOrder::lex();
    // x1 beats any power of a later variable.
    CHECK(lex->greater(mono({1, 0}), mono({0, 5})));
    CHECK(lex->less(mono({0, 2, 7}), mono({0, 3, 0})));
    CHECK(lex->compare(mono({1, 2}), mono({1, 2})) == 0);
}

TEST_CASE("grevlex order") {
    auto g = TermOrder::grevlex();
    // Degree decides first.
    CHECK(g->greater(mono({0, 0, 3}), mono({1, 1, 0})));
    // Equal degree: smaller exponent at the last differing position wins,
    // so x2^2 > x1*x3.
    CHECK(g->greater(mono({0, 2, 0}), mono({1, 0, 1})));
    CHECK(g->greater(mono({1, 1, 0}), mono({1, 0, 1})));
    CHECK(g->compare(mono({2, 1, 0}), mono({2, 1, 0})) == 0);
}

TEST_CASE("matrix orders") {
    // Identity matrix reproduces lex.
    auto m_lex = TermOrder::matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    // Degree row + reversed negated columns reproduces grevlex.
    auto m_grevlex = TermOrder::matrix({{1, 1, 1}, {0, 0, -1}, {0, -1, 0}});

    std::mt19937_64 rng(987654);
    std::uniform_int_distribution<std::uint32_t> e(0, 6);
    for (int round = 0; round < 300; ++round) {
        Monomial a = mono({e(rng), e(rng), e(rng)});
        Monomial b = mono({e(rng), e(rng), e(rng)});
        CHECK(m_lex->compare(a, b) == TermOrder::lex()->compare(a, b));
        CHECK(m_grevlex->compare(a, b) == TermOrder::grevlex()->compare(a, b));
    }

    // Width is part of the order: 3-column matrix cannot compare pairs.
    CHECK_THROWS_AS(m_lex->compare(mono({1, 0}), mono({0, 1})), AmbientMismatch);

    // Rejected matrices: rank deficient, or a column whose first nonzero
    // entry is negative (x2 would be smaller than 1).
    CHECK_THROWS_AS(TermOrder::matrix({{1, 1}, {2, 2}}), Error);
    CHECK_THROWS_AS(TermOrder::matrix({{1, -1}}), Error);
    CHECK_THROWS_AS(TermOrder::matrix({{1, 0}, {0, -1}}), Error);
    CHECK_NOTHROW(TermOrder::matrix({{1, 1}, {0, -1}}));
}

TEST_CASE("block orders eliminate leading variables") {
    // Variable 1 dominates: any monomial containing it beats any that does
    // not, regardless of degrees.
    auto elim = knutson::elimination_first_variable(TermOrder::grevlex());
    CHECK(elim->greater(mono({1, 0, 0}), mono({0, 9, 9})));
    // Ties on the first variable fall through to grevlex on the rest.
    CHECK(elim->greater(mono({1, 0, 2}), mono({1, 1, 0})));
    CHECK(elim->compare(mono({2, 1, 1}), mono({2, 1, 1})) == 0);
    CHECK(elim->key() == "block(1;lex;grevlex)");
    CHECK(*TermOrder::from_key(elim->key()) == *elim);
}

TEST_CASE("term order keys round-trip") {
    for (const auto& key :
         {std::string("lex"), std::string("grevlex"),
          std::string("matrix[1,1,1;0,0,-1;0,-1,0]"),
          std::string("block(2;grevlex;block(1;lex;lex))")}) {
        CHECK(TermOrder::from_key(key)->key() == key);
    }
    CHECK_THROWS_AS(TermOrder::from_key("weird"), Error);
}

TEST_CASE("polynomial arithmetic and printing") {
    auto lex = TermOrder::lex();
    auto f = parse("x1*x3 - x2^2", 3);
    CHECK(f.str() == "x1*x3 - x2^2");
    CHECK(f.leading_monomial() == mono({1, 0, 1}));
    CHECK(f.leading_coeff() == Rational(1));
    CHECK(f.total_degree() == 2);

    // (x1 + x2)^2 = x1^2 + 2 x1 x2 + x2^2
    auto s = parse("x1 + x2", 2);
    CHECK((s * s).str() == "x1^2 + 2*x1*x2 + x2^2");
    CHECK((s * s) == parse("x1^2 + 2*x1*x2 + x2^2", 2));
    CHECK(parse("(x1 + x2)^2", 2) == s * s);

    // Cancellation to zero.
    CHECK((f - f).is_zero());
    CHECK_THROWS_AS((f - f).leading(), ZeroPolynomial);

    // Rational coefficients stay exact.
    auto g = parse("1/2*x1 + 1/3", 1);
    CHECK((g + g).str() == "x1 + 2/3");

    // Zero polynomial prints as 0.
    CHECK(Polynomial<Rational>(2, lex).str() == "0");
    CHECK(parse("0", 2).is_zero());

    // times_term keeps ordering intact.
    CHECK(f.times_term(Rational(2), mono({0, 1, 0})).str() == "2*x1*x2*x3 - 2*x2^3");
}

TEST_CASE("polynomials under different orders") {
    auto f_lex = parse("x2^2 + x1*x3", 3, TermOrder::lex());
    CHECK(f_lex.str() == "x1*x3 + x2^2"); // lex: x1*x3 first
    auto f_grev = f_lex.with_order(TermOrder::grevlex());
    CHECK(f_grev.str() == "x2^2 + x1*x3"); // grevlex: x2^2 first
    CHECK(f_lex == f_grev);                // same polynomial, different view

    // Mixed-order arithmetic is an ambient error.
    CHECK_THROWS_AS(f_lex + f_grev, AmbientMismatch);
    CHECK_THROWS_AS(f_lex + parse("x1", 2), AmbientMismatch);
}

TEST_CASE("ring axioms on random polynomials") {
    auto lex = TermOrder::lex();
    std::mt19937_64 rng(20240819);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<std::uint32_t> e(0, 3);
    std::uniform_int_distribution<int> nterms(0, 4);

    auto random_poly = [&] {
        std::vector<knutson::Term<Rational>> ts;
        int k = nterms(rng);
        for (int i = 0; i < k; ++i) {
            ts.push_back({Rational(coeff(rng)), mono({e(rng), e(rng)})});
        }
        return Polynomial<Rational>::from_terms(2, lex, std::move(ts));
    };

    for (int round = 0; round < 150; ++round) {
        auto f = random_poly(), g = random_poly(), h = random_poly();
        CHECK(f + g == g + f);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f - f).is_zero());
    }
}

TEST_CASE("exact division") {
    // (x1^2 - x2^2) / (x1 - x2) = x1 + x2
    auto q = knutson::divide_exact(parse("x1^2 - x2^2", 2), parse("x1 - x2", 2));
    CHECK(q == parse("x1 + x2", 2));
    // 0 / f = 0.
    CHECK(knutson::divide_exact(parse("0", 2), parse("x1", 2)).is_zero());
    // Non-members are a hard error, not a remainder.
    CHECK_THROWS_AS(knutson::divide_exact(parse("x1 + 1", 2), parse("x2", 2)), Error);
    CHECK_THROWS_AS(knutson::divide_exact(parse("x1", 2), parse("0", 2)), ZeroPolynomial);
}

TEST_CASE("scaling normalization") {
    // Over Q: clear denominators, divide by content, leading coeff > 0.
    auto f = parse("1/2*x1 + 1/3*x2", 2);
    knutson::normalize_scale(f);
    CHECK(f.str() == "3*x1 + 2*x2");
    auto g = parse("-2*x1 - 4*x2", 2);
    knutson::normalize_scale(g);
    CHECK(g.str() == "x1 + 2*x2");

    // Over F_p: monic.
    auto h = knutson::reduce_poly_mod_p(parse("2*x1 + 3*x2", 2), 5);
    knutson::normalize_scale(h);
    CHECK(h.leading_coeff() == Fp(1, 5));
    CHECK(h.str() == "x1 + 4*x2"); // 3 * inv(2) = 3*3 = 9 = 4 (mod 5)
}

TEST_CASE("reduction of polynomials mod p") {
    // Coefficients divisible by p vanish: x1 + 5*x2 -> x1 over F_5.
    auto f = knutson::reduce_poly_mod_p(parse("x1 + 5*x2", 2), 5);
    CHECK(f.terms().size() == 1);
    CHECK(f.leading_monomial() == mono({1, 0}));
    // 2*x1 - x2 over F_2 loses its first term entirely.
    auto g = knutson::reduce_poly_mod_p(parse("2*x1 - x2", 2), 2);
    CHECK(g.str() == "x2");
    // Entire polynomial may vanish; the caller decides if that is an error.
    CHECK(knutson::reduce_poly_mod_p(parse("7*x1", 2), 7).is_zero());
    CHECK_THROWS_AS(knutson::reduce_poly_mod_p(parse("1/2*x1", 2), 2), knutson::BadPrime);
}

TEST_CASE("parser rejects malformed input with 1-based offsets") {
    auto offset_of = [&](const std::string& text) {
        try {
            parse(text, 3);
        } catch (const ParseError& e) {
            return e.offset;
        }
        return std::size_t{0};
    };
    // Stray ')' after a complete polynomial.
    CHECK(offset_of("x1*x3-x2^2)") == 11);
    // Implicit multiplication is not part of the grammar.
    CHECK(offset_of("2x1") == 2);
    // Unknown identifiers and out-of-range variables point at their start.
    CHECK(offset_of("x1 + y2") == 6);
    CHECK(offset_of("x4 + x1") == 1);
    CHECK(offset_of("x0") == 1);
    // Dangling operator.
    CHECK(offset_of("x1 + ") == 6);
    CHECK(offset_of("") == 1);
    CHECK(offset_of("1/0") == 3);
    CHECK(offset_of("(x1") == 4);

    // Generator lists report offsets into the complete input.
    try {
        knutson::parse_polynomial_list("x1; x2)", 3, TermOrder::lex());
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.offset == 7);
    }
    CHECK(knutson::parse_polynomial_list("x1;x2;x1*x3-x2^2", 3, TermOrder::lex()).size() == 3);
}
