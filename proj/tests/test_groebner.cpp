// Buchberger engine: S-polynomials, normal forms, reduced bases, caching,
// membership, and the union-basis check.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "knutson/groebner.hpp"
#include "knutson/poly_io.hpp"

using knutson::Fp;
using knutson::Ideal;
using knutson::Monomial;
using knutson::Polynomial;
using knutson::Rational;
using knutson::ReducedGB;
using knutson::TermOrder;
using knutson::TermOrderPtr;

namespace {

Polynomial<Rational> parse(const std::string& s, std::size_t n,
                           TermOrderPtr ord = TermOrder::lex()) {
    return knutson::parse_polynomial(s, n, std::move(ord));
}

Ideal<Rational> make_ideal(std::vector<std::string> gens, std::size_t n,
                           TermOrderPtr ord = TermOrder::lex()) {
    std::vector<Polynomial<Rational>> ps;
    for (const auto& s : gens) ps.push_back(parse(s, n, ord));
    return Ideal<Rational>(n, ord, std::move(ps));
}

// Structural reducedness: monic, leading monomials an antichain sorted
// ascending, and no term of any element divisible by another's lead.
template <class K>
bool looks_reduced(const ReducedGB<K>& gb) {
    for (std::size_t i = 0; i < gb.basis.size(); ++i) {
        if (!gb.basis[i].leading_coeff().is_one()) return false;
        if (i + 1 < gb.basis.size() &&
            !gb.ord->less(gb.basis[i].leading_monomial(),
                          gb.basis[i + 1].leading_monomial())) {
            return false;
        }
        for (std::size_t j = 0; j < gb.basis.size(); ++j) {
            if (i == j) continue;
            for (const auto& term : gb.basis[i].terms()) {
                if (gb.basis[j].leading_monomial().divides(term.mono)) return false;
            }
        }
    }
    return true;
}

} // namespace

TEST_CASE("s-polynomial cancels leading terms") {
    // f = x1*x3 - x2^2, g = x2; lcm = x1*x2*x3 and
    // S = x2*f - x1*x3*g = -x2^3.
    auto s = knutson::s_polynomial(parse("x1*x3 - x2^2", 3), parse("x2", 3));
    CHECK(s == parse("-x2^3", 3));
    CHECK_THROWS_AS(knutson::s_polynomial(parse("0", 3), parse("x2", 3)),
                    knutson::ZeroPolynomial);
}

TEST_CASE("normal form reduces highest reducible term first") {
    // x1*x3 reduces by x1*x3 - x2^2 to x2^2, which is irreducible.
    std::vector<Polynomial<Rational>> basis{parse("x1*x3 - x2^2", 3)};
    CHECK(knutson::normal_form(parse("x1*x3", 3), basis) == parse("x2^2", 3));
    // Irreducible polynomials pass through.
    CHECK(knutson::normal_form(parse("x2 + 1", 3), basis) == parse("x2 + 1", 3));
    // Members reduce to zero even when several steps are needed.
    std::vector<Polynomial<Rational>> two{parse("x1*x3 - x2^2", 3), parse("x1", 3)};
    CHECK(knutson::normal_form(parse("x1^2*x3", 3), two).is_zero());
}

TEST_CASE("reduced basis of the running example") {
    // (x1*x3 - x2^2, x2): the S-polynomial contributes nothing new after
    // reduction, and interreduction leaves {x2, x1*x3}.
    auto ideal = make_ideal({"x1*x3 - x2^2", "x2"}, 3);
    const auto& gb = ideal.groebner();
    REQUIRE(gb.basis.size() == 2);
    CHECK(gb.basis[0] == parse("x2", 3));
    CHECK(gb.basis[1] == parse("x1*x3", 3));
    CHECK(looks_reduced(gb));
    CHECK(gb.initial().str() == "(x2, x1*x3)");
    CHECK(gb.key() == "3|lex|x2;x1*x3");
}

TEST_CASE("a basis that is already reduced comes back unchanged") {
    // The three 2x2 minors of the 2x3 matrix with rows (x1,x2,x3),
    // (x2,x3,x4): every S-polynomial reduces to zero under lex.
    auto ideal = make_ideal({"x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"}, 4);
    const auto& gb = ideal.groebner();
    REQUIRE(gb.basis.size() == 3);
    CHECK(gb.basis[0] == parse("x2*x4 - x3^2", 4));
    CHECK(gb.basis[1] == parse("x1*x4 - x2*x3", 4));
    CHECK(gb.basis[2] == parse("x1*x3 - x2^2", 4));
    CHECK(looks_reduced(gb));
    CHECK(gb.initial().str() == "(x1*x3, x1*x4, x2*x4)");
    CHECK(gb.initial().is_squarefree());
}

TEST_CASE("interreduction rewrites tails") {
    // det of the 3x3 catalecticant in 5 variables together with its inner
    // 2x2 minor: the tail term 2*x2*x3*x4 of the determinant reduces away.
    auto det3 = parse("x1*x3*x5 - x1*x4^2 - x2^2*x5 + 2*x2*x3*x4 - x3^3", 5);
    auto det1 = parse("x2*x4 - x3^2", 5);
    Ideal<Rational> ideal(5, TermOrder::lex(), {det3, det1});
    const auto& gb = ideal.groebner();
    REQUIRE(gb.basis.size() == 2);
    CHECK(gb.basis[0] == parse("x2*x4 - x3^2", 5));
    CHECK(gb.basis[1] == parse("x1*x3*x5 - x1*x4^2 - x2^2*x5 + x3^3", 5));
    CHECK(looks_reduced(gb));
    CHECK(gb.initial().str() == "(x2*x4, x1*x3*x5)");
}

TEST_CASE("degenerate ideals") {
    auto zero = Ideal<Rational>::zero(3, TermOrder::lex());
    CHECK(zero.groebner().is_zero_ideal());
    CHECK(zero.groebner().initial().is_zero());

    // x1 and x1 + 1 together give 1.
    auto unit = make_ideal({"x1", "x1 + 1"}, 2);
    CHECK(unit.groebner().is_unit_ideal());
    CHECK(unit.groebner().basis[0] == parse("1", 2));
    CHECK(unit.groebner().initial().is_unit());
}

TEST_CASE("groebner cache hits per order") {
    auto ideal = make_ideal({"x1*x3 - x2^2", "x2"}, 3);
    auto before = knutson::gb_run_counter();
    ideal.groebner();
    CHECK(knutson::gb_run_counter() == before + 1);
    ideal.groebner();
    ideal.groebner(TermOrder::lex());
    CHECK(knutson::gb_run_counter() == before + 1); // cached
    ideal.groebner(TermOrder::grevlex());
    CHECK(knutson::gb_run_counter() == before + 2); // new order, one run
    // Copies share the cache.
    auto copy = ideal;
    copy.groebner(TermOrder::grevlex());
    CHECK(knutson::gb_run_counter() == before + 2);
}

TEST_CASE("membership and ideal equality") {
    auto ideal = make_ideal({"x1*x3 - x2^2", "x2"}, 3);
    CHECK(knutson::ideal_member(parse("x1*x3 + x2^2", 3), ideal));
    CHECK(knutson::ideal_member(parse("x2^2", 3), ideal));
    CHECK(knutson::ideal_member(parse("0", 3), ideal));
    CHECK(!knutson::ideal_member(parse("x1 + x3", 3), ideal));
    CHECK(!knutson::ideal_member(parse("1", 3), ideal));

    // Same ideal, different presentations.
    auto other = make_ideal({"x1*x3 - x2^2 + x2", "x2"}, 3);
    CHECK(knutson::ideal_equal(ideal, other));
    CHECK(knutson::ideal_contains(ideal, other));
    CHECK(!knutson::ideal_equal(ideal, make_ideal({"x2"}, 3)));
    CHECK(knutson::ideal_contains(ideal, make_ideal({"x2"}, 3)));
    CHECK(!knutson::ideal_contains(make_ideal({"x2"}, 3), ideal));
}

TEST_CASE("union of reduced bases as a basis of the sum") {
    // G_(x1+x2) = {x1+x2}, G_(x1) = {x1}: the union leaves the
    // S-polynomial x2 irreducible, so it is not a basis of the sum.
    auto a = make_ideal({"x1 + x2"}, 2);
    auto b = make_ideal({"x1"}, 2);
    CHECK(!knutson::is_union_groebner(a, b, TermOrder::lex()));

    // Coprime leading terms: vacuously a basis.
    CHECK(knutson::is_union_groebner(make_ideal({"x2"}, 3),
                                     make_ideal({"x1*x3"}, 3), TermOrder::lex()));

    // An ideal with itself: the union is the basis itself.
    CHECK(knutson::is_union_groebner(a, a, TermOrder::lex()));
}

TEST_CASE("buchberger criterion checker") {
    std::vector<Polynomial<Rational>> good{parse("x2", 3), parse("x1*x3", 3)};
    CHECK(knutson::buchberger_criterion_holds(good));
    std::vector<Polynomial<Rational>> bad{parse("x1 + x2", 2), parse("x1", 2)};
    CHECK(!knutson::buchberger_criterion_holds(bad));
}

TEST_CASE("randomized soundness of reduced bases") {
    std::mt19937_64 rng(20240820);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<std::uint32_t> e(0, 2);
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<int> ngens(1, 3);

    auto lex = TermOrder::lex();
    auto grevlex = TermOrder::grevlex();

    auto random_poly = [&](std::size_t n, TermOrderPtr ord) {
        std::vector<knutson::Term<Rational>> ts;
        int k = nterms(rng);
        for (int i = 0; i < k; ++i) {
            std::vector<std::uint32_t> exps(n);
            for (auto& x : exps) x = e(rng);
            ts.push_back({Rational(coeff(rng)), Monomial(std::move(exps))});
        }
        return Polynomial<Rational>::from_terms(n, std::move(ord), std::move(ts));
    };

    for (int round = 0; round < 60; ++round) {
        TermOrderPtr ord = (round % 2 == 0) ? lex : grevlex;
        std::size_t n = 3;
        std::vector<Polynomial<Rational>> gens;
        int k = ngens(rng);
        for (int i = 0; i < k; ++i) gens.push_back(random_poly(n, ord));
        Ideal<Rational> ideal(n, ord, gens);
        const auto& gb = ideal.groebner();

        CHECK(looks_reduced(gb));
        // Criterion: every S-pair of the basis reduces to zero.
        CHECK(knutson::buchberger_criterion_holds(gb.basis));
        // Generators are members; so are random combinations of them.
        for (const auto& g : gens) CHECK(knutson::ideal_member(g, ideal));
        if (!gens.empty()) {
            auto combo = gens[0].times_term(Rational(2), Monomial::variable(n, 0));
            for (std::size_t i = 1; i < gens.size(); ++i) combo = combo - gens[i];
            CHECK(knutson::ideal_member(combo, ideal));
        }
    }
}

TEST_CASE("prime field bases match reduced rational bases") {
    // Over F_101 the same computation goes through with modular inverses.
    auto p101 = [&](const std::string& s, std::size_t n) {
        return knutson::reduce_poly_mod_p(parse(s, n), 101);
    };
    Ideal<Fp> ideal(3, TermOrder::lex(), {p101("x1*x3 - x2^2", 3), p101("x2", 3)});
    const auto& gb = ideal.groebner();
    REQUIRE(gb.basis.size() == 2);
    CHECK(gb.basis[0] == p101("x2", 3));
    CHECK(gb.basis[1] == p101("x1*x3", 3));
    CHECK(looks_reduced(gb));
    CHECK(gb.initial().str() == "(x2, x1*x3)");
}
