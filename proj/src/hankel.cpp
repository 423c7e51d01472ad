#include "knutson/hankel.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <set>

#include "knutson/errors.hpp"
#include "knutson/ideal_ops.hpp"

namespace knutson {

namespace {

std::string var_name(std::size_t index) { return "x" + std::to_string(index); }

std::string fmt_vec(const std::vector<long long>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

// Strictly increasing t-subsets of {1..n}, in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t t) {
    std::vector<std::vector<std::size_t>> out;
    if (t > n) return out;
    std::vector<std::size_t> cur(t);
    for (std::size_t i = 0; i < t; ++i) cur[i] = i + 1;
    for (;;) {
        out.push_back(cur);
        // Advance the rightmost index that still has room.
        std::size_t i = t;
        while (i > 0 && cur[i - 1] == n - t + i) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < t; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

Polynomial<Rational> laplace(const HankelShape& shape,
                             const std::vector<std::size_t>& row_idx,
                             const std::vector<std::size_t>& col_idx,
                             std::size_t nvars, const TermOrderPtr& ord,
                             std::uint32_t used,
                             std::vector<std::optional<Polynomial<Rational>>>& memo) {
    std::size_t depth = static_cast<std::size_t>(std::popcount(used));
    if (depth == row_idx.size()) {
        return Polynomial<Rational>::constant(nvars, ord, Rational(1));
    }
    if (memo[used]) return *memo[used];
    // Expand along row `depth` over the columns not used by earlier rows.
    Polynomial<Rational> acc(nvars, ord);
    std::size_t position = 0;
    for (std::size_t c = 0; c < col_idx.size(); ++c) {
        if (used & (1u << c)) continue;
        std::size_t var = hankel_entry(shape, row_idx[depth], col_idx[c]);
        Polynomial<Rational> sub =
            laplace(shape, row_idx, col_idx, nvars, ord, used | (1u << c), memo);
        Rational sign(position % 2 == 0 ? 1 : -1);
        acc = acc + sub.times_term(sign, Monomial::variable(nvars, var - 1));
        ++position;
    }
    memo[used] = acc;
    return acc;
}

void require_index_list(const std::vector<std::size_t>& idx, std::size_t bound,
                        const std::string& what) {
    if (idx.empty()) throw Error("empty " + what + " list for a minor");
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 1 || idx[i] > bound) {
            throw Error(what + " index " + std::to_string(idx[i]) + " outside 1.." +
                        std::to_string(bound));
        }
        if (i > 0 && idx[i] <= idx[i - 1]) {
            throw Error(what + " indices must be strictly increasing");
        }
    }
}

CheckLine make_check(std::string name, std::string expected, std::string actual) {
    bool pass = expected == actual;
    return CheckLine{std::move(name), std::move(expected), std::move(actual), pass};
}

} // namespace

std::string HankelShape::str() const {
    return "Hankel(" + std::to_string(rows) + " x " + std::to_string(cols()) + ", " +
           var_name(first) + ".." + var_name(last) + ")";
}

void require_valid(const HankelShape& shape) {
    if (shape.rows < 1 || shape.first < 1) {
        throw Error("Hankel shape needs rows >= 1 and first >= 1");
    }
    if (shape.last + 2 < shape.rows + shape.first + 1) {
        throw Error("Hankel shape " + std::to_string(shape.rows) + " rows over " +
                    var_name(shape.first) + ".." + var_name(shape.last) +
                    " has no columns");
    }
}

std::size_t hankel_entry(const HankelShape& shape, std::size_t i, std::size_t j) {
    require_valid(shape);
    if (i < 1 || i > shape.rows || j < 1 || j > shape.cols()) {
        throw Error("Hankel entry (" + std::to_string(i) + ", " + std::to_string(j) +
                    ") outside a " + std::to_string(shape.rows) + " x " +
                    std::to_string(shape.cols()) + " matrix");
    }
    return shape.first + i + j - 2;
}

std::vector<std::vector<std::size_t>> hankel_entries(const HankelShape& shape) {
    require_valid(shape);
    std::vector<std::vector<std::size_t>> rows(shape.rows,
                                               std::vector<std::size_t>(shape.cols()));
    for (std::size_t i = 1; i <= shape.rows; ++i) {
        for (std::size_t j = 1; j <= shape.cols(); ++j) {
            rows[i - 1][j - 1] = hankel_entry(shape, i, j);
        }
    }
    return rows;
}

std::string role_name(SubmatrixRole role) {
    switch (role) {
        case SubmatrixRole::X: return "X";
        case SubmatrixRole::P1: return "P1";
        case SubmatrixRole::P2: return "P2";
        case SubmatrixRole::Q: return "Q";
    }
    throw Error("unknown submatrix role");
}

HankelShape submatrix(const HankelShape& shape, SubmatrixRole role) {
    require_valid(shape);
    HankelShape sub;
    if (shape.is_square()) {
        switch (role) {
            case SubmatrixRole::X: sub = shape; break;
            case SubmatrixRole::P1:
                sub = HankelShape{shape.rows - 1, shape.first, shape.last - 1};
                break;
            case SubmatrixRole::P2:
                sub = HankelShape{shape.rows, shape.first + 1, shape.last};
                break;
            case SubmatrixRole::Q:
                sub = HankelShape{shape.rows - 1, shape.first + 1, shape.last - 1};
                break;
        }
    } else if (shape.is_almost_square()) {
        switch (role) {
            case SubmatrixRole::X: sub = shape; break;
            case SubmatrixRole::P1:
                sub = HankelShape{shape.rows, shape.first, shape.last - 1};
                break;
            case SubmatrixRole::P2:
                sub = HankelShape{shape.rows, shape.first + 1, shape.last};
                break;
            case SubmatrixRole::Q:
                sub = HankelShape{shape.rows, shape.first + 1, shape.last - 1};
                break;
        }
    } else {
        throw Error("submatrix roles are defined for square and almost-square "
                    "Hankel matrices only, got " + shape.str());
    }
    require_valid(sub);
    return sub;
}

Polynomial<Rational> hankel_minor(const HankelShape& shape,
                                  const std::vector<std::size_t>& row_idx,
                                  const std::vector<std::size_t>& col_idx,
                                  std::size_t nvars, const TermOrderPtr& ord) {
    require_valid(shape);
    require_index_list(row_idx, shape.rows, "row");
    require_index_list(col_idx, shape.cols(), "column");
    if (row_idx.size() != col_idx.size()) {
        throw Error("minor needs as many rows as columns");
    }
    if (col_idx.size() > 20) throw Error("minor too large");
    if (nvars < shape.last) {
        throw Error("ambient ring with " + std::to_string(nvars) +
                    " variables cannot hold " + var_name(shape.last));
    }

    std::vector<std::optional<Polynomial<Rational>>> memo(1u << col_idx.size());
    Polynomial<Rational> det = laplace(shape, row_idx, col_idx, nvars, ord, 0, memo);

    // The whole pipeline rests on the order being diagonal: the leading
    // term of every minor must be its main-diagonal product.
    Monomial diag = Monomial::one(nvars);
    for (std::size_t k = 0; k < row_idx.size(); ++k) {
        diag = diag * Monomial::variable(nvars, hankel_entry(shape, row_idx[k], col_idx[k]) - 1);
    }
    if (det.is_zero() || !(det.leading_monomial() == diag) ||
        !(det.leading_coeff() == Rational(1))) {
        throw Error("term order " + ord->key() +
                    " is not diagonal for Hankel minors: expected leading term " +
                    diag.str());
    }
    return det;
}

Polynomial<Rational> hankel_determinant(const HankelShape& shape, std::size_t nvars,
                                        const TermOrderPtr& ord) {
    require_valid(shape);
    if (!shape.is_square()) {
        throw Error("determinant of a non-square matrix " + shape.str());
    }
    std::vector<std::size_t> all(shape.rows);
    for (std::size_t i = 0; i < shape.rows; ++i) all[i] = i + 1;
    return hankel_minor(shape, all, all, nvars, ord);
}

Ideal<Rational> minor_ideal(const HankelShape& shape, std::size_t t, std::size_t nvars,
                            const TermOrderPtr& ord) {
    require_valid(shape);
    if (t == 0) {
        return Ideal<Rational>(nvars, ord,
                               {Polynomial<Rational>::constant(nvars, ord, Rational(1))});
    }
    if (t > std::min(shape.rows, shape.cols())) {
        throw Error("no " + std::to_string(t) + "-minors in a " +
                    std::to_string(shape.rows) + " x " + std::to_string(shape.cols()) +
                    " matrix");
    }
    std::vector<Polynomial<Rational>> gens;
    for (const auto& rows : combinations(shape.rows, t)) {
        for (const auto& cols : combinations(shape.cols(), t)) {
            gens.push_back(hankel_minor(shape, rows, cols, nvars, ord));
        }
    }
    return Ideal<Rational>(nvars, ord, std::move(gens));
}

Polynomial<Rational> seed_polynomial(const HankelShape& shape, std::size_t nvars,
                                     const TermOrderPtr& ord) {
    require_valid(shape);
    Polynomial<Rational> f(nvars, ord);
    if (shape.is_square()) {
        f = hankel_determinant(shape, nvars, ord) *
            hankel_determinant(submatrix(shape, SubmatrixRole::Q), nvars, ord);
    } else if (shape.is_almost_square()) {
        f = hankel_determinant(submatrix(shape, SubmatrixRole::P1), nvars, ord) *
            hankel_determinant(submatrix(shape, SubmatrixRole::P2), nvars, ord);
    } else {
        throw Error("seed is defined for square and almost-square shapes, got " +
                    shape.str());
    }
    Monomial expected = Monomial::one(nvars);
    for (std::size_t v = shape.first; v <= shape.last; ++v) {
        expected = expected * Monomial::variable(nvars, v - 1);
    }
    if (!(f.leading_monomial() == expected)) {
        throw Error("seed leading term " + f.leading_monomial().str() +
                    " differs from " + expected.str() +
                    "; the term order is not diagonal here");
    }
    return f;
}

std::vector<Polynomial<Rational>> default_hankel_witnesses(const HankelShape& shape,
                                                           std::size_t nvars,
                                                           const TermOrderPtr& ord) {
    require_valid(shape);
    std::vector<Polynomial<Rational>> out;
    std::set<std::string> seen;
    for (SubmatrixRole role : {SubmatrixRole::X, SubmatrixRole::P1, SubmatrixRole::P2,
                               SubmatrixRole::Q}) {
        HankelShape sub = submatrix(shape, role);
        for (std::size_t t = 1; t <= std::min(sub.rows, sub.cols()); ++t) {
            for (const auto& rows : combinations(sub.rows, t)) {
                for (const auto& cols : combinations(sub.cols(), t)) {
                    Polynomial<Rational> m = hankel_minor(sub, rows, cols, nvars, ord);
                    if (seen.insert(m.str()).second) out.push_back(std::move(m));
                }
            }
        }
    }
    return out;
}

bool verify_independence_of_m(std::size_t t, std::size_t n, std::size_t m1,
                              std::size_t m2, const TermOrderPtr& ord) {
    for (std::size_t m : {m1, m2}) {
        if (t < 1 || t > m || m > n + 1 - t) {
            throw Error("row count " + std::to_string(m) + " outside t <= m <= n+1-t "
                        "for t = " + std::to_string(t) + ", n = " + std::to_string(n));
        }
    }
    Ideal<Rational> a = minor_ideal(HankelShape{m1, 1, n}, t, n, ord);
    Ideal<Rational> b = minor_ideal(HankelShape{m2, 1, n}, t, n, ord);
    return ideal_equal(a, b);
}

bool all_pass(const std::vector<CheckLine>& checks) {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckLine& c) { return c.pass; });
}

std::vector<std::string> failed_names(const std::vector<CheckLine>& checks) {
    std::vector<std::string> out;
    for (const auto& c : checks) {
        if (!c.pass) out.push_back(c.name);
    }
    return out;
}

std::vector<CheckLine> verify_minor_invariants(const HankelShape& shape, std::size_t t,
                                               std::size_t nvars,
                                               const TermOrderPtr& ord) {
    Ideal<Rational> ideal = minor_ideal(shape, t, nvars, ord);
    HilbertSummary hs = ideal_hilbert(ideal, ord);
    long long tt = static_cast<long long>(t);
    long long span = static_cast<long long>(shape.span());
    long long s = span - tt + 1;
    std::string label = "I_" + std::to_string(t) + " of " + shape.str();

    std::vector<CheckLine> checks;
    checks.push_back(make_check("h-vector of " + label,
                                fmt_vec(hankel_minor_hvector(tt, s)),
                                fmt_vec(hs.h_vector)));
    checks.push_back(make_check("multiplicity of " + label,
                                std::to_string(hankel_minor_multiplicity(tt, s)),
                                std::to_string(hs.multiplicity)));
    // Codimension only depends on the span, not on the ambient ring, so the
    // closed form is evaluated at the span.
    checks.push_back(make_check("height of " + label,
                                std::to_string(hankel_minor_height(tt, span)),
                                std::to_string(hs.height)));
    return checks;
}

PrimaryDecReport verify_primary_dec(const HankelShape& shape, std::size_t t,
                                    const TermOrderPtr& ord) {
    require_valid(shape);
    if (!shape.is_square()) {
        throw Error("decomposition identities are stated for square shapes, got " +
                    shape.str());
    }
    if (t < 2 || t > shape.rows) {
        throw Error("decomposition level t = " + std::to_string(t) +
                    " outside 2..rows");
    }
    std::size_t n = shape.last;
    long long nl = static_cast<long long>(n);
    long long tl = static_cast<long long>(t);
    HankelShape p1 = submatrix(shape, SubmatrixRole::P1);
    HankelShape p2 = submatrix(shape, SubmatrixRole::P2);
    HankelShape q = submatrix(shape, SubmatrixRole::Q);

    Ideal<Rational> ix_t = minor_ideal(shape, t, n, ord);
    Ideal<Rational> ix_t1 = minor_ideal(shape, t - 1, n, ord);
    Ideal<Rational> iq_t1 = minor_ideal(q, t - 1, n, ord);
    Ideal<Rational> iq_t2 = minor_ideal(q, t - 2, n, ord);
    Ideal<Rational> ip1 = minor_ideal(p1, t - 1, n, ord);
    Ideal<Rational> ip2 = minor_ideal(p2, t - 1, n, ord);

    Ideal<Rational> sum_xq = ideal_sum(ix_t, iq_t1);
    Ideal<Rational> meet_p1p2 = ideal_intersect(ip1, ip2);
    Ideal<Rational> sum_p1p2 = ideal_sum(ip1, ip2);
    Ideal<Rational> meet_xq = ideal_intersect(ix_t1, iq_t2);

    std::string st = std::to_string(t);
    std::string st1 = std::to_string(t - 1);
    std::string st2 = std::to_string(t - 2);
    std::string xq_name = "I_" + st + "(X) + I_" + st1 + "(Q)";
    std::string p1p2_name = "I_" + st1 + "(P1) + I_" + st1 + "(P2)";

    PrimaryDecReport report;
    report.t = t;
    auto add = [&](std::string name, std::string expected, std::string actual) {
        report.checks.push_back(make_check(std::move(name), std::move(expected),
                                           std::move(actual)));
    };

    add(xq_name + " = I_" + st1 + "(P1) meet I_" + st1 + "(P2)", "equal",
        ideal_equal(sum_xq, meet_p1p2) ? "equal" : "different");
    add(p1p2_name + " = I_" + st1 + "(X) meet I_" + st2 + "(Q)", "equal",
        ideal_equal(sum_p1p2, meet_xq) ? "equal" : "different");

    HilbertSummary hs_x = ideal_hilbert(ix_t, ord);
    HilbertSummary hs_x1 = ideal_hilbert(ix_t1, ord);
    HilbertSummary hs_q1 = ideal_hilbert(iq_t1, ord);
    HilbertSummary hs_q2 = ideal_hilbert(iq_t2, ord);
    HilbertSummary hs_p1 = ideal_hilbert(ip1, ord);
    HilbertSummary hs_p2 = ideal_hilbert(ip2, ord);
    HilbertSummary hs_sum_xq = ideal_hilbert(sum_xq, ord);
    HilbertSummary hs_sum_p1p2 = ideal_hilbert(sum_p1p2, ord);

    // Heights: components at the same level share a height, each sum sits
    // one higher than its components, and everything follows span - 2t + 2.
    add("height of I_" + st + "(X)", std::to_string(nl - 2 * tl + 2),
        std::to_string(hs_x.height));
    add("height of I_" + st1 + "(Q)", std::to_string(nl - 2 * tl + 2),
        std::to_string(hs_q1.height));
    add("height of I_" + st1 + "(P1)", std::to_string(nl - 2 * tl + 3),
        std::to_string(hs_p1.height));
    add("height of I_" + st1 + "(P2)", std::to_string(nl - 2 * tl + 3),
        std::to_string(hs_p2.height));
    add("height of " + xq_name, std::to_string(nl - 2 * tl + 3),
        std::to_string(hs_sum_xq.height));
    add("height of " + p1p2_name, std::to_string(nl - 2 * tl + 4),
        std::to_string(hs_sum_p1p2.height));
    add("height of I_" + st1 + "(X)", std::to_string(nl - 2 * tl + 4),
        std::to_string(hs_x1.height));
    if (t >= 3) {
        add("height of I_" + st2 + "(Q)", std::to_string(nl - 2 * tl + 4),
            std::to_string(hs_q2.height));
    }

    // Multiplicity identities carried by the two decompositions: each sum
    // equals an intersection of two primes of its own height, so its
    // multiplicity is the sum of theirs.
    add("e(" + xq_name + ") = 2 e(I_" + st1 + "(P1))",
        std::to_string(2 * hs_p1.multiplicity),
        std::to_string(hs_sum_xq.multiplicity));
    add("e(" + p1p2_name + ") = e(I_" + st1 + "(X)) + e(I_" + st2 + "(Q))",
        std::to_string(hs_x1.multiplicity + hs_q2.multiplicity),
        std::to_string(hs_sum_p1p2.multiplicity));
    if (t == shape.rows) {
        long long m = static_cast<long long>(shape.rows);
        add("e(" + xq_name + ") = m(m-1)", std::to_string(m * (m - 1)),
            std::to_string(hs_sum_xq.multiplicity));
    }

    // h-vectors of the sums from the partial-sum rules, plus palindromicity.
    add("h(" + xq_name + ") from partial sums of h(I_" + st + "(X))",
        fmt_vec(sum_hvector_from_parts(hs_x.h_vector, SumHVectorCase::x_plus_q)),
        fmt_vec(hs_sum_xq.h_vector));
    add("h(" + p1p2_name + ") from partial sums of h(I_" + st1 + "(P1))",
        fmt_vec(sum_hvector_from_parts(hs_p1.h_vector, SumHVectorCase::p1_plus_p2)),
        fmt_vec(hs_sum_p1p2.h_vector));
    std::vector<long long> rev_xq = hs_sum_xq.h_vector;
    std::reverse(rev_xq.begin(), rev_xq.end());
    add("h(" + xq_name + ") palindromic", fmt_vec(hs_sum_xq.h_vector), fmt_vec(rev_xq));
    std::vector<long long> rev_p = hs_sum_p1p2.h_vector;
    std::reverse(rev_p.begin(), rev_p.end());
    add("h(" + p1p2_name + ") palindromic", fmt_vec(hs_sum_p1p2.h_vector),
        fmt_vec(rev_p));

    return report;
}

std::vector<NamedIdeal> characterization_shapes(const HankelShape& shape,
                                                const TermOrderPtr& ord) {
    require_valid(shape);
    if (!shape.is_square() || shape.rows < 2) {
        throw Error("the characterization list applies to square shapes of size >= 2, "
                    "got " + shape.str());
    }
    std::size_t m = shape.rows;
    std::size_t n = shape.last;
    HankelShape p1 = submatrix(shape, SubmatrixRole::P1);
    HankelShape p2 = submatrix(shape, SubmatrixRole::P2);
    HankelShape q = submatrix(shape, SubmatrixRole::Q);

    std::vector<NamedIdeal> out;
    std::set<std::string> seen;
    auto offer = [&](std::string name, Ideal<Rational> ideal) {
        if (seen.insert(ideal.groebner(ord).key()).second) {
            out.push_back(NamedIdeal{std::move(name), std::move(ideal)});
        }
    };

    for (std::size_t t = 1; t <= m; ++t) {
        offer("I_" + std::to_string(t) + "(X)", minor_ideal(shape, t, n, ord));
    }
    for (std::size_t t = 1; t <= m - 1; ++t) {
        offer("I_" + std::to_string(t) + "(P1)", minor_ideal(p1, t, n, ord));
        offer("I_" + std::to_string(t) + "(P2)", minor_ideal(p2, t, n, ord));
        offer("I_" + std::to_string(t) + "(Q)", minor_ideal(q, t, n, ord));
    }
    for (std::size_t t = 2; t <= m; ++t) {
        std::string st = std::to_string(t);
        std::string st1 = std::to_string(t - 1);
        offer("I_" + st + "(X) + I_" + st1 + "(Q)",
              ideal_sum(minor_ideal(shape, t, n, ord), minor_ideal(q, t - 1, n, ord)));
        offer("I_" + st1 + "(P1) + I_" + st1 + "(P2)",
              ideal_sum(minor_ideal(p1, t - 1, n, ord), minor_ideal(p2, t - 1, n, ord)));
    }
    return out;
}

FamilyComparison compare_family_to_characterization(const KnutsonFamily<Rational>& fam,
                                                    const HankelShape& shape,
                                                    const TermOrderPtr& ord) {
    std::vector<NamedIdeal> expected = characterization_shapes(shape, ord);

    FamilyComparison cmp;
    cmp.expected_count = expected.size();
    cmp.computed_count = fam.size();

    std::set<std::string> expected_keys;
    for (const auto& e : expected) {
        expected_keys.insert(e.ideal.groebner(ord).key());
        if (!fam.find_ideal(e.ideal)) cmp.missing.push_back(e.name);
    }

    std::size_t n = fam.seed().nvars();
    std::string seed_key = Ideal<Rational>::principal(fam.seed()).groebner(ord).key();
    std::string unit_key =
        Ideal<Rational>(n, ord, {Polynomial<Rational>::constant(n, ord, Rational(1))})
            .groebner(ord)
            .key();

    for (const auto& member : fam.members()) {
        if (expected_keys.count(member.key)) continue;
        if (member.key == seed_key) {
            cmp.boundary_extras.push_back("(seed)");
        } else if (member.key == unit_key) {
            cmp.boundary_extras.push_back("(1)");
        } else {
            cmp.unexpected_extras.push_back(member.key);
        }
    }
    return cmp;
}

MembershipReport verify_theorem_membership(const HankelShape& shape,
                                           const TermOrderPtr& ord,
                                           const ClosureCaps& caps) {
    require_valid(shape);
    if (!shape.is_square() && !shape.is_almost_square()) {
        throw Error("membership verification covers square and almost-square shapes, "
                    "got " + shape.str());
    }
    std::size_t n = shape.last;

    WitnessPolicy<Rational> policy;
    policy.user_supplied = default_hankel_witnesses(shape, n, ord);
    KnutsonFamily<Rational> fam =
        knutson_closure(seed_polynomial(shape, n, ord), ord, policy, caps);

    std::vector<CheckLine> checks;
    for (SubmatrixRole role : {SubmatrixRole::X, SubmatrixRole::P1, SubmatrixRole::P2,
                               SubmatrixRole::Q}) {
        HankelShape sub = submatrix(shape, role);
        for (std::size_t t = 1; t <= std::min(sub.rows, sub.cols()); ++t) {
            bool found = fam.find_ideal(minor_ideal(sub, t, n, ord)).has_value();
            checks.push_back(make_check("I_" + std::to_string(t) + "(" +
                                            role_name(role) + ") belongs to the family",
                                        "member", found ? "member" : "absent"));
        }
    }

    FamilyComparison cmp;
    if (shape.is_square()) {
        cmp = compare_family_to_characterization(fam, shape, ord);
        checks.push_back(make_check("family matches the characterization list "
                                    "(seed and unit ideal set aside)",
                                    "match", cmp.matches_up_to_boundary()
                                                 ? "match"
                                                 : "mismatch"));
    }
    return MembershipReport{std::move(fam), std::move(checks), std::move(cmp)};
}

} // namespace knutson
