#ifndef KNUTSON_GROEBNER_HPP
#define KNUTSON_GROEBNER_HPP

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "knutson/monomial_ideal.hpp"
#include "knutson/polynomial.hpp"

namespace knutson {

namespace detail {
inline std::atomic<std::uint64_t>& gb_run_counter_cell() {
    static std::atomic<std::uint64_t> count{0};
    return count;
}
} // namespace detail

// Process-wide count of Buchberger runs, surfaced in run statistics.
// Incremented atomically, so independent reductions may run concurrently
// (per-prime scans) without corrupting the count.
inline std::uint64_t gb_run_counter() { return detail::gb_run_counter_cell().load(); }

// S-polynomial scaled to stay fraction-free over Q:
//   S(f, g) = lc(g) * (L / lt(f)) * f  -  lc(f) * (L / lt(g)) * g,
// where L = lcm(lm(f), lm(g)).  Agrees with the classical S-polynomial up
// to a nonzero scalar, which is all any Groebner computation needs.
template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g) {
    if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("s_polynomial");
    const Term<K>& tf = f.leading();
    const Term<K>& tg = g.leading();
    Monomial l = Monomial::lcm(tf.mono, tg.mono);
    return f.times_term(tg.coeff, l.divide(tf.mono)) -
           g.times_term(tf.coeff, l.divide(tg.mono));
}

// Full normal form of f against a fixed list of nonzero reducers, all
// living in f's ring.  Deterministic rule: reduce the highest reducible
// term, choosing the first reducer in list order whose leading monomial
// divides it; stop when no term of the remainder is reducible.
template <class K>
Polynomial<K> normal_form(Polynomial<K> r, const std::vector<Polynomial<K>>& basis) {
    for (;;) {
        bool reduced = false;
        for (const auto& term : r.terms()) {
            for (const auto& g : basis) {
                if (g.leading_monomial().divides(term.mono)) {
                    K c = term.coeff / g.leading_coeff();
                    r = r - g.times_term(c, term.mono.divide(g.leading_monomial()));
                    reduced = true;
                    break;
                }
            }
            if (reduced) break;
        }
        if (!reduced) return r;
    }
}

// Reduced Groebner basis: monic elements, sorted ascending by leading
// monomial, every element in normal form with respect to the others.  For
// a fixed ideal and order this object is unique, so its serialization
// `key()` is a canonical name for the ideal.
template <class K>
struct ReducedGB {
    std::size_t nvars = 0;
    TermOrderPtr ord;
    std::vector<Polynomial<K>> basis;

    bool is_zero_ideal() const { return basis.empty(); }
    bool is_unit_ideal() const { return basis.size() == 1 && basis[0].is_constant(); }

    MonomialIdeal initial() const {
        std::vector<Monomial> lts;
        lts.reserve(basis.size());
        for (const auto& g : basis) lts.push_back(g.leading_monomial());
        return MonomialIdeal(nvars, std::move(lts));
    }

    std::string key() const {
        std::string k = std::to_string(nvars) + "|" + ord->key() + "|";
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (i) k += ";";
            k += basis[i].str();
        }
        return k;
    }
};

namespace detail {

template <class K>
struct SPair {
    std::size_t i, j;
    Monomial lcm;
};

// Gebauer-Moeller pair update: adds element index t to the pair queue,
// applying the standard three criteria (multiple, same-lcm, coprime) to
// the new pairs and pruning old pairs made redundant by t.
template <class K>
void update_pairs(std::vector<SPair<K>>& pairs, const std::vector<Polynomial<K>>& g,
                  std::size_t t) {
    const Monomial& lt_t = g[t].leading_monomial();

    struct Cand {
        std::size_t i;
        Monomial lcm;
        bool coprime;
    };
    std::vector<Cand> cands;
    cands.reserve(t);
    for (std::size_t i = 0; i < t; ++i) {
        const Monomial& lt_i = g[i].leading_monomial();
        cands.push_back(Cand{i, Monomial::lcm(lt_i, lt_t), Monomial::coprime(lt_i, lt_t)});
    }

    // New-pair filtering: candidate i is dropped when some other candidate
    // still under consideration (later index) or already kept has an lcm
    // dividing cands[i].lcm.  Processing in ascending index order keeps the
    // last representative of each lcm value, deterministically.
    std::vector<Cand> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
        bool drop = false;
        if (!cands[a].coprime) {
            for (std::size_t b = a + 1; b < cands.size() && !drop; ++b) {
                if (cands[b].lcm.divides(cands[a].lcm)) drop = true;
            }
            for (const auto& k : kept) {
                if (drop) break;
                if (k.lcm.divides(cands[a].lcm)) drop = true;
            }
        }
        if (!drop) kept.push_back(cands[a]);
    }

    // Old-pair pruning: {i, j} dies when lt_t divides lcm(i, j) strictly
    // finer than both mixed lcms.
    std::vector<SPair<K>> survivors;
    survivors.reserve(pairs.size());
    for (auto& p : pairs) {
        bool prune = lt_t.divides(p.lcm) &&
                     Monomial::lcm(g[p.i].leading_monomial(), lt_t) != p.lcm &&
                     Monomial::lcm(g[p.j].leading_monomial(), lt_t) != p.lcm;
        if (!prune) survivors.push_back(std::move(p));
    }
    pairs = std::move(survivors);

    // Coprime leading terms reduce to zero (first Buchberger criterion);
    // they participated in the filtering above but are not queued.
    for (auto& c : kept) {
        if (!c.coprime) pairs.push_back(SPair<K>{c.i, t, std::move(c.lcm)});
    }
}

// Normal selection: smallest lcm degree first, ties by the term order on
// the lcm, then by index pair.
template <class K>
std::size_t select_pair(const std::vector<SPair<K>>& pairs, const TermOrderPtr& ord) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
        const auto& a = pairs[k];
        const auto& b = pairs[best];
        if (a.lcm.degree() != b.lcm.degree()) {
            if (a.lcm.degree() < b.lcm.degree()) best = k;
            continue;
        }
        int c = ord->compare(a.lcm, b.lcm);
        if (c != 0) {
            if (c < 0) best = k;
            continue;
        }
        if (std::pair(a.i, a.j) < std::pair(b.i, b.j)) best = k;
    }
    return best;
}

} // namespace detail

// Buchberger's algorithm with Gebauer-Moeller pair elimination and the
// normal selection strategy; returns the unique reduced basis.
template <class K>
ReducedGB<K> buchberger(std::size_t nvars, TermOrderPtr ord,
                        const std::vector<Polynomial<K>>& gens) {
    ord->require_applicable(nvars);
    ++detail::gb_run_counter_cell();

    std::vector<Polynomial<K>> g;
    for (const auto& f : gens) {
        if (f.nvars() != nvars) {
            throw AmbientMismatch("generator in " + std::to_string(f.nvars()) +
                                  " variables for an ideal in " + std::to_string(nvars));
        }
        if (f.is_zero()) continue;
        Polynomial<K> h = (*f.order() == *ord) ? f : f.with_order(ord);
        normalize_scale(h);
        g.push_back(std::move(h));
    }

    std::vector<detail::SPair<K>> pairs;
    for (std::size_t t = 0; t < g.size(); ++t) detail::update_pairs(pairs, g, t);

    while (!pairs.empty()) {
        std::size_t at = detail::select_pair(pairs, ord);
        detail::SPair<K> p = std::move(pairs[at]);
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(at));
        Polynomial<K> r = normal_form(s_polynomial(g[p.i], g[p.j]), g);
        if (r.is_zero()) continue;
        normalize_scale(r);
        g.push_back(std::move(r));
        detail::update_pairs(pairs, g, g.size() - 1);
    }

    // Minimalize: sort ascending by leading monomial and drop every element
    // whose leading monomial is divisible by that of a kept one.
    std::sort(g.begin(), g.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
        return ord->less(a.leading_monomial(), b.leading_monomial());
    });
    std::vector<Polynomial<K>> minimal;
    for (auto& f : g) {
        bool redundant = false;
        for (const auto& k : minimal) {
            if (k.leading_monomial().divides(f.leading_monomial())) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(std::move(f));
    }

    // Interreduce to the unique reduced basis: iterate full normal forms
    // until nothing changes.  Leading monomials form an antichain, so only
    // tails move and the loop reaches the canonical fixpoint.
    for (int pass = 0;; ++pass) {
        if (pass > 1000) throw Error("interreduction failed to stabilize");
        bool changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial<K>> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j) {
                if (j != i) others.push_back(minimal[j]);
            }
            Polynomial<K> r = normal_form(minimal[i], others);
            normalize_scale(r);
            if (r != minimal[i]) {
                minimal[i] = std::move(r);
                changed = true;
            }
        }
        if (!changed) break;
    }
    for (auto& f : minimal) f = make_monic(f);

    ReducedGB<K> out;
    out.nvars = nvars;
    out.ord = std::move(ord);
    out.basis = std::move(minimal);
    return out;
}

// Finitely generated ideal of K[x1..xn].  Generators are stored under one
// common term order (inputs are re-viewed as needed); zero generators are
// dropped.  Reduced bases are cached per order, and the cache is shared
// between copies of the ideal.
template <class K>
class Ideal {
public:
    Ideal(std::size_t nvars, TermOrderPtr ord, std::vector<Polynomial<K>> gens)
        : nvars_(nvars), ord_(std::move(ord)),
          cache_(std::make_shared<std::map<std::string, ReducedGB<K>>>()) {
        ord_->require_applicable(nvars_);
        for (auto& f : gens) {
            if (f.nvars() != nvars_) {
                throw AmbientMismatch("generator in " + std::to_string(f.nvars()) +
                                      " variables for an ideal in " +
                                      std::to_string(nvars_));
            }
            if (f.is_zero()) continue;
            gens_.push_back(*f.order() == *ord_ ? std::move(f) : f.with_order(ord_));
        }
    }

    static Ideal zero(std::size_t nvars, TermOrderPtr ord) {
        return Ideal(nvars, std::move(ord), {});
    }
    static Ideal principal(Polynomial<K> f) {
        if (f.is_zero()) return zero(f.nvars(), f.order());
        std::size_t n = f.nvars();
        TermOrderPtr ord = f.order();
        return Ideal(n, ord, {std::move(f)});
    }

    std::size_t nvars() const { return nvars_; }
    const TermOrderPtr& order() const { return ord_; }
    const std::vector<Polynomial<K>>& generators() const { return gens_; }
    bool has_no_generators() const { return gens_.empty(); }

    const ReducedGB<K>& groebner() const { return groebner(ord_); }
    const ReducedGB<K>& groebner(const TermOrderPtr& ord) const {
        auto it = cache_->find(ord->key());
        if (it == cache_->end()) {
            it = cache_->emplace(ord->key(), buchberger(nvars_, ord, gens_)).first;
        }
        return it->second;
    }

    bool is_zero_ideal() const { return groebner().is_zero_ideal(); }
    bool is_unit_ideal() const { return groebner().is_unit_ideal(); }

    // Hands a precomputed reduced basis to the cache (used when an
    // operation yields a basis as a by-product, e.g. elimination).
    void adopt_groebner(ReducedGB<K> gb) const { cache_->emplace(gb.ord->key(), std::move(gb)); }

private:
    std::size_t nvars_;
    TermOrderPtr ord_;
    std::vector<Polynomial<K>> gens_;
    mutable std::shared_ptr<std::map<std::string, ReducedGB<K>>> cache_;
};

template <class K>
MonomialIdeal initial_ideal(const Ideal<K>& ideal, const TermOrderPtr& ord) {
    return ideal.groebner(ord).initial();
}
template <class K>
MonomialIdeal initial_ideal(const Ideal<K>& ideal) {
    return ideal.groebner().initial();
}

template <class K>
bool ideal_member(const Polynomial<K>& f, const Ideal<K>& ideal) {
    const ReducedGB<K>& gb = ideal.groebner();
    Polynomial<K> g = (*f.order() == *gb.ord) ? f : f.with_order(gb.ord);
    return normal_form(std::move(g), gb.basis).is_zero();
}

template <class K>
bool ideal_contains(const Ideal<K>& outer, const Ideal<K>& inner) {
    for (const auto& f : inner.generators()) {
        if (!ideal_member(f, outer)) return false;
    }
    return true;
}

template <class K>
bool ideal_equal(const Ideal<K>& a, const Ideal<K>& b) {
    if (a.nvars() != b.nvars()) return false;
    return a.groebner(a.order()).key() == b.groebner(a.order()).key();
}

// Does every S-polynomial of the list reduce to zero against the list?
// (Buchberger's criterion; pairs with coprime leading monomials are
// skipped, which is the first criterion.)  The list must consist of
// nonzero polynomials under a common order.
template <class K>
bool buchberger_criterion_holds(const std::vector<Polynomial<K>>& basis) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (Monomial::coprime(basis[i].leading_monomial(),
                                  basis[j].leading_monomial())) {
                continue;
            }
            if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

// Is the union of the two reduced bases (as a set) a Groebner basis of the
// sum ideal?  Both ideals are read under `ord`.
template <class K>
bool is_union_groebner(const Ideal<K>& a, const Ideal<K>& b, const TermOrderPtr& ord) {
    const ReducedGB<K>& ga = a.groebner(ord);
    const ReducedGB<K>& gb = b.groebner(ord);
    std::vector<Polynomial<K>> basis = ga.basis;
    for (const auto& f : gb.basis) {
        bool dup = false;
        for (const auto& g : ga.basis) {
            if (f == g) {
                dup = true;
                break;
            }
        }
        if (!dup) basis.push_back(f);
    }
    return buchberger_criterion_holds(basis);
}

} // namespace knutson

#endif
