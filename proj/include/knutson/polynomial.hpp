#ifndef KNUTSON_POLYNOMIAL_HPP
#define KNUTSON_POLYNOMIAL_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "knutson/fields.hpp"
#include "knutson/monomial.hpp"
#include "knutson/term_order.hpp"

namespace knutson {

template <class K>
struct Term {
    K coeff;
    Monomial mono;
};

// Comparator object: strict "greater under a term order", usable with
// standard containers and algorithms.
struct MonoGreater {
    TermOrderPtr ord;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return ord->greater(a, b);
    }
};

// Sparse multivariate polynomial over an exact field K (Rational or Fp).
// Invariants: terms are sorted strictly descending under the attached term
// order, no coefficient is zero, and every monomial has nvars() slots.
// Binary operations require both operands to live in the same ring (same
// variable count, same order, same coefficient field) and throw
// AmbientMismatch otherwise.
template <class K>
class Polynomial {
public:
    Polynomial(std::size_t nvars, TermOrderPtr ord) : nvars_(nvars), ord_(std::move(ord)) {
        ord_->require_applicable(nvars_);
    }

    static Polynomial from_terms(std::size_t nvars, TermOrderPtr ord,
                                 std::vector<Term<K>> terms) {
        Polynomial p(nvars, std::move(ord));
        std::map<Monomial, K, MonoGreater> acc{MonoGreater{p.ord_}};
        for (auto& t : terms) {
            if (t.mono.nvars() != nvars) {
                throw AmbientMismatch("term in " + std::to_string(t.mono.nvars()) +
                                      " variables added to a polynomial in " +
                                      std::to_string(nvars));
            }
            auto [it, fresh] = acc.emplace(std::move(t.mono), t.coeff);
            if (!fresh) it->second += t.coeff;
        }
        for (auto& [m, c] : acc) {
            if (!c.is_zero()) p.terms_.push_back(Term<K>{c, m});
        }
        return p;
    }

    static Polynomial constant(std::size_t nvars, TermOrderPtr ord, const K& c) {
        Polynomial p(nvars, std::move(ord));
        if (!c.is_zero()) p.terms_.push_back(Term<K>{c, Monomial::one(nvars)});
        return p;
    }

    static Polynomial monomial(std::size_t nvars, TermOrderPtr ord, const K& c,
                               Monomial m) {
        return from_terms(nvars, std::move(ord), {Term<K>{c, std::move(m)}});
    }

    std::size_t nvars() const { return nvars_; }
    const TermOrderPtr& order() const { return ord_; }
    const std::vector<Term<K>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }

    const Term<K>& leading() const {
        if (terms_.empty()) throw ZeroPolynomial("leading term");
        return terms_[0];
    }
    const Monomial& leading_monomial() const { return leading().mono; }
    const K& leading_coeff() const { return leading().coeff; }

    std::uint64_t total_degree() const {
        if (terms_.empty()) throw ZeroPolynomial("total degree");
        std::uint64_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    Polynomial operator-() const {
        Polynomial p(*this);
        for (auto& t : p.terms_) t.coeff = -t.coeff;
        return p;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.require_same_ring(b);
        Polynomial r(a.nvars_, a.ord_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            int c = a.ord_->compare(a.terms_[i].mono, b.terms_[j].mono);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                K s = a.terms_[i].coeff + b.terms_[j].coeff;
                if (!s.is_zero()) r.terms_.push_back(Term<K>{s, a.terms_[i].mono});
                ++i, ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        return a + (-b);
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.require_same_ring(b);
        std::map<Monomial, K, MonoGreater> acc{MonoGreater{a.ord_}};
        for (const auto& s : a.terms_) {
            for (const auto& t : b.terms_) {
                Monomial m = s.mono * t.mono;
                K c = s.coeff * t.coeff;
                auto [it, fresh] = acc.emplace(std::move(m), std::move(c));
                if (!fresh) it->second += s.coeff * t.coeff;
            }
        }
        Polynomial r(a.nvars_, a.ord_);
        for (auto& [m, c] : acc) {
            if (!c.is_zero()) r.terms_.push_back(Term<K>{c, m});
        }
        return r;
    }

    // this * (c * m), the workhorse of reduction steps.
    Polynomial times_term(const K& c, const Monomial& m) const {
        Polynomial r(nvars_, ord_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back(Term<K>{t.coeff * c, t.mono * m});
        return r; // multiplying by a fixed monomial preserves the term order
    }

    Polynomial times_scalar(const K& c) const {
        Polynomial r(nvars_, ord_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back(Term<K>{t.coeff * c, t.mono});
        return r;
    }

    // Same polynomial viewed under another order.
    Polynomial with_order(TermOrderPtr ord) const {
        Polynomial r(nvars_, std::move(ord));
        r.terms_ = terms_;
        r.resort();
        return r;
    }

    // Adjoin a fresh variable slot at `pos` (used to pass to the extended
    // ring with an elimination variable in front).
    Polynomial extended(std::size_t pos, TermOrderPtr ord) const {
        Polynomial r(nvars_ + 1, std::move(ord));
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back(Term<K>{t.coeff, t.mono.extended(pos)});
        r.resort();
        return r;
    }

    // Drop the variable slot at `pos`; every term must have exponent 0 there.
    Polynomial restricted(std::size_t pos, TermOrderPtr ord) const {
        Polynomial r(nvars_ - 1, std::move(ord));
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            r.terms_.push_back(Term<K>{t.coeff, t.mono.restricted(pos)});
        }
        r.resort();
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.nvars_ != b.nvars_) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        if (a.ord_->key() == b.ord_->key()) {
            for (std::size_t i = 0; i < a.terms_.size(); ++i) {
                if (a.terms_[i].mono != b.terms_[i].mono ||
                    a.terms_[i].coeff != b.terms_[i].coeff) {
                    return false;
                }
            }
            return true;
        }
        return a == b.with_order(a.ord_);
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Deterministic text form, e.g. "x1*x3 - x2^2" (descending terms).
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            const auto& t = terms_[i];
            K c = t.coeff;
            if (i == 0) {
                if (coeff_prints_negative(c)) {
                    out += "-";
                    c = -c;
                }
            } else {
                if (coeff_prints_negative(c)) {
                    out += " - ";
                    c = -c;
                } else {
                    out += " + ";
                }
            }
            if (t.mono.is_one()) {
                out += coeff_str(c);
            } else {
                if (!c.is_one()) out += coeff_str(c) + "*";
                out += t.mono.str();
            }
        }
        return out;
    }

private:
    void require_same_ring(const Polynomial& o) const {
        if (nvars_ != o.nvars_) {
            throw AmbientMismatch("polynomials in " + std::to_string(nvars_) + " and " +
                                  std::to_string(o.nvars_) + " variables");
        }
        if (!(*ord_ == *o.ord_)) {
            throw AmbientMismatch("polynomials under orders " + ord_->key() + " and " +
                                  o.ord_->key());
        }
        if (!terms_.empty() && !o.terms_.empty() &&
            !(field_of(terms_[0].coeff) == field_of(o.terms_[0].coeff))) {
            throw AmbientMismatch("polynomials over " + field_of(terms_[0].coeff).str() +
                                  " and " + field_of(o.terms_[0].coeff).str());
        }
    }

    void resort() {
        std::sort(terms_.begin(), terms_.end(), [this](const Term<K>& a, const Term<K>& b) {
            return ord_->greater(a.mono, b.mono);
        });
    }

    std::size_t nvars_;
    TermOrderPtr ord_;
    std::vector<Term<K>> terms_;
};

// Scale to the canonical representative used while reducing: over Q clear
// denominators and divide by the numerator gcd, keeping the leading
// coefficient positive (keeps intermediate integers small and the run
// deterministic); over F_p make the polynomial monic.
inline void normalize_scale(Polynomial<Rational>& f) {
    if (f.is_zero()) return;
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& t : f.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                t.coeff.denominator().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
                t.coeff.numerator().get_mpz_t());
    }
    Rational scale = Rational::from_mpz(den_lcm, num_gcd);
    if (f.leading_coeff().sign() < 0) scale = -scale;
    f = f.times_scalar(scale);
}

inline void normalize_scale(Polynomial<Fp>& f) {
    if (f.is_zero()) return;
    f = f.times_scalar(f.leading_coeff().inverse());
}

template <class K>
Polynomial<K> make_monic(const Polynomial<K>& f) {
    if (f.is_zero()) throw ZeroPolynomial("make_monic");
    return f.times_scalar(f.leading_coeff().inverse());
}

// Exact quotient g / f for g known to lie in the principal ideal (f).
// Runs the one-divisor division algorithm; a nonzero remainder step means
// the precondition was violated, which is reported as an internal error.
template <class K>
Polynomial<K> divide_exact(const Polynomial<K>& g, const Polynomial<K>& f) {
    if (f.is_zero()) throw ZeroPolynomial("divide_exact divisor");
    Polynomial<K> quotient(g.nvars(), g.order());
    Polynomial<K> rest = g;
    const Term<K>& lead = f.leading();
    while (!rest.is_zero()) {
        const Term<K>& top = rest.leading();
        if (!lead.mono.divides(top.mono)) {
            throw Error("exact polynomial division left a remainder");
        }
        K c = top.coeff / lead.coeff;
        Monomial m = top.mono.divide(lead.mono);
        quotient = quotient + Polynomial<K>::monomial(g.nvars(), g.order(), c, m);
        rest = rest - f.times_term(c, m);
    }
    return quotient;
}

// Image of a rational-coefficient polynomial in F_p[x].  Throws BadPrime if
// p divides any denominator.  The result may be zero (caller decides
// whether that is acceptable).
inline Polynomial<Fp> reduce_poly_mod_p(const Polynomial<Rational>& f, std::uint64_t p) {
    std::vector<Term<Fp>> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        terms.push_back(Term<Fp>{reduce_rational_mod_p(t.coeff, p), t.mono});
    }
    return Polynomial<Fp>::from_terms(f.nvars(), f.order(), std::move(terms));
}

} // namespace knutson

#endif
