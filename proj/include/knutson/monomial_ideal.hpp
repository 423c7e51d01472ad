#ifndef KNUTSON_MONOMIAL_IDEAL_HPP
#define KNUTSON_MONOMIAL_IDEAL_HPP

#include <string>
#include <vector>

#include "knutson/monomial.hpp"

namespace knutson {

// Ideal generated by monomials, kept in canonical form: the unique minimal
// generating set (an antichain under divisibility), sorted structurally.
// Two monomial ideals are equal iff their generator lists are equal.
class MonomialIdeal {
public:
    // Minimalizes and sorts; duplicates collapse.  An empty list gives the
    // zero ideal, and any invocation containing 1 gives the unit ideal.
    MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens);

    static MonomialIdeal zero(std::size_t nvars) { return MonomialIdeal(nvars, {}); }
    static MonomialIdeal unit(std::size_t nvars) {
        return MonomialIdeal(nvars, {Monomial::one(nvars)});
    }

    std::size_t nvars() const { return nvars_; }
    const std::vector<Monomial>& generators() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
    // Every minimal generator is squarefree.
    bool is_squarefree() const;

    bool contains(const Monomial& m) const;
    bool contains(const MonomialIdeal& other) const;

    friend MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b);
    static MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
    MonomialIdeal colon(const Monomial& m) const;
    MonomialIdeal colon(const MonomialIdeal& j) const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.nvars_ == b.nvars_ && a.gens_ == b.gens_;
    }
    friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) {
        return !(a == b);
    }
    // Canonical: "(x2, x1*x3)" with generators in storage order; "(0)" when
    // zero.  Usable as a map key.
    std::string str() const;

private:
    void require_same_ambient(const MonomialIdeal& o) const;
    std::size_t nvars_;
    std::vector<Monomial> gens_;
};

} // namespace knutson

#endif
