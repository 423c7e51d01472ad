#include "knutson/monomial_ideal.hpp"

#include <algorithm>

#include "knutson/errors.hpp"

namespace knutson {

namespace {

// Canonical storage order: degree first, then earlier-variable monomials
// first (x1*x3 before x2*x4), purely structural.
bool canonical_less(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return b < a; // descending exponent vectors put x1... ahead of x2...
}

// Keep only divisibility-minimal elements, canonically sorted.
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), canonical_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    for (const auto& m : gens) {
        bool redundant = false;
        for (const auto& k : gens) {
            if (k != m && k.divides(m)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(m);
    }
    return kept;
}

} // namespace

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens)
    : nvars_(nvars) {
    for (const auto& m : gens) {
        if (m.nvars() != nvars_) {
            throw AmbientMismatch("monomial in " + std::to_string(m.nvars()) +
                                  " variables generating an ideal in " +
                                  std::to_string(nvars_));
        }
    }
    gens_ = minimalize(std::move(gens));
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial& m) { return m.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    require_same_ambient(other);
    return std::all_of(other.gens_.begin(), other.gens_.end(),
                       [&](const Monomial& g) { return contains(g); });
}

void MonomialIdeal::require_same_ambient(const MonomialIdeal& o) const {
    if (nvars_ != o.nvars_) {
        throw AmbientMismatch("monomial ideals in " + std::to_string(nvars_) + " and " +
                              std::to_string(o.nvars_) + " variables");
    }
}

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b) {
    a.require_same_ambient(b);
    std::vector<Monomial> gens = a.gens_;
    gens.insert(gens.end(), b.gens_.begin(), b.gens_.end());
    return MonomialIdeal(a.nvars_, std::move(gens));
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    a.require_same_ambient(b);
    std::vector<Monomial> gens;
    gens.reserve(a.gens_.size() * b.gens_.size());
    for (const auto& f : a.gens_) {
        for (const auto& g : b.gens_) gens.push_back(Monomial::lcm(f, g));
    }
    return MonomialIdeal(a.nvars_, std::move(gens));
}

MonomialIdeal MonomialIdeal::colon(const Monomial& m) const {
    std::vector<Monomial> gens;
    gens.reserve(gens_.size());
    for (const auto& g : gens_) gens.push_back(g.divide(Monomial::gcd(g, m)));
    return MonomialIdeal(nvars_, std::move(gens));
}

MonomialIdeal MonomialIdeal::colon(const MonomialIdeal& j) const {
    require_same_ambient(j);
    if (j.is_zero()) return unit(nvars_); // I : (0) = (1)
    MonomialIdeal acc = colon(j.gens_[0]);
    for (std::size_t i = 1; i < j.gens_.size(); ++i) {
        acc = intersect(acc, colon(j.gens_[i]));
    }
    return acc;
}

std::string MonomialIdeal::str() const {
    if (gens_.empty()) return "(0)";
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ", ";
        out += gens_[i].str();
    }
    return out + ")";
}

} // namespace knutson
