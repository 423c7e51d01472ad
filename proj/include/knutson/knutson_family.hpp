#ifndef KNUTSON_KNUTSON_FAMILY_HPP
#define KNUTSON_KNUTSON_FAMILY_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "knutson/ideal_ops.hpp"

namespace knutson {

// How the closure engine picks colon witnesses:
//   member_generators  every element of every member's reduced basis
//   single_variables   x1..xn
//   user_supplied      caller-provided polynomials, tried in order
// The pool is deduplicated by canonical text and grows as members join.
template <class K>
struct WitnessPolicy {
    bool member_generators = true;
    bool single_variables = true;
    std::vector<Polynomial<K>> user_supplied;
};

struct ClosureCaps {
    std::size_t max_members = 10000;
    std::size_t max_iterations = 1000;
};

// How a member entered the family: the seed, or an operation applied to
// earlier members (parents index into the member list).
struct Provenance {
    std::string op; // "seed", "colon", "sum", "intersect"
    std::vector<std::size_t> parents;
    std::string witness; // colon only
};

struct ClosureStats {
    std::size_t iterations = 0;
    std::size_t colon_ops = 0;
    std::size_t sum_ops = 0;
    std::size_t intersect_ops = 0;
    std::size_t membership_shortcuts = 0;   // colon by a member element
    std::size_t containment_shortcuts = 0;  // nested pair sum/intersection
    std::uint64_t gb_runs = 0;
    std::size_t witness_pool_size = 0;
};

template <class K>
struct FamilyMember {
    Ideal<K> ideal;
    std::string key; // reduced-basis serialization under the family order
    Provenance provenance;
};

// The smallest set of ideals containing the principal ideal (seed) that is
// closed under colon by the witness pool, pairwise sums, and pairwise
// intersections, computed as a deterministic breadth-first fixpoint.
// Every member has a squarefree initial ideal under the family order; a
// violation aborts the run since it proves the seed unsupported.
template <class K>
class KnutsonFamily {
public:
    KnutsonFamily(Polynomial<K> seed, TermOrderPtr ord)
        : seed_(std::move(seed)), ord_(std::move(ord)) {}

    const Polynomial<K>& seed() const { return seed_; }
    const TermOrderPtr& order() const { return ord_; }
    const std::vector<FamilyMember<K>>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    const ClosureStats& stats() const { return stats_; }
    const std::vector<Polynomial<K>>& witness_pool() const { return pool_; }

    std::optional<std::size_t> find_key(const std::string& key) const {
        for (std::size_t i = 0; i < members_.size(); ++i) {
            if (members_[i].key == key) return i;
        }
        return std::nullopt;
    }
    // Membership of an ideal is decided by its canonical reduced basis.
    std::optional<std::size_t> find_ideal(const Ideal<K>& ideal) const {
        return find_key(ideal.groebner(ord_).key());
    }

private:
    template <class K2>
    friend KnutsonFamily<K2> knutson_closure(Polynomial<K2> seed, TermOrderPtr ord,
                                             const WitnessPolicy<K2>& policy,
                                             const ClosureCaps& caps);

    Polynomial<K> seed_;
    TermOrderPtr ord_;
    std::vector<FamilyMember<K>> members_;
    std::vector<Polynomial<K>> pool_;
    ClosureStats stats_;
};

// Thrown when a closure run exceeds a cap; carries the partial family.
template <class K>
class ClosureCapExceeded : public CapExceeded {
public:
    ClosureCapExceeded(const std::string& what, KnutsonFamily<K> partial_family)
        : CapExceeded(what), partial(std::move(partial_family)) {}
    KnutsonFamily<K> partial;
};

// Leading-term admission check for closure seeds.
template <class K>
void check_seed(const Polynomial<K>& seed) {
    if (seed.is_zero()) throw ZeroPolynomial("closure seed");
    if (!seed.leading_monomial().is_squarefree()) {
        throw SeedRejected(seed.leading_monomial().str());
    }
}

template <class K>
KnutsonFamily<K> knutson_closure(Polynomial<K> seed, TermOrderPtr ord,
                                 const WitnessPolicy<K>& policy,
                                 const ClosureCaps& caps = {}) {
    Polynomial<K> seed_view = (*seed.order() == *ord) ? seed : seed.with_order(ord);
    check_seed(seed_view);
    std::uint64_t gb_runs_at_start = gb_run_counter();

    KnutsonFamily<K> fam(seed_view, ord);
    std::size_t n = seed_view.nvars();
    K one = coeff_one_like(seed_view.leading_coeff());

    std::set<std::string> pool_seen;
    auto offer_witness = [&](const Polynomial<K>& w) {
        if (w.is_zero()) return;
        if (pool_seen.insert(w.str()).second) fam.pool_.push_back(w);
    };

    // Fixed leading section of the pool: variables, then user witnesses.
    if (policy.single_variables) {
        for (std::size_t i = 0; i < n; ++i) {
            offer_witness(Polynomial<K>::monomial(n, ord, one, Monomial::variable(n, i)));
        }
    }
    for (const auto& w : policy.user_supplied) {
        offer_witness((*w.order() == *ord) ? w : w.with_order(ord));
    }

    // Inserts an ideal if its canonical basis is new; enforces the
    // squarefree-initial invariant and the member cap.
    auto insert = [&](Ideal<K> ideal, Provenance prov) -> bool {
        const ReducedGB<K>& gb = ideal.groebner(ord);
        std::string key = gb.key();
        if (fam.find_key(key)) return false;
        MonomialIdeal init = gb.initial();
        if (!init.is_squarefree()) {
            throw SquarefreeViolation("member " + init.str() + " from op " + prov.op);
        }
        if (fam.members_.size() >= caps.max_members) {
            fam.stats_.gb_runs = gb_run_counter() - gb_runs_at_start;
            fam.stats_.witness_pool_size = fam.pool_.size();
            throw ClosureCapExceeded<K>(
                "closure exceeded member cap " + std::to_string(caps.max_members),
                fam);
        }
        if (policy.member_generators) {
            for (const auto& g : gb.basis) offer_witness(g);
        }
        fam.members_.push_back(FamilyMember<K>{std::move(ideal), std::move(key),
                                               std::move(prov)});
        return true;
    };

    insert(Ideal<K>::principal(seed_view), Provenance{"seed", {}, ""});

    std::set<std::pair<std::size_t, std::string>> colon_done;
    std::set<std::pair<std::string, std::string>> pair_done;

    for (;;) {
        if (fam.stats_.iterations >= caps.max_iterations) {
            fam.stats_.gb_runs = gb_run_counter() - gb_runs_at_start;
            fam.stats_.witness_pool_size = fam.pool_.size();
            throw ClosureCapExceeded<K>(
                "closure exceeded iteration cap " + std::to_string(caps.max_iterations),
                fam);
        }
        ++fam.stats_.iterations;
        bool grew = false;

        // Snapshot: ops discovered this round run against the state at the
        // round's start; fresh members and witnesses wait for the next one.
        std::size_t m_snap = fam.members_.size();
        std::size_t w_snap = fam.pool_.size();

        // Colon every member by every witness.  Note: insert() appends to
        // the member list and the witness pool, so loop bodies work on
        // copies, never on references into those vectors.
        for (std::size_t i = 0; i < m_snap; ++i) {
            for (std::size_t w = 0; w < w_snap; ++w) {
                Polynomial<K> witness = fam.pool_[w];
                if (!colon_done.emplace(i, witness.str()).second) continue;
                ++fam.stats_.colon_ops;
                Ideal<K> result = Ideal<K>::zero(n, ord);
                if (witness.is_constant()) {
                    // I : (c) = I for a unit constant.
                    result = fam.members_[i].ideal;
                    ++fam.stats_.membership_shortcuts;
                } else if (ideal_member(witness, fam.members_[i].ideal)) {
                    // w in I forces I : (w) = (1).
                    result = Ideal<K>(n, ord, {Polynomial<K>::constant(n, ord, one)});
                    ++fam.stats_.membership_shortcuts;
                } else {
                    result = ideal_colon(fam.members_[i].ideal, witness);
                }
                grew |= insert(std::move(result),
                               Provenance{"colon", {i}, witness.str()});
            }
        }

        // Sums and intersections of member pairs.  Comparable pairs
        // short-circuit: I in J gives I + J = J and I cap J = I.
        for (std::size_t i = 0; i < m_snap; ++i) {
            for (std::size_t j = i + 1; j < m_snap; ++j) {
                if (!pair_done.emplace(fam.members_[i].key, fam.members_[j].key).second) {
                    continue;
                }
                ++fam.stats_.sum_ops;
                ++fam.stats_.intersect_ops;
                Ideal<K> a = fam.members_[i].ideal;
                Ideal<K> b = fam.members_[j].ideal;
                if (ideal_contains(b, a)) {
                    ++fam.stats_.containment_shortcuts;
                    grew |= insert(b, Provenance{"sum", {i, j}, ""});
                    grew |= insert(a, Provenance{"intersect", {i, j}, ""});
                } else if (ideal_contains(a, b)) {
                    ++fam.stats_.containment_shortcuts;
                    grew |= insert(a, Provenance{"sum", {i, j}, ""});
                    grew |= insert(b, Provenance{"intersect", {i, j}, ""});
                } else {
                    grew |= insert(ideal_sum(a, b), Provenance{"sum", {i, j}, ""});
                    grew |= insert(ideal_intersect(a, b),
                                   Provenance{"intersect", {i, j}, ""});
                }
            }
        }

        if (!grew) break;
    }

    fam.stats_.gb_runs = gb_run_counter() - gb_runs_at_start;
    fam.stats_.witness_pool_size = fam.pool_.size();
    return fam;
}

// Post-hoc certification of the structural properties every generated
// family must satisfy: squarefree initial ideals; the union of two
// members' reduced bases is a basis of their sum; leading terms distribute
// over intersections.  Intersections are recomputed honestly here, without
// the closure's containment shortcuts.
struct CertifyReport {
    std::size_t members_checked = 0;
    std::size_t pairs_checked = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

template <class K>
CertifyReport certify_family(const KnutsonFamily<K>& fam) {
    CertifyReport report;
    const auto& ms = fam.members();
    const TermOrderPtr& ord = fam.order();
    for (std::size_t i = 0; i < ms.size(); ++i) {
        ++report.members_checked;
        if (!initial_ideal(ms[i].ideal, ord).is_squarefree()) {
            report.violations.push_back("member " + std::to_string(i) +
                                        " has a non-squarefree initial ideal");
        }
    }
    for (std::size_t i = 0; i < ms.size(); ++i) {
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
            ++report.pairs_checked;
            if (!is_union_groebner(ms[i].ideal, ms[j].ideal, ord)) {
                report.violations.push_back(
                    "union of bases " + std::to_string(i) + "," + std::to_string(j) +
                    " is not a basis of the sum");
            }
            MonomialIdeal lhs =
                initial_ideal(ideal_intersect(ms[i].ideal, ms[j].ideal), ord);
            MonomialIdeal rhs = MonomialIdeal::intersect(
                initial_ideal(ms[i].ideal, ord), initial_ideal(ms[j].ideal, ord));
            if (lhs != rhs) {
                report.violations.push_back(
                    "leading terms of intersection " + std::to_string(i) + "," +
                    std::to_string(j) + " do not distribute");
            }
        }
    }
    return report;
}

} // namespace knutson

#endif
