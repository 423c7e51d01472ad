#ifndef KNUTSON_SUITES_HPP
#define KNUTSON_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "knutson/hankel.hpp"
#include "knutson/modp.hpp"

namespace knutson {

// A suite parameter outside the desk-scale bounds.  Callers treat this as a
// usage error (the parameter is refused), not as a failed check.
class DeskScaleGuard : public Error {
public:
    explicit DeskScaleGuard(const std::string& what) : Error(what) {}
};

// Bounds the named suites enforce before computing anything.
struct SuiteLimits {
    std::size_t max_square_m = 3;
    std::size_t max_rect_m = 2;
    std::size_t max_monomial_n = 3;
    std::uint64_t max_scan_prime = 100000;
};

// One verified claim inside a suite: a stable anchor naming the claim the
// check instantiates, a human-readable name, and the compared values.
struct SuiteCheck {
    std::string anchor;
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteCheck> checks;

    bool ok() const;
    std::size_t failed() const;

    // Deterministic serializations: same report, same bytes.
    std::string json() const;  // machine format
    std::string table() const; // human-readable, one line per check
};

// The claim anchor for a check line produced by the Hankel verification
// helpers, derived from its stable name.
std::string claim_anchor(const std::string& check_name);

// Ascending primes in [2, bound].
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

// Named reproduction suites.  Every suite returns the full check list; a
// parameter outside `limits` raises DeskScaleGuard before any work starts.
//
//   hankel-square        the m x m generic Hankel matrix on x1..x_{2m-1}:
//                        closed-form invariants, decomposition identities,
//                        closure membership and characterization, family
//                        certification over Q and F_101, prime scans.
//   hankel-rect          the m x (m+1) matrix on x1..x_{2m}: the same
//                        pipeline without the square-only identities.
//   modp                 reduction compatibility: a seeded bad-prime
//                        example and the Hankel ideals over every prime
//                        up to 101.
//   squarefree-monomial  closure of x1*...*xn against the antichain
//                        census, with certification and determinism.
SuiteReport run_suite_hankel_square(std::size_t m, const SuiteLimits& limits = {});
SuiteReport run_suite_hankel_rect(std::size_t m, const SuiteLimits& limits = {});
SuiteReport run_suite_modp(const SuiteLimits& limits = {});
SuiteReport run_suite_squarefree_monomial(std::size_t n, const SuiteLimits& limits = {});

// Targeted verification behind `hankel verify`: characteristic 0 checks the
// closed forms, decompositions and membership; characteristic p recomputes
// the closure over F_p and compares it to the rational family.
SuiteReport run_hankel_verify(std::size_t m, bool square, std::uint64_t characteristic,
                              const SuiteLimits& limits = {});

} // namespace knutson

#endif
