#ifndef KNUTSON_ERRORS_HPP
#define KNUTSON_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace knutson {

// Root of every exception thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Inverting or dividing by the zero element of a field.
class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

// A modulus that is not a prime in the supported range.
class BadPrime : public Error {
public:
    explicit BadPrime(std::uint64_t p, const std::string& why = "not a usable prime")
        : Error("bad prime " + std::to_string(p) + ": " + why), prime(p) {}
    std::uint64_t prime;
};

// Two objects from incompatible ambient rings (different variable counts,
// different term orders, or different coefficient moduli) were combined.
class AmbientMismatch : public Error {
public:
    explicit AmbientMismatch(const std::string& what) : Error(what) {}
};

// The zero polynomial was passed where a nonzero one is required
// (leading term, S-polynomial input, witness, ...).
class ZeroPolynomial : public Error {
public:
    explicit ZeroPolynomial(const std::string& context)
        : Error("zero polynomial not allowed: " + context) {}
};

// The zero ideal was passed where a nonzero one is required.
class ZeroIdeal : public Error {
public:
    explicit ZeroIdeal(const std::string& context)
        : Error("zero ideal not allowed: " + context) {}
};

// A zero witness polynomial was offered to a colon step.
class ZeroWitness : public Error {
public:
    ZeroWitness() : Error("witness polynomial must be nonzero") {}
};

// A closure seed whose leading monomial is not squarefree.
class SeedRejected : public Error {
public:
    explicit SeedRejected(const std::string& leading_monomial)
        : Error("seed rejected: leading monomial " + leading_monomial +
                " is not squarefree") {}
};

// An ideal produced during a closure run has a non-squarefree initial ideal.
// Every member of a correctly generated family has a squarefree initial
// ideal, so this indicates a seed outside the supported class or a defect.
class SquarefreeViolation : public Error {
public:
    explicit SquarefreeViolation(const std::string& detail)
        : Error("squarefree initial ideal violated: " + detail) {}
};

// Reducing an object mod p wiped it out entirely (every coefficient
// divisible by p after clearing denominators).
class ZeroReduction : public Error {
public:
    explicit ZeroReduction(std::uint64_t p)
        : Error("reduction mod " + std::to_string(p) + " is zero") {}
};

// Input text rejected by the polynomial parser.  Offsets are 1-based byte
// positions into the input string.
class ParseError : public Error {
public:
    ParseError(std::size_t byte_offset, const std::string& why)
        : Error("parse error at offset " + std::to_string(byte_offset) + ": " + why),
          offset(byte_offset) {}
    std::size_t offset;
};

// A closure run hit its member or iteration cap.  The engine throws a
// subclass carrying the partial family; this base lets callers catch the
// condition without knowing the coefficient type.
class CapExceeded : public Error {
public:
    explicit CapExceeded(const std::string& what) : Error(what) {}
};

} // namespace knutson

#endif
