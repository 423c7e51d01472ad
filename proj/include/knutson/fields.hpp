#ifndef KNUTSON_FIELDS_HPP
#define KNUTSON_FIELDS_HPP

#include <cstdint>
#include <string>

#include "knutson/prime_field.hpp"
#include "knutson/rational.hpp"

namespace knutson {

// Which coefficient field a computation runs over: Q (characteristic 0) or
// Z/p for a validated prime p.
struct FieldDescriptor {
    std::uint64_t characteristic = 0;

    static FieldDescriptor rationals() { return FieldDescriptor{0}; }
    static FieldDescriptor prime_field(std::uint64_t p) {
        check_prime_modulus(p);
        return FieldDescriptor{p};
    }

    bool is_rationals() const { return characteristic == 0; }
    std::string str() const {
        return is_rationals() ? "Q" : "F" + std::to_string(characteristic);
    }
    friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

// Image of a rational number in Z/p.  Throws BadPrime if p divides the
// denominator (the number has no image) and validates p on entry.
inline Fp reduce_rational_mod_p(const Rational& q, std::uint64_t p) {
    check_prime_modulus(p);
    std::uint64_t den = mpz_fdiv_ui(q.denominator().get_mpz_t(), p);
    if (den == 0) throw BadPrime(p, "divides the denominator of " + q.str());
    std::uint64_t num = mpz_fdiv_ui(q.numerator().get_mpz_t(), p);
    return Fp(num, p) / Fp(den, p);
}

// Uniform coefficient interface used by the templated polynomial layer.
inline Rational coeff_zero_like(const Rational&) { return Rational(0); }
inline Rational coeff_one_like(const Rational&) { return Rational(1); }
inline Fp coeff_zero_like(const Fp& a) { return Fp(0, a.modulus()); }
inline Fp coeff_one_like(const Fp& a) { return Fp(1, a.modulus()); }

inline std::string coeff_str(const Rational& q) { return q.str(); }
inline std::string coeff_str(const Fp& a) { return a.str(); }

inline FieldDescriptor field_of(const Rational&) { return FieldDescriptor::rationals(); }
inline FieldDescriptor field_of(const Fp& a) { return FieldDescriptor{a.modulus()}; }

// True when the coefficient prints as a negative quantity (used only to
// typeset "a - b" instead of "a + -b"; prime-field residues are never
// negative).
inline bool coeff_prints_negative(const Rational& q) { return q.sign() < 0; }
inline bool coeff_prints_negative(const Fp&) { return false; }

} // namespace knutson

#endif
