#ifndef KNUTSON_PRIME_FIELD_HPP
#define KNUTSON_PRIME_FIELD_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "knutson/errors.hpp"

namespace knutson {

// Deterministic Miller-Rabin primality test, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Largest modulus accepted for prime-field arithmetic.  Keeping p below
// 2^62 leaves comfortable headroom for the 128-bit intermediate products.
inline constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 62) - 1;

// Throws BadPrime unless p is a prime with 2 <= p <= kMaxPrime.
void check_prime_modulus(std::uint64_t p);

// Element of the prime field Z/p.  Every element carries its modulus, and
// mixed-modulus arithmetic throws AmbientMismatch.  Constructors reduce the
// value but assume the modulus was validated (use check_prime_modulus or
// FieldDescriptor::prime_field at the boundary).
class Fp {
public:
    Fp(std::uint64_t value, std::uint64_t p) : r_(value % p), p_(p) {}
    static Fp from_signed(long long value, std::uint64_t p);

    std::uint64_t residue() const { return r_; }
    std::uint64_t modulus() const { return p_; }

    bool is_zero() const { return r_ == 0; }
    bool is_one() const { return r_ == 1; }

    Fp operator-() const { return Fp(r_ == 0 ? 0 : p_ - r_, p_); }
    Fp& operator+=(const Fp& o);
    Fp& operator-=(const Fp& o);
    Fp& operator*=(const Fp& o);
    Fp& operator/=(const Fp& o);
    Fp inverse() const;

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }

    friend bool operator==(const Fp& a, const Fp& b) {
        return a.p_ == b.p_ && a.r_ == b.r_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    std::string str() const { return std::to_string(r_); }

private:
    void require_same_field(const Fp& o) const;
    std::uint64_t r_;
    std::uint64_t p_;
};

std::ostream& operator<<(std::ostream& os, const Fp& a);

} // namespace knutson

#endif
