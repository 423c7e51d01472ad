#include "knutson/prime_field.hpp"

#include <array>
#include <ostream>

namespace knutson {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128{a} * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 acc = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) acc = mulmod(acc, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return acc;
}

} // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                  29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set decides primality exactly for every 64-bit integer.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                  29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

void check_prime_modulus(u64 p) {
    if (p > kMaxPrime) throw BadPrime(p, "modulus exceeds supported range");
    if (!is_prime_u64(p)) throw BadPrime(p, "not prime");
}

Fp Fp::from_signed(long long value, u64 p) {
    long long r = value % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return Fp(static_cast<u64>(r), p);
}

void Fp::require_same_field(const Fp& o) const {
    if (p_ != o.p_) {
        throw AmbientMismatch("prime-field elements with moduli " +
                              std::to_string(p_) + " and " + std::to_string(o.p_));
    }
}

Fp& Fp::operator+=(const Fp& o) {
    require_same_field(o);
    r_ += o.r_; // p < 2^62, so no overflow
    if (r_ >= p_) r_ -= p_;
    return *this;
}

Fp& Fp::operator-=(const Fp& o) {
    require_same_field(o);
    r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + p_ - o.r_;
    return *this;
}

Fp& Fp::operator*=(const Fp& o) {
    require_same_field(o);
    r_ = mulmod(r_, o.r_, p_);
    return *this;
}

Fp Fp::inverse() const {
    if (r_ == 0) throw DivisionByZero();
    return Fp(powmod(r_, p_ - 2, p_), p_);
}

Fp& Fp::operator/=(const Fp& o) {
    require_same_field(o);
    return *this *= o.inverse();
}

std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.str(); }

} // namespace knutson
