#ifndef KNUTSON_MONOMIAL_HPP
#define KNUTSON_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "knutson/errors.hpp"

namespace knutson {

// Exponent vector of a power product in a fixed number of variables.  The
// total degree is kept in sync with the exponents, and exponent arithmetic
// is overflow-checked.
class Monomial {
public:
    explicit Monomial(std::size_t nvars) : e_(nvars, 0), deg_(0) {}
    explicit Monomial(std::vector<std::uint32_t> exponents);

    static Monomial one(std::size_t nvars) { return Monomial(nvars); }
    static Monomial variable(std::size_t nvars, std::size_t index);

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t exponent(std::size_t i) const { return e_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }
    std::uint64_t degree() const { return deg_; }

    bool is_one() const { return deg_ == 0; }
    // No exponent exceeds 1.
    bool is_squarefree() const;
    // Indices of variables with positive exponent.
    std::vector<std::size_t> support() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    // Exact quotient this / o; requires o.divides-free check by the caller
    // being wrong to be a defect, so it throws Error if not divisible.
    Monomial divide(const Monomial& o) const;

    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);
    static bool coprime(const Monomial& a, const Monomial& b);

    // Insert a fresh variable slot (exponent 0) at position `pos`, shifting
    // later variables up; used to adjoin an elimination variable.
    Monomial extended(std::size_t pos) const;
    // Remove the variable slot at `pos`; its exponent must be 0.
    Monomial restricted(std::size_t pos) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    // Structural (entry-wise lexicographic) comparison.  This is a plain
    // container ordering for use in maps and canonical generator lists, not
    // a term order; term orders live in TermOrder.
    friend bool operator<(const Monomial& a, const Monomial& b);

    // Power-product text like "x1*x3^2"; "1" for the empty product.  Names
    // follow the default scheme x1..xn; richer naming lives in poly_io.
    std::string str() const;

private:
    void require_same_ambient(const Monomial& o) const;
    std::vector<std::uint32_t> e_;
    std::uint64_t deg_;
};

} // namespace knutson

#endif
