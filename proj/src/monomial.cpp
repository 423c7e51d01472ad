#include "knutson/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace knutson {

namespace {
constexpr std::uint32_t kMaxExponent = std::numeric_limits<std::uint32_t>::max();
}

Monomial::Monomial(std::vector<std::uint32_t> exponents)
    : e_(std::move(exponents)),
      deg_(std::accumulate(e_.begin(), e_.end(), std::uint64_t{0})) {}

Monomial Monomial::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw Error("variable index out of range");
    Monomial m(nvars);
    m.e_[index] = 1;
    m.deg_ = 1;
    return m;
}

bool Monomial::is_squarefree() const {
    return std::all_of(e_.begin(), e_.end(), [](std::uint32_t e) { return e <= 1; });
}

std::vector<std::size_t> Monomial::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] > 0) s.push_back(i);
    }
    return s;
}

void Monomial::require_same_ambient(const Monomial& o) const {
    if (e_.size() != o.e_.size()) {
        throw AmbientMismatch("monomials in " + std::to_string(e_.size()) + " and " +
                              std::to_string(o.e_.size()) + " variables");
    }
}

Monomial Monomial::operator*(const Monomial& o) const {
    require_same_ambient(o);
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (o.e_[i] > kMaxExponent - r.e_[i]) throw Error("exponent overflow");
        r.e_[i] += o.e_[i];
    }
    r.deg_ += o.deg_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    require_same_ambient(o);
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] > o.e_[i]) return false;
    }
    return true;
}

Monomial Monomial::divide(const Monomial& o) const {
    require_same_ambient(o);
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (o.e_[i] > r.e_[i]) throw Error("non-exact monomial division");
        r.e_[i] -= o.e_[i];
    }
    r.deg_ -= o.deg_;
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    a.require_same_ambient(b);
    Monomial r(a);
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    r.deg_ = std::accumulate(r.e_.begin(), r.e_.end(), std::uint64_t{0});
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    a.require_same_ambient(b);
    Monomial r(a);
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
    r.deg_ = std::accumulate(r.e_.begin(), r.e_.end(), std::uint64_t{0});
    return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
    a.require_same_ambient(b);
    for (std::size_t i = 0; i < a.e_.size(); ++i) {
        if (a.e_[i] > 0 && b.e_[i] > 0) return false;
    }
    return true;
}

Monomial Monomial::extended(std::size_t pos) const {
    if (pos > e_.size()) throw Error("extension position out of range");
    Monomial r(*this);
    r.e_.insert(r.e_.begin() + static_cast<std::ptrdiff_t>(pos), 0);
    return r;
}

Monomial Monomial::restricted(std::size_t pos) const {
    if (pos >= e_.size()) throw Error("restriction position out of range");
    if (e_[pos] != 0) throw Error("cannot drop a variable with positive exponent");
    Monomial r(*this);
    r.e_.erase(r.e_.begin() + static_cast<std::ptrdiff_t>(pos));
    return r;
}

bool operator<(const Monomial& a, const Monomial& b) {
    a.require_same_ambient(b);
    return a.e_ < b.e_;
}

std::string Monomial::str() const {
    if (is_one()) return "1";
    std::string out;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(i + 1);
        if (e_[i] > 1) out += "^" + std::to_string(e_[i]);
    }
    return out;
}

} // namespace knutson
