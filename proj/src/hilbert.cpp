#include "knutson/hilbert.hpp"

#include <algorithm>

#include "knutson/errors.hpp"

namespace knutson {

namespace {

using Poly1 = std::vector<long long>; // univariate integer polynomial in z

Poly1 poly1_one() { return {1}; }

void poly1_sub_shifted(Poly1& a, const Poly1& b, std::size_t shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= b[i];
}

Poly1 poly1_mul(const Poly1& a, const Poly1& b) {
    Poly1 r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

void poly1_trim(Poly1& a) {
    while (a.size() > 1 && a.back() == 0) a.pop_back();
}

Poly1 numerator(const MonomialIdeal& ideal) {
    const auto& gens = ideal.generators();
    if (gens.empty()) return poly1_one();
    if (ideal.is_unit()) return {0};

    bool pairwise_coprime = true;
    for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            if (!Monomial::coprime(gens[i], gens[j])) {
                pairwise_coprime = false;
                break;
            }
        }
    }
    if (pairwise_coprime) {
        // A complete intersection of monomials: HN = prod (1 - z^deg).
        Poly1 r = poly1_one();
        for (const auto& g : gens) {
            Poly1 factor(g.degree() + 1, 0);
            factor[0] = 1;
            factor[g.degree()] = -1;
            r = poly1_mul(r, factor);
        }
        return r;
    }

    // Split off the last generator m:  HN(J + (m)) = HN(J) - z^deg HN(J:m).
    std::vector<Monomial> rest(gens.begin(), gens.end() - 1);
    const Monomial& m = gens.back();
    MonomialIdeal j(ideal.nvars(), rest);
    Poly1 a = numerator(j);
    Poly1 b = numerator(j.colon(m));
    poly1_sub_shifted(a, b, m.degree());
    poly1_trim(a);
    return a;
}

} // namespace

std::vector<long long> hilbert_numerator(const MonomialIdeal& ideal) {
    Poly1 r = numerator(ideal);
    poly1_trim(r);
    return r;
}

HilbertSummary hilbert_summary(const MonomialIdeal& ideal) {
    HilbertSummary s;
    Poly1 h = hilbert_numerator(ideal);
    long long n = static_cast<long long>(ideal.nvars());
    if (h.size() == 1 && h[0] == 0) {
        // S/I is the zero ring.
        s.unit = true;
        s.h_vector = {};
        s.dim = -1;
        s.height = n;
        s.multiplicity = 0;
        return s;
    }
    // Cancel every (1-z) factor: h(1) == 0 means (1-z) | h.
    long long cancelled = 0;
    for (;;) {
        long long at_one = 0;
        for (long long c : h) at_one += c;
        if (at_one != 0) break;
        // Synthetic division by (1-z): q_i = q_{i-1} + h_i.
        Poly1 q(h.size() - 1, 0);
        long long carry = 0;
        for (std::size_t i = 0; i + 1 < h.size(); ++i) {
            carry += h[i];
            q[i] = carry;
        }
        h = std::move(q);
        poly1_trim(h);
        ++cancelled;
    }
    s.h_vector = h;
    s.dim = n - cancelled;
    s.height = cancelled;
    s.multiplicity = 0;
    for (long long c : h) s.multiplicity += c;
    return s;
}

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i; // exact: r*(n-k+i) is divisible by i here
    }
    return r;
}

std::vector<long long> hankel_minor_hvector(long long t, long long s) {
    if (t < 1 || t > s) {
        throw Error("hankel h-vector parameters need 1 <= t <= s, got t = " +
                    std::to_string(t) + ", s = " + std::to_string(s));
    }
    std::vector<long long> h(static_cast<std::size_t>(t));
    for (long long i = 0; i < t; ++i) {
        h[static_cast<std::size_t>(i)] = binomial(s - t + i, i);
    }
    return h;
}

long long hankel_minor_multiplicity(long long t, long long s) {
    std::vector<long long> h = hankel_minor_hvector(t, s);
    long long e = 0;
    for (long long c : h) e += c;
    return e;
}

long long hankel_minor_height(long long t, long long n) {
    if (t < 1 || n - 2 * t + 2 < 0) {
        throw Error("hankel height parameters out of range: t = " + std::to_string(t) +
                    ", n = " + std::to_string(n));
    }
    return n - 2 * t + 2;
}

std::vector<long long> sum_hvector_from_parts(const std::vector<long long>& h,
                                              SumHVectorCase which) {
    std::vector<long long> sums(h.size());
    long long acc = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        acc += h[i];
        sums[i] = acc;
    }
    std::vector<long long> out;
    if (h.empty()) return out;
    if (which == SumHVectorCase::p1_plus_p2) {
        // (S_0, ..., S_{t-1}, S_{t-2}, ..., S_0), odd length 2t - 1
        for (std::size_t i = 0; i < sums.size(); ++i) out.push_back(sums[i]);
    } else {
        // (S_0, ..., S_{t-2}, S_{t-2}, ..., S_0), even length 2t - 2
        for (std::size_t i = 0; i + 1 < sums.size(); ++i) out.push_back(sums[i]);
    }
    for (std::size_t i = sums.size() - 1; i-- > 0;) out.push_back(sums[i]);
    return out;
}

std::string HilbertSummary::str() const {
    std::string out = "h = (";
    for (std::size_t i = 0; i < h_vector.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(h_vector[i]);
    }
    out += "), dim = " + std::to_string(dim) + ", height = " + std::to_string(height) +
           ", e = " + std::to_string(multiplicity);
    return out;
}

} // namespace knutson
