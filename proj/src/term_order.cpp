#include "knutson/term_order.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>

#include "knutson/errors.hpp"

namespace knutson {

namespace {

// Exact rank over Q by Gaussian elimination; the matrices involved are the
// handful of rows of a user-supplied order, so clarity beats speed.
std::size_t rational_rank(const std::vector<std::vector<long long>>& rows) {
    if (rows.empty()) return 0;
    std::size_t m = rows.size(), n = rows[0].size();
    std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(rows[i][j]);
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t pivot = rank;
        while (pivot < m && a[pivot][col] == 0) ++pivot;
        if (pivot == m) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t i = rank + 1; i < m; ++i) {
            if (a[i][col] == 0) continue;
            mpq_class f = a[i][col] / a[rank][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::string matrix_key(const std::vector<std::vector<long long>>& rows) {
    std::string k = "matrix[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) k += ";";
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j) k += ",";
            k += std::to_string(rows[i][j]);
        }
    }
    return k + "]";
}

} // namespace

TermOrderPtr TermOrder::lex() {
    static const TermOrderPtr instance = [] {
        auto o = std::shared_ptr<TermOrder>(new TermOrder());
        o->kind_ = Kind::Lex;
        o->key_ = "lex";
        return o;
    }();
    return instance;
}

TermOrderPtr TermOrder::grevlex() {
    static const TermOrderPtr instance = [] {
        auto o = std::shared_ptr<TermOrder>(new TermOrder());
        o->kind_ = Kind::Grevlex;
        o->key_ = "grevlex";
        return o;
    }();
    return instance;
}

TermOrderPtr TermOrder::matrix(std::vector<std::vector<long long>> rows) {
    if (rows.empty() || rows[0].empty()) throw Error("order matrix must be nonempty");
    std::size_t n = rows[0].size();
    for (const auto& r : rows) {
        if (r.size() != n) throw Error("order matrix rows have unequal lengths");
    }
    if (rational_rank(rows) != n) {
        throw Error("order matrix does not have full column rank");
    }
    for (std::size_t j = 0; j < n; ++j) {
        long long first = 0;
        for (std::size_t i = 0; i < rows.size() && first == 0; ++i) first = rows[i][j];
        if (first <= 0) {
            throw Error("order matrix column " + std::to_string(j + 1) +
                        " does not start with a positive entry");
        }
    }
    auto o = std::shared_ptr<TermOrder>(new TermOrder());
    o->kind_ = Kind::Matrix;
    o->rows_ = std::move(rows);
    o->key_ = matrix_key(o->rows_);
    return o;
}

TermOrderPtr TermOrder::block(std::size_t block, TermOrderPtr first, TermOrderPtr rest) {
    if (!first || !rest) throw Error("block order requires two component orders");
    if (block == 0) throw Error("block order requires a positive split");
    auto o = std::shared_ptr<TermOrder>(new TermOrder());
    o->kind_ = Kind::Block;
    o->block_ = block;
    o->first_ = std::move(first);
    o->rest_ = std::move(rest);
    o->key_ = "block(" + std::to_string(block) + ";" + o->first_->key() + ";" +
              o->rest_->key() + ")";
    return o;
}

void TermOrder::require_width(std::size_t len) const {
    switch (kind_) {
    case Kind::Lex:
    case Kind::Grevlex:
        return;
    case Kind::Matrix:
        if (len != rows_[0].size()) {
            throw AmbientMismatch("matrix order over " +
                                  std::to_string(rows_[0].size()) +
                                  " variables applied to " + std::to_string(len));
        }
        return;
    case Kind::Block:
        if (len < block_) {
            throw AmbientMismatch("block order split " + std::to_string(block_) +
                                  " applied to " + std::to_string(len) + " variables");
        }
        first_->require_width(block_);
        rest_->require_width(len - block_);
        return;
    }
}

void TermOrder::require_applicable(std::size_t nvars) const { require_width(nvars); }

int TermOrder::compare_range(const std::uint32_t* a, const std::uint32_t* b,
                             std::size_t len) const {
    switch (kind_) {
    case Kind::Lex:
        for (std::size_t i = 0; i < len; ++i) {
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
    case Kind::Grevlex: {
        std::uint64_t da = std::accumulate(a, a + len, std::uint64_t{0});
        std::uint64_t db = std::accumulate(b, b + len, std::uint64_t{0});
        if (da != db) return da > db ? 1 : -1;
        // Equal degree: the monomial with the smaller exponent at the last
        // differing position is the larger one.
        for (std::size_t i = len; i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        }
        return 0;
    }
    case Kind::Matrix:
        for (const auto& row : rows_) {
            __int128 s = 0;
            for (std::size_t j = 0; j < len; ++j) {
                s += static_cast<__int128>(row[j]) *
                     (static_cast<__int128>(a[j]) - static_cast<__int128>(b[j]));
            }
            if (s != 0) return s > 0 ? 1 : -1;
        }
        return 0;
    case Kind::Block: {
        int head = first_->compare_range(a, b, block_);
        if (head != 0) return head;
        return rest_->compare_range(a + block_, b + block_, len - block_);
    }
    }
    throw Error("unreachable term-order kind");
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars()) {
        throw AmbientMismatch("comparing monomials in " + std::to_string(a.nvars()) +
                              " and " + std::to_string(b.nvars()) + " variables");
    }
    require_width(a.nvars());
    if (a.nvars() == 0) return 0;
    return compare_range(a.exponents().data(), b.exponents().data(), a.nvars());
}

namespace {

TermOrderPtr parse_key(const std::string& s, std::size_t& pos);

std::size_t parse_size(const std::string& s, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw Error("bad term-order key: number expected in " + s);
    return static_cast<std::size_t>(std::stoull(s.substr(start, pos - start)));
}

void expect(const std::string& s, std::size_t& pos, char c) {
    if (pos >= s.size() || s[pos] != c) {
        throw Error(std::string("bad term-order key: expected '") + c + "' in " + s);
    }
    ++pos;
}

TermOrderPtr parse_key(const std::string& s, std::size_t& pos) {
    auto starts = [&](const char* word) {
        return s.compare(pos, std::string(word).size(), word) == 0;
    };
    if (starts("lex")) {
        pos += 3;
        return TermOrder::lex();
    }
    if (starts("grevlex")) {
        pos += 7;
        return TermOrder::grevlex();
    }
    if (starts("matrix[")) {
        pos += 7;
        std::vector<std::vector<long long>> rows(1);
        while (pos < s.size() && s[pos] != ']') {
            std::size_t start = pos;
            while (pos < s.size() && s[pos] != ',' && s[pos] != ';' && s[pos] != ']') ++pos;
            rows.back().push_back(std::stoll(s.substr(start, pos - start)));
            if (pos < s.size() && s[pos] == ',') ++pos;
            if (pos < s.size() && s[pos] == ';') {
                rows.emplace_back();
                ++pos;
            }
        }
        expect(s, pos, ']');
        return TermOrder::matrix(std::move(rows));
    }
    if (starts("block(")) {
        pos += 6;
        std::size_t split = parse_size(s, pos);
        expect(s, pos, ';');
        TermOrderPtr first = parse_key(s, pos);
        expect(s, pos, ';');
        TermOrderPtr rest = parse_key(s, pos);
        expect(s, pos, ')');
        return TermOrder::block(split, std::move(first), std::move(rest));
    }
    throw Error("bad term-order key: " + s);
}

} // namespace

TermOrderPtr TermOrder::from_key(const std::string& key) {
    std::size_t pos = 0;
    TermOrderPtr o = parse_key(key, pos);
    if (pos != key.size()) throw Error("trailing characters in term-order key: " + key);
    return o;
}

TermOrderPtr elimination_first_variable(TermOrderPtr inner) {
    return TermOrder::block(1, TermOrder::lex(), std::move(inner));
}

} // namespace knutson
