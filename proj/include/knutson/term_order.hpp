#ifndef KNUTSON_TERM_ORDER_HPP
#define KNUTSON_TERM_ORDER_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "knutson/monomial.hpp"

namespace knutson {

class TermOrder;
using TermOrderPtr = std::shared_ptr<const TermOrder>;

// A total multiplicative well-ordering on power products.  Four flavours:
//
//   lex        x1 > x2 > ... ; highest differing exponent decides
//   grevlex    total degree first, ties by smaller exponent at the last
//              position where the monomials differ
//   matrix     rows of an integer weight matrix compared top to bottom;
//              accepted only if the matrix has full column rank and the
//              first nonzero entry of every column is positive (these two
//              conditions make the comparison a term order)
//   block      an elimination order: the first k variables are compared
//              with one order, ties fall through to another order on the
//              remaining variables
//
// lex and grevlex apply to any number of variables; matrix and block
// orders fix the width they apply to.
class TermOrder {
public:
    enum class Kind { Lex, Grevlex, Matrix, Block };

    static TermOrderPtr lex();
    static TermOrderPtr grevlex();
    // Throws Error when the rows do not define a term order.
    static TermOrderPtr matrix(std::vector<std::vector<long long>> rows);
    // Compare the first `block` variables under `first`, ties under `rest`.
    static TermOrderPtr block(std::size_t block, TermOrderPtr first, TermOrderPtr rest);

    Kind kind() const { return kind_; }

    // -1, 0, +1 as a <, =, > b.  Throws AmbientMismatch when the widths of
    // a and b differ or do not fit this order.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    // Throws AmbientMismatch if this order cannot compare n-variable
    // monomials (wrong matrix width, block wider than n, ...).
    void require_applicable(std::size_t nvars) const;

    // Canonical serialization; two orders behave identically on every
    // applicable width iff their keys are equal.
    const std::string& key() const { return key_; }
    friend bool operator==(const TermOrder& a, const TermOrder& b) {
        return a.key_ == b.key_;
    }

    // Parse a key back into an order ("lex", "grevlex",
    // "matrix[1,0;0,1]", "block(1;lex;grevlex)").
    static TermOrderPtr from_key(const std::string& key);

private:
    TermOrder() = default;
    int compare_range(const std::uint32_t* a, const std::uint32_t* b,
                      std::size_t len) const;
    void require_width(std::size_t len) const;

    Kind kind_ = Kind::Lex;
    std::vector<std::vector<long long>> rows_; // matrix only
    std::size_t block_ = 0;                    // block only
    TermOrderPtr first_, rest_;                // block only
    std::string key_;
};

// Convenience: the block order that eliminates the single variable at
// position 0 (compared by bare lex on that variable) and breaks ties with
// `inner` on the rest.  This is the order used for intersections/colons.
TermOrderPtr elimination_first_variable(TermOrderPtr inner);

} // namespace knutson

#endif
