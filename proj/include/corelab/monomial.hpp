#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace corelab {

inline constexpr std::size_t kMaxVars = 48;

class ExponentOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// Dense exponent vector. Entries past the ring's variable count are zero, so
// arithmetic can run over the whole fixed-width array.
class Monomial {
public:
    static constexpr unsigned kMaxExponent = 255;

    Monomial() = default;
    explicit Monomial(std::span<const int> exponents);

    unsigned operator[](std::size_t i) const { return exp_[i]; }
    unsigned degree() const { return degree_; }
    std::uint64_t support_mask() const { return mask_; }
    bool is_one() const { return degree_ == 0; }

    void set(std::size_t i, unsigned e);

    bool divides(const Monomial& other) const
    {
        if ((mask_ & ~other.mask_) != 0 || degree_ > other.degree_) {
            return false;
        }
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            if (exp_[i] > other.exp_[i]) {
                return false;
            }
        }
        return true;
    }

    bool coprime(const Monomial& other) const { return (mask_ & other.mask_) == 0; }

    Monomial operator*(const Monomial& other) const;
    // Requires divides(): returns this / other.
    Monomial operator/(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;
    Monomial gcd(const Monomial& other) const;

    std::vector<int> to_vector(std::size_t nvars) const;

    bool operator==(const Monomial& other) const { return exp_ == other.exp_; }

    // Lexicographic order on raw exponent arrays; only for containers that need
    // a canonical key, never a ring order.
    bool raw_less(const Monomial& other) const { return exp_ < other.exp_; }

private:
    void refresh();

    std::array<std::uint8_t, kMaxVars> exp_{};
    std::uint16_t degree_ = 0;
    std::uint64_t mask_ = 0;
};

enum class OrderKind { Lex, Grevlex };

// One block of a block order: the listed variables, highest precedence first,
// compared with an inner lex or grevlex order.
struct OrderBlock {
    OrderKind kind = OrderKind::Grevlex;
    std::vector<int> vars;

    bool operator==(const OrderBlock&) const = default;
};

// Monomial order given as a sequence of blocks; earlier blocks dominate. A
// single block over all variables is a plain lex or grevlex order.
class MonomialOrder {
public:
    MonomialOrder() = default;
    explicit MonomialOrder(std::vector<OrderBlock> blocks);

    static MonomialOrder lex(std::size_t nvars);
    static MonomialOrder grevlex(std::size_t nvars);
    static MonomialOrder block_elimination(std::vector<OrderBlock> blocks) { return MonomialOrder(std::move(blocks)); }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    const std::vector<OrderBlock>& blocks() const { return blocks_; }
    std::size_t nvars() const { return nvars_; }

    bool operator==(const MonomialOrder& o) const { return blocks_ == o.blocks_; }

private:
    std::vector<OrderBlock> blocks_;
    std::size_t nvars_ = 0;
    // single grevlex/lex block over 0..n-1 in natural order
    bool natural_grevlex_ = false;
    bool natural_lex_ = false;
};

} // namespace corelab
