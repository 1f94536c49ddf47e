#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "corelab/field.hpp"
#include "corelab/monomial.hpp"

namespace corelab {

// Variable blocks. T holds auxiliary variables introduced by elimination
// constructions (intersection, radical membership, Rabinowitsch saturation).
enum class Block { X, Y, Z, T };

inline const char* block_name(Block b);

class RingMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Polynomial ring k[X, Y, Z, T] with variables laid out in that order. The
// ring carries the monomial order its polynomials are sorted by.
template <class F>
class Ring {
public:
    Ring(F field, int nx, int ny = 0, int nz = 0, int nt = 0, std::optional<MonomialOrder> order = std::nullopt)
        : field_(std::move(field)), counts_{nx, ny, nz, nt}
    {
        if (nx < 0 || ny < 0 || nz < 0 || nt < 0) {
            throw std::invalid_argument("negative block size");
        }
        if (ny != 0 && ny != nx) {
            throw std::invalid_argument("the Y block must be empty or match the X block");
        }
        if (nvars() > kMaxVars) {
            throw std::invalid_argument("too many variables (max " + std::to_string(kMaxVars) + ")");
        }
        order_ = order ? *order : MonomialOrder::grevlex(nvars());
        if (order_.nvars() != nvars()) {
            throw std::invalid_argument("monomial order does not match the variable count");
        }
    }

    const F& field() const { return field_; }
    std::size_t nvars() const { return static_cast<std::size_t>(counts_[0] + counts_[1] + counts_[2] + counts_[3]); }
    int count(Block b) const { return counts_[static_cast<int>(b)]; }
    int offset(Block b) const
    {
        int off = 0;
        for (int i = 0; i < static_cast<int>(b); ++i) {
            off += counts_[i];
        }
        return off;
    }
    // Global index of the i-th (0-based) variable of a block.
    int var(Block b, int i) const
    {
        if (i < 0 || i >= count(b)) {
            throw std::out_of_range(std::string("no variable ") + block_name(b) + std::to_string(i + 1));
        }
        return offset(b) + i;
    }
    Block block_of(int v) const
    {
        for (int b = 0; b < 4; ++b) {
            if (v < offset(static_cast<Block>(b)) + counts_[b]) {
                return static_cast<Block>(b);
            }
        }
        throw std::out_of_range("variable index out of range");
    }
    std::string var_name(int v) const
    {
        Block b = block_of(v);
        return std::string(1, block_name(b)[0]) + std::to_string(v - offset(b) + 1);
    }
    unsigned block_degree(const Monomial& m, Block b) const
    {
        unsigned d = 0;
        for (int i = offset(b), e = offset(b) + count(b); i < e; ++i) {
            d += m[i];
        }
        return d;
    }
    std::vector<int> block_vars(Block b) const
    {
        std::vector<int> vs;
        for (int i = 0; i < count(b); ++i) {
            vs.push_back(offset(b) + i);
        }
        return vs;
    }

    const MonomialOrder& order() const { return order_; }

    std::shared_ptr<const Ring> with_order(MonomialOrder order) const
    {
        return std::make_shared<const Ring>(field_, counts_[0], counts_[1], counts_[2], counts_[3], std::move(order));
    }
    // Same field, new block sizes, default grevlex order.
    std::shared_ptr<const Ring> with_blocks(int nx, int ny, int nz, int nt) const
    {
        return std::make_shared<const Ring>(field_, nx, ny, nz, nt);
    }

    // Block order with the given blocks first (grevlex inside each), remaining
    // variables after them in one grevlex block.
    MonomialOrder elimination_order(const std::vector<Block>& leading) const
    {
        std::vector<OrderBlock> blocks;
        std::vector<bool> used(nvars(), false);
        for (Block b : leading) {
            OrderBlock ob{OrderKind::Grevlex, block_vars(b)};
            for (int v : ob.vars) {
                used[v] = true;
            }
            if (!ob.vars.empty()) {
                blocks.push_back(std::move(ob));
            }
        }
        OrderBlock rest{OrderKind::Grevlex, {}};
        for (std::size_t v = 0; v < nvars(); ++v) {
            if (!used[v]) {
                rest.vars.push_back(static_cast<int>(v));
            }
        }
        if (!rest.vars.empty()) {
            blocks.push_back(std::move(rest));
        }
        return MonomialOrder::block_elimination(std::move(blocks));
    }

    // Grevlex in the natural variable order except that `last` is moved to the
    // end (smallest variable).
    MonomialOrder grevlex_with_last(int last) const
    {
        OrderBlock b{OrderKind::Grevlex, {}};
        for (std::size_t v = 0; v < nvars(); ++v) {
            if (static_cast<int>(v) != last) {
                b.vars.push_back(static_cast<int>(v));
            }
        }
        b.vars.push_back(last);
        return MonomialOrder({b});
    }

    bool same_variables(const Ring& o) const
    {
        return field_ == o.field_ && counts_[0] == o.counts_[0] && counts_[1] == o.counts_[1] &&
               counts_[2] == o.counts_[2] && counts_[3] == o.counts_[3];
    }
    bool operator==(const Ring& o) const { return same_variables(o) && order_ == o.order_; }

private:
    F field_;
    int counts_[4];
    MonomialOrder order_;
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
RingPtr<F> make_ring(F field, int nx, int ny = 0, int nz = 0, int nt = 0)
{
    return std::make_shared<const Ring<F>>(std::move(field), nx, ny, nz, nt);
}

inline const char* block_name(Block b)
{
    switch (b) {
    case Block::X: return "x";
    case Block::Y: return "y";
    case Block::Z: return "z";
    case Block::T: return "t";
    }
    return "?";
}

} // namespace corelab
