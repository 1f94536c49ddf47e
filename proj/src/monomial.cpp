#include "corelab/monomial.hpp"

#include <algorithm>
#include <string>

namespace corelab {

Monomial::Monomial(std::span<const int> exponents)
{
    if (exponents.size() > kMaxVars) {
        throw std::invalid_argument("too many variables for a monomial");
    }
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] < 0 || exponents[i] > static_cast<int>(kMaxExponent)) {
            throw ExponentOverflow("exponent out of range: " + std::to_string(exponents[i]));
        }
        exp_[i] = static_cast<std::uint8_t>(exponents[i]);
    }
    refresh();
}

void Monomial::set(std::size_t i, unsigned e)
{
    if (e > kMaxExponent) {
        throw ExponentOverflow("exponent out of range: " + std::to_string(e));
    }
    exp_[i] = static_cast<std::uint8_t>(e);
    refresh();
}

void Monomial::refresh()
{
    unsigned deg = 0;
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        deg += exp_[i];
        if (exp_[i] != 0) {
            mask |= (std::uint64_t{1} << i);
        }
    }
    degree_ = static_cast<std::uint16_t>(deg);
    mask_ = mask;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial r;
    bool overflow = false;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        unsigned s = static_cast<unsigned>(exp_[i]) + other.exp_[i];
        overflow |= s > kMaxExponent;
        r.exp_[i] = static_cast<std::uint8_t>(s);
    }
    if (overflow) {
        throw ExponentOverflow("exponent overflow in monomial product");
    }
    r.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
    r.mask_ = mask_ | other.mask_;
    return r;
}

Monomial Monomial::operator/(const Monomial& other) const
{
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        r.exp_[i] = static_cast<std::uint8_t>(exp_[i] - other.exp_[i]);
    }
    r.refresh();
    return r;
}

Monomial Monomial::lcm(const Monomial& other) const
{
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        r.exp_[i] = std::max(exp_[i], other.exp_[i]);
    }
    r.refresh();
    return r;
}

Monomial Monomial::gcd(const Monomial& other) const
{
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        r.exp_[i] = std::min(exp_[i], other.exp_[i]);
    }
    r.refresh();
    return r;
}

std::vector<int> Monomial::to_vector(std::size_t nvars) const
{
    std::vector<int> v(nvars);
    for (std::size_t i = 0; i < nvars; ++i) {
        v[i] = exp_[i];
    }
    return v;
}

MonomialOrder::MonomialOrder(std::vector<OrderBlock> blocks) : blocks_(std::move(blocks))
{
    std::vector<bool> seen(kMaxVars, false);
    for (const auto& b : blocks_) {
        for (int v : b.vars) {
            if (v < 0 || static_cast<std::size_t>(v) >= kMaxVars || seen[v]) {
                throw std::invalid_argument("monomial order blocks must partition the variables");
            }
            seen[v] = true;
            ++nvars_;
        }
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
        if (!seen[i]) {
            throw std::invalid_argument("monomial order blocks must cover variables 0..n-1");
        }
    }
    if (blocks_.size() == 1) {
        bool natural = true;
        for (std::size_t i = 0; i < blocks_[0].vars.size(); ++i) {
            natural = natural && blocks_[0].vars[i] == static_cast<int>(i);
        }
        natural_grevlex_ = natural && blocks_[0].kind == OrderKind::Grevlex;
        natural_lex_ = natural && blocks_[0].kind == OrderKind::Lex;
    }
}

MonomialOrder MonomialOrder::lex(std::size_t nvars)
{
    OrderBlock b{OrderKind::Lex, {}};
    for (std::size_t i = 0; i < nvars; ++i) {
        b.vars.push_back(static_cast<int>(i));
    }
    return MonomialOrder({b});
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars)
{
    OrderBlock b{OrderKind::Grevlex, {}};
    for (std::size_t i = 0; i < nvars; ++i) {
        b.vars.push_back(static_cast<int>(i));
    }
    return MonomialOrder({b});
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const
{
    if (natural_grevlex_) {
        if (a.degree() != b.degree()) {
            return a.degree() <=> b.degree();
        }
        for (std::size_t i = nvars_; i-- > 0;) {
            if (a[i] != b[i]) {
                return b[i] <=> a[i];
            }
        }
        return std::strong_ordering::equal;
    }
    if (natural_lex_) {
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (a[i] != b[i]) {
                return a[i] <=> b[i];
            }
        }
        return std::strong_ordering::equal;
    }
    for (const auto& block : blocks_) {
        if (block.kind == OrderKind::Lex) {
            for (int v : block.vars) {
                if (a[v] != b[v]) {
                    return a[v] <=> b[v];
                }
            }
            continue;
        }
        unsigned da = 0, db = 0;
        for (int v : block.vars) {
            da += a[v];
            db += b[v];
        }
        if (da != db) {
            return da <=> db;
        }
        for (std::size_t k = block.vars.size(); k-- > 0;) {
            int v = block.vars[k];
            if (a[v] != b[v]) {
                return b[v] <=> a[v];
            }
        }
    }
    return std::strong_ordering::equal;
}

} // namespace corelab
