#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace corelab {

// Coefficient domain GF(p) for an odd prime p < 2^31. Elements are kept in
// the canonical range [0, p).
class PrimeField {
public:
    using Element = std::uint32_t;

    static constexpr std::uint32_t kDefaultCharacteristic = 32003;

    explicit PrimeField(std::uint32_t p = kDefaultCharacteristic);

    std::uint32_t characteristic() const { return p_; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    bool is_zero(Element a) const { return a == 0; }
    bool is_one(Element a) const { return a == 1; }

    Element add(Element a, Element b) const
    {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const
    {
        return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }

    Element from_int(long long v) const;
    Element from_rational(const mpq_class& q) const;
    Element parse(const std::string& text) const;
    std::string to_string(Element a) const;
    // Signed representative in (-p/2, p/2], used for printing.
    long long to_signed(Element a) const;

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint32_t p_;
};

// Exact rationals; mpq_class keeps values canonical (lowest terms, positive
// denominator).
class RationalField {
public:
    using Element = mpq_class;

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }
    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool is_one(const Element& a) const { return a == 1; }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element inv(const Element& a) const
    {
        if (sgn(a) == 0) {
            throw std::domain_error("inverse of zero");
        }
        return Element(1) / a;
    }
    Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

    Element from_int(long long v) const { return Element(static_cast<long>(v)); }
    Element from_rational(const mpq_class& q) const { return q; }
    Element parse(const std::string& text) const;
    std::string to_string(const Element& a) const { return a.get_str(); }

    std::uint32_t characteristic() const { return 0; }

    bool operator==(const RationalField&) const { return true; }
};

bool is_prime(std::uint32_t n);

} // namespace corelab
