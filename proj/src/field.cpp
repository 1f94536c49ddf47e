#include "corelab/field.hpp"

#include <cctype>

namespace corelab {

bool is_prime(std::uint32_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p)
{
    if (p < 3 || p >= (1u << 31) || !is_prime(p)) {
        throw std::invalid_argument("characteristic must be an odd prime below 2^31: " + std::to_string(p));
    }
}

PrimeField::Element PrimeField::inv(Element a) const
{
    if (a == 0) {
        throw std::domain_error("inverse of zero");
    }
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) {
        t += p_;
    }
    return static_cast<Element>(t);
}

PrimeField::Element PrimeField::from_int(long long v) const
{
    long long r = v % static_cast<long long>(p_);
    if (r < 0) {
        r += p_;
    }
    return static_cast<Element>(r);
}

PrimeField::Element PrimeField::from_rational(const mpq_class& q) const
{
    mpz_class num = q.get_num() % p_;
    mpz_class den = q.get_den() % p_;
    if (num < 0) {
        num += p_;
    }
    if (den == 0) {
        throw std::domain_error("denominator vanishes modulo p");
    }
    return div(static_cast<Element>(num.get_ui()), static_cast<Element>(den.get_ui()));
}

PrimeField::Element PrimeField::parse(const std::string& text) const
{
    return from_rational(mpq_class(text));
}

std::string PrimeField::to_string(Element a) const
{
    return std::to_string(to_signed(a));
}

long long PrimeField::to_signed(Element a) const
{
    return a > p_ / 2 ? static_cast<long long>(a) - p_ : static_cast<long long>(a);
}

RationalField::Element RationalField::parse(const std::string& text) const
{
    Element q(text);
    q.canonicalize();
    return q;
}

} // namespace corelab
