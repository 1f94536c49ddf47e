#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "corelab/polynomial.hpp"

namespace corelab {

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// `ring { char: 32003, x: 3, y: 3, z: 12 }`; char 0 selects exact rationals.
struct RingSpec {
    std::uint32_t characteristic = PrimeField::kDefaultCharacteristic;
    int x = 0;
    int y = 0;
    int z = 0;
    int t = 0;

    bool operator==(const RingSpec&) const = default;
};

RingSpec parse_ring_header(std::string_view text);
std::string format_ring_header(const RingSpec& spec);

template <class F>
RingSpec ring_spec(const Ring<F>& ring)
{
    return RingSpec{ring.field().characteristic(), ring.count(Block::X), ring.count(Block::Y), ring.count(Block::Z),
                    ring.count(Block::T)};
}

// Terms like `3/2*x1^2*y3*z12` joined by `+`/`-`.
template <class F>
Polynomial<F> parse_polynomial(const RingPtr<F>& ring, std::string_view text);

// Comma-separated list of polynomials, optionally wrapped in parentheses.
template <class F>
std::vector<Polynomial<F>> parse_polynomial_list(const RingPtr<F>& ring, std::string_view text);

// JSON form: [[coeff-string, [exponents...]], ...] in descending term order.
template <class F>
nlohmann::ordered_json polynomial_to_json(const Polynomial<F>& f);

template <class F>
Polynomial<F> polynomial_from_json(const RingPtr<F>& ring, const nlohmann::json& j);

} // namespace corelab
