#include "corelab/text_io.hpp"

#include <cctype>
#include <regex>
#include <sstream>

namespace corelab {

namespace {

std::string strip(std::string_view s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
    }
    return std::string(s.substr(b, e - b));
}

int parse_int(const std::string& s, const char* what)
{
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) {
            throw ParseError(std::string("bad ") + what + ": " + s);
        }
        return v;
    } catch (const std::logic_error&) {
        throw ParseError(std::string("bad ") + what + ": " + s);
    }
}

} // namespace

RingSpec parse_ring_header(std::string_view text)
{
    std::string s = strip(text);
    static const std::regex shape(R"(^ring\s*\{(.*)\}$)");
    std::smatch m;
    if (!std::regex_match(s, m, shape)) {
        throw ParseError("ring header must look like `ring { char: p, x: n, ... }`");
    }
    RingSpec spec;
    std::string body = m[1];
    std::stringstream parts(body);
    std::string item;
    bool saw_x = false;
    while (std::getline(parts, item, ',')) {
        item = strip(item);
        if (item.empty()) {
            continue;
        }
        auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw ParseError("ring header entry without ':' : " + item);
        }
        std::string key = strip(item.substr(0, colon));
        std::string value = strip(item.substr(colon + 1));
        if (key == "char") {
            long long p = 0;
            try {
                p = std::stoll(value);
            } catch (const std::logic_error&) {
                throw ParseError("bad characteristic: " + value);
            }
            if (p < 0 || p >= (1ll << 31)) {
                throw ParseError("characteristic out of range: " + value);
            }
            spec.characteristic = static_cast<std::uint32_t>(p);
        } else if (key == "x") {
            spec.x = parse_int(value, "block size");
            saw_x = true;
        } else if (key == "y") {
            spec.y = parse_int(value, "block size");
        } else if (key == "z") {
            spec.z = parse_int(value, "block size");
        } else if (key == "t") {
            spec.t = parse_int(value, "block size");
        } else {
            throw ParseError("unknown ring header key: " + key);
        }
    }
    if (!saw_x) {
        throw ParseError("ring header needs an x block");
    }
    return spec;
}

std::string format_ring_header(const RingSpec& spec)
{
    std::ostringstream out;
    out << "ring { char: " << spec.characteristic << ", x: " << spec.x;
    if (spec.y) {
        out << ", y: " << spec.y;
    }
    if (spec.z) {
        out << ", z: " << spec.z;
    }
    if (spec.t) {
        out << ", t: " << spec.t;
    }
    out << " }";
    return out.str();
}

template <class F>
Polynomial<F> parse_polynomial(const RingPtr<F>& ring, std::string_view text)
{
    const F& k = ring->field();
    std::vector<typename Polynomial<F>::Term> terms;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
    };
    auto fail = [&](const std::string& why) -> ParseError {
        return ParseError("polynomial parse error at offset " + std::to_string(i) + ": " + why + " in `" +
                          std::string(text) + "`");
    };
    skip_ws();
    if (i == n) {
        throw fail("empty input");
    }
    bool first = true;
    while (true) {
        skip_ws();
        if (i == n) {
            break;
        }
        bool negative = false;
        if (text[i] == '+' || text[i] == '-') {
            negative = text[i] == '-';
            ++i;
            skip_ws();
        } else if (!first) {
            throw fail("expected '+' or '-'");
        }
        first = false;
        typename F::Element coeff = k.one();
        Monomial mono;
        bool any_factor = false;
        while (true) {
            skip_ws();
            if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
                std::size_t b = i;
                while (i < n && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) {
                    ++i;
                }
                typename F::Element c;
                try {
                    c = k.parse(std::string(text.substr(b, i - b)));
                } catch (const std::exception& e) {
                    throw fail(std::string("bad coefficient: ") + e.what());
                }
                coeff = k.mul(coeff, c);
            } else if (i < n && std::isalpha(static_cast<unsigned char>(text[i]))) {
                char name = static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
                ++i;
                std::size_t b = i;
                while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    ++i;
                }
                if (b == i) {
                    throw fail("variable without index");
                }
                int idx = std::stoi(std::string(text.substr(b, i - b)));
                Block block;
                switch (name) {
                case 'x': block = Block::X; break;
                case 'y': block = Block::Y; break;
                case 'z': block = Block::Z; break;
                case 't': block = Block::T; break;
                default: throw fail(std::string("unknown variable block '") + name + "'");
                }
                if (idx < 1 || idx > ring->count(block)) {
                    throw fail("variable index out of range");
                }
                unsigned e = 1;
                skip_ws();
                if (i < n && text[i] == '^') {
                    ++i;
                    skip_ws();
                    std::size_t eb = i;
                    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
                        ++i;
                    }
                    if (eb == i) {
                        throw fail("missing exponent");
                    }
                    e = static_cast<unsigned>(std::stoul(std::string(text.substr(eb, i - eb))));
                }
                int v = ring->var(block, idx - 1);
                mono.set(v, mono[v] + e);
            } else {
                throw fail("expected a coefficient or variable");
            }
            any_factor = true;
            skip_ws();
            if (i < n && text[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!any_factor) {
            throw fail("empty term");
        }
        terms.push_back({negative ? k.neg(coeff) : coeff, mono});
    }
    return Polynomial<F>(ring, std::move(terms));
}

template <class F>
std::vector<Polynomial<F>> parse_polynomial_list(const RingPtr<F>& ring, std::string_view text)
{
    std::string s = strip(text);
    if (!s.empty() && s.front() == '(' && s.back() == ')') {
        s = s.substr(1, s.size() - 2);
    }
    std::vector<Polynomial<F>> out;
    std::stringstream parts(s);
    std::string item;
    while (std::getline(parts, item, ',')) {
        if (strip(item).empty()) {
            continue;
        }
        out.push_back(parse_polynomial(ring, item));
    }
    return out;
}

template <class F>
nlohmann::ordered_json polynomial_to_json(const Polynomial<F>& f)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    const auto n = f.ring()->nvars();
    for (const auto& t : f.terms()) {
        arr.push_back({f.field().to_string(t.coeff), t.mono.to_vector(n)});
    }
    return arr;
}

template <class F>
Polynomial<F> polynomial_from_json(const RingPtr<F>& ring, const nlohmann::json& j)
{
    if (!j.is_array()) {
        throw ParseError("polynomial JSON must be an array of terms");
    }
    std::vector<typename Polynomial<F>::Term> terms;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_string() || !t[1].is_array()) {
            throw ParseError("polynomial term must be [coeff-string, [exponents]]");
        }
        std::vector<int> exps = t[1].get<std::vector<int>>();
        if (exps.size() != ring->nvars()) {
            throw ParseError("exponent vector length does not match the ring");
        }
        terms.push_back({ring->field().parse(t[0].get<std::string>()), Monomial(exps)});
    }
    return Polynomial<F>(ring, std::move(terms));
}

#define CORELAB_INSTANTIATE(F)                                                                                 \
    template Polynomial<F> parse_polynomial(const RingPtr<F>&, std::string_view);                              \
    template std::vector<Polynomial<F>> parse_polynomial_list(const RingPtr<F>&, std::string_view);            \
    template nlohmann::ordered_json polynomial_to_json(const Polynomial<F>&);                                  \
    template Polynomial<F> polynomial_from_json(const RingPtr<F>&, const nlohmann::json&);

CORELAB_INSTANTIATE(PrimeField)
CORELAB_INSTANTIATE(RationalField)

#undef CORELAB_INSTANTIATE

} // namespace corelab
