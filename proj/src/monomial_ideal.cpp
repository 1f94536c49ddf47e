#include "corelab/monomial_ideal.hpp"

#include <algorithm>
#include <functional>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "corelab/text_io.hpp"

namespace corelab {

bool divides(const Exponent& a, const Exponent& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
    }
    return true;
}

Exponent lcm(const Exponent& a, const Exponent& b)
{
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = std::max(a[i], b[i]);
    }
    return r;
}

int degree(const Exponent& e)
{
    int s = 0;
    for (int x : e) {
        s += x;
    }
    return s;
}

std::string exponent_to_string(const Exponent& e)
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += "x" + std::to_string(i + 1);
        if (e[i] > 1) {
            out += "^" + std::to_string(e[i]);
        }
    }
    return out.empty() ? "1" : out;
}

MonomialIdeal minimalize(int d, std::vector<Exponent> gens)
{
    return MonomialIdeal(d, std::move(gens));
}

MonomialIdeal::MonomialIdeal(int d, std::vector<Exponent> gens) : d_(d)
{
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != d) {
            throw std::invalid_argument("exponent vector length does not match d");
        }
        if (std::any_of(g.begin(), g.end(), [](int x) { return x < 0; })) {
            throw std::invalid_argument("negative exponent");
        }
    }
    // Sorting by degree lets each candidate be checked only against kept ones.
    std::sort(gens.begin(), gens.end(), [](const Exponent& a, const Exponent& b) {
        int da = degree(a), db = degree(b);
        return da != db ? da < db : a > b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (auto& g : gens) {
        bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](const Exponent& h) { return divides(h, g); });
        if (!redundant) {
            gens_.push_back(std::move(g));
        }
    }
    std::sort(gens_.begin(), gens_.end(), std::greater<>());
}

MonomialIdeal MonomialIdeal::unit(int d)
{
    return MonomialIdeal(d, {Exponent(d, 0)});
}

MonomialIdeal MonomialIdeal::maximal_power(int d, int k)
{
    return MonomialIdeal(d, monomials_of_degree(d, k));
}

MonomialIdeal MonomialIdeal::principal(Exponent e)
{
    int d = static_cast<int>(e.size());
    return MonomialIdeal(d, {std::move(e)});
}

bool MonomialIdeal::is_unit() const
{
    return gens_.size() == 1 && degree(gens_.front()) == 0;
}

bool MonomialIdeal::one_degree() const
{
    return std::all_of(gens_.begin(), gens_.end(), [&](const Exponent& e) { return degree(e) == degree(gens_[0]); });
}

int MonomialIdeal::min_degree() const
{
    int m = -1;
    for (const auto& g : gens_) {
        m = m < 0 ? degree(g) : std::min(m, degree(g));
    }
    return m;
}

int MonomialIdeal::max_degree() const
{
    int m = -1;
    for (const auto& g : gens_) {
        m = std::max(m, degree(g));
    }
    return m;
}

bool MonomialIdeal::contains(const Exponent& e) const
{
    return std::any_of(gens_.begin(), gens_.end(), [&](const Exponent& g) { return divides(g, e); });
}

bool MonomialIdeal::contains(const MonomialIdeal& J) const
{
    return std::all_of(J.gens_.begin(), J.gens_.end(), [&](const Exponent& g) { return contains(g); });
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& o) const
{
    auto g = gens_;
    g.insert(g.end(), o.gens_.begin(), o.gens_.end());
    return MonomialIdeal(d_, std::move(g));
}

MonomialIdeal MonomialIdeal::operator*(const MonomialIdeal& o) const
{
    std::vector<Exponent> g;
    for (const auto& a : gens_) {
        for (const auto& b : o.gens_) {
            Exponent c(d_);
            for (int i = 0; i < d_; ++i) {
                c[i] = a[i] + b[i];
            }
            g.push_back(std::move(c));
        }
    }
    return MonomialIdeal(d_, std::move(g));
}

MonomialIdeal MonomialIdeal::power(int n) const
{
    MonomialIdeal r = unit(d_);
    for (int i = 0; i < n; ++i) {
        r = r * *this;
    }
    return r;
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& o) const
{
    std::vector<Exponent> g;
    for (const auto& a : gens_) {
        for (const auto& b : o.gens_) {
            g.push_back(lcm(a, b));
        }
    }
    return MonomialIdeal(d_, std::move(g));
}

MonomialIdeal MonomialIdeal::quotient(const Exponent& e) const
{
    std::vector<Exponent> g;
    for (const auto& a : gens_) {
        Exponent c(d_);
        for (int i = 0; i < d_; ++i) {
            c[i] = std::max(0, a[i] - e[i]);
        }
        g.push_back(std::move(c));
    }
    return MonomialIdeal(d_, std::move(g));
}

MonomialIdeal MonomialIdeal::quotient(const MonomialIdeal& o) const
{
    if (o.is_zero()) {
        throw std::invalid_argument("quotient by the zero ideal");
    }
    std::optional<MonomialIdeal> acc;
    for (const auto& e : o.gens_) {
        auto q = quotient(e);
        acc = acc ? acc->intersect(q) : q;
    }
    return *acc;
}

MonomialIdeal MonomialIdeal::saturate(const Exponent& e) const
{
    std::vector<Exponent> g;
    for (auto a : gens_) {
        for (int i = 0; i < d_; ++i) {
            if (e[i] > 0) {
                a[i] = 0;
            }
        }
        g.push_back(std::move(a));
    }
    return MonomialIdeal(d_, std::move(g));
}

template <class F>
Ideal<F> MonomialIdeal::to_ideal(const RingPtr<F>& ring, GbOptions opts) const
{
    if (ring->count(Block::X) != d_) {
        throw RingMismatch("monomial ideal and ring disagree on the number of x variables");
    }
    std::vector<Polynomial<F>> gens;
    for (const auto& e : gens_) {
        Monomial m;
        for (int i = 0; i < d_; ++i) {
            m.set(ring->var(Block::X, i), static_cast<unsigned>(e[i]));
        }
        gens.push_back(Polynomial<F>::term(ring, m));
    }
    return Ideal<F>(ring, std::move(gens), std::move(opts));
}

template <class F>
std::optional<MonomialIdeal> MonomialIdeal::from_ideal(const Ideal<F>& I)
{
    const auto& ring = *I.ring();
    const int d = ring.count(Block::X);
    std::vector<Exponent> gens;
    if (I.is_zero()) {
        return MonomialIdeal(d);
    }
    for (const auto& g : I.groebner().elements) {
        if (!g.is_monomial()) {
            return std::nullopt;
        }
        Exponent e(d);
        for (std::size_t v = 0; v < ring.nvars(); ++v) {
            unsigned x = g.lead_monomial()[v];
            if (x == 0) {
                continue;
            }
            if (ring.block_of(static_cast<int>(v)) != Block::X) {
                return std::nullopt;
            }
            e[v - ring.offset(Block::X)] = static_cast<int>(x);
        }
        gens.push_back(std::move(e));
    }
    return MonomialIdeal(d, std::move(gens));
}

std::string MonomialIdeal::to_string() const
{
    if (gens_.empty()) {
        return "(0)";
    }
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        out += (i ? ", " : "") + exponent_to_string(gens_[i]);
    }
    return out + ")";
}

std::string MonomialIdeal::to_mi() const
{
    std::ostringstream out;
    out << "mi{d:" << d_ << ", gens:" << nlohmann::json(gens_).dump() << "}";
    return out.str();
}

MonomialIdeal MonomialIdeal::parse_mi(std::string_view text)
{
    static const std::regex shape(R"(^\s*mi\s*\{\s*d\s*:\s*(\d+)\s*,\s*gens\s*:\s*(\[.*\])\s*\}\s*$)");
    std::string s(text);
    std::smatch m;
    if (!std::regex_match(s, m, shape)) {
        throw ParseError("monomial ideal must look like `mi{d:3, gens:[[...],...]}`");
    }
    int d = std::stoi(m[1]);
    std::vector<Exponent> gens;
    try {
        gens = nlohmann::json::parse(std::string(m[2])).get<std::vector<Exponent>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad generator list: ") + e.what());
    }
    try {
        return MonomialIdeal(d, std::move(gens));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::vector<Exponent> monomials_of_degree(int d, int delta)
{
    std::vector<Exponent> out;
    if (d == 0) {
        if (delta == 0) {
            out.push_back({});
        }
        return out;
    }
    Exponent cur(d, 0);
    std::function<void(int, int)> rec = [&](int v, int left) {
        if (v == d - 1) {
            cur[v] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[v] = e;
            rec(v + 1, left - e);
        }
    };
    rec(0, delta);
    return out;
}

MonomialIdeal lex_segment(int d, int delta, int k)
{
    auto all = monomials_of_degree(d, delta);
    if (k < 1 || k > static_cast<int>(all.size())) {
        throw std::invalid_argument("lex segment length out of range");
    }
    all.resize(k);
    MonomialIdeal L(d, std::move(all));
    if (!is_strongly_stable(L)) {
        throw std::logic_error("lex segment is not strongly stable");
    }
    return L;
}

MonomialIdeal lex_segment_of_height(int d, int delta, int g)
{
    if (g < 1 || g > d) {
        throw std::invalid_argument("no lex segment reaches height " + std::to_string(g) + " in " +
                                    std::to_string(d) + " variables");
    }
    const int total = static_cast<int>(monomials_of_degree(d, delta).size());
    for (int k = 1; k <= total; ++k) {
        auto L = lex_segment(d, delta, k);
        if (ss_height_and_spread(L, true).height == g) {
            return L;
        }
    }
    throw std::logic_error("height not reached by any segment");
}

bool is_strongly_stable(const MonomialIdeal& I)
{
    const int d = I.nvars();
    for (const auto& u : I.gens()) {
        for (int j = 0; j < d; ++j) {
            if (u[j] == 0) {
                continue;
            }
            for (int i = 0; i < j; ++i) {
                Exponent w = u;
                --w[j];
                ++w[i];
                if (!I.contains(w)) {
                    return false;
                }
            }
        }
    }
    return true;
}

HeightSpread ss_height_and_spread(const MonomialIdeal& I, bool one_degree)
{
    if (!is_strongly_stable(I)) {
        throw std::invalid_argument("ideal is not strongly stable");
    }
    if (I.is_zero() || I.is_unit()) {
        throw std::invalid_argument("height formula needs a nonzero proper ideal");
    }
    if (one_degree && !I.one_degree()) {
        throw std::invalid_argument("analytic spread formula needs one-degree generation");
    }
    HeightSpread hs{0, std::nullopt};
    int spread = 0;
    for (const auto& u : I.gens()) {
        int lo = -1, hi = -1;
        for (int i = 0; i < I.nvars(); ++i) {
            if (u[i] > 0) {
                lo = lo < 0 ? i : lo;
                hi = i;
            }
        }
        hs.height = std::max(hs.height, lo + 1);
        spread = std::max(spread, hi + 1);
    }
    if (one_degree) {
        hs.spread = spread;
    }
    return hs;
}

namespace {

std::uint32_t support(const Exponent& e)
{
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] > 0) {
            m |= 1u << i;
        }
    }
    return m;
}

// Subsets of {0..d-1} of size k in increasing lexicographic order.
void for_each_subset(int d, int k, const std::function<bool(const std::vector<int>&)>& fn)
{
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) {
        s[i] = i;
    }
    if (k > d) {
        return;
    }
    while (true) {
        if (!fn(s)) {
            return;
        }
        int i = k - 1;
        while (i >= 0 && s[i] == d - k + i) {
            --i;
        }
        if (i < 0) {
            return;
        }
        ++s[i];
        for (int j = i + 1; j < k; ++j) {
            s[j] = s[j - 1] + 1;
        }
    }
}

} // namespace

int height_via_face_primes(const MonomialIdeal& I)
{
    if (I.is_zero() || I.is_unit()) {
        throw std::invalid_argument("height needs a nonzero proper ideal");
    }
    std::vector<std::uint32_t> supports;
    for (const auto& g : I.gens()) {
        supports.push_back(support(g));
    }
    for (int k = 1; k <= I.nvars(); ++k) {
        bool found = false;
        for_each_subset(I.nvars(), k, [&](const std::vector<int>& s) {
            std::uint32_t mask = 0;
            for (int v : s) {
                mask |= 1u << v;
            }
            found = std::all_of(supports.begin(), supports.end(), [&](std::uint32_t m) { return (m & mask) != 0; });
            return !found;
        });
        if (found) {
            return k;
        }
    }
    throw std::logic_error("no vertex cover found");
}

MonomialIdeal localize_at_face(const MonomialIdeal& I, const std::vector<int>& face)
{
    std::vector<bool> in(I.nvars(), false);
    for (int v : face) {
        in.at(v) = true;
    }
    std::vector<Exponent> g;
    for (auto e : I.gens()) {
        for (int i = 0; i < I.nvars(); ++i) {
            if (!in[i]) {
                e[i] = 0;
            }
        }
        g.push_back(std::move(e));
    }
    return MonomialIdeal(I.nvars(), std::move(g));
}

GsCheck check_Gs(const MonomialIdeal& I, int s)
{
    if (s < 1) {
        throw std::invalid_argument("G_s needs s >= 1");
    }
    GsCheck out;
    std::vector<std::uint32_t> supports;
    for (const auto& g : I.gens()) {
        supports.push_back(support(g));
    }
    for (int k = 1; k <= std::min(s - 1, I.nvars()) && out.holds; ++k) {
        for_each_subset(I.nvars(), k, [&](const std::vector<int>& face) {
            std::uint32_t mask = 0;
            for (int v : face) {
                mask |= 1u << v;
            }
            bool contains_I =
                std::all_of(supports.begin(), supports.end(), [&](std::uint32_t m) { return (m & mask) != 0; });
            if (!contains_I) {
                return true;
            }
            auto loc = localize_at_face(I, face);
            if (loc.size() > face.size()) {
                out.holds = false;
                out.witness = face;
                out.witness_generators = loc.size();
                return false;
            }
            return true;
        });
    }
    return out;
}

int analytic_spread_one_degree(const MonomialIdeal& I)
{
    if (!I.one_degree()) {
        throw std::invalid_argument("analytic spread by rank needs one-degree generation");
    }
    // Exact rank over Q by fraction-free elimination on a small integer matrix.
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& g : I.gens()) {
        std::vector<mpq_class> r;
        for (int x : g) {
            r.emplace_back(x);
        }
        rows.push_back(std::move(r));
    }
    int rank = 0;
    const int cols = I.nvars();
    for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
            if (sgn(rows[r][c]) != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) {
            continue;
        }
        std::swap(rows[piv], rows[rank]);
        for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
            if (sgn(rows[r][c]) == 0) {
                continue;
            }
            mpq_class f = rows[r][c] / rows[rank][c];
            for (int j = c; j < cols; ++j) {
                rows[r][j] -= f * rows[rank][j];
            }
        }
        ++rank;
    }
    return rank;
}

MonomialIdeal scale_by_power_of_m(const MonomialIdeal& I, int k)
{
    if (k < 0) {
        throw std::invalid_argument("negative power of the maximal ideal");
    }
    return I * MonomialIdeal::maximal_power(I.nvars(), k);
}

template Ideal<PrimeField> MonomialIdeal::to_ideal(const RingPtr<PrimeField>&, GbOptions) const;
template Ideal<RationalField> MonomialIdeal::to_ideal(const RingPtr<RationalField>&, GbOptions) const;
template std::optional<MonomialIdeal> MonomialIdeal::from_ideal(const Ideal<PrimeField>&);
template std::optional<MonomialIdeal> MonomialIdeal::from_ideal(const Ideal<RationalField>&);

} // namespace corelab
