#include "corelab/core.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace corelab {

namespace {

using Elem = PrimeField::Element;

Monomial x_monomial(const PRing& ring, const Exponent& e)
{
    Monomial m;
    for (std::size_t i = 0; i < e.size(); ++i) {
        m.set(ring->var(Block::X, static_cast<int>(i)), static_cast<unsigned>(e[i]));
    }
    return m;
}

Exponent x_part(const PRing& ring, const Monomial& m)
{
    const int d = ring->count(Block::X);
    Exponent e(d);
    for (int i = 0; i < d; ++i) {
        e[i] = static_cast<int>(m[ring->var(Block::X, i)]);
    }
    return e;
}

Exponent add(const Exponent& a, const Exponent& b)
{
    Exponent c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        c[i] = a[i] + b[i];
    }
    return c;
}

int exp_degree(const Exponent& e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

struct ExponentHash {
    std::size_t operator()(const Exponent& e) const
    {
        std::size_t h = 1469598103934665603ull;
        for (int x : e) {
            h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        }
        return h;
    }
};

// Row echelon form over GF(p) with distinct leading columns. A vector lies in
// the span iff repeated leading-term reduction sends it to zero.
class SparseEchelon {
public:
    using Row = std::vector<std::pair<int, Elem>>; // sorted by column

    explicit SparseEchelon(const PrimeField& k) : k_(k) {}

    void insert(Row r)
    {
        reduce(r);
        if (r.empty()) {
            return;
        }
        Elem inv = k_.inv(r.front().second);
        for (auto& [c, v] : r) {
            v = k_.mul(v, inv);
        }
        int lead = r.front().first;
        pivots_.emplace(lead, std::move(r));
    }

    bool in_span(Row r) const
    {
        reduce(r);
        return r.empty();
    }

    std::size_t rank() const { return pivots_.size(); }

private:
    void reduce(Row& r) const
    {
        while (!r.empty()) {
            auto it = pivots_.find(r.front().first);
            if (it == pivots_.end()) {
                return;
            }
            r = sub_mul(r, r.front().second, it->second);
        }
    }

    // r - c * p
    Row sub_mul(const Row& r, Elem c, const Row& p) const
    {
        Row out;
        out.reserve(r.size() + p.size());
        std::size_t i = 0, j = 0;
        while (i < r.size() || j < p.size()) {
            if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
                out.push_back(r[i++]);
            } else if (i == r.size() || p[j].first < r[i].first) {
                out.emplace_back(p[j].first, k_.neg(k_.mul(c, p[j].second)));
                ++j;
            } else {
                Elem v = k_.sub(r[i].second, k_.mul(c, p[j].second));
                if (v != 0) {
                    out.emplace_back(r[i].first, v);
                }
                ++i;
                ++j;
            }
        }
        return out;
    }

    PrimeField k_;
    std::map<int, Row> pivots_;
};

// I : x_v^a for homogeneous I, from a GB with x_v last in grevlex.
PIdeal colon_variable_power(const PIdeal& I, int v, unsigned a)
{
    if (a == 0 || I.is_zero()) {
        return I;
    }
    std::vector<PPoly> out;
    for (const auto& g : I.groebner(I.ring()->grevlex_with_last(v)).elements) {
        unsigned e = std::min(a, g.lead_monomial()[v]);
        if (e == 0) {
            out.push_back(g.in_ring(I.ring()));
            continue;
        }
        Monomial m;
        m.set(v, e);
        auto q = g.divide_exact(PPoly::term(g.ring(), m));
        if (!q) {
            throw std::logic_error("reverse-lex colon: leading term divisible but polynomial is not");
        }
        out.push_back(q->in_ring(I.ring()));
    }
    return PIdeal(I.ring(), std::move(out), I.options());
}

PIdeal colon_x_monomial(PIdeal I, const Exponent& e)
{
    for (std::size_t i = 0; i < e.size(); ++i) {
        I = colon_variable_power(I, I.ring()->var(Block::X, static_cast<int>(i)), static_cast<unsigned>(e[i]));
    }
    return I;
}

PIdeal minimized(const PIdeal& I)
{
    return I.is_zero() ? I : I.minimized();
}

std::vector<Elem> random_lambda(std::mt19937_64& rng, int n, const PrimeField& k)
{
    std::uniform_int_distribution<std::uint32_t> dist(0, k.characteristic() - 1);
    std::vector<Elem> out(n);
    for (auto& x : out) {
        x = dist(rng);
    }
    return out;
}

// Value of a Z-ring polynomial at a point of length nz.
Elem eval_z(const PPoly& f, const std::vector<Elem>& point)
{
    return evaluate(f, std::span<const Elem>(point));
}

std::string json_lambda(const std::vector<Elem>& l)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < l.size(); ++i) {
        out << (i ? "," : "") << l[i];
    }
    return out.str();
}

} // namespace

std::uint64_t fnv1a(const std::string& s)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h = (h ^ c) * 1099511628211ull;
    }
    return h;
}

std::uint64_t digest(const MonomialIdeal& I)
{
    return fnv1a(I.to_mi());
}

std::uint64_t digest(const PIdeal& I)
{
    std::string s;
    if (!I.is_zero()) {
        for (const auto& g : I.groebner(MonomialOrder::grevlex(I.ring()->nvars())).elements) {
            s += g.monic().to_string();
            s += ';';
        }
    }
    return fnv1a(s);
}

std::string hex_digest(std::uint64_t h)
{
    std::ostringstream out;
    out << std::hex;
    out.width(16);
    out.fill('0');
    out << h;
    return out.str();
}

GenericReduction build_generic(const MonomialIdeal& I, int s, bool include_tail, const PrimeField& field,
                               unsigned tail_power)
{
    if (I.is_zero()) {
        throw std::invalid_argument("generic reduction of the zero ideal");
    }
    if (s < 1) {
        throw std::invalid_argument("need at least one generic element");
    }
    GenericReduction G;
    G.base = I;
    G.s = s;
    const int d = I.nvars(), u = G.u();
    G.ring = make_ring(field, d, 0, s * u);
    for (int i = 0; i < s; ++i) {
        PPoly row(G.ring);
        for (int j = 0; j < u; ++j) {
            Monomial m = x_monomial(G.ring, I.gens()[j]);
            m.set(G.zvar(i, j), 1);
            row = row + PPoly::term(G.ring, m);
        }
        G.gens.push_back(std::move(row));
    }
    if (include_tail && !I.one_degree()) {
        const auto& gens = I.gens();
        auto it = std::min_element(gens.begin(), gens.end(),
                                   [](const Exponent& a, const Exponent& b) { return exp_degree(a) < exp_degree(b); });
        G.tail = *it;
        G.tail_power = tail_power ? tail_power : static_cast<unsigned>(d);
    }
    return G;
}

std::vector<PPoly> specialize(const GenericReduction& G, const PRing& xring, const std::vector<Elem>& lambda)
{
    if (static_cast<int>(lambda.size()) != G.nz()) {
        throw std::invalid_argument("lambda has the wrong size");
    }
    const int u = G.u();
    std::vector<PPoly> out;
    for (int i = 0; i < G.s; ++i) {
        std::vector<PPoly::Term> terms;
        for (int j = 0; j < u; ++j) {
            if (lambda[i * u + j] != 0) {
                terms.push_back({lambda[i * u + j], x_monomial(xring, G.base.gens()[j])});
            }
        }
        PPoly p(xring, std::move(terms));
        if (!p.is_zero()) {
            out.push_back(std::move(p));
        }
    }
    if (G.tail) {
        out.push_back(PPoly::term(xring, x_monomial(xring, *G.tail)).pow(G.tail_power));
    }
    return out;
}

std::optional<int> reduction_number(const MonomialIdeal& I, const std::vector<PPoly>& K, int r_max)
{
    if (K.empty()) {
        return I.is_zero() ? std::optional<int>(0) : std::nullopt;
    }
    const PRing& ring = K.front().ring();
    const int d = I.nvars();
    const bool homogeneous = std::all_of(K.begin(), K.end(), [](const PPoly& k) { return k.is_homogeneous(); });
    MonomialIdeal Ir = MonomialIdeal::unit(d);
    for (int r = 0; r <= r_max; ++r) {
        MonomialIdeal target = Ir * I;
        bool ok = true;
        if (!homogeneous) {
            std::vector<PPoly> prod;
            for (const auto& k : K) {
                for (const auto& m : Ir.gens()) {
                    prod.push_back(k.mul_term(ring->field().one(), x_monomial(ring, m)));
                }
            }
            PIdeal KIr(ring, std::move(prod));
            for (const auto& t : target.gens()) {
                if (!KIr.contains(PPoly::term(ring, x_monomial(ring, t)))) {
                    ok = false;
                    break;
                }
            }
        } else {
            std::map<int, std::vector<const Exponent*>> by_degree;
            for (const auto& t : target.gens()) {
                by_degree[exp_degree(t)].push_back(&t);
            }
            for (const auto& [D, monos] : by_degree) {
                std::unordered_map<Exponent, int, ExponentHash> col;
                auto column = [&](const Exponent& e) {
                    auto [it, fresh] = col.emplace(e, static_cast<int>(col.size()));
                    return it->second;
                };
                SparseEchelon E(ring->field());
                for (const auto& k : K) {
                    const int dk = k.degree();
                    std::vector<std::pair<Exponent, Elem>> kt;
                    for (const auto& t : k.terms()) {
                        kt.emplace_back(x_part(ring, t.mono), t.coeff);
                    }
                    for (const auto& m : Ir.gens()) {
                        const int rest = D - dk - exp_degree(m);
                        if (rest < 0) {
                            continue;
                        }
                        for (const auto& b : monomials_of_degree(d, rest)) {
                            Exponent mb = add(m, b);
                            SparseEchelon::Row row;
                            for (const auto& [e, c] : kt) {
                                row.emplace_back(column(add(e, mb)), c);
                            }
                            std::sort(row.begin(), row.end());
                            E.insert(std::move(row));
                        }
                    }
                }
                for (const Exponent* t : monos) {
                    auto it = col.find(*t);
                    if (it == col.end() || !E.in_span({{it->second, 1}})) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) {
                    break;
                }
            }
        }
        if (ok) {
            return r;
        }
        Ir = Ir * I;
    }
    return std::nullopt;
}

std::uint64_t ReductionCertificate::lambda_digest() const
{
    return fnv1a(json_lambda(lambda));
}

ReductionCertificate certify(const MonomialIdeal& I, std::vector<PPoly> K, int r_max)
{
    ReductionCertificate c;
    c.gens = std::move(K);
    c.r_max = r_max;
    c.attempts = 1;
    c.r = reduction_number(I, c.gens, r_max);
    c.verified = c.r.has_value();
    return c;
}

ReductionCertificate sample_reduction(const GenericReduction& G, const PRing& xring, std::uint64_t seed,
                                      const PipelineConfig& cfg)
{
    std::mt19937_64 rng(seed);
    const int r_max = cfg.effective_r_max(G.base.nvars());
    for (int attempt = 1; attempt <= cfg.retries; ++attempt) {
        auto lambda = random_lambda(rng, G.nz(), cfg.field);
        auto c = certify(G.base, specialize(G, xring, lambda), r_max);
        c.lambda = std::move(lambda);
        c.attempts = attempt;
        if (c.verified) {
            return c;
        }
    }
    throw SamplingFailed("no verified reduction after " + std::to_string(cfg.retries) + " samples (r <= " +
                         std::to_string(r_max) + "); s may be below the analytic spread");
}

MonomialIdeal mono_of(const PIdeal& K)
{
    const PRing& xring = K.ring();
    const int d = xring->count(Block::X);
    if (static_cast<int>(xring->nvars()) != d) {
        throw std::invalid_argument("mono_of expects a ring with only x variables");
    }
    if (K.is_zero()) {
        return MonomialIdeal(d);
    }
    if (auto m = MonomialIdeal::from_ideal(K)) {
        return *m;
    }
    auto ring2 = xring->with_blocks(d, d, 0, 0);
    std::vector<PPoly> gens;
    Monomial yall;
    for (int i = 0; i < d; ++i) {
        yall.set(ring2->var(Block::Y, i), 1);
    }
    for (const auto& g : K.generators()) {
        gens.push_back(multihomogenize(embed(g, ring2)));
    }
    PIdeal L(ring2, std::move(gens), K.options());
    L = saturate(L, PPoly::term(ring2, yall));
    auto elim = eliminate(ring2, std::span<const PPoly>(L.generators()), {Block::Y}, K.options());
    std::vector<Exponent> out;
    for (const auto& g : elim) {
        if (!g.is_monomial()) {
            throw std::logic_error("mono_of: eliminant is not a monomial: " + g.to_string());
        }
        out.push_back(x_part(ring2, g.lead_monomial()));
    }
    MonomialIdeal M(d, std::move(out));
    for (const auto& e : M.gens()) {
        if (!K.contains(PPoly::term(xring, x_monomial(xring, e)))) {
            throw std::logic_error("mono_of: generator outside K");
        }
    }
    return M;
}

MonomialIdeal MonoDecomposition::N_ideal(int d) const
{
    std::vector<Exponent> g;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (in_N[i]) {
            g.push_back(v[i]);
        }
    }
    return MonomialIdeal(d, std::move(g));
}

MonomialIdeal MonoDecomposition::M_ideal(int d) const
{
    return MonomialIdeal(d, v);
}

namespace {

// c(z) from c(z) x^v in a ring with X (and maybe Y) before Z.
PPoly z_coefficient(const PPoly& g, const Exponent& v, const PRing& zring)
{
    const auto& ring = g.ring();
    auto q = g.divide_exact(PPoly::term(ring, x_monomial(ring, v)));
    if (!q) {
        throw std::logic_error("element is not a multiple of its x-part");
    }
    std::vector<int> map(ring->nvars(), -1);
    for (int j = 0; j < ring->count(Block::Z); ++j) {
        map[ring->var(Block::Z, j)] = j;
    }
    return q->map_variables(zring, map);
}

void finish_content(MonoDecomposition& M, const GbOptions& opts)
{
    const auto& k = M.zring->field();
    std::vector<PPoly> all;
    for (const auto& C : M.C) {
        for (const auto& g : C.generators()) {
            all.push_back(g);
        }
    }
    if (all.empty()) {
        throw std::logic_error("mono(J) is zero");
    }
    std::sort(all.begin(), all.end(), [](const PPoly& a, const PPoly& b) { return a.degree() < b.degree(); });
    PPoly h = all.front();
    for (const auto& g : all) {
        if (h.is_constant()) {
            break;
        }
        if (!g.divide_exact(h)) {
            h = gcd_poly(h, g, opts);
        }
    }
    M.h = h.is_constant() ? PPoly::constant(M.zring, k.one()) : h.monic();
    M.degenerate = M.h.is_constant();
    PIdeal content(M.zring, all, opts);
    M.content_principal = equals(content, PIdeal(M.zring, {M.h}, opts));
    M.in_N.clear();
    std::vector<PPoly> dgens;
    for (const auto& C : M.C) {
        bool n = radical_membership(M.h, C);
        M.in_N.push_back(n);
        if (!n) {
            dgens.insert(dgens.end(), C.generators().begin(), C.generators().end());
        }
    }
    if (dgens.empty()) {
        M.D.reset();
    } else {
        M.D = minimized(PIdeal(M.zring, std::move(dgens), opts));
    }
}

MonoDecomposition mono_full(const GenericReduction& G, const PipelineConfig& cfg)
{
    const int d = G.base.nvars(), nz = G.nz();
    auto ring3 = G.ring->with_blocks(d, d, nz, 0);
    std::vector<int> map(G.ring->nvars());
    for (int i = 0; i < d; ++i) {
        map[i] = ring3->var(Block::X, i);
    }
    for (int j = 0; j < nz; ++j) {
        map[d + j] = ring3->var(Block::Z, j);
    }
    std::vector<PPoly> gens;
    for (const auto& g : G.gens) {
        gens.push_back(multihomogenize(g.map_variables(ring3, map)));
    }
    Monomial yall;
    for (int i = 0; i < d; ++i) {
        yall.set(ring3->var(Block::Y, i), 1);
    }
    PIdeal L(ring3, std::move(gens), cfg.gb);
    L = saturate(L, PPoly::term(ring3, yall));
    auto elim = eliminate(ring3, std::span<const PPoly>(L.generators()), {Block::Y}, cfg.gb);

    MonoDecomposition M;
    M.zring = make_ring(cfg.field, 0, 0, nz);
    std::vector<std::pair<Exponent, PPoly>> parts;
    for (const auto& g : elim) {
        Exponent v = x_part(ring3, g.lead_monomial());
        for (const auto& t : g.terms()) {
            if (x_part(ring3, t.mono) != v) {
                throw std::logic_error("eliminant is not multihomogeneous in x");
            }
        }
        if (std::find(M.v.begin(), M.v.end(), v) == M.v.end()) {
            M.v.push_back(v);
        }
        parts.emplace_back(v, z_coefficient(g, v, M.zring));
    }
    std::sort(M.v.begin(), M.v.end(), std::greater<>());
    for (const auto& v : M.v) {
        std::vector<PPoly> c;
        for (const auto& [w, p] : parts) {
            if (divides(w, v)) {
                c.push_back(p);
            }
        }
        M.C.push_back(minimized(PIdeal(M.zring, std::move(c), cfg.gb)));
    }
    return M;
}

MonoDecomposition mono_fallback(const GenericReduction& G, const PipelineConfig& cfg)
{
    const int d = G.base.nvars();
    auto xring = make_ring(cfg.field, d);
    auto cert = sample_reduction(G, xring, cfg.seed, cfg);
    auto sample = mono_of(PIdeal(xring, cert.gens, cfg.gb));
    MonoDecomposition M;
    M.zring = make_ring(cfg.field, 0, 0, G.nz());
    M.v = sample.gens();
    PIdeal J(G.ring, G.gens, cfg.gb);
    for (const auto& v : M.v) {
        auto Q = colon_x_monomial(J, v);
        auto elim = eliminate(G.ring, std::span<const PPoly>(Q.generators()), {Block::X}, cfg.gb);
        std::vector<PPoly> c;
        for (const auto& g : elim) {
            c.push_back(z_coefficient(g, Exponent(d, 0), M.zring));
        }
        M.C.push_back(minimized(PIdeal(M.zring, std::move(c), cfg.gb)));
    }
    return M;
}

} // namespace

MonoDecomposition mono_symbolic(const GenericReduction& G, const PipelineConfig& cfg, bool force_fallback)
{
    if (G.tail) {
        throw std::invalid_argument("mono_symbolic needs a one-degree ideal (no tail)");
    }
    MonoDecomposition M;
    bool done = false;
    std::string reason = "requested";
    if (!force_fallback) {
        try {
            M = mono_full(G, cfg);
            done = true;
        } catch (const BudgetExhausted& e) {
            reason = e.what();
        }
    }
    if (!done) {
        M = mono_fallback(G, cfg);
        M.used_fallback = true;
        M.fallback_reason = reason;
    }
    finish_content(M, cfg.gb);
    return M;
}

const char* method_name(CoreMethod m)
{
    switch (m) {
    case CoreMethod::MonoOfGeneral: return "mono-of-general";
    case CoreMethod::StabilizedIntersection: return "stabilized-intersection";
    case CoreMethod::Sandwich: return "sandwich";
    }
    return "?";
}

nlohmann::ordered_json CoreResult::to_json() const
{
    nlohmann::ordered_json j;
    j["candidate"] = candidate.to_mi();
    if (upper) {
        j["upper"] = upper->to_mi();
    }
    j["method"] = method_name(method);
    j["status"] = status;
    nlohmann::ordered_json hyp;
    hyp["Gd"] = Gd ? nlohmann::ordered_json(*Gd) : nlohmann::ordered_json();
    hyp["S2"] = S2 ? nlohmann::ordered_json(*S2) : nlohmann::ordered_json();
    j["hypotheses"] = hyp;
    j["not_a_proof"] = not_a_proof;
    j["seeds"] = seeds;
    j["p"] = p;
    auto reds = nlohmann::ordered_json::array();
    for (const auto& r : reductions) {
        nlohmann::ordered_json e;
        e["lambda-digest"] = hex_digest(r.lambda_digest);
        e["r"] = r.r ? nlohmann::ordered_json(*r.r) : nlohmann::ordered_json();
        reds.push_back(e);
    }
    j["reductions"] = reds;
    j["trace"] = trace;
    if (refusal) {
        j["refusal"] = {{"witness", refusal->witness}, {"generators", refusal->witness_generators}};
    }
    return j;
}

CoreResult core_by_intersection(const MonomialIdeal& I, const PipelineConfig& cfg, IntersectionPolicy policy,
                                std::optional<bool> s2)
{
    const int d = I.nvars();
    auto xring = make_ring(cfg.field, d);
    CoreResult res;
    res.method = CoreMethod::StabilizedIntersection;
    res.p = cfg.field.characteristic();
    res.Gd = check_Gs(I, d).holds;
    res.S2 = s2;
    res.not_a_proof = !(*res.Gd && s2.value_or(false));
    auto G = build_generic(I, d, !I.one_degree(), cfg.field);
    std::optional<PIdeal> running;
    int stall = 0, n = 0;
    for (std::uint64_t k = 0; n < policy.max_n; ++k) {
        const std::uint64_t seed = cfg.seed + k;
        auto cert = sample_reduction(G, xring, seed, cfg);
        ++n;
        res.seeds.push_back(seed);
        res.reductions.push_back({cert.lambda_digest(), cert.r});
        PIdeal K(xring, cert.gens, cfg.gb);
        if (!running) {
            running = minimized(K);
        } else {
            auto next = minimized(intersect(*running, K));
            if (!running->contains(next)) {
                throw std::logic_error("running intersection grew");
            }
            stall = next.contains(*running) ? stall + 1 : 0;
            running = std::move(next);
        }
        res.trace.push_back(hex_digest(digest(*running)));
        if (n >= policy.min_n && stall >= policy.stall) {
            break;
        }
    }
    res.status = stall >= policy.stall ? "ok" : "unstable";
    if (auto m = MonomialIdeal::from_ideal(*running)) {
        res.candidate = *m;
    } else {
        res.candidate = mono_of(*running);
        res.status = "not-monomial";
    }
    return res;
}

CoreResult core_via_mono(const MonomialIdeal& I, const PipelineConfig& cfg, std::optional<bool> s2)
{
    const int d = I.nvars();
    CoreResult res;
    res.method = CoreMethod::MonoOfGeneral;
    res.p = cfg.field.characteristic();
    res.S2 = s2;
    auto gs = check_Gs(I, d);
    res.Gd = gs.holds;
    if (!gs.holds) {
        res.status = "refused";
        res.refusal = gs;
        res.not_a_proof = true;
        res.candidate = MonomialIdeal(d);
        return res;
    }
    res.not_a_proof = !s2.value_or(false);
    auto xring = make_ring(cfg.field, d);
    auto G = build_generic(I, d, !I.one_degree(), cfg.field);
    std::vector<MonomialIdeal> monos;
    auto run = [&](std::uint64_t seed) {
        auto cert = sample_reduction(G, xring, seed, cfg);
        res.seeds.push_back(seed);
        res.reductions.push_back({cert.lambda_digest(), cert.r});
        monos.push_back(mono_of(PIdeal(xring, cert.gens, cfg.gb)));
        res.trace.push_back(hex_digest(digest(monos.back())));
    };
    for (int k = 0; k <= cfg.extra_seeds; ++k) {
        run(cfg.seed + k);
    }
    auto agree = [&] { return std::all_of(monos.begin(), monos.end(), [&](const auto& m) { return m == monos[0]; }); };
    res.status = "ok";
    if (!agree()) {
        // Some sample was special; widen and take the most common value.
        res.status = "resampled";
        for (int k = cfg.extra_seeds + 1; k <= 3 * cfg.extra_seeds + 2; ++k) {
            run(cfg.seed + k);
        }
        std::size_t best = 0, best_count = 0;
        for (std::size_t i = 0; i < monos.size(); ++i) {
            auto c = static_cast<std::size_t>(std::count(monos.begin(), monos.end(), monos[i]));
            if (c > best_count) {
                best = i;
                best_count = c;
            }
        }
        res.candidate = monos[best];
        return res;
    }
    res.candidate = monos[0];
    return res;
}

std::vector<std::vector<Elem>> sample_special_lambda(const GenericReduction& G, const MonoDecomposition& M,
                                                     int budget, std::uint64_t seed,
                                                     std::vector<std::string>* diagnostics)
{
    std::vector<std::vector<Elem>> found;
    auto note = [&](const std::string& s) {
        if (diagnostics) {
            diagnostics->push_back(s);
        }
    };
    if (!M.D) {
        note("D is empty: every coefficient ideal has radical (h)");
        return found;
    }
    const auto& Dgb = M.D->groebner().elements;
    if (M.D->is_unit()) {
        note("D is the unit ideal");
        return found;
    }
    const int s = G.s, u = G.u(), nz = G.nz();
    const auto& k = M.zring->field();
    auto xring = make_ring(k, G.base.nvars());
    std::set<std::uint64_t> seen;
    auto accept = [&](const std::vector<Elem>& l) {
        for (const auto& g : Dgb) {
            if (eval_z(g, l) != 0) {
                return false;
            }
        }
        if (eval_z(M.h, l) == 0) {
            return false;
        }
        if (std::find(found.begin(), found.end(), l) != found.end()) {
            return false;
        }
        auto K = specialize(G, xring, l);
        // Row permutations and rescalings give the same ideal; keep one.
        if (!seen.insert(digest(PIdeal(xring, K))).second) {
            return false;
        }
        return certify(G.base, std::move(K), 3 * G.base.nvars() + 5).verified;
    };

    // Rows selecting one generator or the sum of two.
    std::vector<std::vector<int>> rows;
    for (int j = 0; j < u; ++j) {
        rows.push_back({j});
    }
    for (int j = 0; j < u; ++j) {
        for (int l = j + 1; l < u; ++l) {
            rows.push_back({j, l});
        }
    }
    std::vector<std::size_t> idx(s, 0);
    while (static_cast<int>(found.size()) < budget) {
        std::vector<Elem> l(nz, 0);
        for (int i = 0; i < s; ++i) {
            for (int j : rows[idx[i]]) {
                l[i * u + j] = 1;
            }
        }
        if (accept(l)) {
            found.push_back(l);
        }
        int i = s - 1;
        while (i >= 0 && idx[i] + 1 == rows.size()) {
            idx[i] = 0;
            --i;
        }
        if (i < 0) {
            break;
        }
        ++idx[i];
    }
    const std::size_t structured = found.size();

    // Random points with one coordinate solved per D-generator.
    std::mt19937_64 rng(seed);
    for (int tries = 0; tries < 400 && static_cast<int>(found.size()) < budget; ++tries) {
        auto l = random_lambda(rng, nz, k);
        std::vector<int> order(nz);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        for (const auto& g : Dgb) {
            for (int w : order) {
                // g as a0 + a1 w + (higher) with the other coordinates fixed.
                Elem a0 = 0, a1 = 0;
                bool higher = false;
                for (const auto& t : g.terms()) {
                    Elem c = t.coeff;
                    for (int v = 0; v < nz; ++v) {
                        if (v == w) {
                            continue;
                        }
                        for (unsigned e = 0; e < t.mono[v]; ++e) {
                            c = k.mul(c, l[v]);
                        }
                    }
                    unsigned e = t.mono[w];
                    if (e == 0) {
                        a0 = k.add(a0, c);
                    } else if (e == 1) {
                        a1 = k.add(a1, c);
                    } else if (c != 0) {
                        higher = true;
                    }
                }
                if (!higher && a1 != 0) {
                    l[w] = k.neg(k.div(a0, a1));
                    break;
                }
            }
        }
        if (accept(l)) {
            found.push_back(l);
        }
    }
    note("structured candidates: " + std::to_string(structured) +
         ", random candidates: " + std::to_string(found.size() - structured));
    return found;
}

CoreResult gradedcore_sandwich(const GenericReduction& G, const MonoDecomposition& M,
                               const std::vector<std::vector<Elem>>& special, const PipelineConfig& cfg)
{
    const int d = G.base.nvars();
    auto xring = make_ring(cfg.field, d);
    CoreResult res;
    res.method = CoreMethod::Sandwich;
    res.p = cfg.field.characteristic();
    res.Gd = check_Gs(G.base, d).holds;
    res.not_a_proof = true;
    MonomialIdeal lower = M.N_ideal(d);

    auto general = sample_reduction(G, xring, cfg.seed, cfg);
    res.seeds.push_back(cfg.seed);
    res.reductions.push_back({general.lambda_digest(), general.r});
    MonomialIdeal upper = mono_of(PIdeal(xring, general.gens, cfg.gb));
    res.trace.push_back(hex_digest(digest(upper)));

    // Keep a special reduction only when it shrinks the upper bound.
    std::optional<PIdeal> meet;
    for (const auto& l : special) {
        if (upper == lower) {
            break;
        }
        if (eval_z(M.h, l) == 0) {
            throw std::invalid_argument("special lambda on the non-reduction locus h = 0");
        }
        auto c = certify(G.base, specialize(G, xring, l), cfg.effective_r_max(d));
        if (!c.verified) {
            throw std::invalid_argument("special lambda does not verify as a reduction");
        }
        c.lambda = l;
        PIdeal K(xring, c.gens, cfg.gb);
        auto next = meet ? minimized(intersect(*meet, K)) : K;
        auto bound = upper.intersect(mono_of(next));
        if (bound == upper) {
            continue;
        }
        meet = std::move(next);
        upper = std::move(bound);
        res.reductions.push_back({c.lambda_digest(), c.r});
        res.trace.push_back(hex_digest(digest(upper)));
    }
    res.candidate = lower;
    if (lower == upper) {
        res.status = "closed";
    } else {
        res.status = "open";
        res.upper = upper;
    }
    return res;
}

PIdeal colon_power_bound(const MonomialIdeal& I, const std::vector<PPoly>& J, unsigned n, const PRing& xring)
{
    PIdeal Jn1 = power(PIdeal(xring, J), n + 1);
    Jn1 = minimized(Jn1);
    std::optional<PIdeal> acc;
    const MonomialIdeal In = I.power(static_cast<int>(n));
    for (const auto& m : In.gens()) {
        auto q = colon_x_monomial(Jn1, m);
        acc = acc ? minimized(intersect(*acc, q)) : minimized(q);
        if (Jn1.contains(*acc)) {
            break;
        }
    }
    return *acc;
}

PPoly fiber_locus_crosscheck(const GenericReduction& G, const PipelineConfig& cfg)
{
    const MonomialIdeal& I = G.base;
    const int d = I.nvars(), u = G.u(), nz = G.nz();
    // Presentation k[T]/P of the fiber ring k[I_delta].
    auto A = make_ring(cfg.field, d, 0, 0, u);
    std::vector<PPoly> ker;
    for (int j = 0; j < u; ++j) {
        ker.push_back(PPoly::variable(A, A->var(Block::T, j)) - PPoly::term(A, x_monomial(A, I.gens()[j])));
    }
    auto P = eliminate(A, std::span<const PPoly>(ker), {Block::X}, cfg.gb);

    auto B = make_ring(cfg.field, 0, 0, nz, u);
    std::vector<int> map(A->nvars(), -1);
    for (int j = 0; j < u; ++j) {
        map[A->var(Block::T, j)] = B->var(Block::T, j);
    }
    std::vector<PPoly> gens;
    for (const auto& p : P) {
        gens.push_back(p.map_variables(B, map));
    }
    for (int i = 0; i < G.s; ++i) {
        PPoly row(B);
        for (int j = 0; j < u; ++j) {
            row = row + PPoly::variable(B, B->var(Block::Z, i * u + j)) * PPoly::variable(B, B->var(Block::T, j));
        }
        gens.push_back(row);
    }
    std::vector<PPoly> plus;
    for (int j = 0; j < u; ++j) {
        plus.push_back(PPoly::variable(B, B->var(Block::T, j)));
    }
    PIdeal H(B, std::move(gens), cfg.gb);
    auto S = saturate(H, PIdeal(B, std::move(plus), cfg.gb));
    auto elim = eliminate(B, std::span<const PPoly>(S.generators()), {Block::T}, cfg.gb);
    auto zring = make_ring(cfg.field, 0, 0, nz);
    std::vector<int> zmap(B->nvars(), -1);
    for (int j = 0; j < nz; ++j) {
        zmap[B->var(Block::Z, j)] = j;
    }
    if (elim.empty()) {
        return PPoly(zring);
    }
    PPoly h = elim.front().map_variables(zring, zmap);
    for (std::size_t i = 1; i < elim.size(); ++i) {
        h = gcd_poly(h, elim[i].map_variables(zring, zmap), cfg.gb);
    }
    return h.monic();
}

} // namespace corelab
