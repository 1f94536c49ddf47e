#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "corelab/groebner.hpp"
#include "corelab/ideal.hpp"
#include "corelab/monomial_ideal.hpp"

// Reductions, mono(-), content analysis and core computations for monomial
// ideals over GF(p).
namespace corelab {

using PPoly = Polynomial<PrimeField>;
using PIdeal = Ideal<PrimeField>;
using PRing = RingPtr<PrimeField>;

struct PipelineConfig {
    PrimeField field{};
    std::uint64_t seed = 1;
    GbOptions gb{};
    int r_max = -1;  // -1: 3d + 5
    int retries = 8; // resamples per reduction before giving up
    int extra_seeds = 2;

    int effective_r_max(int d) const { return r_max >= 0 ? r_max : 3 * d + 5; }
};

class SamplingFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Rows of [z][f]^T over k[z][x]: s combinations of the u generators of base.
// z_{i,j} is Z variable i*u + j.
struct GenericReduction {
    MonomialIdeal base{1};
    int s = 0;
    PRing ring; // X (d) and Z (s*u)
    std::vector<PPoly> gens;
    std::optional<Exponent> tail; // f, when I is not generated in one degree
    unsigned tail_power = 0;

    int u() const { return static_cast<int>(base.size()); }
    int nz() const { return s * u(); }
    int zvar(int i, int j) const { return ring->var(Block::Z, i * u() + j); }
};

GenericReduction build_generic(const MonomialIdeal& I, int s, bool include_tail, const PrimeField& field,
                               unsigned tail_power = 0);

// Generators of pi_lambda(J) (+ f^r) in k[x]; lambda is row-major s x u.
std::vector<PPoly> specialize(const GenericReduction& G, const PRing& xring,
                              const std::vector<PrimeField::Element>& lambda);

// Least r <= r_max with I^{r+1} = (K) I^r, by linear algebra in each degree
// where I^{r+1} has a minimal generator. K must be homogeneous and inside I.
std::optional<int> reduction_number(const MonomialIdeal& I, const std::vector<PPoly>& K, int r_max);

struct ReductionCertificate {
    std::vector<PrimeField::Element> lambda;
    std::vector<PPoly> gens; // K in k[x]
    bool verified = false;
    std::optional<int> r;
    int r_max = 0;
    int attempts = 0;

    std::uint64_t lambda_digest() const;
};

ReductionCertificate certify(const MonomialIdeal& I, std::vector<PPoly> K, int r_max);

// Uniform lambda, verify, resample on failure; deterministic in seed.
ReductionCertificate sample_reduction(const GenericReduction& G, const PRing& xring, std::uint64_t seed,
                                      const PipelineConfig& cfg);

// Largest monomial ideal inside K (K in a ring with only the X block).
MonomialIdeal mono_of(const PIdeal& K);

struct MonoDecomposition {
    PRing zring; // Z block only
    std::vector<Exponent> v;
    std::vector<PIdeal> C; // C_i = {c : c x^{v_i} in mono(J)}
    PPoly h{PRing{}};
    bool content_principal = false;
    bool degenerate = false; // h constant
    std::vector<bool> in_N;
    std::optional<PIdeal> D; // empty when every v_i is in N
    bool used_fallback = false;
    std::string fallback_reason;

    MonomialIdeal N_ideal(int d) const;
    MonomialIdeal M_ideal(int d) const;
};

// Full elimination in k[x, y, z]; falls back to per-monomial colons when the
// budget runs out.
MonoDecomposition mono_symbolic(const GenericReduction& G, const PipelineConfig& cfg, bool force_fallback = false);

enum class CoreMethod { MonoOfGeneral, StabilizedIntersection, Sandwich };
const char* method_name(CoreMethod m);

struct ReductionRecord {
    std::uint64_t lambda_digest = 0;
    std::optional<int> r;
};

struct CoreResult {
    MonomialIdeal candidate{1};
    std::optional<MonomialIdeal> upper; // sandwich left open
    CoreMethod method = CoreMethod::MonoOfGeneral;
    std::string status; // ok, refused, open, not-monomial
    std::optional<bool> Gd;
    std::optional<bool> S2; // asserted by class, never computed
    std::vector<std::uint64_t> seeds;
    std::uint32_t p = 0;
    std::vector<ReductionRecord> reductions;
    std::vector<std::string> trace;
    std::optional<GsCheck> refusal;
    bool not_a_proof = false;

    nlohmann::ordered_json to_json() const;
};

struct IntersectionPolicy {
    int stall = 3;
    int min_n = 5;
    int max_n = 200;
};

CoreResult core_by_intersection(const MonomialIdeal& I, const PipelineConfig& cfg, IntersectionPolicy policy = {},
                                std::optional<bool> s2 = std::nullopt);

// s2: residual-S2 flag supplied by the caller (set for lex segments).
CoreResult core_via_mono(const MonomialIdeal& I, const PipelineConfig& cfg, std::optional<bool> s2);

// Structured 0/1 candidates first, then random points on V(D).
std::vector<std::vector<PrimeField::Element>> sample_special_lambda(const GenericReduction& G,
                                                                    const MonoDecomposition& M, int budget,
                                                                    std::uint64_t seed,
                                                                    std::vector<std::string>* diagnostics = nullptr);

CoreResult gradedcore_sandwich(const GenericReduction& G, const MonoDecomposition& M,
                               const std::vector<std::vector<PrimeField::Element>>& special, const PipelineConfig& cfg);

// J^{n+1} : I^n.
PIdeal colon_power_bound(const MonomialIdeal& I, const std::vector<PPoly>& J, unsigned n, const PRing& xring);

// Generator of (H :_{F[z]} F_+^inf) ∩ k[z], F the fiber ring of I; tiny inputs.
PPoly fiber_locus_crosscheck(const GenericReduction& G, const PipelineConfig& cfg);

// Order-independent digests.
std::uint64_t fnv1a(const std::string& s);
std::uint64_t digest(const MonomialIdeal& I);
std::uint64_t digest(const PIdeal& I);
std::string hex_digest(std::uint64_t h);

} // namespace corelab
