#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sumprod/fpset.hpp"
#include "sumprod/spectrum.hpp"
#include "sumprod/stats.hpp"

namespace sumprod {

// One check applied to one instance. Failures populate witness instead of
// throwing: the harness doubles as a debugging tool for the core modules.
struct VerificationRecord {
    std::string check_id;
    nlohmann::json params;
    bool pass = false;
    nlohmann::json measured;
    nlohmann::json witness;  // null unless pass == false
};

// max_xi |A + xi*A| >= ceil(min(|A|^2, p)/2) and the exact energy-averaging
// identity behind it.
VerificationRecord check_lemma61(const FpSet& a);

// |3A^2 - 3A^2| >= min(|A|^2, p)/2.
VerificationRecord check_growth(const FpSet& a);

// Iterates S -> 3S^2 - 3S^2 until F_p, a fixpoint, or max_iter; once
// |S| > p/2 the terminal step is S + S (= F_p).
struct GrowthTrace {
    FpSet initial;
    std::vector<uint32_t> sizes;  // starts with |A|
    uint32_t iterations_used = 0;
    bool reached_full = false;
    bool stalled = false;
    FpSet final_set;
};

GrowthTrace iterate_to_full(const FpSet& a, uint32_t max_iter);

// Measured |A+A|, |A*A| and the empirical growth exponent
// log(max(|A+A|,|A*A|))/log|A| - 1. Only the weak sanity
// max(|A+A|,|A*A|) > |A| is asserted, and only for 2 <= |A| < p.
VerificationRecord bkt_growth_measure(const FpSet& a);

enum class GeneratorKind { AllSubsets, Random, Subgroups };

struct SweepConfig {
    std::vector<uint32_t> p_list;
    GeneratorKind generator = GeneratorKind::AllSubsets;
    uint32_t max_size = 0;      // AllSubsets: cap on |A| (0 = no cap)
    uint64_t random_count = 0;  // Random: instances per p
    uint64_t seed = 1;          // Random: base seed, recorded in params
    std::vector<std::string> checks;
    std::vector<double> alpha_grid;  // empty = per-check default
    unsigned parallelism = 1;
};

struct SweepSummary {
    uint64_t records = 0, passed = 0, failed = 0;
};

// Known check ids: lemma61, growth3A2, bkt, parseval, cbs, alg-inverse,
// addspec (per alpha), addspec-energy (subgroups generator only, per alpha),
// cs-energy (instance = ordered pair), ruzsa-triangle (instance = triple).
// Records are emitted in deterministic (p, instance index) order regardless
// of parallelism. Refuses sweeps above 10^8 cases.
SweepSummary sweep(const SweepConfig& cfg, const std::function<void(const VerificationRecord&)>& emit);

// Deterministic random subset used by Random sweeps (and reproducible from
// the recorded seed/index): size uniform in [1, p], elements by partial
// Fisher-Yates.
FpSet random_subset(const PrimeModulus& m, uint64_t seed, uint64_t index);

struct GaussRow {
    uint32_t p = 0, d = 0;
    double delta = 0;        // log d / log p
    double max_gauss = 0;
    double delta_prime = 0;  // -log(max_gauss) / log p
};

// One row per prime p in [p_min, p_max] and divisor d | p-1 with d >= p^delta.
std::vector<GaussRow> gauss_decay_table(uint32_t p_min, uint32_t p_max, double min_delta);

}  // namespace sumprod
