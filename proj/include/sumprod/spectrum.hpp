#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "sumprod/fpset.hpp"
#include "sumprod/int128.hpp"
#include "sumprod/rational.hpp"

namespace sumprod {

// sum_{x in A} e(xi*x/p) with compensated summation; absolute error stays
// below 1e-10 * |A| for p < 2^31.
std::complex<double> exp_sum(const FpSet& a, uint32_t xi);

// |A-hat(xi)| for all xi: direct O(p*|A|) evaluation, per-element phasor
// recurrence with exact reseeding every block (so results do not depend on
// how the xi-range is partitioned across workers).
std::vector<double> fourier_magnitudes(const FpSet& a, unsigned parallelism = 1);

// Chirp-transform route (prime-length DFT via Bluestein); matches the direct
// evaluation within 1e-8 * |A| absolute.
std::vector<double> fourier_magnitudes_fast(const FpSet& a);

// Spec_alpha(A) = { xi : |A-hat(xi)| >= alpha|A| }. Membership is evaluated
// at one representative per symmetry orbit so that the exact mathematical
// invariances (spec = -spec, and H-invariance when an invariance subgroup is
// supplied) hold despite floating-point rounding. Threshold comparisons admit
// values within tau = 1e-9*|A| of alpha*|A|.
struct SpectrumReport {
    double alpha = 0;
    std::vector<double> magnitudes;  // raw per-xi values
    FpSet spec;
    std::optional<SubgroupSpec> invariance_group;
};

SpectrumReport spec(const FpSet& a, double alpha, const SubgroupSpec* invariance = nullptr, unsigned parallelism = 1);

// Proportion of pairs (x,y) in B^2 with x - y in Spec_{alpha^2/2}(H);
// guaranteed >= alpha^2/2 for any B subset of Spec_alpha(H).
struct PairDifferenceReport {
    double alpha = 0;
    uint32_t b_size = 0;
    u128 qualifying_pairs = 0;
    double proportion = 0;
    double bound = 0;  // alpha^2/2
    bool holds = false;
};

PairDifferenceReport spec_pair_difference_proportion(const FpSet& h, double alpha, const FpSet* b = nullptr);

// Corollary-style energy bound for subgroups: with A = Spec_alpha(H),
// A' = Spec_{alpha^2/2}(H), L = |A'|/|A|, every h in H has
// omega_+(A, h*A) >= alpha^4 / L.
struct SpecEnergyBound {
    double alpha = 0;
    uint32_t size_a = 0, size_a_prime = 0;
    Rat l_ratio;
    double min_energy = 0;
    uint32_t argmin_h = 0;
    double bound = 0;  // alpha^4 / L
    bool holds = false;
};

SpecEnergyBound spec_energy_bound_check(const SubgroupSpec& h, double alpha);

// max over xi != 0 of |H-hat(xi)| / |H|, evaluated once per coset of H in
// F_p^x (the magnitude is constant on cosets), plus the implied exponent
// delta' = -log(max)/log(p).
struct MaxGauss {
    double value = 0;
    uint32_t argmax_xi = 0;
    double delta_prime = 0;
};

MaxGauss max_gauss(const SubgroupSpec& h);

// Pigeonhole scale finder: alpha_0 = eta, alpha_{i+1} = alpha_i^2/2; returns
// the least i < J with |Spec_{alpha_{i+1}}| <= p^{1/J} |Spec_{alpha_i}|.
struct ScaleTrace {
    double eta = 0;
    uint32_t j_levels = 0;
    std::vector<double> alphas;       // alpha_0 .. alpha_J
    std::vector<uint32_t> spec_sizes; // same indexing
    uint32_t chosen_i = 0;
    Rat l_ratio;                      // sizes[chosen_i+1] / sizes[chosen_i]
    bool trivial_start = false;       // Spec_eta(H) == {0}
};

ScaleTrace scale_finder(const SubgroupSpec& h, double eta, uint32_t j_levels);

}  // namespace sumprod
