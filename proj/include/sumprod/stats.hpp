#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sumprod/fpset.hpp"
#include "sumprod/int128.hpp"
#include "sumprod/rational.hpp"

namespace sumprod {

// Exact number of quadruples (a1,b1,a2,b2) in AxBxAxB with a1+b1 = a2+b2,
// i.e. sum_x r_{A+B}(x)^2.
u128 quadruple_count(const FpSet& a, const FpSet& b);

// Additive energy omega_+(A,B) = |A|^{-3/2}|B|^{-3/2} * quadruple count.
struct EnergyReport {
    u128 quadruples = 0;
    uint32_t size_a = 0, size_b = 0;

    double omega() const;
    // Exact rational form; available whenever |A||B| is a perfect square
    // (always for |A| = |B|, the case every identity here uses).
    std::optional<Rat> omega_exact() const;
    // omega^2 = quadruples^2 / (|A|^3 |B|^3); exact for all sizes.
    bool omega_at_most_one() const;
};

EnergyReport additive_energy(const FpSet& a, const FpSet& b);

// Exact Cauchy-Schwarz lower bound (the easy BSG direction):
// omega_+(A,B) >= sqrt(|A||B|)/|A+B|, i.e. count * |A+B| >= (|A||B|)^2.
bool energy_cs_bound_holds(u128 quadruples, uint32_t size_a, uint32_t size_b, uint32_t sumset_size);

// |A+A| / |A| as an exact rational.
Rat doubling_sigma(const FpSet& a);

// log(|A-B| / sqrt(|A||B|)); nonnegative.
double ruzsa_distance(const FpSet& a, const FpSet& b);

// Alg_K(A) = { xi != 0 : |A + xi*A| <= K|A| }, with per-xi expansion ratios.
struct AlgReport {
    Rat threshold_k;
    FpSet members;
    std::vector<Rat> ratios;  // index xi; slot 0 unused
};

AlgReport alg_set(const FpSet& a, const Rat& k);

// Both sides of sum_{xi != 0} omega_+(A, xi*A) = (p - 1 + (|A|-1)^2) / |A|,
// computed independently (left: per-xi quadruple counts; right: closed form).
struct XiEnergyIdentity {
    Rat empirical;     // sum of per-xi energies
    Rat closed_form;   // (p - 1 + (|A|-1)^2) / |A|
    u128 total_quadruples = 0;
    bool matches = false;
};

XiEnergyIdentity xi_energy_average(const FpSet& a);

// xi maximizing |A + xi*A| (smallest xi on ties) plus the attained size.
struct BestXi {
    uint32_t xi = 0;
    uint32_t sumset_size = 0;
};

BestXi best_xi(const FpSet& a);

// Popular-intersection selection: given S_1..S_k subsets of {0..universe-1}
// with |S_i| >= delta*universe, pick i maximizing sum_j |S_i ^ S_j| and
// return every j with |S_i ^ S_j| >= (delta^2/2)*universe. The returned list
// has at least delta^2*k/2 entries. Thresholds are evaluated exactly in
// rational arithmetic.
struct PopularIntersection {
    size_t index = 0;
    std::vector<size_t> qualifying;
    u128 overlap_sum = 0;  // sum_j |S_i ^ S_j| at the selected i
};

PopularIntersection popular_intersection_index(uint32_t universe, const std::vector<BitVec>& sets, const Rat& delta);

}  // namespace sumprod
