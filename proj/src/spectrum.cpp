#include "sumprod/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "sumprod/dft.hpp"
#include "sumprod/parallel.hpp"
#include "sumprod/stats.hpp"

namespace sumprod {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// xi-range block length for the phasor recurrence; every block is reseeded
// exactly so the result is identical however blocks are assigned to workers.
constexpr uint32_t kBlock = 512;

void require_nonempty(const FpSet& a, const char* what) {
    if (a.empty()) throw EmptyOperand(std::string(what) + ": empty operand");
}

double threshold_tau(uint32_t card) { return 1e-9 * static_cast<double>(card); }

// Membership value per frequency: the magnitude evaluated at one
// representative of the orbit of xi under negation and, when given, the
// invariance subgroup. Conjugation symmetry and H-invariance are exact in
// the reals, so orbit-consistent evaluation keeps them exact in floating
// point as well.
std::vector<double> orbit_values(const std::vector<double>& mags, const PrimeModulus& m, const SubgroupSpec* invariance) {
    const uint32_t p = m.p();
    std::vector<double> v(p);
    v[0] = mags[0];
    if (invariance == nullptr) {
        for (uint32_t xi = 1; xi < p; ++xi) v[xi] = mags[std::min(xi, p - xi)];
        return v;
    }
    auto h_els = invariance->elements.elements();
    std::vector<bool> seen(p, false);
    seen[0] = true;
    for (uint32_t xi = 1; xi < p; ++xi) {
        if (seen[xi]) continue;
        // xi is the smallest element of its +/-(xi*H) orbit
        double val = mags[xi];
        for (uint32_t h : h_els) {
            uint32_t y = m.mul(xi, h);
            seen[y] = true;
            v[y] = val;
            seen[p - y] = true;
            v[p - y] = val;
        }
    }
    return v;
}

FpSet spec_members(const std::vector<double>& values, const PrimeModulus& m, double alpha, uint32_t card) {
    BitVec bits(m.p());
    const double thr = alpha * static_cast<double>(card) - threshold_tau(card);
    for (uint32_t xi = 0; xi < m.p(); ++xi)
        if (values[xi] >= thr) bits.set(xi);
    return FpSet(m, std::move(bits));
}

}  // namespace

std::complex<double> exp_sum(const FpSet& a, uint32_t xi) {
    require_nonempty(a, "exp_sum");
    const uint32_t p = a.p();
    const double step = kTwoPi / static_cast<double>(p);
    double sr = 0, cr = 0, si = 0, ci = 0;  // Kahan-compensated real/imag
    a.for_each([&](uint32_t x) {
        uint64_t e = uint64_t(xi) * x % p;
        double ang = step * static_cast<double>(e);
        double tr = std::cos(ang) - cr;
        double t1 = sr + tr;
        cr = (t1 - sr) - tr;
        sr = t1;
        double ti = std::sin(ang) - ci;
        double t2 = si + ti;
        ci = (t2 - si) - ti;
        si = t2;
    });
    return {sr, si};
}

std::vector<double> fourier_magnitudes(const FpSet& a, unsigned parallelism) {
    require_nonempty(a, "fourier_magnitudes");
    const uint32_t p = a.p();
    const auto els = a.elements();
    const size_t m = els.size();
    const double step = kTwoPi / static_cast<double>(p);

    std::vector<double> out(p);
    const uint64_t nblocks = (p + kBlock - 1) / kBlock;

    auto do_block = [&](uint64_t bi) {
        const uint32_t xi0 = static_cast<uint32_t>(bi * kBlock);
        const uint32_t xi1 = std::min<uint32_t>(xi0 + kBlock, p);
        // seed phasors exactly at xi0, then step by e(x/p) per xi
        std::vector<double> cr(m), ci(m), sr(m), si(m);
        for (size_t i = 0; i < m; ++i) {
            uint64_t e = uint64_t(xi0) * els[i] % p;
            cr[i] = std::cos(step * static_cast<double>(e));
            ci[i] = std::sin(step * static_cast<double>(e));
            sr[i] = std::cos(step * static_cast<double>(els[i]));
            si[i] = std::sin(step * static_cast<double>(els[i]));
        }
        for (uint32_t xi = xi0; xi < xi1; ++xi) {
            double re = 0, im = 0;
            for (size_t i = 0; i < m; ++i) {
                re += cr[i];
                im += ci[i];
            }
            out[xi] = std::hypot(re, im);
            for (size_t i = 0; i < m; ++i) {
                double nr = cr[i] * sr[i] - ci[i] * si[i];
                ci[i] = cr[i] * si[i] + ci[i] * sr[i];
                cr[i] = nr;
            }
        }
    };

    parallel_for(nblocks, parallelism, do_block);
    return out;
}

std::vector<double> fourier_magnitudes_fast(const FpSet& a) {
    require_nonempty(a, "fourier_magnitudes");
    const uint32_t p = a.p();
    std::vector<dft::cd> x(p, dft::cd(0, 0));
    a.for_each([&](uint32_t e) { x[e] = dft::cd(1, 0); });
    auto f = dft::bluestein_dft(x);
    std::vector<double> out(p);
    for (uint32_t i = 0; i < p; ++i) out[i] = std::abs(f[i]);
    return out;
}

SpectrumReport spec(const FpSet& a, double alpha, const SubgroupSpec* invariance, unsigned parallelism) {
    require_nonempty(a, "spec");
    if (!(alpha > 0.0 && alpha <= 1.0)) throw BadThreshold("spectrum threshold must satisfy 0 < alpha <= 1");
    auto mags = fourier_magnitudes(a, parallelism);
    auto values = orbit_values(mags, a.modulus(), invariance);
    SpectrumReport r{alpha, std::move(mags), spec_members(values, a.modulus(), alpha, a.size()), std::nullopt};
    if (invariance) r.invariance_group = *invariance;
    return r;
}

PairDifferenceReport spec_pair_difference_proportion(const FpSet& h, double alpha, const FpSet* b) {
    require_nonempty(h, "spec_pair_difference_proportion");
    if (!(alpha > 0.0 && alpha < 1.0)) throw BadThreshold("pair statistic needs 0 < alpha < 1");
    const uint32_t p = h.p();
    auto mags = fourier_magnitudes(h);
    auto values = orbit_values(mags, h.modulus(), nullptr);
    FpSet spec_a = spec_members(values, h.modulus(), alpha, h.size());
    FpSet spec_a2 = spec_members(values, h.modulus(), alpha * alpha / 2.0, h.size());

    FpSet bset = b ? *b : spec_a;
    if (b != nullptr) {
        if (b->modulus() != h.modulus()) throw ModulusMismatch("B and H live in different fields");
        require_nonempty(*b, "spec_pair_difference_proportion");
        if (!b->bits().is_subset_of(spec_a.bits())) throw NotASubsetOfSpec("B is not contained in Spec_alpha(H)");
    }

    auto bels = bset.elements();
    u128 q = 0;
    for (uint32_t x : bels)
        for (uint32_t y : bels) {
            uint32_t d = x >= y ? x - y : x + p - y;
            if (spec_a2.contains(d)) ++q;
        }
    PairDifferenceReport r;
    r.alpha = alpha;
    r.b_size = bset.size();
    r.qualifying_pairs = q;
    r.proportion = static_cast<double>(q) / (static_cast<double>(bels.size()) * static_cast<double>(bels.size()));
    r.bound = alpha * alpha / 2.0;
    // 2 * q * den^2 >= num^2 * |B|^2 with alpha = num/den, exactly
    Rat ar = Rat::from_double_exact(alpha);
    u128 num = static_cast<u128>(ar.num), den = static_cast<u128>(ar.den);
    u128 b2 = u128(bels.size()) * bels.size();
    r.holds = cmp_products(2 * q, den * den, num * num, b2) >= 0;
    return r;
}

SpecEnergyBound spec_energy_bound_check(const SubgroupSpec& h, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw BadThreshold("energy bound check needs 0 < alpha < 1");
    SpectrumReport ra = spec(h.elements, alpha, &h);
    SpectrumReport ra2 = spec(h.elements, alpha * alpha / 2.0, &h);
    const FpSet& a = ra.spec;
    const FpSet& a2 = ra2.spec;

    SpecEnergyBound out;
    out.alpha = alpha;
    out.size_a = a.size();
    out.size_a_prime = a2.size();
    out.l_ratio = Rat(a2.size(), a.size());
    out.bound = std::pow(alpha, 4) / out.l_ratio.to_double();

    double best = 2.0;
    uint32_t argmin = 0;
    h.elements.for_each([&](uint32_t hv) {
        double w = additive_energy(a, dilate(hv, a)).omega();
        if (w < best) {
            best = w;
            argmin = hv;
        }
    });
    out.min_energy = best;
    out.argmin_h = argmin;
    out.holds = best >= out.bound * (1.0 - 1e-12);
    return out;
}

MaxGauss max_gauss(const SubgroupSpec& h) {
    const auto& m = h.modulus;
    const uint32_t p = m.p();
    const uint32_t cosets = (p - 1) / h.order;
    MaxGauss out;
    out.value = -1.0;
    // |H-hat| is constant on cosets xi*H, so one representative per coset
    // (powers of g) covers all xi != 0.
    uint64_t rep = 1;
    for (uint32_t j = 0; j < cosets; ++j) {
        double mag = std::abs(exp_sum(h.elements, static_cast<uint32_t>(rep))) / static_cast<double>(h.order);
        if (mag > out.value) {
            out.value = mag;
            out.argmax_xi = static_cast<uint32_t>(rep);
        }
        rep = rep * m.g() % p;
    }
    out.delta_prime = -std::log(out.value) / std::log(static_cast<double>(p));
    return out;
}

ScaleTrace scale_finder(const SubgroupSpec& h, double eta, uint32_t j_levels) {
    if (!(eta > 0.0 && eta < 1.0)) throw BadThreshold("scale finder needs 0 < eta < 1");
    if (j_levels < 1) throw BadJ("scale finder needs J >= 1");
    const uint32_t p = h.modulus.p();

    auto mags = fourier_magnitudes(h.elements);
    auto values = orbit_values(mags, h.modulus, &h);

    ScaleTrace t;
    t.eta = eta;
    t.j_levels = j_levels;
    double alpha = eta;
    for (uint32_t i = 0; i <= j_levels; ++i) {
        t.alphas.push_back(alpha);
        t.spec_sizes.push_back(spec_members(values, h.modulus, alpha, h.order).size());
        alpha = alpha * alpha / 2.0;
    }
    t.trivial_start = t.spec_sizes[0] <= 1;

    const double cap = std::pow(static_cast<double>(p), 1.0 / static_cast<double>(j_levels));
    uint32_t chosen = j_levels;  // sentinel
    double best_ratio = std::numeric_limits<double>::infinity();
    uint32_t best_i = 0;
    for (uint32_t i = 0; i < j_levels; ++i) {
        double ratio = static_cast<double>(t.spec_sizes[i + 1]) / static_cast<double>(t.spec_sizes[i]);
        if (ratio < best_ratio) {
            best_ratio = ratio;
            best_i = i;
        }
        if (ratio <= cap * (1.0 + 1e-12)) {
            chosen = i;
            break;
        }
    }
    // the pigeonhole guarantees some ratio <= p^{1/J}; the argmin fallback
    // only matters if rounding perturbs a knife-edge ratio
    t.chosen_i = chosen < j_levels ? chosen : best_i;
    t.l_ratio = Rat(t.spec_sizes[t.chosen_i + 1], t.spec_sizes[t.chosen_i]);
    return t;
}

}  // namespace sumprod
