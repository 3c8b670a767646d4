#include "sumprod/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sumprod {

namespace {

void require_same_modulus(const FpSet& a, const FpSet& b) {
    if (a.modulus() != b.modulus())
        throw ModulusMismatch("operands live in different fields: p = " + std::to_string(a.p()) + " vs " +
                              std::to_string(b.p()));
}

void require_nonempty(const FpSet& a, const char* what) {
    if (a.empty()) throw EmptyOperand(std::string(what) + ": empty operand");
}

// integer sqrt of v, or nullopt if v is not a perfect square
std::optional<u128> perfect_sqrt(u128 v) {
    if (v == 0) return u128(0);
    u128 r = static_cast<u128>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    if (r * r == v) return r;
    return std::nullopt;
}

}  // namespace

u128 quadruple_count(const FpSet& a, const FpSet& b) {
    require_same_modulus(a, b);
    require_nonempty(a, "quadruple_count");
    require_nonempty(b, "quadruple_count");
    const uint32_t p = a.p();
    const FpSet& small = a.size() <= b.size() ? a : b;
    const FpSet& big = a.size() <= b.size() ? b : a;
    auto big_els = big.elements();

    // r_{A+B}, tracked with integer multiplicities
    std::vector<uint32_t> r(p, 0);
    small.for_each([&](uint32_t s) {
        for (uint32_t x : big_els) {
            uint32_t t = x + s;
            ++r[t >= p ? t - p : t];
        }
    });
    u128 total = 0;
    for (uint32_t v : r) total += u128(v) * v;
    return total;
}

double EnergyReport::omega() const {
    long double denom = std::pow(static_cast<long double>(size_a), 1.5L) * std::pow(static_cast<long double>(size_b), 1.5L);
    return static_cast<double>(static_cast<long double>(quadruples) / denom);
}

std::optional<Rat> EnergyReport::omega_exact() const {
    u128 ab = u128(size_a) * size_b;
    auto s = perfect_sqrt(ab);
    if (!s) return std::nullopt;
    // |A|^{3/2}|B|^{3/2} = |A||B| * sqrt(|A||B|)
    return Rat(static_cast<i128>(quadruples), static_cast<i128>(ab * *s));
}

bool EnergyReport::omega_at_most_one() const {
    // count^2 <= |A|^3 |B|^3, compared via 256-bit products
    u128 a3 = u128(size_a) * size_a * size_a;
    u128 b3 = u128(size_b) * size_b * size_b;
    return cmp_products(quadruples, quadruples, a3, b3) <= 0;
}

EnergyReport additive_energy(const FpSet& a, const FpSet& b) {
    return EnergyReport{quadruple_count(a, b), a.size(), b.size()};
}

bool energy_cs_bound_holds(u128 quadruples, uint32_t size_a, uint32_t size_b, uint32_t sumset_size) {
    u128 ab = u128(size_a) * size_b;
    return cmp_products(quadruples, sumset_size, ab, ab) >= 0;
}

Rat doubling_sigma(const FpSet& a) {
    require_nonempty(a, "doubling_sigma");
    return Rat(sumset(a, a).size(), a.size());
}

double ruzsa_distance(const FpSet& a, const FpSet& b) {
    require_same_modulus(a, b);
    require_nonempty(a, "ruzsa_distance");
    require_nonempty(b, "ruzsa_distance");
    uint32_t d = difference(a, b).size();
    return std::log(static_cast<double>(d)) - 0.5 * std::log(static_cast<double>(a.size()) * b.size());
}

AlgReport alg_set(const FpSet& a, const Rat& k) {
    require_nonempty(a, "alg_set");
    if (k < Rat(1)) throw BadThreshold("Alg threshold K must be >= 1, got " + k.str());
    const auto& m = a.modulus();
    const uint32_t p = m.p();
    BitVec members(p);
    std::vector<Rat> ratios(p, Rat(0));
    for (uint32_t xi = 1; xi < p; ++xi) {
        uint32_t sz = sumset(a, dilate(xi, a)).size();
        ratios[xi] = Rat(sz, a.size());
        // sz / |A| <= K, exactly
        if (i128(sz) * k.den <= k.num * i128(a.size())) members.set(xi);
    }
    return AlgReport{k, FpSet(m, std::move(members)), std::move(ratios)};
}

XiEnergyIdentity xi_energy_average(const FpSet& a) {
    require_nonempty(a, "xi_energy_average");
    const uint32_t p = a.p();
    const i128 n = a.size();
    u128 total = 0;
    for (uint32_t xi = 1; xi < p; ++xi) total += quadruple_count(a, dilate(xi, a));
    // each term is count_xi / |A|^3 since |xi*A| = |A|
    XiEnergyIdentity out;
    out.total_quadruples = total;
    out.empirical = Rat(static_cast<i128>(total), n * n * n);
    out.closed_form = Rat(i128(p) - 1 + (n - 1) * (n - 1), n);
    out.matches = out.empirical == out.closed_form;
    return out;
}

BestXi best_xi(const FpSet& a) {
    require_nonempty(a, "best_xi");
    const uint32_t p = a.p();
    BestXi best{0, 0};
    for (uint32_t xi = 1; xi < p; ++xi) {
        uint32_t sz = sumset(a, dilate(xi, a)).size();
        if (sz > best.sumset_size) best = BestXi{xi, sz};
    }
    return best;
}

PopularIntersection popular_intersection_index(uint32_t universe, const std::vector<BitVec>& sets, const Rat& delta) {
    if (sets.empty()) throw EmptyOperand("popular_intersection_index: no sets given");
    if (delta.num <= 0) throw BadThreshold("density delta must be positive");
    const size_t k = sets.size();
    const u128 num = static_cast<u128>(delta.num);
    const u128 den = static_cast<u128>(delta.den);
    for (size_t i = 0; i < k; ++i) {
        if (sets[i].bit_size() != universe) throw Error("set " + std::to_string(i) + " has wrong universe size");
        // |S_i| >= delta * universe, exactly
        if (u128(sets[i].count()) * den < num * universe)
            throw DensityViolation("set " + std::to_string(i) + " is below the density threshold");
    }

    std::vector<std::vector<uint32_t>> inter(k, std::vector<uint32_t>(k, 0));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i; j < k; ++j) inter[i][j] = inter[j][i] = BitVec::intersection_count(sets[i], sets[j]);

    size_t best = 0;
    u128 best_sum = 0;
    for (size_t i = 0; i < k; ++i) {
        u128 s = 0;
        for (size_t j = 0; j < k; ++j) s += inter[i][j];
        if (s > best_sum) {
            best_sum = s;
            best = i;
        }
    }

    PopularIntersection out;
    out.index = best;
    out.overlap_sum = best_sum;
    for (size_t j = 0; j < k; ++j) {
        // |S_i ^ S_j| >= (delta^2/2) * universe, exactly:
        // 2 * den^2 * count >= num^2 * universe
        if (cmp_products(2 * u128(inter[best][j]), den * den, num * num, universe) >= 0) out.qualifying.push_back(j);
    }
    return out;
}

}  // namespace sumprod
