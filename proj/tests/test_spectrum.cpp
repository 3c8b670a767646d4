#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "sumprod/dft.hpp"
#include "sumprod/spectrum.hpp"
#include "sumprod/verify.hpp"

using namespace sumprod;

namespace {
FpSet mk(const PrimeModulus& m, std::vector<uint32_t> els) { return FpSet::from_elements(m, els); }
}  // namespace

TEST_CASE("exp_sum examples") {
    PrimeModulus m7 = make_modulus(7);
    FpSet h = mk(m7, {1, 2, 4});
    CHECK(std::abs(exp_sum(h, 0)) == doctest::Approx(3.0).epsilon(1e-12));

    FpSet full = FpSet::full(m7);
    CHECK(std::abs(exp_sum(full, 3)) <= 1e-10 * 7);

    // {1,2,4} are the quadratic residues mod 7: |sum| = sqrt(2)
    CHECK(std::abs(exp_sum(h, 1)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));

    CHECK_THROWS_AS(exp_sum(FpSet(m7), 1), EmptyOperand);
}

TEST_CASE("exp_sum matches the long-double oracle on random sets") {
    size_t fails = 0;
    for (uint32_t p : {127u, 131u, 1009u}) {
        PrimeModulus m = make_modulus(p);
        for (uint64_t i = 0; i < 20; ++i) {
            FpSet a = random_subset(m, 555, i);
            auto mags = oracle::magnitudes(p, a.elements());
            for (uint32_t xi = 0; xi < p; xi += 7) {
                if (std::abs(std::abs(exp_sum(a, xi)) - mags[xi]) > 1e-10 * a.size()) ++fails;
            }
        }
    }
    CHECK_MESSAGE(fails == 0, "exp_sum oracle mismatches: ", fails);
}

TEST_CASE("fourier_magnitudes: direct evaluation matches the oracle and Parseval") {
    for (uint32_t p : {101u, 1009u}) {
        PrimeModulus m = make_modulus(p);
        size_t fails = 0;
        for (uint64_t i = 0; i < 10; ++i) {
            FpSet a = random_subset(m, 777, i);
            auto got = fourier_magnitudes(a);
            auto expect = oracle::magnitudes(p, a.elements());
            if (got[0] != static_cast<double>(a.size())) ++fails;
            for (uint32_t xi = 0; xi < p; ++xi)
                if (std::abs(got[xi] - expect[xi]) > 1e-10 * a.size()) ++fails;
            double sum_sq = 0;
            for (double v : got) sum_sq += v * v;
            double want = double(p) * a.size();
            if (std::abs(sum_sq - want) > 1e-9 * want) ++fails;
        }
        CHECK_MESSAGE(fails == 0, "magnitude failures at p=", p);
    }
}

TEST_CASE("fourier_magnitudes is independent of the worker count") {
    PrimeModulus m = make_modulus(1009);
    FpSet a = random_subset(m, 31337, 0);
    auto one = fourier_magnitudes(a, 1);
    auto four = fourier_magnitudes(a, 4);
    CHECK(one == four);  // bitwise
}

TEST_CASE("Parseval at p = 10007") {
    PrimeModulus m = make_modulus(10007);
    for (uint64_t i = 0; i < 3; ++i) {
        FpSet a = random_subset(m, 2024, i);
        auto mags = fourier_magnitudes(a, 4);
        double sum_sq = 0;
        for (double v : mags) sum_sq += v * v;
        double want = 10007.0 * a.size();
        CHECK(std::abs(sum_sq - want) <= 1e-9 * want);
    }
}

TEST_CASE("subgroup magnitudes: all nonzero frequencies of {1,2,4} give sqrt(2)") {
    PrimeModulus m7 = make_modulus(7);
    auto mags = fourier_magnitudes(mk(m7, {1, 2, 4}));
    CHECK(mags[0] == 3.0);
    for (uint32_t xi = 1; xi < 7; ++xi) CHECK(mags[xi] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
}

TEST_CASE("bluestein DFT matches the naive DFT and the direct magnitudes") {
    // small lengths against the quadratic oracle
    for (size_t n : {2u, 3u, 5u, 12u, 17u, 31u}) {
        std::vector<dft::cd> x(n);
        uint64_t s = 12345;
        for (auto& v : x) {
            s = s * 6364136223846793005ull + 1442695040888963407ull;
            v = dft::cd(double(s >> 40) / double(1 << 24), double((s >> 16) & 0xffffff) / double(1 << 24));
        }
        auto a = dft::bluestein_dft(x);
        auto b = dft::naive_dft(x);
        for (size_t k = 0; k < n; ++k) CHECK(std::abs(a[k] - b[k]) < 1e-9);
    }

    // fast magnitudes against direct ones
    size_t fails = 0;
    for (uint32_t p : {101u, 1009u, 10007u}) {
        PrimeModulus m = make_modulus(p);
        for (uint64_t i = 0; i < 3; ++i) {
            FpSet a = random_subset(m, 909, i);
            auto direct = fourier_magnitudes(a, 2);
            auto fast = fourier_magnitudes_fast(a);
            for (uint32_t xi = 0; xi < p; ++xi)
                if (std::abs(direct[xi] - fast[xi]) > 1e-8 * a.size()) ++fails;
        }
    }
    CHECK_MESSAGE(fails == 0, "fast/direct mismatches: ", fails);
}

TEST_CASE("spec examples") {
    PrimeModulus m7 = make_modulus(7);
    SubgroupSpec h = subgroup(m7, 3);

    SpectrumReport r1 = spec(h.elements, 0.4, &h);
    CHECK(r1.spec.is_full());  // sqrt(2)/3 = 0.4714 >= 0.4

    SpectrumReport r2 = spec(h.elements, 0.5, &h);
    CHECK(r2.spec.size() == 1);
    CHECK(r2.spec.contains(0));

    CHECK_THROWS_AS(spec(h.elements, 0.0, &h), BadThreshold);
    CHECK_THROWS_AS(spec(h.elements, 1.5, &h), BadThreshold);
}

TEST_CASE("spec structure: zero membership, exact symmetry, exact invariance, nesting") {
    // acceptance covers all p <= 101; keep a representative sample here
    for (uint32_t p : {13u, 31u, 61u}) {
        PrimeModulus m = make_modulus(p);
        for (uint32_t d = 1; d < p; ++d) {
            if ((p - 1) % d != 0) continue;
            SubgroupSpec h = subgroup(m, d);
            FpSet prev = FpSet::full(m);
            bool first = true;
            for (double alpha : {0.9, 0.7, 0.5, 0.3, 0.1}) {
                SpectrumReport r = spec(h.elements, alpha, &h);
                CHECK(r.spec.contains(0));
                CHECK(dilate(p - 1, r.spec) == r.spec);  // spec = -spec, exactly
                h.elements.for_each([&](uint32_t hv) { CHECK(dilate(hv, r.spec) == r.spec); });
                if (!first) CHECK(prev.bits().is_subset_of(r.spec.bits()));  // nesting as alpha decreases
                prev = r.spec;
                first = false;
            }
        }
    }
}

TEST_CASE("spec on arbitrary sets is exactly symmetric") {
    PrimeModulus m = make_modulus(31);
    for (uint64_t i = 0; i < 25; ++i) {
        FpSet a = random_subset(m, 13, i);
        for (double alpha : {0.2, 0.5, 0.8}) {
            SpectrumReport r = spec(a, alpha);
            CHECK(dilate(30, r.spec) == r.spec);
        }
    }
}

TEST_CASE("monotone nesting on arbitrary sets, exhaustive p = 7") {
    PrimeModulus m = make_modulus(7);
    size_t fails = 0;
    for (const auto& e : oracle::all_nonempty_subsets(7)) {
        FpSet a = mk(m, e);
        FpSet prev(m);
        bool have_prev = false;
        for (double alpha : {0.9, 0.7, 0.5, 0.3, 0.1}) {
            SpectrumReport r = spec(a, alpha);
            if (!r.spec.contains(0)) ++fails;
            if (have_prev && !prev.bits().is_subset_of(r.spec.bits())) ++fails;
            prev = r.spec;
            have_prev = true;
        }
    }
    CHECK_MESSAGE(fails == 0, "nesting failures: ", fails);
}

TEST_CASE("spec size bound from Parseval: |Spec_alpha(A)| <= p/(alpha^2 |A|) * (1+1e-6)") {
    for (uint32_t p : {31u, 101u}) {
        PrimeModulus m = make_modulus(p);
        size_t fails = 0;
        for (uint64_t i = 0; i < 30; ++i) {
            FpSet a = random_subset(m, 808, i);
            for (double alpha : {0.25, 0.5, 0.75}) {
                SpectrumReport r = spec(a, alpha);
                double cap = double(p) / (alpha * alpha * a.size()) * (1 + 1e-6);
                if (double(r.spec.size()) > cap) ++fails;
            }
        }
        CHECK_MESSAGE(fails == 0, "size bound failures at p=", p);
    }
}

TEST_CASE("spec_pair_difference_proportion examples") {
    PrimeModulus m7 = make_modulus(7);
    SubgroupSpec h = subgroup(m7, 3);

    FpSet b0 = mk(m7, {0});
    auto r0 = spec_pair_difference_proportion(h.elements, 0.45, &b0);
    CHECK(r0.proportion == doctest::Approx(1.0));
    CHECK(r0.holds);

    auto r1 = spec_pair_difference_proportion(h.elements, 0.45);
    CHECK(r1.b_size == 7);
    CHECK(r1.proportion == doctest::Approx(1.0));
    CHECK(r1.bound == doctest::Approx(0.10125));
    CHECK(r1.holds);
}

TEST_CASE("spec_pair_difference_proportion rejects B outside the spectrum") {
    PrimeModulus m7 = make_modulus(7);
    SubgroupSpec h = subgroup(m7, 3);
    FpSet b = mk(m7, {0, 1});
    CHECK_THROWS_AS(spec_pair_difference_proportion(h.elements, 0.5, &b), NotASubsetOfSpec);
}

TEST_CASE("pair-difference bound holds exhaustively at p = 5") {
    PrimeModulus m = make_modulus(5);
    size_t fails = 0;
    for (const auto& e : oracle::all_nonempty_subsets(5))
        for (double alpha : {0.1, 0.3, 0.5, 0.7, 0.9})
            if (!spec_pair_difference_proportion(mk(m, e), alpha).holds) ++fails;
    CHECK_MESSAGE(fails == 0, "pair-difference failures: ", fails);
}

TEST_CASE("spec_energy_bound_check examples") {
    PrimeModulus m7 = make_modulus(7);
    SubgroupSpec h = subgroup(m7, 3);
    SpecEnergyBound r = spec_energy_bound_check(h, 0.45);
    CHECK(r.size_a == 7);
    CHECK(r.size_a_prime == 7);
    CHECK(r.l_ratio == Rat(1));
    CHECK(r.min_energy == doctest::Approx(1.0));
    CHECK(r.holds);

    SubgroupSpec one = subgroup(m7, 1);  // Spec_alpha({1}) = F_7 for every alpha
    SpecEnergyBound s = spec_energy_bound_check(one, 0.45);
    CHECK(s.size_a == 7);
    CHECK(s.min_energy == doctest::Approx(1.0));
    CHECK(s.holds);

    CHECK_THROWS_AS(spec_energy_bound_check(h, 0.0), BadThreshold);
    CHECK_THROWS_AS(spec_energy_bound_check(h, 1.0), BadThreshold);
}

TEST_CASE("max_gauss examples") {
    PrimeModulus m7 = make_modulus(7);
    MaxGauss full = max_gauss(subgroup(m7, 6));
    CHECK(full.value == doctest::Approx(1.0 / 6.0).epsilon(1e-10));

    MaxGauss one = max_gauss(subgroup(m7, 1));
    CHECK(one.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(one.delta_prime == doctest::Approx(0.0));

    MaxGauss h3 = max_gauss(subgroup(m7, 3));
    CHECK(h3.value == doctest::Approx(std::sqrt(2.0) / 3.0).epsilon(1e-10));
}

TEST_CASE("max_gauss agrees with a full magnitude scan, all subgroups p <= 61") {
    for (uint32_t p = 3; p <= 61; ++p) {
        if (!is_prime(p)) continue;
        PrimeModulus m = make_modulus(p);
        for (uint32_t d = 1; d < p; ++d) {
            if ((p - 1) % d != 0) continue;
            SubgroupSpec h = subgroup(m, d);
            auto mags = fourier_magnitudes(h.elements);
            double brute = 0;
            for (uint32_t xi = 1; xi < p; ++xi) brute = std::max(brute, mags[xi] / d);
            CHECK(max_gauss(h).value == doctest::Approx(brute).epsilon(1e-10));
        }
    }
}

TEST_CASE("scale_finder examples") {
    PrimeModulus m7 = make_modulus(7);
    SubgroupSpec h = subgroup(m7, 3);

    ScaleTrace t = scale_finder(h, 0.5, 3);
    REQUIRE(t.alphas.size() == 4);
    CHECK(t.alphas[0] == doctest::Approx(0.5));
    CHECK(t.alphas[1] == doctest::Approx(0.125));
    CHECK(t.alphas[2] == doctest::Approx(0.0078125));

    ScaleTrace u = scale_finder(h, 0.4, 3);
    CHECK(u.chosen_i == 0);
    CHECK(u.spec_sizes[0] == 7);
    CHECK(u.l_ratio == Rat(1));

    CHECK_THROWS_AS(scale_finder(h, 0.0, 3), BadThreshold);
    CHECK_THROWS_AS(scale_finder(h, 1.0, 3), BadThreshold);
    CHECK_THROWS_AS(scale_finder(h, 0.5, 0), BadJ);
}

TEST_CASE("scale_finder invariants across subgroups") {
    for (uint32_t p : {11u, 31u, 101u}) {
        PrimeModulus m = make_modulus(p);
        for (uint32_t d = 1; d < p; ++d) {
            if ((p - 1) % d != 0) continue;
            SubgroupSpec h = subgroup(m, d);
            ScaleTrace t = scale_finder(h, 0.6, 4);
            for (size_t i = 0; i + 1 < t.alphas.size(); ++i) {
                CHECK(t.alphas[i + 1] < t.alphas[i]);
                CHECK(t.spec_sizes[i + 1] >= t.spec_sizes[i]);  // nesting
            }
            CHECK(t.chosen_i < t.j_levels);
            double cap = std::pow(double(p), 1.0 / 4.0);
            CHECK(double(t.spec_sizes[t.chosen_i + 1]) <=
                  cap * double(t.spec_sizes[t.chosen_i]) * (1 + 1e-9));
        }
    }
}
