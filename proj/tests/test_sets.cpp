#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "sumprod/fpset.hpp"
#include "sumprod/verify.hpp"

using namespace sumprod;

namespace {

FpSet mk(const PrimeModulus& m, std::vector<uint32_t> els) { return FpSet::from_elements(m, els); }

bool equals(const FpSet& s, const std::set<uint32_t>& expected) {
    auto els = s.elements();
    return std::set<uint32_t>(els.begin(), els.end()) == expected;
}

}  // namespace

TEST_CASE("sumset examples") {
    PrimeModulus m7 = make_modulus(7), m5 = make_modulus(5);
    CHECK(equals(sumset(mk(m7, {1, 2}), mk(m7, {3, 5})), {0, 4, 5, 6}));
    FpSet a = mk(m7, {2, 3, 6});
    CHECK(sumset(a, mk(m7, {0})) == a);  // identity element
    CHECK(sumset(mk(m5, {0, 1, 2}), mk(m5, {0, 1, 2})).is_full());
}

TEST_CASE("sumset errors") {
    PrimeModulus m7 = make_modulus(7), m5 = make_modulus(5);
    CHECK_THROWS_AS(sumset(mk(m7, {1}), mk(m5, {1})), ModulusMismatch);
    CHECK_THROWS_AS(sumset(mk(m7, {1}), FpSet(m7)), EmptyOperand);
    CHECK_THROWS_AS(sumset(FpSet(m7), mk(m7, {1})), EmptyOperand);
}

TEST_CASE("difference examples") {
    PrimeModulus m7 = make_modulus(7);
    FpSet a = mk(m7, {2, 4, 5});
    CHECK(difference(a, a).contains(0));
    CHECK(equals(difference(mk(m7, {0, 1}), mk(m7, {0, 1})), {0, 1, 6}));
    CHECK(difference(mk(m7, {1, 2, 4}), mk(m7, {1, 2, 4})).is_full());
}

TEST_CASE("dilate examples") {
    PrimeModulus m7 = make_modulus(7);
    FpSet h = mk(m7, {1, 2, 4});
    CHECK(equals(dilate(3, h), {3, 5, 6}));
    CHECK(dilate(1, h) == h);
    CHECK(dilate(2, h) == h);  // subgroup invariance under its own element
    CHECK(dilate(5, h).size() == h.size());
    CHECK_THROWS_AS(dilate(0, h), ZeroDilation);
}

TEST_CASE("productset examples") {
    PrimeModulus m7 = make_modulus(7), m5 = make_modulus(5);
    FpSet h = mk(m7, {1, 2, 4});
    CHECK(productset(h, h) == h);  // subgroup closure
    FpSet z = mk(m5, {0});
    CHECK(equals(productset(z, mk(m5, {1, 2, 3})), {0}));
    CHECK(equals(productset(mk(m5, {2, 3}), mk(m5, {2, 3})), {1, 4}));
    CHECK(equals(productset(mk(m5, {0, 2}), mk(m5, {0, 3})), {0, 1}));
}

TEST_CASE("iterated sumset and product") {
    PrimeModulus m7 = make_modulus(7);
    FpSet h = mk(m7, {1, 2, 4});
    CHECK(iterated_sumset(1, h) == h);
    CHECK(equals(iterated_sumset(2, h), {1, 2, 3, 4, 5, 6}));
    CHECK(iterated_product(2, h) == h);
    CHECK(iterated_product(1, h) == h);
    CHECK_THROWS_AS(iterated_sumset(0, h), NonPositiveK);
    CHECK_THROWS_AS(iterated_product(0, h), NonPositiveK);

    // doubling path must agree with step-by-step folding
    for (uint32_t k = 1; k <= 9; ++k) {
        FpSet fold = h;
        for (uint32_t i = 1; i < k; ++i) fold = sumset(fold, h);
        CHECK(iterated_sumset(k, h) == fold);
        FpSet pfold = h;
        for (uint32_t i = 1; i < k; ++i) pfold = productset(pfold, h);
        CHECK(iterated_product(k, h) == pfold);
    }

    // absorbing {0}
    FpSet z = mk(m7, {0});
    CHECK(equals(iterated_product(5, z), {0}));
    CHECK(equals(iterated_sumset(64, mk(m7, {0, 1})), {0, 1, 2, 3, 4, 5, 6}));
}

TEST_CASE("grow_step examples") {
    PrimeModulus m5 = make_modulus(5), m7 = make_modulus(7), m11 = make_modulus(11);
    CHECK(grow_step(mk(m5, {0, 1})).is_full());
    CHECK(equals(grow_step(mk(m7, {1})), {0}));
    CHECK(equals(grow_step(mk(m11, {1, 10})), {0, 2, 4, 5, 6, 7, 9}));
}

TEST_CASE("ratio_difference_quotient examples") {
    PrimeModulus m7 = make_modulus(7);
    CHECK(equals(ratio_difference_quotient(mk(m7, {0, 1})), {0, 1, 6}));
    CHECK_THROWS_AS(ratio_difference_quotient(mk(m7, {3})), TooSmall);
    CHECK(ratio_difference_quotient(mk(m7, {1, 2, 4})).is_full());
}

TEST_CASE("commutativity and associativity, exhaustive p=7 with |A|,|B|,|C| <= 3") {
    PrimeModulus m = make_modulus(7);
    auto small = oracle::subsets_up_to_size(7, 3);
    std::vector<FpSet> sets;
    for (auto& s : small) sets.push_back(mk(m, s));
    size_t fails = 0;
    for (const auto& a : sets)
        for (const auto& b : sets)
            if (!(sumset(a, b) == sumset(b, a))) ++fails;
    CHECK_MESSAGE(fails == 0, "commutativity failures: ", fails);
    fails = 0;
    for (const auto& a : sets)
        for (const auto& b : sets)
            for (const auto& c : sets)
                if (!(sumset(sumset(a, b), c) == sumset(a, sumset(b, c)))) ++fails;
    CHECK_MESSAGE(fails == 0, "associativity failures: ", fails);
}

TEST_CASE("dilation distributes over sumsets, exhaustive p in {5,7}") {
    for (uint32_t p : {5u, 7u}) {
        PrimeModulus m = make_modulus(p);
        auto subs = oracle::all_nonempty_subsets(p);
        size_t fails = 0;
        for (const auto& ea : subs)
            for (const auto& eb : subs) {
                FpSet a = mk(m, ea), b = mk(m, eb);
                FpSet s = sumset(a, b);
                for (uint32_t xi = 1; xi < p; ++xi)
                    if (!(dilate(xi, s) == sumset(dilate(xi, a), dilate(xi, b)))) ++fails;
            }
        CHECK_MESSAGE(fails == 0, "distributivity failures at p=", p);
    }
}

TEST_CASE("Cauchy-Davenport sanity: |A+B| >= min(p, |A|+|B|-1), exhaustive p in {5,7,11}") {
    for (uint32_t p : {5u, 7u, 11u}) {
        PrimeModulus m = make_modulus(p);
        auto subs = oracle::all_nonempty_subsets(p);
        std::vector<FpSet> sets;
        sets.reserve(subs.size());
        for (auto& s : subs) sets.push_back(mk(m, s));
        size_t fails = 0;
        for (const auto& a : sets)
            for (const auto& b : sets) {
                uint32_t lhs = sumset(a, b).size();
                if (lhs < std::min(p, a.size() + b.size() - 1)) ++fails;
            }
        CHECK_MESSAGE(fails == 0, "Cauchy-Davenport failures at p=", p);
    }
}

TEST_CASE("bit-parallel ops match naive element loops on randomized sets") {
    // primes straddling word boundaries
    size_t fails = 0;
    for (uint32_t p : {61u, 67u, 127u, 131u, 193u, 257u, 1009u}) {
        PrimeModulus m = make_modulus(p);
        for (uint64_t i = 0; i < 150; ++i) {
            FpSet a = random_subset(m, 7331, 2 * i);
            FpSet b = random_subset(m, 7331, 2 * i + 1);
            auto ea = a.elements(), eb = b.elements();
            if (!equals(sumset(a, b), oracle::sumset(p, ea, eb))) ++fails;
            if (!equals(difference(a, b), oracle::difference(p, ea, eb))) ++fails;
            if (!equals(productset(a, b), oracle::productset(p, ea, eb))) ++fails;
            uint32_t xi = 1 + static_cast<uint32_t>(i % (p - 1));
            if (!equals(dilate(xi, a), oracle::dilate(p, xi, ea))) ++fails;
        }
    }
    CHECK_MESSAGE(fails == 0, "naive cross-check failures: ", fails);
}

TEST_CASE("grow_step dominates A-A when 1 is a member, exhaustive p in {5,7,11}") {
    for (uint32_t p : {5u, 7u, 11u}) {
        PrimeModulus m = make_modulus(p);
        size_t fails = 0;
        for (const auto& e : oracle::all_nonempty_subsets(p)) {
            FpSet a = mk(m, e);
            if (!a.contains(1)) continue;
            if (grow_step(a).size() < difference(a, a).size()) ++fails;
        }
        CHECK_MESSAGE(fails == 0, "containment failures at p=", p);
    }
}

TEST_CASE("subgroup construction") {
    PrimeModulus m7 = make_modulus(7);
    SubgroupSpec h = subgroup(m7, 3);
    CHECK(equals(h.elements, {1, 2, 4}));
    CHECK(h.order == 3);
    CHECK(h.delta() == doctest::Approx(std::log(3.0) / std::log(7.0)));
    CHECK(equals(subgroup(m7, 1).elements, {1}));
    CHECK_THROWS_AS(subgroup(m7, 4), OrderNotDividing);
    CHECK_THROWS_AS(subgroup(m7, 0), OrderNotDividing);
}

TEST_CASE("subgroup elements are exactly the solutions of x^d = 1, all p <= 1009") {
    size_t fails = 0;
    for (uint32_t p = 3; p <= 1009; ++p) {
        if (!is_prime(p)) continue;
        PrimeModulus m = make_modulus(p);
        for (uint32_t d = 1; d < p; ++d) {
            if ((p - 1) % d != 0) continue;
            SubgroupSpec h = subgroup(m, d);
            if (h.elements.size() != d) ++fails;
            if (!h.elements.contains(1)) ++fails;
            for (uint32_t x = 1; x < p; ++x)
                if (h.elements.contains(x) != (m.pow(x, d) == 1)) ++fails;
        }
    }
    CHECK_MESSAGE(fails == 0, "fixed-point mismatches: ", fails);
}

TEST_CASE("subgroup closure under multiplication, sampled primes") {
    for (uint32_t p : {13u, 31u, 101u}) {
        PrimeModulus m = make_modulus(p);
        for (uint32_t d = 1; d < p; ++d) {
            if ((p - 1) % d != 0) continue;
            SubgroupSpec h = subgroup(m, d);
            CHECK(productset(h.elements, h.elements) == h.elements);
        }
    }
}
