#include "sumprod/fpset.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
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

// acc |= rot(big, e) for every element e of small; the bit-parallel core.
BitVec shift_accumulate(const BitVec& big, const FpSet& small) {
    BitVec acc(big.bit_size());
    small.for_each([&](uint32_t e) { acc.or_rotated(big, e); });
    return acc;
}

}  // namespace

FpSet FpSet::from_elements(const PrimeModulus& m, const std::vector<uint32_t>& xs) {
    BitVec b(m.p());
    for (uint32_t x : xs) {
        if (x >= m.p()) throw Error("element " + std::to_string(x) + " outside [0, " + std::to_string(m.p()) + ")");
        b.set(x);
    }
    return FpSet(m, std::move(b));
}

FpSet FpSet::singleton(const PrimeModulus& m, uint32_t x) { return from_elements(m, {x}); }

FpSet FpSet::full(const PrimeModulus& m) {
    BitVec b(m.p());
    for (uint32_t x = 0; x < m.p(); ++x) b.set(x);
    return FpSet(m, std::move(b));
}

FpSet sumset(const FpSet& a, const FpSet& b) {
    require_same_modulus(a, b);
    require_nonempty(a, "sumset");
    require_nonempty(b, "sumset");
    const FpSet& small = a.size() <= b.size() ? a : b;
    const FpSet& big = a.size() <= b.size() ? b : a;
    return FpSet(a.modulus(), shift_accumulate(big.bits(), small));
}

FpSet difference(const FpSet& a, const FpSet& b) {
    require_same_modulus(a, b);
    require_nonempty(a, "difference");
    require_nonempty(b, "difference");
    const uint32_t p = a.p();
    BitVec acc(p);
    b.for_each([&](uint32_t e) { acc.or_rotated(a.bits(), e == 0 ? 0 : p - e); });
    return FpSet(a.modulus(), std::move(acc));
}

FpSet dilate(uint32_t xi, const FpSet& a) {
    if (xi == 0) throw ZeroDilation("dilation ratio must be nonzero");
    const auto& m = a.modulus();
    if (xi >= m.p()) xi %= m.p();
    if (xi == 0) throw ZeroDilation("dilation ratio must be nonzero");
    if (xi == 1) return a;
    BitVec b(m.p());
    a.for_each([&](uint32_t x) { b.set(m.mul(xi, x)); });
    return FpSet(m, std::move(b));
}

FpSet productset(const FpSet& a, const FpSet& b) {
    require_same_modulus(a, b);
    require_nonempty(a, "productset");
    require_nonempty(b, "productset");
    const auto& m = a.modulus();
    const uint32_t p = m.p();
    const uint32_t n = p - 1;

    bool zero = a.contains(0) || b.contains(0);

    // nonzero parts through the dlog transform
    BitVec la(n), lb(n);
    uint32_t na = 0, nb = 0;
    a.for_each([&](uint32_t x) {
        if (x) {
            la.set(m.dlog(x));
            ++na;
        }
    });
    b.for_each([&](uint32_t x) {
        if (x) {
            lb.set(m.dlog(x));
            ++nb;
        }
    });

    BitVec out(p);
    if (zero) out.set(0);
    if (na > 0 && nb > 0) {
        BitVec conv(n);
        const BitVec& big = na >= nb ? la : lb;
        const BitVec& small = na >= nb ? lb : la;
        small.for_each_set([&](uint32_t k) { conv.or_rotated(big, k); });
        conv.for_each_set([&](uint32_t k) { out.set(m.g_pow(k)); });
    }
    return FpSet(m, std::move(out));
}

FpSet iterated_sumset(uint32_t k, const FpSet& a) {
    if (k < 1) throw NonPositiveK("iterated sumset needs k >= 1");
    require_nonempty(a, "iterated_sumset");
    std::optional<FpSet> result;
    FpSet base = a;
    while (true) {
        if (k & 1) result = result ? sumset(*result, base) : base;
        k >>= 1;
        if (k == 0 || (result && result->is_full())) break;
        if (base.is_full()) {  // further additions stay full
            result = base;
            break;
        }
        base = sumset(base, base);
    }
    return *result;
}

FpSet iterated_product(uint32_t k, const FpSet& a) {
    if (k < 1) throw NonPositiveK("iterated product needs k >= 1");
    require_nonempty(a, "iterated_product");
    std::optional<FpSet> result;
    FpSet base = a;
    const FpSet zero_only = FpSet::singleton(a.modulus(), 0);
    while (true) {
        if (k & 1) result = result ? productset(*result, base) : base;
        k >>= 1;
        if (k == 0) break;
        if (base == zero_only) {  // absorbing: {0}*S = {0}
            result = result ? productset(*result, base) : base;
            break;
        }
        base = productset(base, base);
    }
    return *result;
}

FpSet grow_step(const FpSet& a) {
    require_nonempty(a, "grow_step");
    FpSet a2 = productset(a, a);
    FpSet s3 = iterated_sumset(3, a2);
    return difference(s3, s3);
}

FpSet ratio_difference_quotient(const FpSet& a) {
    if (a.size() < 2) throw TooSmall("ratio set needs |A| >= 2 (the denominator set would be {0})");
    const auto& m = a.modulus();
    const uint32_t p = m.p();
    const uint32_t n = p - 1;
    FpSet d = difference(a, a);

    BitVec ld(n);
    d.for_each([&](uint32_t x) {
        if (x) ld.set(m.dlog(x));
    });

    // quotients of nonzero differences: a difference set in Z/(p-1)
    BitVec conv(n);
    ld.for_each_set([&](uint32_t k) { conv.or_rotated(ld, k == 0 ? 0 : n - k); });

    BitVec out(p);
    out.set(0);  // 0 is attainable as a numerator (0 in A-A)
    conv.for_each_set([&](uint32_t k) { out.set(m.g_pow(k)); });
    return FpSet(m, std::move(out));
}

double SubgroupSpec::delta() const { return std::log(double(order)) / std::log(double(modulus.p())); }

SubgroupSpec subgroup(const PrimeModulus& m, uint32_t d) {
    if (d < 1 || (m.p() - 1) % d != 0)
        throw OrderNotDividing("order " + std::to_string(d) + " does not divide p-1 = " + std::to_string(m.p() - 1));
    BitVec b(m.p());
    const uint32_t h = m.pow(m.g(), (m.p() - 1) / d);
    uint64_t cur = 1;
    for (uint32_t j = 0; j < d; ++j) {
        b.set(static_cast<uint32_t>(cur));
        cur = cur * h % m.p();
    }
    FpSet els(m, std::move(b));
    return SubgroupSpec{m, d, std::move(els)};
}

}  // namespace sumprod
