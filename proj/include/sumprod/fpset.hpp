#pragma once

#include <cstdint>
#include <vector>

#include "sumprod/bitvec.hpp"
#include "sumprod/field.hpp"

namespace sumprod {

// A subset of F_p as a length-p bit vector with cached cardinality.
// Immutable value type; all set algebra returns fresh sets.
class FpSet {
public:
    explicit FpSet(PrimeModulus m) : mod_(std::move(m)), bits_(mod_.p()), card_(0) {}
    FpSet(PrimeModulus m, BitVec bits) : mod_(std::move(m)), bits_(std::move(bits)), card_(bits_.count()) {}

    static FpSet from_elements(const PrimeModulus& m, const std::vector<uint32_t>& xs);
    static FpSet singleton(const PrimeModulus& m, uint32_t x);
    static FpSet full(const PrimeModulus& m);

    const PrimeModulus& modulus() const { return mod_; }
    uint32_t p() const { return mod_.p(); }
    uint32_t size() const { return card_; }
    bool empty() const { return card_ == 0; }
    bool is_full() const { return card_ == mod_.p(); }
    bool contains(uint32_t x) const { return bits_.test(x); }
    const BitVec& bits() const { return bits_; }
    std::vector<uint32_t> elements() const { return bits_.elements(); }

    template <class F>
    void for_each(F&& f) const {
        bits_.for_each_set(std::forward<F>(f));
    }

    bool operator==(const FpSet& o) const { return mod_ == o.mod_ && bits_ == o.bits_; }
    bool operator!=(const FpSet& o) const { return !(*this == o); }

private:
    PrimeModulus mod_;
    BitVec bits_;
    uint32_t card_;
};

// {a + b : a in A, b in B}
FpSet sumset(const FpSet& a, const FpSet& b);

// {a - b : a in A, b in B}
FpSet difference(const FpSet& a, const FpSet& b);

// {xi * a : a in A}, xi != 0
FpSet dilate(uint32_t xi, const FpSet& a);

// {a * b : a in A, b in B}; nonzero part goes through the dlog transform to a
// sumset mod p-1, with 0 handled explicitly.
FpSet productset(const FpSet& a, const FpSet& b);

// k-fold iterated sumset kA / product set A^k, by set doubling.
FpSet iterated_sumset(uint32_t k, const FpSet& a);
FpSet iterated_product(uint32_t k, const FpSet& a);

// 3A^2 - 3A^2 where A^2 = A*A and 3S = S+S+S.
FpSet grow_step(const FpSet& a);

// {d1 / d2 : d1 in A-A, d2 in (A-A)\{0}} together with 0.
FpSet ratio_difference_quotient(const FpSet& a);

// A multiplicative subgroup of F_p^x of order d | p-1.
struct SubgroupSpec {
    PrimeModulus modulus;
    uint32_t order;
    FpSet elements;

    // log|H| / log p
    double delta() const;
};

// The unique order-d subgroup {x : x^d = 1}; OrderNotDividing if d does not
// divide p-1.
SubgroupSpec subgroup(const PrimeModulus& m, uint32_t d);

}  // namespace sumprod
