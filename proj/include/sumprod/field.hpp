#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "sumprod/errors.hpp"

namespace sumprod {

bool is_prime(uint64_t n);

// A validated odd prime p together with its smallest primitive root g and
// (lazily built) discrete-log / power tables. Immutable after construction;
// copies share the tables, so values are cheap to pass around and safe to
// use concurrently.
class PrimeModulus {
public:
    uint32_t p() const { return p_; }
    uint32_t g() const { return g_; }

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const { return static_cast<uint32_t>(uint64_t(a) * b % p_); }

    uint32_t pow(uint32_t base, uint64_t e) const {
        uint64_t r = 1, b = base % p_;
        while (e) {
            if (e & 1) r = r * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return static_cast<uint32_t>(r);
    }

    uint32_t inverse(uint32_t x) const {
        if (x == 0) throw ZeroInverse("0 has no multiplicative inverse");
        return pow(x, p_ - 2);
    }

    // k in [0, p-1) with g^k = x; table built on first use.
    uint32_t dlog(uint32_t x) const {
        if (x == 0) throw ZeroArgument("discrete log of 0 is undefined");
        return tables().dlog[x];
    }

    // g^k mod p for k in [0, p-1).
    uint32_t g_pow(uint32_t k) const { return tables().gpow[k]; }

    bool operator==(const PrimeModulus& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeModulus& o) const { return p_ != o.p_; }

private:
    friend PrimeModulus make_modulus(uint32_t p);

    struct TableHolder {
        std::once_flag once;
        std::vector<uint32_t> dlog, gpow;
    };

    PrimeModulus(uint32_t p, uint32_t g) : p_(p), g_(g), holder_(std::make_shared<TableHolder>()) {}

    const TableHolder& tables() const;

    uint32_t p_ = 0, g_ = 0;
    std::shared_ptr<TableHolder> holder_;
};

// Validates primality (deterministic Miller-Rabin) and finds the smallest
// primitive root. p = 2 is rejected: everything downstream assumes p odd.
PrimeModulus make_modulus(uint32_t p);

// y with x*y = 1 (mod p); ZeroInverse on x = 0.
uint32_t mod_inverse(uint32_t x, const PrimeModulus& m);

// k with g^k = x; ZeroArgument on x = 0.
uint32_t dlog(const PrimeModulus& m, uint32_t x);

}  // namespace sumprod
