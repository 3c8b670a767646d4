#include "sumprod/field.hpp"

#include <string>

#include "sumprod/int128.hpp"

namespace sumprod {

namespace {

// Deterministic Miller-Rabin; witnesses {2, 7, 61} decide primality for all
// n < 4'759'123'141, which covers the whole p < 2^31 range.
bool miller_rabin(uint64_t n, uint64_t a) {
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u128 x = 1;
    {
        u128 b = a % n;
        uint64_t e = d;
        while (e) {
            if (e & 1) x = x * b % n;
            b = b * b % n;
            e >>= 1;
        }
    }
    if (x == 1 || x == n - 1) return true;
    for (int i = 0; i + 1 < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

std::vector<uint32_t> prime_factors(uint32_t n) {
    std::vector<uint32_t> fs;
    for (uint32_t d = 2; uint64_t(d) * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

uint32_t pow_mod(uint32_t base, uint64_t e, uint32_t p) {
    uint64_t r = 1, b = base % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(r);
}

uint32_t smallest_primitive_root(uint32_t p) {
    auto qs = prime_factors(p - 1);
    for (uint32_t g = 2; g < p; ++g) {
        bool ok = true;
        for (uint32_t q : qs) {
            if (pow_mod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    // unreachable for prime p >= 3
    throw Error("no primitive root found");
}

}  // namespace

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull, 41ull,
                       43ull, 47ull, 53ull, 59ull, 61ull}) {
        if (n % q == 0) return n == q;
    }
    for (uint64_t a : {2ull, 7ull, 61ull}) {
        if (!miller_rabin(n, a)) return false;
    }
    return true;
}

PrimeModulus make_modulus(uint32_t p) {
    if (p == 2) throw EvenModulus("p = 2 is excluded; the modulus must be an odd prime");
    if (!is_prime(p)) throw CompositeModulus(std::to_string(p) + " is not prime");
    return PrimeModulus(p, smallest_primitive_root(p));
}

const PrimeModulus::TableHolder& PrimeModulus::tables() const {
    std::call_once(holder_->once, [this] {
        auto& t = *holder_;
        t.gpow.resize(p_ - 1);
        t.dlog.assign(p_, 0);
        uint64_t cur = 1;
        for (uint32_t k = 0; k + 1 < p_; ++k) {
            t.gpow[k] = static_cast<uint32_t>(cur);
            t.dlog[cur] = k;
            cur = cur * g_ % p_;
        }
    });
    return *holder_;
}

uint32_t mod_inverse(uint32_t x, const PrimeModulus& m) { return m.inverse(x); }

uint32_t dlog(const PrimeModulus& m, uint32_t x) { return m.dlog(x); }

}  // namespace sumprod
