#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace sumprod {

// Fixed-width bit vector with the cyclic-shift accumulation primitive that
// drives all sumset computations: acc |= rot(src, k).
class BitVec {
public:
    BitVec() : nbits_(0) {}
    explicit BitVec(uint32_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    uint32_t bit_size() const { return nbits_; }

    bool test(uint32_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(uint32_t i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    uint32_t count() const {
        uint64_t c = 0;
        for (uint64_t v : w_) c += std::popcount(v);
        return static_cast<uint32_t>(c);
    }

    bool any() const {
        for (uint64_t v : w_)
            if (v) return true;
        return false;
    }

    bool operator==(const BitVec& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }

    void or_assign(const BitVec& o) {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    }

    bool is_subset_of(const BitVec& o) const {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    static uint32_t intersection_count(const BitVec& a, const BitVec& b) {
        assert(a.nbits_ == b.nbits_);
        uint64_t c = 0;
        for (size_t i = 0; i < a.w_.size(); ++i) c += std::popcount(a.w_[i] & b.w_[i]);
        return static_cast<uint32_t>(c);
    }

    // this |= cyclic-left-shift of src by k (bit j of src lands on (j+k) mod n).
    // src must be a distinct vector of the same width with a clean tail.
    void or_rotated(const BitVec& src, uint32_t k) {
        assert(this != &src && nbits_ == src.nbits_ && k < nbits_);
        const size_t nw = w_.size();
        {  // linear shift left by k
            const size_t ws = k >> 6;
            const unsigned bs = k & 63;
            if (bs == 0) {
                for (size_t t = nw; t-- > ws;) w_[t] |= src.w_[t - ws];
            } else {
                for (size_t t = nw; t-- > ws;) {
                    uint64_t v = src.w_[t - ws] << bs;
                    if (t - ws > 0) v |= src.w_[t - ws - 1] >> (64 - bs);
                    w_[t] |= v;
                }
            }
        }
        if (k != 0) {  // wrapped part: linear shift right by n-k
            const uint32_t r = nbits_ - k;
            const size_t wr = r >> 6;
            const unsigned br = r & 63;
            if (br == 0) {
                for (size_t t = 0; t + wr < nw; ++t) w_[t] |= src.w_[t + wr];
            } else {
                for (size_t t = 0; t + wr < nw; ++t) {
                    uint64_t v = src.w_[t + wr] >> br;
                    if (t + wr + 1 < nw) v |= src.w_[t + wr + 1] << (64 - br);
                    w_[t] |= v;
                }
            }
        }
        mask_tail();
    }

    template <class F>
    void for_each_set(F&& f) const {
        for (size_t wi = 0; wi < w_.size(); ++wi) {
            uint64_t v = w_[wi];
            while (v) {
                unsigned b = std::countr_zero(v);
                f(static_cast<uint32_t>((wi << 6) + b));
                v &= v - 1;
            }
        }
    }

    std::vector<uint32_t> elements() const {
        std::vector<uint32_t> out;
        out.reserve(count());
        for_each_set([&](uint32_t x) { out.push_back(x); });
        return out;
    }

private:
    void mask_tail() {
        unsigned rem = nbits_ & 63;
        if (rem && !w_.empty()) w_.back() &= (uint64_t(1) << rem) - 1;
    }

    uint32_t nbits_;
    std::vector<uint64_t> w_;
};

}  // namespace sumprod
