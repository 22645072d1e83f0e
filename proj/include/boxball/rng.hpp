#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

namespace boxball {

// Philox4x32-10 counter-based generator. A (seed, stream) pair addresses an
// independent stream deterministically, so Monte Carlo trials can run in any
// order on any number of threads and still reproduce bit-for-bit.
struct Philox4x32 {
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                              std::array<std::uint32_t, 2> key) {
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t m0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
            const std::uint64_t m1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
            const std::uint32_t hi0 = static_cast<std::uint32_t>(m0 >> 32);
            const std::uint32_t lo0 = static_cast<std::uint32_t>(m0);
            const std::uint32_t hi1 = static_cast<std::uint32_t>(m1 >> 32);
            const std::uint32_t lo1 = static_cast<std::uint32_t>(m1);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        return ctr;
    }
};

class RngStream {
  public:
    RngStream() : RngStream(0, 0) {}
    RngStream(std::uint64_t seed, std::uint64_t stream)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          base_{static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)} {}

    std::uint32_t next_u32() {
        if (pos_ == 4) refill();
        return buf_[pos_++];
    }

    std::uint64_t next_u64() {
        const std::uint64_t lo = next_u32();
        const std::uint64_t hi = next_u32();
        return (hi << 32) | lo;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_u32() < threshold(p); }

    static std::uint32_t threshold(double p) {
        double t = std::nearbyint(p * 4294967296.0);
        if (t < 1.0) t = 1.0;
        if (t > 4294967295.0) t = 4294967295.0;
        return static_cast<std::uint32_t>(t);
    }

    // Unbiased uniform draw from {0, ..., n-1}; n must be positive.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        for (;;) {
            const std::uint64_t v = next_u64();
            if (v < limit) return v % n;
        }
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

  private:
    void refill() {
        buf_ = Philox4x32::block({static_cast<std::uint32_t>(block_),
                                  static_cast<std::uint32_t>(block_ >> 32), base_[0], base_[1]},
                                 key_);
        ++block_;
        pos_ = 0;
    }

    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 2> base_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buf_{};
    int pos_ = 4;
};

}  // namespace boxball
