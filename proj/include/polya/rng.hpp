#pragma once

#include <cstdint>

// Counter-based splittable random streams (Philox 4x64, 10 rounds).
//
// Each replicate owns a RandomStream keyed by (master_seed, stream_id); the
// block counter is the draw position, so streams never overlap, skipping is
// O(1), and the same (seed, id, position) reproduces the same bits on any
// platform and thread count. The generator matches the reference Philox4x64
// known-answer vectors (see tests/data/philox_kat.h).

namespace polya {

class Philox4x64 {
public:
    // one block: 4 output words from a 256-bit counter and 128-bit key
    static void block(const std::uint64_t counter[4], const std::uint64_t key[2],
                      std::uint64_t out[4]) {
        std::uint64_t c0 = counter[0], c1 = counter[1], c2 = counter[2], c3 = counter[3];
        std::uint64_t k0 = key[0], k1 = key[1];
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                k0 += kWeyl0;
                k1 += kWeyl1;
            }
            std::uint64_t hi0, lo0, hi1, lo1;
            mulhilo(kMult0, c0, hi0, lo0);
            mulhilo(kMult1, c2, hi1, lo1);
            std::uint64_t n0 = hi1 ^ c1 ^ k0;
            std::uint64_t n1 = lo1;
            std::uint64_t n2 = hi0 ^ c3 ^ k1;
            std::uint64_t n3 = lo0;
            c0 = n0;
            c1 = n1;
            c2 = n2;
            c3 = n3;
        }
        out[0] = c0;
        out[1] = c1;
        out[2] = c2;
        out[3] = c3;
    }

private:
    static constexpr std::uint64_t kMult0 = 0xD2E7470EE14C6C93ULL;
    static constexpr std::uint64_t kMult1 = 0xCA5A826395121157ULL;
    static constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
    static constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

    static void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi, std::uint64_t& lo) {
        unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
        hi = static_cast<std::uint64_t>(p >> 64);
        lo = static_cast<std::uint64_t>(p);
    }
};

class RandomStream {
public:
    RandomStream(std::uint64_t master_seed, std::uint64_t stream_id)
        : key_{master_seed, stream_id}, position_(0), buffered_block_(~std::uint64_t{0}) {}

    std::uint64_t master_seed() const { return key_[0]; }
    std::uint64_t stream_id() const { return key_[1]; }

    // number of 64-bit words consumed so far
    std::uint64_t position() const { return position_; }

    // jump to an absolute draw position (O(1): the counter is the position)
    void skip_to(std::uint64_t position) { position_ = position; }

    std::uint64_t next_u64() {
        std::uint64_t block = position_ >> 2;
        if (block != buffered_block_) {
            const std::uint64_t counter[4] = {block, 0, 0, 0};
            Philox4x64::block(counter, key_, buffer_);
            buffered_block_ = block;
        }
        return buffer_[position_++ & 3];
    }

    // uniform integer in [0, bound), bound >= 1; unbiased via rejection on the
    // 128-bit product (Lemire), never through floating point
    std::uint64_t uniform_below(std::uint64_t bound) {
        unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
        std::uint64_t lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            std::uint64_t threshold = (0 - bound) % bound; // 2^64 mod bound
            while (lo < threshold) {
                m = static_cast<unsigned __int128>(next_u64()) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    // Bernoulli(num/den) by integer comparison
    bool bernoulli_ratio(std::uint64_t num, std::uint64_t den) {
        return uniform_below(den) < num;
    }

private:
    std::uint64_t key_[2];
    std::uint64_t position_;
    std::uint64_t buffered_block_;
    std::uint64_t buffer_[4] = {0, 0, 0, 0};
};

} // namespace polya
