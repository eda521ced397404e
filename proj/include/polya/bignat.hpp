#pragma once

#include <cstdint>
#include <vector>

// Minimal unsigned big integer: just enough to form products of many small
// factors exactly and convert a ratio of two such products to double. Used by
// the exact product form of sigma_n, where numerator and denominator reach
// ~140k bits at n = 10^4 but every factor fits in 64 bits.

namespace polya {

class BigNat {
public:
    BigNat() : limbs_{0} {}
    explicit BigNat(std::uint64_t v) : limbs_{v} {}

    // in-place multiply by a 64-bit factor
    void mul_small(std::uint64_t f);

    bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }
    std::size_t bit_length() const;

    double to_double() const;

    // a/b as double, computed from the top 128 bits of each side so the
    // result carries ~19 correct digits regardless of operand size.
    static double ratio(const BigNat& a, const BigNat& b);

    bool operator==(const BigNat& o) const { return limbs_ == o.limbs_; }

private:
    // value = sum limbs_[i] * 2^(64 i); no leading zero limb except value 0
    std::vector<std::uint64_t> limbs_;

    // top 128 bits as (mantissa, exponent): value ~= mantissa * 2^exponent
    void top_bits(unsigned __int128& mantissa, long& exponent) const;
};

} // namespace polya
