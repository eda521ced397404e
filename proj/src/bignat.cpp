#include "polya/bignat.hpp"

#include <cmath>
#include <stdexcept>

namespace polya {

void BigNat::mul_small(std::uint64_t f) {
    if (f == 0) {
        limbs_.assign(1, 0);
        return;
    }
    unsigned __int128 carry = 0;
    for (auto& limb : limbs_) {
        unsigned __int128 p = static_cast<unsigned __int128>(limb) * f + carry;
        limb = static_cast<std::uint64_t>(p);
        carry = p >> 64;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint64_t>(carry));
}

std::size_t BigNat::bit_length() const {
    if (is_zero()) return 0;
    std::uint64_t top = limbs_.back();
    std::size_t bits = 64 - static_cast<std::size_t>(__builtin_clzll(top));
    return bits + 64 * (limbs_.size() - 1);
}

void BigNat::top_bits(unsigned __int128& mantissa, long& exponent) const {
    if (limbs_.size() == 1) {
        mantissa = limbs_[0];
        exponent = 0;
        return;
    }
    std::size_t n = limbs_.size();
    mantissa = (static_cast<unsigned __int128>(limbs_[n - 1]) << 64) | limbs_[n - 2];
    exponent = 64 * static_cast<long>(n - 2);
}

double BigNat::to_double() const {
    unsigned __int128 mant;
    long exp;
    top_bits(mant, exp);
    return static_cast<double>(std::ldexp(static_cast<long double>(mant), static_cast<int>(exp)));
}

double BigNat::ratio(const BigNat& a, const BigNat& b) {
    if (b.is_zero()) throw std::domain_error("BigNat::ratio division by zero");
    if (a.is_zero()) return 0.0;
    unsigned __int128 ma, mb;
    long ea, eb;
    a.top_bits(ma, ea);
    b.top_bits(mb, eb);
    // Each mantissa is >= 64 significant bits, so the long double quotient is
    // correct to ~2^-63 relative before the exact power-of-two rescale.
    long double q = static_cast<long double>(ma) / static_cast<long double>(mb);
    long shift = ea - eb;
    if (shift < -16000 || shift > 16000)
        throw std::overflow_error("BigNat::ratio exponent out of double range");
    return static_cast<double>(std::ldexp(q, static_cast<int>(shift)));
}

} // namespace polya
