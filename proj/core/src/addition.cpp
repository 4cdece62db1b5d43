#include "bcdconv/addition.hpp"

#include <algorithm>

namespace bcdconv {

BitString shift_left(const BitString& a, std::size_t k, OpCounters& counters) {
    if (k == 0)
        throw std::invalid_argument("shift_left: shift amount must be at least 1");
    counters.shifts += 1;  // one instruction no matter how wide the shift
    if (a.is_zero())
        return a;
    std::vector<std::uint8_t> bits(a.bits().begin(), a.bits().end());
    bits.insert(bits.end(), k, 0);
    return BitString::from_bits(std::move(bits));
}

BitString add_bits(const BitString& a, const BitString& b, OpCounters& counters) {
    auto ab = a.bits();
    auto bb = b.bits();
    std::size_t width = std::max(ab.size(), bb.size());
    std::vector<std::uint8_t> sum(width);
    std::uint8_t carry = 0;
    for (std::size_t i = 0; i < width; ++i) {
        std::uint8_t b0 = i < ab.size() ? ab[ab.size() - 1 - i] : 0;
        std::uint8_t b1 = i < bb.size() ? bb[bb.size() - 1 - i] : 0;
        std::uint8_t t = static_cast<std::uint8_t>(b0 + b1 + carry);  // one full adder
        sum[width - 1 - i] = t & 1;
        carry = t >> 1;
        counters.bit_additions += 1;
        counters.carry_determinations += 1;
    }
    if (carry) {
        // the carry-out settles one extra position
        sum.insert(sum.begin(), 1);
        counters.bit_additions += 1;
        counters.carry_determinations += 1;
    }
    return BitString::from_bits(std::move(sum));
}

BitString times_ten(const BitString& a, OpCounters& counters) {
    BitString twice = shift_left(a, 1, counters);
    BitString eight_times = shift_left(a, 3, counters);
    return add_bits(twice, eight_times, counters);
}

BitString convert_addition(std::span<const BcdDigit> digits, OpCounters& counters) {
    if (digits.empty())
        throw std::invalid_argument("convert_addition: empty digit sequence");
    BitString acc = digit_to_bits(digits[0]);
    for (std::size_t i = 1; i < digits.size(); ++i)
        acc = add_bits(times_ten(acc, counters), digit_to_bits(digits[i]), counters);
    return acc;
}

BitString convert_addition(const BcdNumber& x, OpCounters& counters) {
    return convert_addition(x.digits(), counters);
}

}  // namespace bcdconv
