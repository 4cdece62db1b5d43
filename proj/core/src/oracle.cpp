#include "bcdconv/oracle.hpp"

#include <algorithm>

namespace bcdconv {

PowerTable build_power_table(const BcdNumber& limit) {
    PowerTable table;
    BcdNumber power = BcdNumber::from_native(1);
    std::size_t exponent = 0;
    while (bcd_compare(power, limit) != std::strong_ordering::greater) {
        table.entries.push_back({exponent, power});
        power = bcd_add(power, power);
        ++exponent;
    }
    return table;
}

BitString convert_descending_powers(const BcdNumber& x) {
    if (x.is_zero())
        return BitString{};
    PowerTable table = build_power_table(x);
    std::vector<std::uint8_t> bits;
    bits.reserve(table.entries.size());
    BcdNumber remainder = x;
    for (auto it = table.entries.rbegin(); it != table.entries.rend(); ++it) {
        if (bcd_compare(remainder, it->value) != std::strong_ordering::less) {
            remainder = bcd_subtract(remainder, it->value);
            bits.push_back(1);
        } else {
            bits.push_back(0);
        }
    }
    // the greatest power fits x by construction, so bits[0] == 1 and the
    // remainder has reached zero
    return BitString::from_bits(std::move(bits));
}

BitString convert_native(const BcdNumber& x) {
    std::uint64_t value = to_native(x);
    if (value == 0)
        return BitString{};
    std::vector<std::uint8_t> bits;
    for (std::uint64_t v = value; v != 0; v >>= 1)
        bits.push_back(static_cast<std::uint8_t>(v & 1));
    std::reverse(bits.begin(), bits.end());
    return BitString::from_bits(std::move(bits));
}

}  // namespace bcdconv
