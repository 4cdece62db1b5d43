#include "bcdconv/bcd.hpp"

#include <algorithm>
#include <limits>

namespace bcdconv {

BcdNumber BcdNumber::from_digits(std::vector<BcdDigit> digits) {
    if (digits.empty())
        throw std::invalid_argument("BcdNumber needs at least one digit");
    std::size_t lead = 0;
    while (lead + 1 < digits.size() && digits[lead].value() == 0)
        ++lead;
    digits.erase(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(lead));
    BcdNumber out;
    out.digits_ = std::move(digits);
    return out;
}

BcdNumber BcdNumber::from_native(std::uint64_t value) {
    return parse_decimal(std::to_string(value));
}

std::string BcdNumber::to_string() const {
    std::string out;
    out.reserve(digits_.size());
    for (BcdDigit d : digits_)
        out.push_back(static_cast<char>('0' + d.value()));
    return out;
}

BitString BitString::from_bits(std::vector<std::uint8_t> bits_msb_first) {
    if (bits_msb_first.empty())
        throw std::invalid_argument("BitString needs at least one bit");
    for (std::uint8_t b : bits_msb_first)
        if (b > 1)
            throw std::invalid_argument("bit values must be 0 or 1");
    std::size_t lead = 0;
    while (lead + 1 < bits_msb_first.size() && bits_msb_first[lead] == 0)
        ++lead;
    bits_msb_first.erase(bits_msb_first.begin(), bits_msb_first.begin() + static_cast<std::ptrdiff_t>(lead));
    BitString out;
    out.bits_ = std::move(bits_msb_first);
    return out;
}

BitString BitString::from_string(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("BitString text must contain only 0 and 1");
        bits.push_back(c == '1' ? 1 : 0);
    }
    return from_bits(std::move(bits));
}

std::string BitString::to_string() const {
    std::string out;
    out.reserve(bits_.size());
    for (std::uint8_t b : bits_)
        out.push_back(b ? '1' : '0');
    return out;
}

BcdNumber parse_decimal(std::string_view text) {
    if (text.empty())
        throw ParseError("empty input", 0);
    std::vector<BcdDigit> digits;
    digits.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9')
            throw ParseError("invalid digit '" + std::string(1, c) + "' at position " +
                                 std::to_string(i + 1),
                             i + 1);
        digits.emplace_back(static_cast<unsigned>(c - '0'));
    }
    return BcdNumber::from_digits(std::move(digits));
}

BcdDigit encode_digit(unsigned d) {
    return BcdDigit(d);
}

BitString digit_to_bits(BcdDigit d) {
    unsigned v = d.value();
    if (v == 0)
        return BitString{};
    std::vector<std::uint8_t> bits;
    for (unsigned mask = 8; mask != 0; mask >>= 1)
        if (!bits.empty() || (v & mask))
            bits.push_back((v & mask) ? 1 : 0);
    return BitString::from_bits(std::move(bits));
}

BcdNumber bcd_add(const BcdNumber& x, const BcdNumber& y) {
    auto xd = x.digits();
    auto yd = y.digits();
    std::size_t width = std::max(xd.size(), yd.size());
    std::vector<BcdDigit> sum(width + 1);
    unsigned carry = 0;
    for (std::size_t i = 0; i < width; ++i) {
        unsigned a = i < xd.size() ? xd[xd.size() - 1 - i].value() : 0;
        unsigned b = i < yd.size() ? yd[yd.size() - 1 - i].value() : 0;
        unsigned s = a + b + carry;
        sum[width - i] = BcdDigit(s % 10);
        carry = s / 10;
    }
    sum[0] = BcdDigit(carry);
    return BcdNumber::from_digits(std::move(sum));
}

std::strong_ordering bcd_compare(const BcdNumber& x, const BcdNumber& y) {
    if (auto c = x.digit_count() <=> y.digit_count(); c != 0)
        return c;
    auto xd = x.digits();
    auto yd = y.digits();
    for (std::size_t i = 0; i < xd.size(); ++i)
        if (auto c = xd[i].value() <=> yd[i].value(); c != 0)
            return c;
    return std::strong_ordering::equal;
}

BcdNumber bcd_subtract(const BcdNumber& x, const BcdNumber& y) {
    if (bcd_compare(x, y) == std::strong_ordering::less)
        throw std::underflow_error("bcd_subtract: minuend " + x.to_string() +
                                   " is smaller than subtrahend " + y.to_string());
    auto xd = x.digits();
    auto yd = y.digits();
    std::vector<BcdDigit> diff(xd.size());
    int borrow = 0;
    for (std::size_t i = 0; i < xd.size(); ++i) {
        int a = static_cast<int>(xd[xd.size() - 1 - i].value());
        int b = i < yd.size() ? static_cast<int>(yd[yd.size() - 1 - i].value()) : 0;
        int v = a - b - borrow;
        borrow = v < 0 ? 1 : 0;
        if (borrow)
            v += 10;
        diff[xd.size() - 1 - i] = BcdDigit(static_cast<unsigned>(v));
    }
    return BcdNumber::from_digits(std::move(diff));
}

std::uint64_t to_native(const BcdNumber& x) {
    constexpr std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t value = 0;
    for (BcdDigit d : x.digits()) {
        if (value > (max - d.value()) / 10)
            throw std::overflow_error("value does not fit a native integer: " + x.to_string());
        value = value * 10 + d.value();
    }
    return value;
}

std::string nibble(unsigned value) {
    if (value > 15)
        throw std::out_of_range("nibble: value exceeds 4 bits");
    std::string out(4, '0');
    for (unsigned i = 0; i < 4; ++i)
        if (value & (8u >> i))
            out[i] = '1';
    return out;
}

}  // namespace bcdconv
