// Value types for decimal and binary numerals plus the uninstrumented
// decimal helpers. Everything here is immutable and safe to share across
// threads.
#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bcdconv {

/// Thrown by parse_decimal. position() is the 1-based offset of the
/// offending character; 0 means the input was empty.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// One decimal digit held as its 4-bit code. Codes 1010-1111 are not
/// constructible.
class BcdDigit {
public:
    constexpr BcdDigit() = default;

    explicit BcdDigit(unsigned value) : code_(static_cast<std::uint8_t>(value)) {
        if (value > 9)
            throw std::out_of_range("BCD digit out of range: " + std::to_string(value));
    }

    constexpr unsigned value() const noexcept { return code_; }

    auto operator<=>(const BcdDigit&) const = default;

private:
    std::uint8_t code_ = 0;
};

/// Unsigned decimal numeral, one digit per position, most significant first.
/// Always normalized: no leading zero digit except for zero itself.
class BcdNumber {
public:
    BcdNumber() : digits_(1) {}

    /// Normalizes by dropping leading zero digits. Throws
    /// std::invalid_argument on an empty sequence.
    static BcdNumber from_digits(std::vector<BcdDigit> digits);
    static BcdNumber from_native(std::uint64_t value);

    std::span<const BcdDigit> digits() const noexcept { return digits_; }
    std::size_t digit_count() const noexcept { return digits_.size(); }
    bool is_zero() const noexcept { return digits_.size() == 1 && digits_[0].value() == 0; }

    std::string to_string() const;

    bool operator==(const BcdNumber&) const = default;

private:
    std::vector<BcdDigit> digits_;
};

/// Binary numeral, most significant bit first. Canonical: the leading bit is
/// 1 except for the single-bit zero.
class BitString {
public:
    BitString() : bits_(1, 0) {}

    /// Canonicalizes by dropping leading zero bits. Values must be 0 or 1;
    /// throws std::invalid_argument otherwise or on an empty sequence.
    static BitString from_bits(std::vector<std::uint8_t> bits_msb_first);
    static BitString from_string(std::string_view text);

    std::span<const std::uint8_t> bits() const noexcept { return bits_; }
    std::size_t bit_count() const noexcept { return bits_.size(); }
    bool is_zero() const noexcept { return bits_.size() == 1 && bits_[0] == 0; }

    std::string to_string() const;

    bool operator==(const BitString&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Tallies of the logical operations the two conversion methods spend.
/// Decimal helpers (bcd_add and friends) never touch these; only the
/// instrumented bit-level primitives do. carry_determinations always equals
/// bit_additions: every full-adder invocation settles exactly one carry.
struct OpCounters {
    std::uint64_t shifts = 0;
    std::uint64_t table_lookups = 0;
    std::uint64_t borrow_extractions = 0;
    std::uint64_t bit_additions = 0;
    std::uint64_t carry_determinations = 0;

    OpCounters& operator+=(const OpCounters& other) {
        shifts += other.shifts;
        table_lookups += other.table_lookups;
        borrow_extractions += other.borrow_extractions;
        bit_additions += other.bit_additions;
        carry_determinations += other.carry_determinations;
        return *this;
    }

    friend OpCounters operator+(OpCounters lhs, const OpCounters& rhs) { return lhs += rhs; }

    bool operator==(const OpCounters&) const = default;
};

/// Parses a decimal literal, stripping leading zeros ("007" and "7" agree).
/// Throws ParseError on empty input or any character outside '0'..'9'.
BcdNumber parse_decimal(std::string_view text);

/// The 4-bit code of a digit. Throws std::out_of_range for d > 9.
BcdDigit encode_digit(unsigned d);

/// Minimal-length binary numeral of one digit: the leading zero bits of the
/// 4-bit code are discarded, so 7 gives 111 and 0 gives 0.
BitString digit_to_bits(BcdDigit d);

/// Digit-wise decimal sum with carries. Uncounted; exists to support the
/// descending-powers oracle.
BcdNumber bcd_add(const BcdNumber& x, const BcdNumber& y);

/// Orders by digit count first, then lexicographically.
std::strong_ordering bcd_compare(const BcdNumber& x, const BcdNumber& y);

/// Digit-wise borrow subtraction. Throws std::underflow_error when x < y.
BcdNumber bcd_subtract(const BcdNumber& x, const BcdNumber& y);

/// The represented value. Throws std::overflow_error when it does not fit
/// 64 bits.
std::uint64_t to_native(const BcdNumber& x);

/// Four-character rendering of a 4-bit code, e.g. 7 -> "0111".
std::string nibble(unsigned value);

}  // namespace bcdconv
