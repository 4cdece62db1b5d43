// Method 2: Horner accumulation over the decimal digits using only left
// shifts and ripple-carry binary addition. These are the instrumented
// bit-string primitives; the counter semantics are part of the contract.
#pragma once

#include "bcdconv/bcd.hpp"

namespace bcdconv {

/// Appends k zero bits (value * 2^k). Counts as one shift instruction
/// regardless of k. Shifting zero keeps it zero but still counts. k must be
/// at least 1; throws std::invalid_argument otherwise.
BitString shift_left(const BitString& a, std::size_t k, OpCounters& counters);

/// Ripple-carry sum from the least significant position. Each full-adder
/// invocation b0+b1+carry bumps bit_additions and carry_determinations once;
/// a final carry-out that creates a new most significant bit costs one more.
BitString add_bits(const BitString& a, const BitString& b, OpCounters& counters);

/// a*10 as a*2^3 + a*2: exactly two shift instructions plus one addition.
BitString times_ten(const BitString& a, OpCounters& counters);

/// Horner over a raw digit slice, most significant digit first. Leading zero
/// digits still spend their *10 steps, which the parallel splitter relies on
/// for low segments. Throws std::invalid_argument on an empty slice.
BitString convert_addition(std::span<const BcdDigit> digits, OpCounters& counters);

/// Method 2 on a normalized numeral: exactly 2*(n-1) shift instructions for
/// an n-digit input.
BitString convert_addition(const BcdNumber& x, OpCounters& counters);

}  // namespace bcdconv
