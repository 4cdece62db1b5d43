// Method 1: repeated halving of a decimal numeral. Digits with an incoming
// borrow of 0 are halved by a right shift of their 4-bit code; digits with a
// borrow of 1 go through the division table covering decimal values 10-19.
// Each halving pass emits one output bit, least significant first.
#pragma once

#include "bcdconv/bcd.hpp"

namespace bcdconv {

/// One row of the division table: the halved quotient of a decimal value
/// 10 + d and its residue bit.
struct DivTableEntry {
    BcdDigit quotient;      // (10 + d) / 2, always in 5..9
    std::uint8_t residue;   // (10 + d) % 2
};

/// Effect of halving one digit position. Invariant:
/// 2 * quotient_digit + borrow_out == 10 * borrow_in + digit_in.
struct HalvingStep {
    std::uint8_t borrow_in;
    BcdDigit digit_in;
    BcdDigit quotient_digit;
    std::uint8_t borrow_out;
};

struct HalvingResult {
    BcdNumber quotient;
    std::uint8_t remainder;
};

/// The table row for decimal value 10 + d. The table covers 10-19 only, so
/// borrow must be 1; throws std::logic_error otherwise (borrow-0 digits take
/// the shift path).
DivTableEntry div_table_lookup(std::uint8_t borrow, BcdDigit d);

/// Halves one digit position. Borrow 0 costs one shift, borrow 1 costs one
/// table lookup; either way extracting the outgoing borrow costs one more.
HalvingStep halve_digit(std::uint8_t borrow_in, BcdDigit d, OpCounters& counters);

/// One halving pass over the whole numeral, most significant digit first,
/// chaining each borrow into the next position. The final borrow is the
/// remainder: 2 * value(quotient) + remainder == value(x).
HalvingResult halve_number(const BcdNumber& x, OpCounters& counters);

/// Repeatedly halves x, collecting remainders least significant first, until
/// the quotient reaches zero. Zero input yields "0" with no passes.
BitString convert_divtable(const BcdNumber& x, OpCounters& counters);

}  // namespace bcdconv
