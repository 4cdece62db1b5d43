// Independent correctness oracles. The descending-powers route works at
// arbitrary precision and shares nothing with the measured methods beyond
// the decimal value types: it uses decimal comparison and subtraction, never
// binary shifts or the division table. The native route covers 64-bit
// values. Neither touches OpCounters.
#pragma once

#include "bcdconv/bcd.hpp"

namespace bcdconv {

/// Powers of two as decimal numerals, ascending, built by repeated decimal
/// doubling. Entry 0 is (0, 1) whenever the table is non-empty.
struct PowerTable {
    struct Entry {
        std::size_t exponent;
        BcdNumber value;
    };
    std::vector<Entry> entries;
};

/// All powers 2^k <= limit. Empty for limit zero.
PowerTable build_power_table(const BcdNumber& limit);

/// Greedy conversion: from the largest power downward, emit 1 and subtract
/// when the power fits the running remainder, else emit 0. Bits come out
/// most significant first, starting at the greatest fitting power, so the
/// result is canonical by construction.
BitString convert_descending_powers(const BcdNumber& x);

/// Conversion through a native 64-bit integer. Throws std::overflow_error
/// beyond that range.
BitString convert_native(const BcdNumber& x);

}  // namespace bcdconv
