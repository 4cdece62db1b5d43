// Fork-join decomposition of Method 2: the digit string splits into
// segments that convert independently and recombine as high * 10^i + low.
// The halving method offers no such decomposition; its borrow chain runs
// through every digit of every pass.
#pragma once

#include "bcdconv/addition.hpp"

namespace bcdconv {

/// Configuration for convert_parallel_recursive. Split indices count digits
/// from the least significant end, so index i puts the i lowest digits in
/// the lower segment.
///
/// When split_points is non-empty it pins the top-level partition (strictly
/// ascending, each in [1, digit count)); each resulting segment then recurses
/// by the midpoint rule. With split_points empty the whole numeral recurses
/// directly: a segment splits at its midpoint while it is longer than
/// leaf_digits and depth remains, otherwise it converts as one Horner run.
struct SplitPlan {
    std::vector<std::size_t> split_points;
    std::size_t max_depth = 3;
    std::size_t leaf_digits = 8;
};

/// Applies *10 power times: value(a) * 10^power. Zero power is the identity
/// and costs nothing.
BitString mul_pow10(const BitString& a, std::size_t power, OpCounters& counters);

/// One-level split at index i: the digits above i and the i lowest digits
/// convert by Method 2 on separate tasks, then join as high * 10^i + low.
/// The join cost lands in counters_join. Throws std::out_of_range unless
/// 1 <= i < digit count.
BitString convert_parallel(const BcdNumber& x, std::size_t split_index,
                           OpCounters& counters_high, OpCounters& counters_low,
                           OpCounters& counters_join);

/// Recursive fork-join conversion per the plan. Equals convert_addition(x)
/// bit for bit; sibling segments may run concurrently and the merged counter
/// totals do not depend on the interleaving.
BitString convert_parallel_recursive(const BcdNumber& x, const SplitPlan& plan,
                                     OpCounters& counters);

}  // namespace bcdconv
