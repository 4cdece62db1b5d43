#include "bcdconv/parallel.hpp"

#include <future>

namespace bcdconv {

namespace {

// Below this size forking a task costs more than the conversion itself.
constexpr std::size_t kForkThresholdDigits = 32;

BitString join_segments(const BitString& high, const BitString& low, std::size_t low_digits,
                        OpCounters& counters) {
    return add_bits(mul_pow10(high, low_digits, counters), low, counters);
}

BitString convert_segment(std::span<const BcdDigit> digits, std::size_t depth,
                          const SplitPlan& plan, OpCounters& counters) {
    if (depth == 0 || digits.size() <= plan.leaf_digits)
        return convert_addition(digits, counters);

    std::size_t low_digits = (digits.size() + 1) / 2;  // split at i = ceil(n/2)
    auto high_slice = digits.first(digits.size() - low_digits);
    auto low_slice = digits.last(low_digits);

    if (digits.size() >= kForkThresholdDigits) {
        OpCounters high_counters;
        auto high_task = std::async(std::launch::async, [&] {
            return convert_segment(high_slice, depth - 1, plan, high_counters);
        });
        BitString low = convert_segment(low_slice, depth - 1, plan, counters);
        BitString high = high_task.get();
        counters += high_counters;
        return join_segments(high, low, low_digits, counters);
    }
    BitString high = convert_segment(high_slice, depth - 1, plan, counters);
    BitString low = convert_segment(low_slice, depth - 1, plan, counters);
    return join_segments(high, low, low_digits, counters);
}

}  // namespace

BitString mul_pow10(const BitString& a, std::size_t power, OpCounters& counters) {
    BitString out = a;
    for (std::size_t i = 0; i < power; ++i)
        out = times_ten(out, counters);
    return out;
}

BitString convert_parallel(const BcdNumber& x, std::size_t split_index,
                           OpCounters& counters_high, OpCounters& counters_low,
                           OpCounters& counters_join) {
    if (split_index < 1 || split_index >= x.digit_count())
        throw std::out_of_range("convert_parallel: split index must satisfy 1 <= i < digit count");
    auto digits = x.digits();
    auto high_slice = digits.first(digits.size() - split_index);
    auto low_slice = digits.last(split_index);

    auto high_task = std::async(std::launch::async, [&] {
        return convert_addition(high_slice, counters_high);
    });
    BitString low = convert_addition(low_slice, counters_low);
    BitString high = high_task.get();
    return join_segments(high, low, split_index, counters_join);
}

BitString convert_parallel_recursive(const BcdNumber& x, const SplitPlan& plan,
                                     OpCounters& counters) {
    auto digits = x.digits();
    if (plan.split_points.empty())
        return convert_segment(digits, plan.max_depth, plan, counters);

    std::size_t n = digits.size();
    std::size_t prev = 0;
    for (std::size_t i : plan.split_points) {
        if (i < 1 || i >= n || i <= prev)
            throw std::out_of_range(
                "convert_parallel_recursive: split points must be strictly ascending in [1, digit count)");
        prev = i;
    }

    // Cut into segments, most significant first, then fold them together the
    // same way a one-level join would, one segment at a time.
    std::vector<std::span<const BcdDigit>> segments;
    segments.reserve(plan.split_points.size() + 1);
    std::size_t upper = n;  // digits remaining below the previous cut
    for (auto it = plan.split_points.rbegin(); it != plan.split_points.rend(); ++it) {
        segments.push_back(digits.subspan(n - upper, upper - *it));
        upper = *it;
    }
    segments.push_back(digits.subspan(n - upper, upper));

    BitString acc = convert_segment(segments[0], plan.max_depth, plan, counters);
    for (std::size_t s = 1; s < segments.size(); ++s) {
        BitString part = convert_segment(segments[s], plan.max_depth, plan, counters);
        acc = join_segments(acc, part, segments[s].size(), counters);
    }
    return acc;
}

}  // namespace bcdconv
