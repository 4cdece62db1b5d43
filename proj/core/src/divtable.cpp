#include "bcdconv/divtable.hpp"

#include <algorithm>

namespace bcdconv {

namespace {

// Rows for decimal values 10..19: halved quotient and residue bit.
struct TableRow {
    std::uint8_t quotient;
    std::uint8_t residue;
};

constexpr TableRow kDivisionTable[10] = {
    {5, 0},  // 10
    {5, 1},  // 11
    {6, 0},  // 12
    {6, 1},  // 13
    {7, 0},  // 14
    {7, 1},  // 15
    {8, 0},  // 16
    {8, 1},  // 17
    {9, 0},  // 18
    {9, 1},  // 19
};

}  // namespace

DivTableEntry div_table_lookup(std::uint8_t borrow, BcdDigit d) {
    if (borrow != 1)
        throw std::logic_error("div_table_lookup: the table covers 10-19 only; borrow must be 1");
    const TableRow& row = kDivisionTable[d.value()];
    return DivTableEntry{BcdDigit(row.quotient), row.residue};
}

HalvingStep halve_digit(std::uint8_t borrow_in, BcdDigit d, OpCounters& counters) {
    HalvingStep step{borrow_in, d, BcdDigit{}, 0};
    if (borrow_in == 0) {
        // right shift of the 4-bit code; the bit shifted out becomes the borrow
        step.quotient_digit = BcdDigit(d.value() >> 1);
        step.borrow_out = static_cast<std::uint8_t>(d.value() & 1);
        counters.shifts += 1;
    } else {
        DivTableEntry entry = div_table_lookup(borrow_in, d);
        step.quotient_digit = entry.quotient;
        step.borrow_out = static_cast<std::uint8_t>(entry.residue & 1);
        counters.table_lookups += 1;
    }
    counters.borrow_extractions += 1;
    return step;
}

HalvingResult halve_number(const BcdNumber& x, OpCounters& counters) {
    auto digits = x.digits();
    std::vector<BcdDigit> quotient(digits.size());
    std::uint8_t borrow = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        HalvingStep step = halve_digit(borrow, digits[i], counters);
        quotient[i] = step.quotient_digit;
        borrow = step.borrow_out;
    }
    // dropping a leading zero quotient digit is free in the cost model
    return HalvingResult{BcdNumber::from_digits(std::move(quotient)), borrow};
}

BitString convert_divtable(const BcdNumber& x, OpCounters& counters) {
    if (x.is_zero())
        return BitString{};
    std::vector<std::uint8_t> bits;  // least significant first
    BcdNumber value = x;
    while (!value.is_zero()) {
        HalvingResult pass = halve_number(value, counters);
        bits.push_back(pass.remainder);
        value = std::move(pass.quotient);
    }
    std::reverse(bits.begin(), bits.end());
    return BitString::from_bits(std::move(bits));
}

}  // namespace bcdconv
