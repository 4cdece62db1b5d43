// Operation-count benchmark harness: runs the conversion methods over random
// inputs of growing digit counts, snapshots their counters, and reduces the
// records to per-size means with doubling ratios. The CSV layouts written by
// emit_csv are a stable interface.
#pragma once

#include <iosfwd>
#include <optional>
#include <random>

#include "bcdconv/bcd.hpp"

namespace bcdconv {

enum class Method { divtable, addition, parallel };

std::string_view method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

/// Thrown by summarize when no two measured sizes are related by doubling.
class InsufficientDataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BenchConfig {
    enum class StepMode { linear, doubling };

    std::size_t min_digits = 1;
    std::size_t max_digits = 1;
    StepMode step_mode = StepMode::doubling;
    std::size_t step = 1;  // linear mode only
    std::size_t trials_per_size = 1;
    std::uint64_t rng_seed = 0;
    std::vector<Method> methods;
};

/// One observation. elapsed_ns is informational and excluded from the CSV
/// unless explicitly requested; the cost model is the counters.
struct BenchRecord {
    Method method = Method::divtable;
    std::size_t n = 0;
    std::size_t trial = 0;
    OpCounters counters;
    std::size_t result_bits = 0;
    std::uint64_t elapsed_ns = 0;
};

struct GrowthPoint {
    std::size_t n = 0;
    double mean = 0.0;
    std::optional<double> doubling_ratio;  // mean(n) / mean(n/2) where n/2 was measured
};

struct GrowthSummary {
    Method method = Method::divtable;
    std::string counter;
    std::vector<GrowthPoint> points;  // ascending by n
};

/// Uniform n-digit numeral with a nonzero leading digit. Fully determined by
/// the generator state; n must be at least 1.
BcdNumber random_bcd(std::size_t n, std::mt19937_64& rng);

/// Runs every selected method on the same input per (size, trial) pair with
/// fresh counters. Records come back sorted by (method name, n, trial).
/// Throws std::invalid_argument on a bad configuration.
std::vector<BenchRecord> run_bench(const BenchConfig& cfg);

/// Mean of each counter (and of result_bits) per (method, n), with doubling
/// ratios where both n and n/2 were measured.
std::vector<GrowthSummary> summarize(const std::vector<BenchRecord>& records);

/// Record rows: header
/// method,n,trial,shifts,table_lookups,borrow_extractions,bit_additions,carry_determinations,result_bits
/// with an optional trailing time_ns column. Newline-terminated rows, no
/// trailing whitespace, byte-identical across runs of the same config as long
/// as the time column stays off.
void emit_csv(const std::vector<BenchRecord>& records, std::ostream& out,
              bool include_time = false);

/// Summary rows: header method,counter,n,mean,doubling_ratio with an empty
/// ratio field where undefined.
void emit_csv(const std::vector<GrowthSummary>& summaries, std::ostream& out);

}  // namespace bcdconv
