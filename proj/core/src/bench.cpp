#include "bcdconv/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <ostream>
#include <set>
#include <tuple>

#include "bcdconv/addition.hpp"
#include "bcdconv/divtable.hpp"
#include "bcdconv/parallel.hpp"

namespace bcdconv {

std::string_view method_name(Method m) {
    switch (m) {
        case Method::divtable: return "divtable";
        case Method::addition: return "addition";
        case Method::parallel: return "parallel";
    }
    return "unknown";
}

std::optional<Method> method_from_name(std::string_view name) {
    if (name == "divtable") return Method::divtable;
    if (name == "addition") return Method::addition;
    if (name == "parallel") return Method::parallel;
    return std::nullopt;
}

BcdNumber random_bcd(std::size_t n, std::mt19937_64& rng) {
    if (n == 0)
        throw std::invalid_argument("random_bcd: need at least one digit");
    std::vector<BcdDigit> digits;
    digits.reserve(n);
    // modulo keeps the byte stream portable; the slight bias is irrelevant here
    digits.emplace_back(static_cast<unsigned>(1 + rng() % 9));
    for (std::size_t i = 1; i < n; ++i)
        digits.emplace_back(static_cast<unsigned>(rng() % 10));
    return BcdNumber::from_digits(std::move(digits));
}

namespace {

void validate(const BenchConfig& cfg) {
    if (cfg.min_digits < 1)
        throw std::invalid_argument("bench: min digits must be at least 1");
    if (cfg.min_digits > cfg.max_digits)
        throw std::invalid_argument("bench: min digits exceeds max digits");
    if (cfg.trials_per_size < 1)
        throw std::invalid_argument("bench: trials must be at least 1");
    if (cfg.step_mode == BenchConfig::StepMode::linear && cfg.step < 1)
        throw std::invalid_argument("bench: linear step must be at least 1");
}

std::vector<std::size_t> config_sizes(const BenchConfig& cfg) {
    std::vector<std::size_t> sizes;
    if (cfg.step_mode == BenchConfig::StepMode::doubling) {
        for (std::size_t n = cfg.min_digits; n <= cfg.max_digits; n *= 2)
            sizes.push_back(n);
    } else {
        for (std::size_t n = cfg.min_digits; n <= cfg.max_digits; n += cfg.step)
            sizes.push_back(n);
    }
    return sizes;
}

BitString run_method(Method m, const BcdNumber& input, OpCounters& counters) {
    switch (m) {
        case Method::divtable: return convert_divtable(input, counters);
        case Method::addition: return convert_addition(input, counters);
        case Method::parallel: return convert_parallel_recursive(input, SplitPlan{}, counters);
    }
    throw std::logic_error("run_method: unknown method");
}

// %.6f with trailing zeros (and a bare point) trimmed: 2.5, 254, 4.015873.
std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    std::string out(buf);
    std::size_t last = out.find_last_not_of('0');
    if (last != std::string::npos && out[last] == '.')
        --last;
    out.erase(last + 1);
    return out;
}

constexpr const char* kCounterNames[] = {
    "shifts",        "table_lookups",        "borrow_extractions",
    "bit_additions", "carry_determinations", "result_bits",
};

double counter_value(const BenchRecord& r, std::size_t field) {
    switch (field) {
        case 0: return static_cast<double>(r.counters.shifts);
        case 1: return static_cast<double>(r.counters.table_lookups);
        case 2: return static_cast<double>(r.counters.borrow_extractions);
        case 3: return static_cast<double>(r.counters.bit_additions);
        case 4: return static_cast<double>(r.counters.carry_determinations);
        default: return static_cast<double>(r.result_bits);
    }
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
    validate(cfg);
    std::vector<BenchRecord> records;
    std::mt19937_64 rng(cfg.rng_seed);
    for (std::size_t n : config_sizes(cfg)) {
        for (std::size_t trial = 0; trial < cfg.trials_per_size; ++trial) {
            BcdNumber input = random_bcd(n, rng);  // every method sees this exact numeral
            for (Method m : cfg.methods) {
                BenchRecord rec;
                rec.method = m;
                rec.n = n;
                rec.trial = trial;
                auto start = std::chrono::steady_clock::now();
                BitString result = run_method(m, input, rec.counters);
                auto stop = std::chrono::steady_clock::now();
                rec.result_bits = result.bit_count();
                rec.elapsed_ns = static_cast<std::uint64_t>(
                    std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
                records.push_back(std::move(rec));
            }
        }
    }
    std::sort(records.begin(), records.end(), [](const BenchRecord& a, const BenchRecord& b) {
        return std::make_tuple(method_name(a.method), a.n, a.trial) <
               std::make_tuple(method_name(b.method), b.n, b.trial);
    });
    return records;
}

std::vector<GrowthSummary> summarize(const std::vector<BenchRecord>& records) {
    if (records.empty())
        throw InsufficientDataError("summarize: no records");

    // (sum, count) per (method, counter field, n)
    std::map<Method, std::map<std::size_t, std::map<std::size_t, std::pair<double, std::size_t>>>> acc;
    std::map<Method, std::set<std::size_t>> sizes;
    for (const BenchRecord& r : records) {
        sizes[r.method].insert(r.n);
        for (std::size_t field = 0; field < std::size(kCounterNames); ++field) {
            auto& cell = acc[r.method][field][r.n];
            cell.first += counter_value(r, field);
            cell.second += 1;
        }
    }

    bool doubling_pair = false;
    for (const auto& [method, method_sizes] : sizes)
        for (std::size_t n : method_sizes)
            if (n % 2 == 0 && method_sizes.count(n / 2))
                doubling_pair = true;
    if (!doubling_pair)
        throw InsufficientDataError("summarize: no two measured sizes are related by doubling");

    // methods ordered by name for a stable layout
    std::vector<Method> methods;
    for (const auto& [method, unused] : sizes)
        methods.push_back(method);
    std::sort(methods.begin(), methods.end(),
              [](Method a, Method b) { return method_name(a) < method_name(b); });

    std::vector<GrowthSummary> summaries;
    for (Method method : methods) {
        for (std::size_t field = 0; field < std::size(kCounterNames); ++field) {
            GrowthSummary summary;
            summary.method = method;
            summary.counter = kCounterNames[field];
            const auto& by_size = acc[method][field];
            for (const auto& [n, cell] : by_size) {
                GrowthPoint point;
                point.n = n;
                point.mean = cell.first / static_cast<double>(cell.second);
                if (n % 2 == 0) {
                    auto half = by_size.find(n / 2);
                    if (half != by_size.end()) {
                        double half_mean = half->second.first / static_cast<double>(half->second.second);
                        if (half_mean > 0.0)
                            point.doubling_ratio = point.mean / half_mean;
                    }
                }
                summary.points.push_back(point);
            }
            summaries.push_back(std::move(summary));
        }
    }
    return summaries;
}

void emit_csv(const std::vector<BenchRecord>& records, std::ostream& out, bool include_time) {
    out << "method,n,trial,shifts,table_lookups,borrow_extractions,"
           "bit_additions,carry_determinations,result_bits";
    if (include_time)
        out << ",time_ns";
    out << '\n';
    for (const BenchRecord& r : records) {
        out << method_name(r.method) << ',' << r.n << ',' << r.trial << ','
            << r.counters.shifts << ',' << r.counters.table_lookups << ','
            << r.counters.borrow_extractions << ',' << r.counters.bit_additions << ','
            << r.counters.carry_determinations << ',' << r.result_bits;
        if (include_time)
            out << ',' << r.elapsed_ns;
        out << '\n';
    }
}

void emit_csv(const std::vector<GrowthSummary>& summaries, std::ostream& out) {
    out << "method,counter,n,mean,doubling_ratio\n";
    for (const GrowthSummary& s : summaries) {
        for (const GrowthPoint& p : s.points) {
            out << method_name(s.method) << ',' << s.counter << ',' << p.n << ','
                << format_number(p.mean) << ',';
            if (p.doubling_ratio)
                out << format_number(*p.doubling_ratio);
            out << '\n';
        }
    }
}

}  // namespace bcdconv
