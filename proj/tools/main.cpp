// bcdconv command line tool: convert decimal numerals to binary with either
// conversion method, print the division table, benchmark operation counts,
// and self-check the build. Exit codes: 0 success, 1 usage or input error,
// 2 verification or self-test failure.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bcdconv/addition.hpp"
#include "bcdconv/bench.hpp"
#include "bcdconv/divtable.hpp"
#include "bcdconv/oracle.hpp"
#include "bcdconv/parallel.hpp"

namespace {

using namespace bcdconv;

struct ConvertOptions {
    std::vector<std::string> inputs;
    bool from_stdin = false;
    std::string method = "addition";
    bool stats = false;
    bool verify = false;
};

BitString convert_with(const std::string& method, const BcdNumber& number, OpCounters& counters) {
    if (method == "divtable")
        return convert_divtable(number, counters);
    if (method == "parallel")
        return convert_parallel_recursive(number, SplitPlan{}, counters);
    return convert_addition(number, counters);
}

// Stats go to standard error so that standard output stays a pure bit stream.
void print_stats(const OpCounters& counters, std::size_t result_bits) {
    std::cerr << "shifts=" << counters.shifts << '\n'
              << "table_lookups=" << counters.table_lookups << '\n'
              << "borrow_extractions=" << counters.borrow_extractions << '\n'
              << "bit_additions=" << counters.bit_additions << '\n'
              << "carry_determinations=" << counters.carry_determinations << '\n'
              << "result_bits=" << result_bits << '\n';
}

int convert_one(const std::string& text, const ConvertOptions& opt) {
    BcdNumber number = parse_decimal(text);
    OpCounters counters;
    BitString result = convert_with(opt.method, number, counters);
    if (opt.verify) {
        BitString expected = convert_descending_powers(number);
        if (result != expected) {
            std::cerr << "verification failed for " << text << ": method produced "
                      << result.to_string() << ", oracle produced " << expected.to_string()
                      << '\n';
            return 2;
        }
    }
    std::cout << result.to_string() << '\n';
    if (opt.stats)
        print_stats(counters, result.bit_count());
    return 0;
}

int run_convert(const ConvertOptions& opt) {
    if (!opt.from_stdin && opt.inputs.empty()) {
        std::cerr << "convert: no input; pass decimal literals or --stdin\n";
        return 1;
    }
    if (opt.from_stdin) {
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(std::cin, line)) {
            ++line_no;
            try {
                if (int rc = convert_one(line, opt); rc != 0)
                    return rc;
            } catch (const ParseError& e) {
                std::cerr << "convert: line " << line_no << ": " << e.what() << '\n';
                return 1;
            }
        }
        return 0;
    }
    for (const std::string& text : opt.inputs) {
        try {
            if (int rc = convert_one(text, opt); rc != 0)
                return rc;
        } catch (const ParseError& e) {
            std::cerr << "convert: '" << text << "': " << e.what() << '\n';
            return 1;
        }
    }
    return 0;
}

int run_table() {
    std::printf("%-8s %-12s %-9s %s\n", "decimal", "borrow+code", "quotient", "residue");
    for (unsigned d = 0; d <= 9; ++d) {
        DivTableEntry entry = div_table_lookup(1, BcdDigit(d));
        std::string borrow_code = "1+" + nibble(d);
        std::printf("%-8u %-12s %-9s %s\n", 10 + d, borrow_code.c_str(),
                    nibble(entry.quotient.value()).c_str(), nibble(entry.residue).c_str());
    }
    return 0;
}

struct BenchOptions {
    std::size_t min_digits = 1;
    std::size_t max_digits = 1;
    bool doubling = false;
    std::size_t step = 0;  // 0 means not given
    std::size_t trials = 10;
    std::uint64_t seed = 0;
    std::vector<std::string> methods{"divtable", "addition"};
    std::string out_path;
    bool summary = false;
    bool include_time = false;
};

int run_bench_cmd(const BenchOptions& opt) {
    BenchConfig cfg;
    cfg.min_digits = opt.min_digits;
    cfg.max_digits = opt.max_digits;
    if (opt.step > 0) {
        cfg.step_mode = BenchConfig::StepMode::linear;
        cfg.step = opt.step;
    } else {
        cfg.step_mode = BenchConfig::StepMode::doubling;
    }
    cfg.trials_per_size = opt.trials;
    cfg.rng_seed = opt.seed;
    for (const std::string& name : opt.methods) {
        auto method = method_from_name(name);
        if (!method) {
            std::cerr << "bench: unknown method '" << name << "'\n";
            return 1;
        }
        cfg.methods.push_back(*method);
    }

    try {
        std::vector<BenchRecord> records = run_bench(cfg);
        std::ostringstream csv;
        if (opt.summary)
            emit_csv(summarize(records), csv);
        else
            emit_csv(records, csv, opt.include_time);

        if (opt.out_path.empty()) {
            std::cout << csv.str();
            return 0;
        }
        std::ofstream file(opt.out_path, std::ios::binary);
        if (!file) {
            std::cerr << "bench: cannot open " << opt.out_path << " for writing\n";
            return 1;
        }
        file << csv.str();
        file.flush();
        if (!file) {
            std::cerr << "bench: write failed for " << opt.out_path << '\n';
            return 1;
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "bench: " << e.what() << '\n';
        return 1;
    }
}

struct Check {
    std::string label;
    bool passed = true;
    std::string first_failure;

    void fail(std::uint64_t input) {
        if (passed) {
            passed = false;
            first_failure = std::to_string(input);
        }
    }
};

int run_selftest(bool quick) {
    const std::uint64_t limit = quick ? 9999 : 99999;
    const std::uint64_t parallel_limit = quick ? 999 : 9999;

    Check equivalence{"divtable == addition == descending-powers == native on 0.." +
                      std::to_string(limit)};
    Check shift_law{"addition method spends exactly 2(n-1) shifts on the same range"};
    Check borrow_accounting{"divtable method borrow extractions == shifts + table lookups"};
    Check parallel_splits{"every valid split index matches the divtable result on 0.." +
                          std::to_string(parallel_limit)};

    for (std::uint64_t v = 0; v <= limit; ++v) {
        BcdNumber number = BcdNumber::from_native(v);
        OpCounters div_counters;
        OpCounters add_counters;
        BitString by_divtable = convert_divtable(number, div_counters);
        BitString by_addition = convert_addition(number, add_counters);
        if (by_divtable != by_addition || by_addition != convert_descending_powers(number) ||
            by_divtable != convert_native(number))
            equivalence.fail(v);
        if (add_counters.shifts != 2 * (number.digit_count() - 1))
            shift_law.fail(v);
        if (div_counters.borrow_extractions != div_counters.shifts + div_counters.table_lookups ||
            div_counters.carry_determinations != div_counters.bit_additions)
            borrow_accounting.fail(v);
    }

    for (std::uint64_t v = 0; v <= parallel_limit; ++v) {
        BcdNumber number = BcdNumber::from_native(v);
        OpCounters reference_counters;
        BitString reference = convert_divtable(number, reference_counters);
        for (std::size_t i = 1; i < number.digit_count(); ++i) {
            OpCounters high, low, join;
            if (convert_parallel(number, i, high, low, join) != reference)
                parallel_splits.fail(v);
        }
    }

    const Check* checks[] = {&equivalence, &shift_law, &borrow_accounting, &parallel_splits};
    int failures = 0;
    for (const Check* check : checks) {
        if (check->passed) {
            std::cout << "ok   " << check->label << '\n';
        } else {
            std::cout << "FAIL " << check->label << " (first failing input: "
                      << check->first_failure << ")\n";
            ++failures;
        }
    }
    return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decimal-to-binary conversion based on BCD halving and Horner shift-add"};
    app.require_subcommand(1);

    ConvertOptions convert_opt;
    CLI::App* convert_cmd = app.add_subcommand("convert", "Convert decimal numerals to binary");
    convert_cmd->add_option("numbers", convert_opt.inputs, "Decimal literals to convert");
    convert_cmd->add_flag("--stdin", convert_opt.from_stdin,
                          "Read newline-delimited numerals from standard input");
    convert_cmd->add_option("--method", convert_opt.method, "Conversion method")
        ->check(CLI::IsMember({"divtable", "addition", "parallel"}))
        ->capture_default_str();
    convert_cmd->add_flag("--stats", convert_opt.stats,
                          "Report operation counters on standard error");
    convert_cmd->add_flag("--verify", convert_opt.verify,
                          "Cross-check each result against the descending-powers oracle");

    CLI::App* table_cmd =
        app.add_subcommand("table", "Print the division table for decimal values 10-19");

    BenchOptions bench_opt;
    CLI::App* bench_cmd = app.add_subcommand("bench", "Measure operation counts over random inputs");
    bench_cmd->add_option("--min-digits", bench_opt.min_digits, "Smallest input size")
        ->capture_default_str();
    bench_cmd->add_option("--max-digits", bench_opt.max_digits, "Largest input size")
        ->capture_default_str();
    CLI::Option* doubling_flag =
        bench_cmd->add_flag("--doubling", bench_opt.doubling, "Double the size between steps (default)");
    CLI::Option* step_opt = bench_cmd->add_option("--step", bench_opt.step, "Linear size step");
    doubling_flag->excludes(step_opt);
    step_opt->excludes(doubling_flag);
    bench_cmd->add_option("--trials", bench_opt.trials, "Trials per size")->capture_default_str();
    bench_cmd->add_option("--seed", bench_opt.seed, "RNG seed")->capture_default_str();
    bench_cmd->add_option("--methods", bench_opt.methods, "Methods to run (comma separated)")
        ->delimiter(',')
        ->capture_default_str();
    bench_cmd->add_option("--out", bench_opt.out_path,
                          "Write CSV to this file instead of standard output");
    bench_cmd->add_flag("--summary", bench_opt.summary,
                        "Emit per-size means and doubling ratios instead of raw records");
    bench_cmd->add_flag("--time", bench_opt.include_time,
                        "Append a wall-clock time_ns column (not deterministic)");

    bool quick = false;
    CLI::App* selftest_cmd =
        app.add_subcommand("selftest", "Run the built-in equivalence and counter checks");
    selftest_cmd->add_flag("--quick", quick, "Limit the exhaustive range to 0-9999");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (convert_cmd->parsed())
            return run_convert(convert_opt);
        if (table_cmd->parsed())
            return run_table();
        if (bench_cmd->parsed())
            return run_bench_cmd(bench_opt);
        if (selftest_cmd->parsed())
            return run_selftest(quick);
    } catch (const std::exception& e) {
        std::cerr << "bcdconv: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
