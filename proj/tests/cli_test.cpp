// End-to-end tests driving the installed binary as a subprocess. The binary
// path comes from argv[1] or the BCDCONV_CLI environment variable.
#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string g_cli_path;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunResult run_cli(const std::string& args, const std::string& stdin_text = "") {
    static int seq = 0;
    std::filesystem::path dir = std::filesystem::temp_directory_path();
    std::filesystem::path in = dir / ("cli_in_" + std::to_string(++seq));
    std::filesystem::path out = dir / ("cli_out_" + std::to_string(seq));
    std::filesystem::path err = dir / ("cli_err_" + std::to_string(seq));
    {
        std::ofstream f(in, std::ios::binary);
        f << stdin_text;
    }
    std::string cmd = "'" + g_cli_path + "' " + args + " < '" + in.string() + "' > '" +
                      out.string() + "' 2> '" + err.string() + "'";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    std::filesystem::remove(in);
    std::filesystem::remove(out);
    std::filesystem::remove(err);
    return r;
}

}  // namespace

TEST(CliConvert, RunningExample) {
    RunResult r = run_cli("convert 79");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "1001111\n");
    EXPECT_EQ(r.err, "");
}

TEST(CliConvert, Zero) {
    RunResult r = run_cli("convert 0");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "0\n");
}

TEST(CliConvert, AllMethodsAgree) {
    for (const char* method : {"divtable", "addition", "parallel"}) {
        RunResult r = run_cli(std::string("convert 12345678901234567890123 --method ") + method);
        EXPECT_EQ(r.exit_code, 0) << method;
        EXPECT_EQ(r.out, "10100111010100001010110110010011100111011001110001010000100100010011001011\n")
            << method;
    }
}

TEST(CliConvert, InvalidDigitNamesPosition) {
    RunResult r = run_cli("convert 7x9");
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_EQ(r.out, "");
    EXPECT_NE(r.err.find("position 2"), std::string::npos);
}

TEST(CliConvert, StdinBatch) {
    RunResult r = run_cli("convert --stdin", "79\n1024\n0\n");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "1001111\n10000000000\n0\n");
}

TEST(CliConvert, StdinBadLine) {
    RunResult r = run_cli("convert --stdin", "79\nbad\n");
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST(CliConvert, StatsGoToStderr) {
    RunResult r = run_cli("convert 79 --stats");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "1001111\n");
    EXPECT_NE(r.err.find("shifts=2"), std::string::npos);
    EXPECT_NE(r.err.find("result_bits=7"), std::string::npos);
}

TEST(CliConvert, VerifyAgainstOracle) {
    RunResult r = run_cli("convert 79 --verify --method divtable");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "1001111\n");
}

TEST(CliConvert, OutputIsPureBinary) {
    RunResult r = run_cli("convert --stdin", "5\n123456789\n999999999999999999999\n");
    EXPECT_EQ(r.exit_code, 0);
    for (char ch : r.out)
        EXPECT_TRUE(ch == '0' || ch == '1' || ch == '\n') << int(ch);
}

TEST(CliConvert, RequiresInput) {
    EXPECT_EQ(run_cli("convert").exit_code, 1);
}

TEST(CliTable, AllTenRows) {
    RunResult r = run_cli("table");
    EXPECT_EQ(r.exit_code, 0);
    std::istringstream lines(r.out);
    std::string line;
    int rows = 0;
    bool saw19 = false, saw10 = false;
    while (std::getline(lines, line)) {
        if (line.rfind("19", 0) == 0) {
            saw19 = line.find("1001") != std::string::npos &&
                    line.find("0001") != std::string::npos;
        }
        if (line.rfind("10", 0) == 0) {
            saw10 = line.find("0101") != std::string::npos &&
                    line.find("0000") != std::string::npos;
        }
        if (!line.empty() && line[0] == '1')
            ++rows;
    }
    EXPECT_EQ(rows, 10);
    EXPECT_TRUE(saw19);
    EXPECT_TRUE(saw10);
}

TEST(CliBench, RecordsHeader) {
    RunResult r = run_cli("bench --min-digits 2 --max-digits 4 --trials 1");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
              "method,n,trial,shifts,table_lookups,borrow_extractions,bit_additions,"
              "carry_determinations,result_bits");
}

TEST(CliBench, SummaryHeader) {
    RunResult r = run_cli("bench --min-digits 4 --max-digits 8 --trials 2 --summary");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "method,counter,n,mean,doubling_ratio");
}

TEST(CliBench, DeterministicAcrossRuns) {
    const std::string flags =
        "bench --min-digits 4 --max-digits 16 --doubling --trials 3 --seed 7 "
        "--methods divtable,addition,parallel";
    RunResult a = run_cli(flags);
    RunResult b = run_cli(flags);
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
}

TEST(CliBench, RangeValidation) {
    RunResult r = run_cli("bench --min-digits 10 --max-digits 5");
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_EQ(r.out, "");
}

TEST(CliBench, UnknownMethodRejected) {
    EXPECT_EQ(run_cli("bench --min-digits 2 --max-digits 4 --methods nosuch").exit_code, 1);
}

TEST(CliBench, StepAndDoublingAreExclusive) {
    EXPECT_EQ(run_cli("bench --min-digits 2 --max-digits 8 --doubling --step 3").exit_code, 1);
}

TEST(CliBench, WritesOutputFile) {
    std::filesystem::path out =
        std::filesystem::temp_directory_path() / "bench_out_test.csv";
    std::filesystem::remove(out);
    RunResult r = run_cli("bench --min-digits 2 --max-digits 4 --trials 1 --out '" +
                          out.string() + "'");
    EXPECT_EQ(r.exit_code, 0);
    std::string text = slurp(out);
    EXPECT_EQ(text.rfind("method,n,trial,", 0), 0u);
    std::filesystem::remove(out);
}

TEST(CliBench, UnwritableOutputFileFails) {
    RunResult r = run_cli("bench --min-digits 2 --max-digits 4 --out /nonexistent-dir/x.csv");
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(r.err.find("/nonexistent-dir/x.csv"), std::string::npos);
}

TEST(CliSelftest, QuickPasses) {
    RunResult r = run_cli("selftest --quick");
    EXPECT_EQ(r.exit_code, 0);
    std::istringstream lines(r.out);
    std::string line;
    int ok = 0;
    while (std::getline(lines, line))
        if (line.rfind("ok", 0) == 0)
            ++ok;
    EXPECT_EQ(ok, 4);
}

TEST(CliUsage, UnknownSubcommandFails) {
    EXPECT_EQ(run_cli("frobnicate").exit_code, 1);
}

TEST(CliUsage, MissingSubcommandFails) {
    EXPECT_EQ(run_cli("").exit_code, 1);
}

TEST(CliUsage, HelpSucceeds) {
    RunResult r = run_cli("--help");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("convert"), std::string::npos);
}

int main(int argc, char** argv) {
    ::testing::InitGoogleTest(&argc, argv);
    if (argc > 1) {
        g_cli_path = argv[1];
    } else if (const char* env = std::getenv("BCDCONV_CLI")) {
        g_cli_path = env;
    }
    if (g_cli_path.empty() || !std::filesystem::exists(g_cli_path)) {
        std::fprintf(stderr, "usage: cli_test <path-to-bcdconv-binary>\n");
        return 2;
    }
    return RUN_ALL_TESTS();
}
