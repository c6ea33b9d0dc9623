// End-to-end tests for the command-line tool.  CMake passes the binary's
// location in the MESHDIST_BIN environment variable; every test runs the
// tool as a subprocess and checks exact bytes and exit codes.

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace {

struct RunResult {
  std::string output;  // stdout and stderr, interleaved
  int exit_code = -1;
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("MESHDIST_BIN");
  if (bin == nullptr || *bin == '\0')
    throw std::runtime_error("MESHDIST_BIN is not set");
  const std::string command = std::string(bin) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed");
  RunResult result;
  std::array<char, 4096> buffer;
  std::size_t read = 0;
  while ((read = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), read);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

int count_lines(const std::string& text) {
  int lines = 0;
  for (char c : text)
    if (c == '\n') ++lines;
  return lines;
}

int count_substring(const std::string& haystack, const std::string& needle) {
  int n = 0;
  for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + needle.size()))
    ++n;
  return n;
}

TEST(CliDist, SingleRowFromOracleAndFormulaAgree) {
  RunResult oracle = run_cli("dist --nr 8 --n 4");
  EXPECT_EQ(oracle.exit_code, 0);
  EXPECT_EQ(oracle.output, "6 11 6 1\n");

  RunResult formula = run_cli("dist --nr 8 --n 4 --source formula");
  EXPECT_EQ(formula.exit_code, 0);
  EXPECT_EQ(formula.output, oracle.output);
}

TEST(CliDist, JsonTableShape) {
  RunResult r = run_cli("dist --nr 1 --n-max 3 --format json");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output,
            "{\"pattern\": \"tau=12;R=\", "
            "\"rows\": [[1], [1], [1, 1], [1, 2, 2, 1]]}\n");
}

TEST(CliDist, ConjecturalResultsAreMarked) {
  RunResult text = run_cli("dist --nr 3 --n-max 4 --source formula");
  EXPECT_EQ(text.exit_code, 0);
  EXPECT_EQ(text.output.rfind("# conjectural\n", 0), 0u)
      << "conjectural text output must lead with the marker line";

  RunResult json = run_cli("dist --nr 3 --n-max 3 --source formula --format json");
  EXPECT_EQ(json.exit_code, 0);
  EXPECT_TRUE(contains(json.output, "\"conjectural\": true"));

  // The oracle table is exact regardless of the formula's status.
  RunResult oracle_json = run_cli("dist --nr 3 --n-max 3 --format json");
  EXPECT_EQ(oracle_json.exit_code, 0);
  EXPECT_FALSE(contains(oracle_json.output, "conjectural"));
}

TEST(CliDist, AcceptsAnExplicitMeshPattern) {
  RunResult r = run_cli("dist --pattern 'tau=1;R=(0,1)(1,0)' --n 4");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "14 6 3 0 1\n");
}

TEST(CliDist, ShardedOracleRunsAreDeterministic) {
  RunResult one = run_cli("dist --nr 8 --n-max 6 --shards 1");
  RunResult three = run_cli("dist --nr 8 --n-max 6 --shards 3");
  EXPECT_EQ(one.exit_code, 0);
  EXPECT_EQ(three.exit_code, 0);
  EXPECT_EQ(one.output, three.output);
}

TEST(CliDist, UsageErrorsExitWithTwo) {
  EXPECT_EQ(run_cli("dist --nr 8").exit_code, 2);           // no --n/--n-max
  EXPECT_EQ(run_cli("dist --nr 8 --n 4 --n-max 5").exit_code, 2);
  EXPECT_EQ(run_cli("dist --n 4").exit_code, 2);            // no pattern
  EXPECT_EQ(run_cli("dist --nonsense").exit_code, 2);
  EXPECT_EQ(run_cli("dist --nr 999 --n 4").exit_code, 2);   // unknown nr
}

TEST(CliVerify, TheoremLinesAreJsonWithOkStatus) {
  RunResult r = run_cli("verify --theorem T4.1 --n-max 5");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(count_lines(r.output), 12);  // two patterns, n = 0..5
  EXPECT_EQ(r.output.rfind("{\"tag\": \"T4.1\", \"nr\": 8, "
                           "\"pattern\": \"tau=12;R=(0,0)(0,1)(1,0)(1,1)\", "
                           "\"n\": 0, \"status\": \"OK\"}\n",
                           0),
            0u);
  EXPECT_EQ(count_substring(r.output, "\"status\": \"OK\""), 12)
      << "every line should carry an OK status";
}

TEST(CliVerify, ConjectureAndAllModes) {
  RunResult conjecture = run_cli("verify --conjecture C6.1 --n-max 5");
  EXPECT_EQ(conjecture.exit_code, 0);
  EXPECT_EQ(count_lines(conjecture.output), 6);
  EXPECT_TRUE(contains(conjecture.output, "\"tag\": \"C6.1\""));

  RunResult all = run_cli("verify --all --n-max 4");
  EXPECT_EQ(all.exit_code, 0);
  EXPECT_EQ(count_lines(all.output), 160);

  // Asking for a proved theorem through --conjecture is a usage error.
  EXPECT_EQ(run_cli("verify --conjecture T4.1 --n-max 4").exit_code, 2);
}

TEST(CliBijection, WorkedExampleRoundTrips) {
  const std::string pi = "(15)(17)(16)9(10)6(12)8(13)(11)(14)745321";
  const std::string sigma = "(17)(16)(15)(13)(11)4231975(10)6(12)8(14)";

  RunResult forward = run_cli("bijection --map g --perm '" + pi + "'");
  EXPECT_EQ(forward.exit_code, 0);
  EXPECT_EQ(forward.output, sigma + "\noccurrences: input=2 output=2\n");

  RunResult backward = run_cli("bijection --map g-inv --perm '" + sigma + "'");
  EXPECT_EQ(backward.exit_code, 0);
  EXPECT_EQ(backward.output, pi + "\noccurrences: input=2 output=2\n");
}

TEST(CliBijection, AvoiderInputIsAUsageError) {
  RunResult r = run_cli("bijection --map g --perm 132");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_TRUE(contains(r.output, "avoids the source pattern"));
}

TEST(CliBijection, AvoiderPairingMapsAcrossThePair) {
  RunResult r = run_cli("bijection --map f --perm 132 --nr-pair 48,49");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "231\n");
}

TEST(CliBfile, ColumnsAndFlattening) {
  RunResult sfp = run_cli(
      "bfile --pattern 'tau=1;R=(0,1)(1,0)' --column 0 --n-max 6 --start 0");
  EXPECT_EQ(sfp.exit_code, 0);
  EXPECT_EQ(sfp.output, "0 1\n1 0\n2 1\n3 3\n4 14\n5 77\n6 497\n");

  RunResult column = run_cli("bfile --nr 8 --column 1 --n-max 6");
  EXPECT_EQ(column.exit_code, 0);
  EXPECT_EQ(column.output, "1 0\n2 1\n3 3\n4 11\n5 50\n6 274\n");

  RunResult flat = run_cli("bfile --nr 1 --flatten --n-max 3");
  EXPECT_EQ(flat.exit_code, 0);
  EXPECT_EQ(flat.output, "1 1\n2 1\n3 1\n4 1\n5 2\n6 2\n7 1\n");
}

TEST(CliExitCodes, HelpSucceedsAndBadUsageFails) {
  EXPECT_EQ(run_cli("--help").exit_code, 0);
  EXPECT_EQ(run_cli("no-such-subcommand").exit_code, 2);
  EXPECT_EQ(run_cli("bfile --nr 8 --column 0 --flatten").exit_code, 2);
}

}  // namespace
