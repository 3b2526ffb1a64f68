#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

const std::filesystem::path kCli = REVMINE_CLI_PATH;

std::filesystem::path fixture(const char* rel) {
    return std::filesystem::path(REVMINE_SOURCE_DIR) / "tests" / "fixtures" / rel;
}

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

CliResult run_cli(const std::string& args) {
    const std::string command = kCli.string() + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    char buf[512];
    while (std::fgets(buf, sizeof(buf), pipe)) result.output += buf;
    const int status = pclose(pipe);
    result.exit_code = WEXITSTATUS(status);
    return result;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("cli: version and help") {
    CHECK(run_cli("--version").exit_code == 0);
    const CliResult help = run_cli("--help");
    CHECK(help.exit_code == 0);
    CHECK(help.output.find("analyze") != std::string::npos);
    CHECK(help.output.find("ngrams") != std::string::npos);
    CHECK(help.output.find("gen-fixture") != std::string::npos);
}

TEST_CASE("cli: exit codes distinguish failure classes") {
    // 2: usage problems
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("analyze --no-such-flag").exit_code == 2);
    CHECK(run_cli("analyze").exit_code == 2);  // no input anywhere

    // 3: unreadable input
    CHECK(run_cli("analyze --input /nonexistent/reviews.csv").exit_code == 3);

    // 4: zero valid records
    const auto empty = write_temp("cli_empty.csv", "review_id,rating,text\nx,9,bad\n");
    CHECK(run_cli("analyze --input " + empty.string() + " --out /tmp/cli_empty_out")
              .exit_code == 4);

    // 5: bad configuration
    const auto dict = write_temp("cli_bad_dict.json", "{broken");
    CHECK(run_cli("analyze --input " + fixture("reviews_200.csv").string() +
                  " --dict " + dict.string() + " --out /tmp/cli_bad_dict_out")
              .exit_code == 5);
}

TEST_CASE("cli: ngrams verb prints per-segment rankings") {
    const CliResult result =
        run_cli("ngrams --input " + fixture("reviews_200.csv").string() +
                " --n 2 --k 5 --min-count 3");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("== negative (") != std::string::npos);
    CHECK(result.output.find("== neutral (") != std::string::npos);
    CHECK(result.output.find("== positive (") != std::string::npos);
    CHECK(result.output.find("friendli staff") != std::string::npos);
    CHECK(result.output.find("long wait") != std::string::npos);
    // bigrams only
    CHECK(result.output.find("trigrams:") == std::string::npos);
}

TEST_CASE("cli: gen-fixture writes both formats deterministically") {
    const auto out1 = std::filesystem::temp_directory_path() / "cli_fx1";
    const auto out2 = std::filesystem::temp_directory_path() / "cli_fx2";
    CHECK(run_cli("gen-fixture --out " + out1.string()).exit_code == 0);
    CHECK(run_cli("gen-fixture --out " + out2.string() + " --seed 42").exit_code == 0);

    auto slurp = [](const std::filesystem::path& p) {
        std::ifstream in(p, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in), {});
    };
    CHECK(slurp(out1 / "reviews.csv") == slurp(out2 / "reviews.csv"));
    CHECK(slurp(out1 / "reviews.jsonl") == slurp(out2 / "reviews.jsonl"));
    CHECK(run_cli("gen-fixture --out " + out1.string() + " --seed 9").exit_code == 0);
    CHECK(slurp(out1 / "reviews.csv") != slurp(out2 / "reviews.csv"));
}

TEST_CASE("cli: config file supplies defaults, flags win") {
    const auto out_dir = std::filesystem::temp_directory_path() / "cli_cfg_out";
    std::filesystem::remove_all(out_dir);
    const auto config = write_temp(
        "cli_config.json",
        std::string("{\"input\": \"") + fixture("reviews_200.csv").string() +
            "\", \"format\": \"csv\", \"k\": 5, \"out\": \"" + out_dir.string() +
            "\", \"emit\": [\"json\"]}");

    const CliResult from_file = run_cli("analyze --config " + config.string());
    CHECK(from_file.exit_code == 0);
    CHECK(std::filesystem::exists(out_dir / "report.json"));
    CHECK(!std::filesystem::exists(out_dir / "report.md"));

    // the same file through the environment variable, with a flag override
    const auto out2 = std::filesystem::temp_directory_path() / "cli_cfg_out2";
    std::filesystem::remove_all(out2);
    setenv("REVMINE_CONFIG", config.string().c_str(), 1);
    const CliResult from_env = run_cli("analyze --out " + out2.string());
    unsetenv("REVMINE_CONFIG");
    CHECK(from_env.exit_code == 0);
    CHECK(std::filesystem::exists(out2 / "report.json"));
}
