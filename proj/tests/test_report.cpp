#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "revmine/errors.hpp"
#include "revmine/report.hpp"

using namespace revmine;

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::filesystem::path fixture(const char* rel) {
    return std::filesystem::path(REVMINE_SOURCE_DIR) / "tests" / "fixtures" / rel;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    return path;
}

RunConfig fixture_config() {
    RunConfig config;
    config.input = fixture("reviews_200.csv");
    config.format = InputFormat::csv;
    return config;
}

}  // namespace

TEST_CASE("golden report: fixture run reproduces committed bytes") {
    const Report report = run_pipeline(fixture_config());
    CHECK(report_json_bytes(report) == slurp(fixture("golden/report.json")));
    CHECK(render_markdown(report) == slurp(fixture("golden/report.md")));
}

TEST_CASE("report JSON round-trips to an equal value") {
    const Report report = run_pipeline(fixture_config());
    const Report back = report_from_json(report_to_json(report));
    CHECK(back == report);
    CHECK(report_json_bytes(back) == report_json_bytes(report));
}

TEST_CASE("determinism: thread counts do not change the report") {
    RunConfig one = fixture_config();
    one.threads = 1;
    RunConfig many = fixture_config();
    many.threads = 8;
    CHECK(report_json_bytes(run_pipeline(one)) ==
          report_json_bytes(run_pipeline(many)));
}

TEST_CASE("loader equivalence carries through to identical reports") {
    RunConfig jsonl = fixture_config();
    jsonl.input = fixture("reviews_200.jsonl");
    jsonl.format = InputFormat::jsonl;
    CHECK(report_json_bytes(run_pipeline(jsonl)) ==
          report_json_bytes(run_pipeline(fixture_config())));
}

TEST_CASE("report self-consistency") {
    const Report report = run_pipeline(fixture_config());

    CHECK(report.records_kept == 188);
    CHECK(report.records_rejected == 12);
    CHECK(report.rejection_reasons.at("duplicate") == 12);

    for (std::size_t ci = 0; ci < 3; ++ci)
        CHECK(report.sentences_per_segment[ci] == report.segments[ci].sentence_count);

    for (const ReportTopic& topic : report.topics) {
        CHECK(topic.polarity >= -1.0);
        CHECK(topic.polarity <= 1.0);
        for (double rate : topic.freq_per_kilosentence) CHECK(rate >= 0.0);
    }

    // every element always present
    CHECK(report.seven_s.elements.size() == 7);
}

TEST_CASE("neutral-only corpus: empty sections, everything no-evidence") {
    const auto path = write_temp("neutral.csv",
                                 "review_id,rating,text\n"
                                 "n1,3,The ride was fine overall.\n"
                                 "n2,3,Nothing special to report today.\n");
    RunConfig config;
    config.input = path;
    const Report report = run_pipeline(config);

    CHECK(report.segments[0].sentence_count == 0);
    CHECK(report.segments[2].sentence_count == 0);
    CHECK(report.segments[1].sentence_count > 0);
    CHECK(report.segments[0].top_bigrams.empty());
    CHECK(report.segments[2].top_bigrams.empty());
    CHECK(report.topics.empty());  // no Positive/Negative evidence anywhere
    for (const auto& [element, a] : report.seven_s.elements)
        CHECK(a.verdict == Verdict::no_evidence);

    // renders without throwing, all seven rows present
    const std::string md = render_markdown(report);
    CHECK(md.find("| Style | soft | no-evidence | - |") != std::string::npos);
}

TEST_CASE("markdown lists one row per topic") {
    const auto path = write_temp("single_topic.csv",
                                 "review_id,rating,text\n"
                                 "p1,5,Friendly staff again and again.\n"
                                 "p2,5,Friendly staff made it easy.\n"
                                 "p3,5,Friendly staff everywhere here.\n"
                                 "n1,1,Horrible noise anyway.\n");
    RunConfig config;
    config.input = path;
    config.min_count = 3;
    const Report report = run_pipeline(config);
    REQUIRE(report.topics.size() == 1);
    CHECK(report.topics[0].name == "Staff");

    const std::string md = render_markdown(report);
    std::size_t rows = 0;
    std::size_t pos = 0;
    while ((pos = md.find("\n| Staff", pos)) != std::string::npos) {
        ++rows;
        pos += 1;
    }
    // one row in Key Topics and one in the 7S grid
    CHECK(rows == 2);
}

TEST_CASE("config echo excludes paths and threads but pins parameters") {
    const Report report = run_pipeline(fixture_config());
    CHECK(report.config.k == 25);
    CHECK(report.config.min_count == 3);
    CHECK(report.config.stemmer == "porter");
    CHECK(report.config.min_token_length == 2);
    CHECK(report.config.strength_threshold == doctest::Approx(0.2));
    CHECK(report.config.stop_words_digest.substr(0, 8) == "fnv1a64:");
    const nlohmann::json j = report_to_json(report);
    CHECK(!j["config"].contains("input"));
    CHECK(!j["config"].contains("threads"));
    CHECK(!j["config"].contains("out"));
}

TEST_CASE("run config validation") {
    RunConfig config = fixture_config();
    config.k = 0;
    CHECK_THROWS_AS(run_pipeline(config), ConfigError);
    config = fixture_config();
    config.min_count = 0;
    CHECK_THROWS_AS(run_pipeline(config), ConfigError);
    config = fixture_config();
    config.emit_json = false;
    config.emit_markdown = false;
    CHECK_THROWS_AS(run_pipeline(config), ConfigError);
    config = fixture_config();
    config.pipeline.min_token_length = 0;
    CHECK_THROWS_AS(run_pipeline(config), ConfigError);
}

TEST_CASE("pipeline errors surface as typed exceptions") {
    RunConfig config;
    config.input = "/nonexistent/input.csv";
    CHECK_THROWS_AS(run_pipeline(config), IoError);

    config = fixture_config();
    config.topic_dictionary_path = write_temp("bad_dict.json", "{not json");
    CHECK_THROWS_AS(run_pipeline(config), ConfigError);

    config = fixture_config();
    config.seven_s_mapping_path =
        write_temp("bad_map.json", R"({"Staff": "NotAnElement"})");
    CHECK_THROWS_AS(run_pipeline(config), ConfigError);

    config = fixture_config();
    config.seven_s_mapping_path =
        write_temp("ghost_map.json", R"({"GhostTopic": "Staff"})");
    CHECK_THROWS_AS(run_pipeline(config), ConfigError);
}

TEST_CASE("write_report_files honors emit flags") {
    RunConfig config = fixture_config();
    config.out_dir = std::filesystem::temp_directory_path() / "revmine_emit_test";
    config.emit_markdown = false;
    std::filesystem::remove_all(config.out_dir);
    const Report report = run_pipeline(config);
    write_report_files(report, config);
    CHECK(std::filesystem::exists(config.out_dir / "report.json"));
    CHECK(!std::filesystem::exists(config.out_dir / "report.md"));
}
