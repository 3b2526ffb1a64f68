#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "revmine/corpus.hpp"
#include "revmine/errors.hpp"

using namespace revmine;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    return path;
}

std::filesystem::path fixture(const char* rel) {
    return std::filesystem::path(REVMINE_SOURCE_DIR) / "tests" / "fixtures" / rel;
}

}  // namespace

TEST_CASE("csv: well-formed rows become records in file order") {
    const auto path = write_temp(
        "corpus_basic.csv",
        "review_id,rating,text,source,date\n"
        "r1,5,Great pilot and friendly staff.,,\n"
        "r2,1,\"Long wait, no updates.\",heliview,2021-03-04\n");
    const Corpus corpus = ingest_csv(path, true);
    REQUIRE(corpus.records.size() == 2);
    CHECK(corpus.rejected.empty());
    CHECK(corpus.records[0].review_id == "r1");
    CHECK(corpus.records[0].rating == 5);
    CHECK(corpus.records[0].text == "Great pilot and friendly staff.");
    CHECK(!corpus.records[0].source.has_value());
    CHECK(!corpus.records[0].date.has_value());
    CHECK(corpus.records[1].text == "Long wait, no updates.");
    CHECK(corpus.records[1].source == "heliview");
    CHECK(corpus.records[1].date == "2021-03-04");
}

TEST_CASE("csv: malformed rows are rejected with reasons, order preserved") {
    const auto path = write_temp("corpus_bad.csv",
                                 "ok1,4,fine trip\n"
                                 "r2,7,fine\n"
                                 "r3,two,fine\n"
                                 "r4,3,\n"
                                 ",3,fine\n"
                                 "ok1,3,echoed id\n"
                                 "r6,3\n"
                                 "ok2,2,second good row\n");
    const Corpus corpus = ingest_csv(path, false);
    CHECK(corpus.records.size() == 2);
    REQUIRE(corpus.rejected.size() == 6);
    CHECK(corpus.rejected[0].reason == "rating out of range");
    CHECK(corpus.rejected[1].reason == "rating not an integer");
    CHECK(corpus.rejected[2].reason == "missing text");
    CHECK(corpus.rejected[3].reason == "missing review_id");
    CHECK(corpus.rejected[4].reason == "duplicate review_id");
    CHECK(corpus.rejected[5].reason == "wrong column count");
    // conservation: kept + rejected = input rows
    CHECK(corpus.records.size() + corpus.rejected.size() == 8);
}

TEST_CASE("csv: RFC 4180 quoting with embedded commas, quotes and newlines") {
    const auto path = write_temp(
        "corpus_quotes.csv",
        "r1,5,\"He said \"\"wow\"\", twice.\",,\n"
        "r2,4,\"Line one.\nLine two.\",src,\n");
    const Corpus corpus = ingest_csv(path, false);
    REQUIRE(corpus.records.size() == 2);
    CHECK(corpus.records[0].text == "He said \"wow\", twice.");
    CHECK(corpus.records[1].text == "Line one.\nLine two.");
}

TEST_CASE("csv: invalid utf-8 rejects the row") {
    const auto path = write_temp("corpus_utf8.csv",
                                 "r1,5,fine ride\n"
                                 "r2,4,bad \xFF byte\n");
    const Corpus corpus = ingest_csv(path, false);
    CHECK(corpus.records.size() == 1);
    REQUIRE(corpus.rejected.size() == 1);
    CHECK(corpus.rejected[0].reason == "invalid utf-8");
}

TEST_CASE("csv: fatal errors") {
    CHECK_THROWS_AS(ingest_csv("/nonexistent/nowhere.csv", true), IoError);
    const auto path = write_temp("corpus_empty.csv", "review_id,rating,text\nr1,9,x\n");
    CHECK_THROWS_AS(ingest_csv(path, true), EmptyCorpusError);
}

TEST_CASE("jsonl: object rows, missing text, parse errors") {
    const auto path = write_temp(
        "corpus.jsonl",
        "{\"review_id\":\"a\",\"rating\":1,\"text\":\"Long wait.\"}\n"
        "{\"review_id\":\"b\",\"rating\":2}\n"
        "{not json}\n"
        "{\"review_id\":\"c\",\"rating\":4.5,\"text\":\"x\"}\n");
    const Corpus corpus = ingest_jsonl(path);
    REQUIRE(corpus.records.size() == 1);
    CHECK(corpus.records[0].review_id == "a");
    CHECK(corpus.records[0].rating == 1);
    REQUIRE(corpus.rejected.size() == 3);
    CHECK(corpus.rejected[0].reason == "missing text");
    CHECK(corpus.rejected[1].reason == "parse error");
    CHECK(corpus.rejected[2].reason == "rating not an integer");
}

TEST_CASE("loader equivalence: csv and jsonl yield equal corpora") {
    const auto csv = write_temp("pair.csv",
                                "review_id,rating,text,source,date\n"
                                "r1,5,\"Great, truly.\",heliview,2020-01-02\n"
                                "r2,2,Too long a wait.,,\n");
    const auto jsonl = write_temp(
        "pair.jsonl",
        "{\"review_id\":\"r1\",\"rating\":5,\"text\":\"Great, truly.\","
        "\"source\":\"heliview\",\"date\":\"2020-01-02\"}\n"
        "{\"review_id\":\"r2\",\"rating\":2,\"text\":\"Too long a wait.\"}\n");
    CHECK(ingest_csv(csv, true) == ingest_jsonl(jsonl));
}

TEST_CASE("dedup: rule, idempotence, order preservation") {
    Corpus corpus;
    corpus.records = {
        {"a", 5, "Friendly  staff!", {}, {}},
        {"b", 5, "friendly staff!", {}, {}},     // same after normalization
        {"c", 2, "friendly staff!", {}, {}},     // different rating: kept
        {"d", 4, "Another trip.", {}, {}},
        {"e", 5, " Friendly staff! ", {}, {}},   // same again
    };
    const Corpus deduped = dedup(corpus);
    REQUIRE(deduped.records.size() == 3);
    CHECK(deduped.records[0].review_id == "a");
    CHECK(deduped.records[1].review_id == "c");
    CHECK(deduped.records[2].review_id == "d");
    REQUIRE(deduped.rejected.size() == 2);
    CHECK(deduped.rejected[0].reason == "duplicate");

    CHECK(dedup(deduped) == deduped);  // idempotent

    // conservation through dedup
    CHECK(deduped.records.size() + deduped.rejected.size() == corpus.records.size());
}

TEST_CASE("dedup fixture: rows 4 and 9 duplicate row 3, 8 survive") {
    Corpus corpus = ingest_csv(fixture("dup10.csv"), true);
    corpus = dedup(std::move(corpus));
    CHECK(corpus.records.size() == 8);
    REQUIRE(corpus.rejected.size() == 2);
    for (const RejectedRow& row : corpus.rejected)
        CHECK(row.reason.substr(0, 9) == "duplicate");
}

TEST_CASE("header flag controls first-row handling") {
    const auto path = write_temp("hdr.csv", "r1,5,first row is data\n");
    CHECK(ingest_csv(path, false).records.size() == 1);
    const auto with = write_temp("hdr2.csv",
                                 "review_id,rating,text\nr1,5,real row\n");
    const Corpus corpus = ingest_csv(with, true);
    CHECK(corpus.records.size() == 1);
    CHECK(corpus.records[0].text == "real row");
}
