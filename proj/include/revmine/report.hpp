#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "revmine/insights.hpp"
#include "revmine/ngram.hpp"
#include "revmine/textprep.hpp"

namespace revmine {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class InputFormat { csv, jsonl };

struct RunConfig {
    std::filesystem::path input;
    InputFormat format = InputFormat::csv;
    bool csv_has_header = true;

    PipelineConfig pipeline = PipelineConfig::defaults();
    std::optional<std::filesystem::path> topic_dictionary_path;
    std::optional<std::filesystem::path> seven_s_mapping_path;

    std::size_t k = 25;
    std::uint64_t min_count = 3;
    double strength_threshold = 0.2;
    double weakness_threshold = -0.2;

    std::filesystem::path out_dir = "report";
    bool emit_json = true;
    bool emit_markdown = true;
    int threads = 0;  // 0 = hardware concurrency

    // Throws ConfigError when constraints are violated.
    void validate() const;
};

// Analysis-affecting parameters only: no paths, formats, thread counts or
// output options, so equivalent inputs give byte-identical reports.
struct ConfigEcho {
    std::size_t k = 25;
    std::uint64_t min_count = 3;
    std::string stemmer = "porter";
    int min_token_length = 2;
    double strength_threshold = 0.2;
    double weakness_threshold = -0.2;
    std::string stop_words_digest;
    std::string abbreviations_digest;
    std::string topic_dictionary_digest;
    std::string seven_s_mapping_digest;

    bool operator==(const ConfigEcho&) const = default;
};

struct SegmentReport {
    std::uint64_t sentence_count = 0;
    std::uint64_t token_count = 0;
    std::vector<RankedNgram> top_bigrams;
    std::vector<RankedNgram> top_trigrams;

    bool operator==(const SegmentReport&) const = default;
};

struct ReportTopic {
    std::string name;
    std::string description;
    std::vector<MatchedNgram> matched_ngrams;
    std::array<double, 3> freq_per_kilosentence = {0.0, 0.0, 0.0};
    double polarity = 0.0;
    SentimentClass dominant_class = SentimentClass::Neutral;

    bool operator==(const ReportTopic&) const = default;
};

struct Report {
    std::string version;
    ConfigEcho config;
    std::string input_digest;  // digest of the canonical kept records
    std::uint64_t records_kept = 0;
    std::uint64_t records_rejected = 0;
    std::map<std::string, std::uint64_t> rejection_reasons;
    std::array<std::uint64_t, 3> sentences_per_segment = {0, 0, 0};
    std::array<SegmentReport, 3> segments;
    std::vector<ReportTopic> topics;  // name-sorted
    SevenSAssessment seven_s;
    std::vector<std::string> caveats;

    bool operator==(const Report&) const = default;
};

// Full pipeline: ingest, dedup, preprocess, segment, count, extract, map.
// Deterministic for a given input + config regardless of thread count.
Report run_pipeline(const RunConfig& config);

// Canonical JSON: sorted keys, rates and polarities to 6 decimal places.
nlohmann::json report_to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);
std::string report_json_bytes(const Report& report);

std::string render_markdown(const Report& report);

// Writes report.json / report.md per the emit flags; creates out_dir.
void write_report_files(const Report& report, const RunConfig& config);

}  // namespace revmine
