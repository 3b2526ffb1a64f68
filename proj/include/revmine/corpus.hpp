#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace revmine {

struct ReviewRecord {
    std::string review_id;
    int rating = 0;  // 1..5
    std::string text;
    std::optional<std::string> source;
    std::optional<std::string> date;

    bool operator==(const ReviewRecord&) const = default;
};

struct RejectedRow {
    std::string raw;      // offending line / serialized row
    std::string reason;

    bool operator==(const RejectedRow&) const = default;
};

// Loaded review set. records kept + rejected always accounts for every
// input row, and review_ids are unique among records.
struct Corpus {
    std::vector<ReviewRecord> records;
    std::vector<RejectedRow> rejected;

    bool operator==(const Corpus&) const = default;
};

// CSV with RFC 4180 quoting, columns review_id,rating,text[,source[,date]].
// Malformed rows land in `rejected`; throws IoError if the file cannot be
// read and EmptyCorpusError if no row survives.
Corpus ingest_csv(const std::filesystem::path& path, bool has_header);

// Newline-delimited JSON objects with the same keys and semantics.
Corpus ingest_jsonl(const std::filesystem::path& path);

// Key under which two records count as duplicates: rating plus text
// normalized by trimming, whitespace collapsing and casefolding.
std::string dedup_key(const ReviewRecord& record);

// Keeps the first record of every duplicate group, moves later ones to
// `rejected` with reason "duplicate". Idempotent.
Corpus dedup(Corpus corpus);

}  // namespace revmine
