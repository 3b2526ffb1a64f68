#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "revmine/corpus.hpp"
#include "revmine/ngram.hpp"
#include "revmine/textprep.hpp"

namespace revmine {

enum class SentimentClass { Negative = 0, Neutral = 1, Positive = 2 };

constexpr std::array<SentimentClass, 3> kSentimentClasses = {
    SentimentClass::Negative, SentimentClass::Neutral, SentimentClass::Positive};

const char* to_string(SentimentClass c);
std::size_t class_index(SentimentClass c);

// 1,2 -> Negative; 3 -> Neutral; 4,5 -> Positive.
SentimentClass classify_rating(int rating);

struct SegmentedSentences {
    std::array<std::vector<ProcessedSentence>, 3> by_class;

    std::vector<ProcessedSentence>& of(SentimentClass c) {
        return by_class[class_index(c)];
    }
    const std::vector<ProcessedSentence>& of(SentimentClass c) const {
        return by_class[class_index(c)];
    }
};

// Routes each sentence to the class of its parent review's rating. Throws
// InternalError on a review_id that does not resolve in the corpus.
SegmentedSentences segment(std::span<const ProcessedSentence> sentences,
                           const Corpus& corpus);

struct TopicEntry {
    std::vector<std::string> seeds;  // surface phrases, 1-3 words
    std::string description;

    bool operator==(const TopicEntry&) const = default;
};

struct TopicDictionary {
    std::map<std::string, TopicEntry> topics;

    static TopicDictionary builtin_default();
    static TopicDictionary from_json(const nlohmann::json& j);
    static TopicDictionary load(const std::filesystem::path& path);

    bool operator==(const TopicDictionary&) const = default;
};

struct MatchedNgram {
    std::string ngram;  // space-joined, post-pipeline tokens
    SentimentClass segment = SentimentClass::Negative;
    std::uint64_t count = 0;

    bool operator==(const MatchedNgram&) const = default;
};

struct TopicProfile {
    std::string topic;
    std::string description;
    std::vector<MatchedNgram> matched_ngrams;
    std::array<double, 3> freq_per_kilosentence = {0.0, 0.0, 0.0};
    double polarity = 0.0;  // (p - n) / (p + n) over Positive/Negative rates
    SentimentClass dominant_class = SentimentClass::Neutral;

    bool operator==(const TopicProfile&) const = default;
};

struct ExtractConfig {
    std::size_t k = 25;            // top-n-gram cutoff per order
    std::uint64_t min_count = 3;
};

// Candidate n-grams per segment are the top-k bigrams and trigrams plus all
// unigrams with count >= min_count. An n-gram matches a topic when it
// contains one of the topic's pipeline-normalized seed phrases as a
// contiguous subsequence. Topics with no Positive/Negative evidence are
// omitted. Output is sorted by topic name.
std::vector<TopicProfile> extract_topics(const std::array<NgramTable, 3>& tables,
                                         const TopicDictionary& dict,
                                         const ExtractConfig& config,
                                         const PipelineConfig& pipeline);

inline constexpr std::array<const char*, 7> kSevenSElements = {
    "Strategy", "Structure", "Systems", "SharedValues", "Skills", "Style", "Staff"};

bool is_hard_element(const std::string& element);

enum class Verdict { strength, weakness, mixed, no_evidence };
const char* to_string(Verdict v);

struct SevenSConfig {
    std::map<std::string, std::string> topic_to_element;
    double strength_threshold = 0.2;
    double weakness_threshold = -0.2;

    static SevenSConfig builtin_default();
    static SevenSConfig from_json(const nlohmann::json& j);
    static SevenSConfig load(const std::filesystem::path& path);
};

struct ElementAssessment {
    bool hard = false;
    Verdict verdict = Verdict::no_evidence;
    std::vector<std::string> topics;  // member topic names, sorted

    bool operator==(const ElementAssessment&) const = default;
};

struct SevenSAssessment {
    std::map<std::string, ElementAssessment> elements;  // all seven, always
    std::vector<std::string> unmapped_topics;           // sorted

    bool operator==(const SevenSAssessment&) const = default;
};

// strength when every member polarity exceeds the strength threshold,
// weakness when every one is below the weakness threshold, mixed otherwise;
// no_evidence for elements without surviving member topics.
SevenSAssessment map_7s(const std::vector<TopicProfile>& profiles,
                        const SevenSConfig& config);

// Mapping entries must reference dictionary topics and canonical element
// names; throws ConfigError otherwise.
void validate_mapping(const TopicDictionary& dict, const SevenSConfig& config);

}  // namespace revmine
