#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "revmine/corpus.hpp"

namespace revmine {

enum class StemmerKind { porter, none };

struct PipelineConfig {
    std::set<std::string> stop_words;               // lowercase surface forms
    StemmerKind stemmer = StemmerKind::porter;
    int min_token_length = 1;                       // counted in codepoints
    std::set<std::string> sentence_abbreviations;   // lowercase, with dots

    // Bundled defaults: English stop words, common abbreviations,
    // Porter stemming, min_token_length 2.
    static PipelineConfig defaults();

    bool operator==(const PipelineConfig&) const = default;
};

// One sentence after the full pipeline. sentence_index is the sentence's
// position in the original split, so indices may have gaps where sentences
// were dropped.
struct ProcessedSentence {
    std::string review_id;
    int sentence_index = 0;
    std::vector<std::string> tokens;
    std::string raw;

    bool operator==(const ProcessedSentence&) const = default;
};

// Word-list file format shared by stop words and abbreviations:
// UTF-8, one entry per line, '#' starts a comment.
std::set<std::string> parse_word_list(std::string_view content);
std::set<std::string> load_word_list(const std::filesystem::path& path);

// Splits after '.', '!' or '?' followed by whitespace, except after known
// abbreviations. Never returns an empty sentence; a text without
// terminators comes back whole.
std::vector<std::string> split_sentences(const std::string& text,
                                         const PipelineConfig& config);

// Maximal runs of letters/digits plus apostrophes flanked by letters.
// Hyphens and all other punctuation separate. Case is preserved.
std::vector<std::string> tokenize(const std::string& sentence);

// Applies the configured stemmer; `none` is the identity.
std::string stem(const std::string& token, StemmerKind kind);

// Full per-review pipeline: split, tokenize, lowercase, drop stop words,
// drop short tokens, stem. Sentences that end up empty are dropped, as are
// repeated token sequences within one review (first kept).
std::vector<ProcessedSentence> preprocess(const ReviewRecord& record,
                                          const PipelineConfig& config);

}  // namespace revmine
