#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "revmine/textprep.hpp"

namespace revmine {

// Exact within-sentence n-gram counts for one corpus segment. Bigram and
// trigram keys are space-joined token sequences; tokens never contain
// spaces, so joined-key order equals tokenwise order. Counts are exact
// integers; probabilities are derived at query time, never stored.
struct NgramTable {
    std::map<std::string, std::uint64_t> unigrams;
    std::map<std::string, std::uint64_t> bigrams;
    std::map<std::string, std::uint64_t> trigrams;
    std::uint64_t total_tokens = 0;
    std::uint64_t total_bigram_positions = 0;
    std::uint64_t total_trigram_positions = 0;
    std::uint64_t sentence_count = 0;

    bool operator==(const NgramTable&) const = default;
};

std::string join_ngram(std::span<const std::string> tokens);
std::vector<std::string> split_ngram(std::string_view key);

// Counts every contiguous 1-, 2- and 3-gram inside each sentence; n-grams
// never cross sentence boundaries and no padding symbols are added.
NgramTable build_table(std::span<const ProcessedSentence> sentences);

// Pointwise sum. merge(build(A), build(B)) == build(A then B) for disjoint
// sentence sets, so counting can fan out over shards in any order.
NgramTable merge(const NgramTable& a, const NgramTable& b);

// Total occurrences of bigrams starting with `w_prev` (the denominator of
// the bigram conditional); 0 when the history never continues.
std::uint64_t bigram_context_total(const NgramTable& table, std::string_view w_prev);
std::uint64_t trigram_context_total(const NgramTable& table, std::string_view w_2,
                                    std::string_view w_1);

// count(w) / total_tokens; 0 for unseen w. Throws UndefinedModelError on an
// empty table.
double prob_unigram(const NgramTable& table, std::string_view w);

// Pure MLE count ratios, no smoothing. A history with zero observed
// continuations throws UnseenHistoryError; a seen history with an unseen
// continuation yields 0.
double cond_prob_bigram(const NgramTable& table, std::string_view w_prev,
                        std::string_view w);
double cond_prob_trigram(const NgramTable& table, std::string_view w_2,
                         std::string_view w_1, std::string_view w);

enum class ChainOrder { bigram, trigram };

// Chain-rule product under the Markov assumption of the given order:
// P(w1) * prod P(w_i | last 1 or 2 words). Errors name the failing
// position via UnseenHistoryError::position().
double joint_prob(const NgramTable& table, std::span<const std::string> words,
                  ChainOrder order);

struct RankedNgram {
    std::string ngram;  // space-joined
    std::uint64_t count = 0;

    bool operator==(const RankedNgram&) const = default;
};

// The k most frequent n-grams (n = 1, 2 or 3) with count >= min_count,
// count descending, ties lexicographic.
std::vector<RankedNgram> top_ngrams(const NgramTable& table, int n, std::size_t k,
                                    std::uint64_t min_count);

// Canonical serialization: sorted keys, fixed layout; equal tables produce
// identical bytes.
nlohmann::json table_to_json(const NgramTable& table);
std::string table_to_canonical_text(const NgramTable& table);

}  // namespace revmine
