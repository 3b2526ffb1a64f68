#include "revmine/ngram.hpp"

#include <algorithm>

#include "revmine/errors.hpp"

namespace revmine {
namespace {

// End of the key range sharing the given prefix + ' '. '!' is the byte
// right after ' '; tokens contain no bytes below '!'.
std::string prefix_range_end(std::string prefix) {
    prefix += '!';
    return prefix;
}

std::uint64_t prefix_sum(const std::map<std::string, std::uint64_t>& counts,
                         const std::string& prefix) {
    std::uint64_t sum = 0;
    auto it = counts.lower_bound(prefix + ' ');
    const std::string end = prefix_range_end(prefix);
    for (; it != counts.end() && it->first < end; ++it) sum += it->second;
    return sum;
}

std::uint64_t lookup(const std::map<std::string, std::uint64_t>& counts,
                     const std::string& key) {
    auto it = counts.find(key);
    return it == counts.end() ? 0 : it->second;
}

}  // namespace

std::string join_ngram(std::span<const std::string> tokens) {
    std::string key;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) key += ' ';
        key += tokens[i];
    }
    return key;
}

std::vector<std::string> split_ngram(std::string_view key) {
    std::vector<std::string> tokens;
    std::size_t pos = 0;
    while (pos <= key.size()) {
        std::size_t sp = key.find(' ', pos);
        if (sp == std::string_view::npos) sp = key.size();
        tokens.emplace_back(key.substr(pos, sp - pos));
        pos = sp + 1;
    }
    return tokens;
}

NgramTable build_table(std::span<const ProcessedSentence> sentences) {
    NgramTable table;
    for (const ProcessedSentence& sentence : sentences) {
        const std::vector<std::string>& t = sentence.tokens;
        const std::size_t n = t.size();
        ++table.sentence_count;
        table.total_tokens += n;
        if (n >= 2) table.total_bigram_positions += n - 1;
        if (n >= 3) table.total_trigram_positions += n - 2;
        for (std::size_t i = 0; i < n; ++i) {
            ++table.unigrams[t[i]];
            if (i + 1 < n) ++table.bigrams[t[i] + ' ' + t[i + 1]];
            if (i + 2 < n) ++table.trigrams[t[i] + ' ' + t[i + 1] + ' ' + t[i + 2]];
        }
    }
    return table;
}

NgramTable merge(const NgramTable& a, const NgramTable& b) {
    NgramTable out = a;
    for (const auto& [key, count] : b.unigrams) out.unigrams[key] += count;
    for (const auto& [key, count] : b.bigrams) out.bigrams[key] += count;
    for (const auto& [key, count] : b.trigrams) out.trigrams[key] += count;
    out.total_tokens += b.total_tokens;
    out.total_bigram_positions += b.total_bigram_positions;
    out.total_trigram_positions += b.total_trigram_positions;
    out.sentence_count += b.sentence_count;
    return out;
}

std::uint64_t bigram_context_total(const NgramTable& table, std::string_view w_prev) {
    return prefix_sum(table.bigrams, std::string(w_prev));
}

std::uint64_t trigram_context_total(const NgramTable& table, std::string_view w_2,
                                    std::string_view w_1) {
    return prefix_sum(table.trigrams, std::string(w_2) + ' ' + std::string(w_1));
}

double prob_unigram(const NgramTable& table, std::string_view w) {
    if (table.total_tokens == 0)
        throw UndefinedModelError("unigram probability on an empty table");
    return static_cast<double>(lookup(table.unigrams, std::string(w))) /
           static_cast<double>(table.total_tokens);
}

double cond_prob_bigram(const NgramTable& table, std::string_view w_prev,
                        std::string_view w) {
    const std::uint64_t denom = bigram_context_total(table, w_prev);
    if (denom == 0)
        throw UnseenHistoryError("no observed continuation for history \"" +
                                 std::string(w_prev) + "\"");
    const std::string key = std::string(w_prev) + ' ' + std::string(w);
    return static_cast<double>(lookup(table.bigrams, key)) /
           static_cast<double>(denom);
}

double cond_prob_trigram(const NgramTable& table, std::string_view w_2,
                         std::string_view w_1, std::string_view w) {
    const std::uint64_t denom = trigram_context_total(table, w_2, w_1);
    if (denom == 0)
        throw UnseenHistoryError("no observed continuation for history \"" +
                                 std::string(w_2) + " " + std::string(w_1) + "\"");
    const std::string key =
        std::string(w_2) + ' ' + std::string(w_1) + ' ' + std::string(w);
    return static_cast<double>(lookup(table.trigrams, key)) /
           static_cast<double>(denom);
}

double joint_prob(const NgramTable& table, std::span<const std::string> words,
                  ChainOrder order) {
    if (words.empty())
        throw ValidationError("joint probability of an empty sequence");
    double p = prob_unigram(table, words[0]);
    for (std::size_t i = 1; i < words.size(); ++i) {
        try {
            if (order == ChainOrder::bigram || i == 1)
                p *= cond_prob_bigram(table, words[i - 1], words[i]);
            else
                p *= cond_prob_trigram(table, words[i - 2], words[i - 1], words[i]);
        } catch (const UnseenHistoryError& e) {
            throw UnseenHistoryError(
                std::string(e.what()) + " (position " + std::to_string(i) + ")", i);
        }
    }
    return p;
}

std::vector<RankedNgram> top_ngrams(const NgramTable& table, int n, std::size_t k,
                                    std::uint64_t min_count) {
    const std::map<std::string, std::uint64_t>* counts = nullptr;
    switch (n) {
        case 1: counts = &table.unigrams; break;
        case 2: counts = &table.bigrams; break;
        case 3: counts = &table.trigrams; break;
        default: throw ValidationError("n-gram order must be 1, 2 or 3");
    }
    std::vector<RankedNgram> ranked;
    for (const auto& [key, count] : *counts)
        if (count >= min_count) ranked.push_back({key, count});
    // map iteration is key-ascending, so a stable sort keeps ties lexicographic
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const RankedNgram& a, const RankedNgram& b) {
                         return a.count > b.count;
                     });
    if (ranked.size() > k) ranked.resize(k);
    return ranked;
}

nlohmann::json table_to_json(const NgramTable& table) {
    nlohmann::json j;
    j["sentence_count"] = table.sentence_count;
    j["total_tokens"] = table.total_tokens;
    j["total_bigram_positions"] = table.total_bigram_positions;
    j["total_trigram_positions"] = table.total_trigram_positions;
    j["unigrams"] = table.unigrams;
    j["bigrams"] = table.bigrams;
    j["trigrams"] = table.trigrams;
    return j;
}

std::string table_to_canonical_text(const NgramTable& table) {
    return table_to_json(table).dump(2) + "\n";
}

}  // namespace revmine
