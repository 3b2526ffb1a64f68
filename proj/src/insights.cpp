#include "revmine/insights.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_map>

#include "default_data.hpp"
#include "revmine/errors.hpp"
#include "revmine/text_util.hpp"

namespace revmine {
namespace {

nlohmann::json parse_json_file(const std::filesystem::path& path,
                               const char* what) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(std::string("cannot open ") + what + " " + path.string());
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded())
        throw ConfigError(std::string("invalid JSON in ") + what + " " +
                          path.string());
    return j;
}

// Seeds go through the same pipeline as corpus text so both sides share one
// normalization. Seeds that normalize to nothing are ignored.
std::vector<std::vector<std::string>> normalize_seeds(const TopicEntry& entry,
                                                      const PipelineConfig& pipeline) {
    std::vector<std::vector<std::string>> out;
    for (const std::string& seed : entry.seeds) {
        std::vector<std::string> tokens;
        for (const std::string& raw : tokenize(seed)) {
            std::string token = lowercase(raw);
            if (pipeline.stop_words.count(token)) continue;
            std::size_t cps = 0;
            for (char c : token)
                if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++cps;
            if (cps < static_cast<std::size_t>(pipeline.min_token_length)) continue;
            tokens.push_back(stem(token, pipeline.stemmer));
        }
        if (!tokens.empty() && tokens.size() <= 3) out.push_back(std::move(tokens));
    }
    return out;
}

bool contains_subsequence(const std::vector<std::string>& ngram,
                          const std::vector<std::string>& seed) {
    if (seed.size() > ngram.size()) return false;
    for (std::size_t start = 0; start + seed.size() <= ngram.size(); ++start) {
        bool all = true;
        for (std::size_t i = 0; i < seed.size(); ++i)
            if (ngram[start + i] != seed[i]) {
                all = false;
                break;
            }
        if (all) return true;
    }
    return false;
}

}  // namespace

const char* to_string(SentimentClass c) {
    switch (c) {
        case SentimentClass::Negative: return "negative";
        case SentimentClass::Neutral: return "neutral";
        case SentimentClass::Positive: return "positive";
    }
    return "?";
}

std::size_t class_index(SentimentClass c) { return static_cast<std::size_t>(c); }

SentimentClass classify_rating(int rating) {
    switch (rating) {
        case 1:
        case 2: return SentimentClass::Negative;
        case 3: return SentimentClass::Neutral;
        case 4:
        case 5: return SentimentClass::Positive;
    }
    throw ValidationError("rating out of range: " + std::to_string(rating));
}

SegmentedSentences segment(std::span<const ProcessedSentence> sentences,
                           const Corpus& corpus) {
    std::unordered_map<std::string, int> rating_of;
    rating_of.reserve(corpus.records.size());
    for (const ReviewRecord& rec : corpus.records) rating_of[rec.review_id] = rec.rating;

    SegmentedSentences out;
    for (const ProcessedSentence& sentence : sentences) {
        auto it = rating_of.find(sentence.review_id);
        if (it == rating_of.end())
            throw InternalError("sentence references unknown review \"" +
                                sentence.review_id + "\"");
        out.of(classify_rating(it->second)).push_back(sentence);
    }
    return out;
}

TopicDictionary TopicDictionary::builtin_default() {
    return from_json(nlohmann::json::parse(default_data::topics_json));
}

TopicDictionary TopicDictionary::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("topics") || !j["topics"].is_object())
        throw ConfigError("topic dictionary must be an object with a \"topics\" map");
    TopicDictionary dict;
    for (const auto& [name, body] : j["topics"].items()) {
        if (name.empty()) throw ConfigError("empty topic name");
        TopicEntry entry;
        if (!body.is_object() || !body.contains("seeds") || !body["seeds"].is_array())
            throw ConfigError("topic \"" + name + "\" needs a \"seeds\" array");
        for (const auto& seed : body["seeds"]) {
            if (!seed.is_string())
                throw ConfigError("topic \"" + name + "\" has a non-string seed");
            const std::string phrase = trim(seed.get<std::string>());
            if (phrase.empty())
                throw ConfigError("topic \"" + name + "\" has an empty seed");
            if (tokenize(phrase).size() > 3)
                throw ConfigError("topic \"" + name + "\" seed \"" + phrase +
                                  "\" is longer than 3 words");
            entry.seeds.push_back(phrase);
        }
        if (body.contains("description") && body["description"].is_string())
            entry.description = body["description"].get<std::string>();
        dict.topics.emplace(name, std::move(entry));
    }
    if (dict.topics.empty()) throw ConfigError("topic dictionary has no topics");
    return dict;
}

TopicDictionary TopicDictionary::load(const std::filesystem::path& path) {
    return from_json(parse_json_file(path, "topic dictionary"));
}

std::vector<TopicProfile> extract_topics(const std::array<NgramTable, 3>& tables,
                                         const TopicDictionary& dict,
                                         const ExtractConfig& config,
                                         const PipelineConfig& pipeline) {
    if (dict.topics.empty()) throw ConfigError("empty topic dictionary");

    struct Candidate {
        std::vector<std::string> tokens;
        std::string key;
        std::uint64_t count;
    };

    // candidate n-grams per segment: top-k bigrams + top-k trigrams + every
    // unigram meeting min_count
    std::array<std::vector<Candidate>, 3> candidates;
    for (std::size_t ci = 0; ci < 3; ++ci) {
        const NgramTable& table = tables[ci];
        auto add = [&](const RankedNgram& rn) {
            candidates[ci].push_back({split_ngram(rn.ngram), rn.ngram, rn.count});
        };
        for (const RankedNgram& rn :
             top_ngrams(table, 1, table.unigrams.size(), config.min_count))
            add(rn);
        for (const RankedNgram& rn : top_ngrams(table, 2, config.k, config.min_count))
            add(rn);
        for (const RankedNgram& rn : top_ngrams(table, 3, config.k, config.min_count))
            add(rn);
    }

    std::vector<TopicProfile> profiles;
    for (const auto& [name, entry] : dict.topics) {
        const auto seeds = normalize_seeds(entry, pipeline);
        if (seeds.empty()) continue;

        TopicProfile profile;
        profile.topic = name;
        profile.description = entry.description;

        std::array<std::uint64_t, 3> matched_count = {0, 0, 0};
        for (std::size_t ci = 0; ci < 3; ++ci) {
            for (const Candidate& cand : candidates[ci]) {
                bool matches = false;
                for (const auto& seed : seeds)
                    if (contains_subsequence(cand.tokens, seed)) {
                        matches = true;
                        break;
                    }
                if (!matches) continue;
                matched_count[ci] += cand.count;
                profile.matched_ngrams.push_back(
                    {cand.key, kSentimentClasses[ci], cand.count});
            }
        }

        for (std::size_t ci = 0; ci < 3; ++ci) {
            const std::uint64_t sentences = tables[ci].sentence_count;
            profile.freq_per_kilosentence[ci] =
                sentences == 0 ? 0.0
                               : static_cast<double>(matched_count[ci]) * 1000.0 /
                                     static_cast<double>(sentences);
        }

        const double p = profile.freq_per_kilosentence[class_index(SentimentClass::Positive)];
        const double n = profile.freq_per_kilosentence[class_index(SentimentClass::Negative)];
        if (p + n == 0.0) continue;  // no polarity evidence: omit
        profile.polarity = (p - n) / (p + n);

        // dominant class: argmax of the rates, ties resolve to Neutral
        const auto& f = profile.freq_per_kilosentence;
        const double best = std::max({f[0], f[1], f[2]});
        int argmax = -1;
        int hits = 0;
        for (int ci = 0; ci < 3; ++ci)
            if (f[ci] == best) {
                argmax = ci;
                ++hits;
            }
        profile.dominant_class =
            hits > 1 ? SentimentClass::Neutral : kSentimentClasses[argmax];

        std::sort(profile.matched_ngrams.begin(), profile.matched_ngrams.end(),
                  [](const MatchedNgram& a, const MatchedNgram& b) {
                      if (a.segment != b.segment) return a.segment < b.segment;
                      return a.ngram < b.ngram;
                  });
        profiles.push_back(std::move(profile));
    }
    // dict.topics is a sorted map, so profiles are already name-sorted
    return profiles;
}

bool is_hard_element(const std::string& element) {
    return element == "Strategy" || element == "Structure" || element == "Systems";
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::strength: return "strength";
        case Verdict::weakness: return "weakness";
        case Verdict::mixed: return "mixed";
        case Verdict::no_evidence: return "no-evidence";
    }
    return "?";
}

SevenSConfig SevenSConfig::builtin_default() {
    return from_json(nlohmann::json::parse(default_data::seven_s_json));
}

SevenSConfig SevenSConfig::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("element mapping must be a JSON object");
    SevenSConfig config;
    for (const auto& [topic, element] : j.items()) {
        if (!element.is_string())
            throw ConfigError("mapping for topic \"" + topic + "\" must be a string");
        const std::string name = element.get<std::string>();
        if (std::find_if(kSevenSElements.begin(), kSevenSElements.end(),
                         [&](const char* e) { return name == e; }) ==
            kSevenSElements.end())
            throw ConfigError("unknown element \"" + name + "\" for topic \"" +
                              topic + "\"");
        config.topic_to_element[topic] = name;
    }
    return config;
}

SevenSConfig SevenSConfig::load(const std::filesystem::path& path) {
    return from_json(parse_json_file(path, "element mapping"));
}

SevenSAssessment map_7s(const std::vector<TopicProfile>& profiles,
                        const SevenSConfig& config) {
    SevenSAssessment out;
    for (const char* element : kSevenSElements) {
        ElementAssessment a;
        a.hard = is_hard_element(element);
        out.elements.emplace(element, std::move(a));
    }

    std::map<std::string, std::vector<double>> polarities;
    for (const TopicProfile& profile : profiles) {
        auto it = config.topic_to_element.find(profile.topic);
        if (it == config.topic_to_element.end()) {
            out.unmapped_topics.push_back(profile.topic);
            continue;
        }
        ElementAssessment& a = out.elements.at(it->second);
        a.topics.push_back(profile.topic);
        polarities[it->second].push_back(profile.polarity);
    }

    for (auto& [element, a] : out.elements) {
        std::sort(a.topics.begin(), a.topics.end());
        const auto& pol = polarities[element];
        if (pol.empty()) {
            a.verdict = Verdict::no_evidence;
        } else if (std::all_of(pol.begin(), pol.end(), [&](double p) {
                       return p > config.strength_threshold;
                   })) {
            a.verdict = Verdict::strength;
        } else if (std::all_of(pol.begin(), pol.end(), [&](double p) {
                       return p < config.weakness_threshold;
                   })) {
            a.verdict = Verdict::weakness;
        } else {
            a.verdict = Verdict::mixed;
        }
    }
    std::sort(out.unmapped_topics.begin(), out.unmapped_topics.end());
    return out;
}

void validate_mapping(const TopicDictionary& dict, const SevenSConfig& config) {
    for (const auto& [topic, element] : config.topic_to_element)
        if (!dict.topics.count(topic))
            throw ConfigError("mapping references unknown topic \"" + topic + "\"");
}

}  // namespace revmine
