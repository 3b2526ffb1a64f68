#include "revmine/report.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include "revmine/corpus.hpp"
#include "revmine/errors.hpp"
#include "revmine/text_util.hpp"

namespace revmine {
namespace {

double snap6(double x) { return std::round(x * 1e6) / 1e6; }

int effective_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Fans out fn(0..count) over a fixed worker count; partition of work does
// not depend on scheduling, only on the indices each call receives.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    const int workers = std::min<std::size_t>(std::max(threads, 1), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                fn(i);
        });
    for (std::thread& t : pool) t.join();
}

std::vector<ProcessedSentence> preprocess_all(const Corpus& corpus,
                                              const PipelineConfig& pipeline,
                                              int threads) {
    std::vector<std::vector<ProcessedSentence>> per_record(corpus.records.size());
    parallel_for(corpus.records.size(), threads, [&](std::size_t i) {
        per_record[i] = preprocess(corpus.records[i], pipeline);
    });
    std::vector<ProcessedSentence> out;
    for (std::vector<ProcessedSentence>& sentences : per_record)
        for (ProcessedSentence& s : sentences) out.push_back(std::move(s));
    return out;
}

// Shard boundaries are fixed by index, so the shard set (and the folded
// result) is identical for every thread count.
NgramTable build_table_sharded(std::span<const ProcessedSentence> sentences,
                               int threads) {
    constexpr std::size_t kShardSize = 256;
    const std::size_t shards = (sentences.size() + kShardSize - 1) / kShardSize;
    if (shards <= 1) return build_table(sentences);

    std::vector<NgramTable> partial(shards);
    parallel_for(shards, threads, [&](std::size_t s) {
        const std::size_t begin = s * kShardSize;
        const std::size_t end = std::min(begin + kShardSize, sentences.size());
        partial[s] = build_table(sentences.subspan(begin, end - begin));
    });
    NgramTable table;
    for (const NgramTable& p : partial) table = merge(table, p);
    return table;
}

std::string word_set_digest(const std::set<std::string>& words) {
    std::string joined;
    for (const std::string& w : words) {
        joined += w;
        joined += '\n';
    }
    return content_digest(joined);
}

std::string dictionary_digest(const TopicDictionary& dict) {
    nlohmann::json j;
    for (const auto& [name, entry] : dict.topics)
        j[name] = {{"seeds", entry.seeds}, {"description", entry.description}};
    return content_digest(j.dump());
}

std::string mapping_digest(const SevenSConfig& config) {
    nlohmann::json j(config.topic_to_element);
    return content_digest(j.dump());
}

std::string corpus_digest(const Corpus& corpus) {
    std::string canon;
    for (const ReviewRecord& rec : corpus.records) {
        nlohmann::json j;
        j["review_id"] = rec.review_id;
        j["rating"] = rec.rating;
        j["text"] = rec.text;
        if (rec.source) j["source"] = *rec.source;
        if (rec.date) j["date"] = *rec.date;
        canon += j.dump();
        canon += '\n';
    }
    return content_digest(canon);
}

nlohmann::json ranked_to_json(const std::vector<RankedNgram>& ranked) {
    nlohmann::json arr = nlohmann::json::array();
    for (const RankedNgram& rn : ranked)
        arr.push_back({{"count", rn.count}, {"ngram", rn.ngram}});
    return arr;
}

std::vector<RankedNgram> ranked_from_json(const nlohmann::json& arr) {
    std::vector<RankedNgram> out;
    for (const auto& item : arr)
        out.push_back({item.at("ngram").get<std::string>(),
                       item.at("count").get<std::uint64_t>()});
    return out;
}

SentimentClass class_from_name(const std::string& name) {
    for (SentimentClass c : kSentimentClasses)
        if (name == to_string(c)) return c;
    throw ValidationError("unknown sentiment class \"" + name + "\"");
}

Verdict verdict_from_name(const std::string& name) {
    for (Verdict v : {Verdict::strength, Verdict::weakness, Verdict::mixed,
                      Verdict::no_evidence})
        if (name == to_string(v)) return v;
    throw ValidationError("unknown verdict \"" + name + "\"");
}

const std::vector<std::string>& builtin_caveats() {
    static const std::vector<std::string> caveats = {
        "Topic evidence comes from dictionary seed matching over frequent "
        "n-grams; phrasing outside the dictionary is not counted.",
        "Polarity uses positive- and negative-segment rates only; neutral "
        "mentions affect frequencies and dominance but not polarity.",
        "The built-in topic-to-element mapping covers five of the seven "
        "elements: Structure and Style carry no default topic evidence, and "
        "Systems evidence reflects customer-facing reservation handling only.",
    };
    return caveats;
}

}  // namespace

void RunConfig::validate() const {
    if (k < 1) throw ConfigError("k must be at least 1");
    if (min_count < 1) throw ConfigError("min_count must be at least 1");
    if (pipeline.min_token_length < 1)
        throw ConfigError("min_token_length must be at least 1");
    if (!emit_json && !emit_markdown)
        throw ConfigError("at least one output format must be selected");
    if (weakness_threshold > strength_threshold)
        throw ConfigError("weakness threshold above strength threshold");
}

Report run_pipeline(const RunConfig& config) {
    config.validate();

    Corpus corpus = config.format == InputFormat::csv
                        ? ingest_csv(config.input, config.csv_has_header)
                        : ingest_jsonl(config.input);
    corpus = dedup(std::move(corpus));

    const TopicDictionary dict =
        config.topic_dictionary_path
            ? TopicDictionary::load(*config.topic_dictionary_path)
            : TopicDictionary::builtin_default();
    SevenSConfig seven_config = config.seven_s_mapping_path
                                    ? SevenSConfig::load(*config.seven_s_mapping_path)
                                    : SevenSConfig::builtin_default();
    seven_config.strength_threshold = config.strength_threshold;
    seven_config.weakness_threshold = config.weakness_threshold;
    validate_mapping(dict, seven_config);

    const int threads = effective_threads(config.threads);
    const std::vector<ProcessedSentence> sentences =
        preprocess_all(corpus, config.pipeline, threads);
    const SegmentedSentences segments = segment(sentences, corpus);

    std::array<NgramTable, 3> tables;
    for (std::size_t ci = 0; ci < 3; ++ci)
        tables[ci] = build_table_sharded(segments.by_class[ci], threads);

    const ExtractConfig extract_config{config.k, config.min_count};
    const std::vector<TopicProfile> profiles =
        extract_topics(tables, dict, extract_config, config.pipeline);
    const SevenSAssessment assessment = map_7s(profiles, seven_config);

    Report report;
    report.version = std::string(kToolVersion);
    report.config.k = config.k;
    report.config.min_count = config.min_count;
    report.config.stemmer =
        config.pipeline.stemmer == StemmerKind::porter ? "porter" : "none";
    report.config.min_token_length = config.pipeline.min_token_length;
    report.config.strength_threshold = snap6(config.strength_threshold);
    report.config.weakness_threshold = snap6(config.weakness_threshold);
    report.config.stop_words_digest = word_set_digest(config.pipeline.stop_words);
    report.config.abbreviations_digest =
        word_set_digest(config.pipeline.sentence_abbreviations);
    report.config.topic_dictionary_digest = dictionary_digest(dict);
    report.config.seven_s_mapping_digest = mapping_digest(seven_config);

    report.input_digest = corpus_digest(corpus);
    report.records_kept = corpus.records.size();
    report.records_rejected = corpus.rejected.size();
    for (const RejectedRow& row : corpus.rejected) ++report.rejection_reasons[row.reason];

    for (std::size_t ci = 0; ci < 3; ++ci) {
        report.sentences_per_segment[ci] = segments.by_class[ci].size();
        SegmentReport& seg = report.segments[ci];
        seg.sentence_count = tables[ci].sentence_count;
        seg.token_count = tables[ci].total_tokens;
        seg.top_bigrams = top_ngrams(tables[ci], 2, config.k, config.min_count);
        seg.top_trigrams = top_ngrams(tables[ci], 3, config.k, config.min_count);
    }

    for (const TopicProfile& profile : profiles) {
        ReportTopic topic;
        topic.name = profile.topic;
        topic.description = profile.description;
        topic.matched_ngrams = profile.matched_ngrams;
        for (std::size_t ci = 0; ci < 3; ++ci)
            topic.freq_per_kilosentence[ci] = snap6(profile.freq_per_kilosentence[ci]);
        topic.polarity = snap6(profile.polarity);
        topic.dominant_class = profile.dominant_class;
        report.topics.push_back(std::move(topic));
    }

    report.seven_s = assessment;
    report.caveats = builtin_caveats();
    return report;
}

nlohmann::json report_to_json(const Report& report) {
    nlohmann::json j;
    j["version"] = report.version;

    nlohmann::json config;
    config["k"] = report.config.k;
    config["min_count"] = report.config.min_count;
    config["stemmer"] = report.config.stemmer;
    config["min_token_length"] = report.config.min_token_length;
    config["strength_threshold"] = report.config.strength_threshold;
    config["weakness_threshold"] = report.config.weakness_threshold;
    config["stop_words_digest"] = report.config.stop_words_digest;
    config["abbreviations_digest"] = report.config.abbreviations_digest;
    config["topic_dictionary_digest"] = report.config.topic_dictionary_digest;
    config["seven_s_mapping_digest"] = report.config.seven_s_mapping_digest;
    j["config"] = std::move(config);

    j["input_digest"] = report.input_digest;

    nlohmann::json corpus;
    corpus["records_kept"] = report.records_kept;
    corpus["records_rejected"] = report.records_rejected;
    corpus["rejection_reasons"] = report.rejection_reasons;
    nlohmann::json per_segment;
    for (SentimentClass c : kSentimentClasses)
        per_segment[to_string(c)] = report.sentences_per_segment[class_index(c)];
    corpus["sentences_per_segment"] = std::move(per_segment);
    j["corpus"] = std::move(corpus);

    nlohmann::json segments;
    for (SentimentClass c : kSentimentClasses) {
        const SegmentReport& seg = report.segments[class_index(c)];
        nlohmann::json s;
        s["sentence_count"] = seg.sentence_count;
        s["token_count"] = seg.token_count;
        s["top_bigrams"] = ranked_to_json(seg.top_bigrams);
        s["top_trigrams"] = ranked_to_json(seg.top_trigrams);
        segments[to_string(c)] = std::move(s);
    }
    j["segments"] = std::move(segments);

    nlohmann::json topics = nlohmann::json::array();
    for (const ReportTopic& topic : report.topics) {
        nlohmann::json t;
        t["name"] = topic.name;
        t["description"] = topic.description;
        nlohmann::json matched = nlohmann::json::array();
        for (const MatchedNgram& m : topic.matched_ngrams)
            matched.push_back({{"count", m.count},
                               {"ngram", m.ngram},
                               {"segment", to_string(m.segment)}});
        t["matched_ngrams"] = std::move(matched);
        nlohmann::json rates;
        for (SentimentClass c : kSentimentClasses)
            rates[to_string(c)] = topic.freq_per_kilosentence[class_index(c)];
        t["freq_per_kilosentence"] = std::move(rates);
        t["polarity"] = topic.polarity;
        t["dominant_class"] = to_string(topic.dominant_class);
        topics.push_back(std::move(t));
    }
    j["topics"] = std::move(topics);

    nlohmann::json seven;
    for (const auto& [element, a] : report.seven_s.elements) {
        nlohmann::json e;
        e["kind"] = a.hard ? "hard" : "soft";
        e["verdict"] = to_string(a.verdict);
        e["topics"] = a.topics;
        seven[element] = std::move(e);
    }
    j["seven_s"] = std::move(seven);
    j["unmapped_topics"] = report.seven_s.unmapped_topics;
    j["caveats"] = report.caveats;
    return j;
}

Report report_from_json(const nlohmann::json& j) {
    Report report;
    report.version = j.at("version").get<std::string>();

    const nlohmann::json& config = j.at("config");
    report.config.k = config.at("k").get<std::size_t>();
    report.config.min_count = config.at("min_count").get<std::uint64_t>();
    report.config.stemmer = config.at("stemmer").get<std::string>();
    report.config.min_token_length = config.at("min_token_length").get<int>();
    report.config.strength_threshold = config.at("strength_threshold").get<double>();
    report.config.weakness_threshold = config.at("weakness_threshold").get<double>();
    report.config.stop_words_digest = config.at("stop_words_digest").get<std::string>();
    report.config.abbreviations_digest =
        config.at("abbreviations_digest").get<std::string>();
    report.config.topic_dictionary_digest =
        config.at("topic_dictionary_digest").get<std::string>();
    report.config.seven_s_mapping_digest =
        config.at("seven_s_mapping_digest").get<std::string>();

    report.input_digest = j.at("input_digest").get<std::string>();

    const nlohmann::json& corpus = j.at("corpus");
    report.records_kept = corpus.at("records_kept").get<std::uint64_t>();
    report.records_rejected = corpus.at("records_rejected").get<std::uint64_t>();
    report.rejection_reasons =
        corpus.at("rejection_reasons").get<std::map<std::string, std::uint64_t>>();
    for (SentimentClass c : kSentimentClasses)
        report.sentences_per_segment[class_index(c)] =
            corpus.at("sentences_per_segment").at(to_string(c)).get<std::uint64_t>();

    for (SentimentClass c : kSentimentClasses) {
        const nlohmann::json& s = j.at("segments").at(to_string(c));
        SegmentReport& seg = report.segments[class_index(c)];
        seg.sentence_count = s.at("sentence_count").get<std::uint64_t>();
        seg.token_count = s.at("token_count").get<std::uint64_t>();
        seg.top_bigrams = ranked_from_json(s.at("top_bigrams"));
        seg.top_trigrams = ranked_from_json(s.at("top_trigrams"));
    }

    for (const auto& t : j.at("topics")) {
        ReportTopic topic;
        topic.name = t.at("name").get<std::string>();
        topic.description = t.at("description").get<std::string>();
        for (const auto& m : t.at("matched_ngrams"))
            topic.matched_ngrams.push_back(
                {m.at("ngram").get<std::string>(),
                 class_from_name(m.at("segment").get<std::string>()),
                 m.at("count").get<std::uint64_t>()});
        for (SentimentClass c : kSentimentClasses)
            topic.freq_per_kilosentence[class_index(c)] =
                t.at("freq_per_kilosentence").at(to_string(c)).get<double>();
        topic.polarity = t.at("polarity").get<double>();
        topic.dominant_class = class_from_name(t.at("dominant_class").get<std::string>());
        report.topics.push_back(std::move(topic));
    }

    for (const auto& [element, e] : j.at("seven_s").items()) {
        ElementAssessment a;
        a.hard = e.at("kind").get<std::string>() == "hard";
        a.verdict = verdict_from_name(e.at("verdict").get<std::string>());
        a.topics = e.at("topics").get<std::vector<std::string>>();
        report.seven_s.elements.emplace(element, std::move(a));
    }
    report.seven_s.unmapped_topics =
        j.at("unmapped_topics").get<std::vector<std::string>>();
    report.caveats = j.at("caveats").get<std::vector<std::string>>();
    return report;
}

std::string report_json_bytes(const Report& report) {
    return report_to_json(report).dump(2) + "\n";
}

std::string render_markdown(const Report& report) {
    std::ostringstream md;
    md << "# Review Insights Report\n\n";
    md << "Tool version " << report.version << " — input digest `"
       << report.input_digest << "`\n\n";

    md << "## Corpus Summary\n\n";
    md << "- Records kept: " << report.records_kept << "\n";
    md << "- Records rejected: " << report.records_rejected;
    if (!report.rejection_reasons.empty()) {
        md << " (";
        bool first = true;
        for (const auto& [reason, count] : report.rejection_reasons) {
            if (!first) md << ", ";
            md << reason << ": " << count;
            first = false;
        }
        md << ")";
    }
    md << "\n";
    std::uint64_t total_sentences = 0;
    for (std::uint64_t n : report.sentences_per_segment) total_sentences += n;
    md << "- Sentences: " << total_sentences;
    for (SentimentClass c : kSentimentClasses)
        md << " | " << to_string(c) << " "
           << report.sentences_per_segment[class_index(c)];
    md << "\n\n";

    md << "## Top N-grams per Segment\n";
    for (SentimentClass c : kSentimentClasses) {
        const SegmentReport& seg = report.segments[class_index(c)];
        md << "\n### " << to_string(c) << " (" << seg.sentence_count
           << " sentences, " << seg.token_count << " tokens)\n\n";
        md << "| rank | bigram | count | trigram | count |\n";
        md << "|---:|---|---:|---|---:|\n";
        const std::size_t rows =
            std::max(seg.top_bigrams.size(), seg.top_trigrams.size());
        if (rows == 0) md << "| - | (none) | 0 | (none) | 0 |\n";
        for (std::size_t i = 0; i < rows; ++i) {
            md << "| " << (i + 1) << " | ";
            if (i < seg.top_bigrams.size())
                md << seg.top_bigrams[i].ngram << " | " << seg.top_bigrams[i].count;
            else
                md << " | ";
            md << " | ";
            if (i < seg.top_trigrams.size())
                md << seg.top_trigrams[i].ngram << " | " << seg.top_trigrams[i].count;
            else
                md << " | ";
            md << " |\n";
        }
    }

    md << "\n## Key Topics\n\n";
    if (report.topics.empty()) {
        md << "No topic had positive or negative evidence.\n";
    } else {
        md << "| topic | neg rate | neu rate | pos rate | polarity | dominant | "
              "description |\n";
        md << "|---|---:|---:|---:|---:|---|---|\n";
        for (const ReportTopic& topic : report.topics) {
            md << "| " << topic.name;
            for (SentimentClass c : kSentimentClasses)
                md << " | " << topic.freq_per_kilosentence[class_index(c)];
            md << " | " << topic.polarity << " | " << to_string(topic.dominant_class)
               << " | " << topic.description << " |\n";
        }
    }

    md << "\n## 7S Assessment\n\n";
    md << "| element | kind | verdict | supporting topics |\n";
    md << "|---|---|---|---|\n";
    for (const char* element : kSevenSElements) {
        const ElementAssessment& a = report.seven_s.elements.at(element);
        md << "| " << element << " | " << (a.hard ? "hard" : "soft") << " | "
           << to_string(a.verdict) << " | ";
        if (a.topics.empty()) {
            md << "-";
        } else {
            for (std::size_t i = 0; i < a.topics.size(); ++i) {
                if (i) md << ", ";
                md << a.topics[i];
            }
        }
        md << " |\n";
    }

    md << "\n## Unmapped Topics\n\n";
    if (report.seven_s.unmapped_topics.empty()) {
        md << "(none)\n";
    } else {
        for (const std::string& topic : report.seven_s.unmapped_topics)
            md << "- " << topic << "\n";
    }

    md << "\n## Caveats\n\n";
    for (const std::string& caveat : report.caveats) md << "- " << caveat << "\n";
    return md.str();
}

void write_report_files(const Report& report, const RunConfig& config) {
    std::error_code ec;
    std::filesystem::create_directories(config.out_dir, ec);
    if (ec && !std::filesystem::is_directory(config.out_dir))
        throw IoError("cannot create output directory " + config.out_dir.string());

    auto write = [&](const char* name, const std::string& bytes) {
        const std::filesystem::path path = config.out_dir / name;
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + path.string());
        out << bytes;
        if (!out) throw IoError("cannot write " + path.string());
    };
    if (config.emit_json) write("report.json", report_json_bytes(report));
    if (config.emit_markdown) write("report.md", render_markdown(report));
}

}  // namespace revmine
