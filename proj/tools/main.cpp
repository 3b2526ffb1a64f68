#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "revmine/errors.hpp"
#include "revmine/fixture.hpp"
#include "revmine/report.hpp"

namespace {

using namespace revmine;

constexpr const char* kConfigEnvVar = "REVMINE_CONFIG";

InputFormat format_from_name(const std::string& name) {
    if (name == "csv") return InputFormat::csv;
    if (name == "jsonl") return InputFormat::jsonl;
    throw ConfigError("unknown input format \"" + name + "\" (csv or jsonl)");
}

InputFormat sniff_format(const std::filesystem::path& input) {
    const std::string ext = input.extension().string();
    if (ext == ".jsonl" || ext == ".ndjson") return InputFormat::jsonl;
    return InputFormat::csv;
}

StemmerKind stemmer_from_name(const std::string& name) {
    if (name == "porter") return StemmerKind::porter;
    if (name == "none") return StemmerKind::none;
    throw ConfigError("unknown stemmer \"" + name + "\" (porter or none)");
}

void apply_emit(RunConfig& config, const std::string& emit) {
    config.emit_json = false;
    config.emit_markdown = false;
    std::size_t pos = 0;
    while (pos <= emit.size()) {
        std::size_t comma = emit.find(',', pos);
        if (comma == std::string::npos) comma = emit.size();
        const std::string item = emit.substr(pos, comma - pos);
        pos = comma + 1;
        if (item == "json") config.emit_json = true;
        else if (item == "markdown" || item == "md") config.emit_markdown = true;
        else if (!item.empty())
            throw ConfigError("unknown output format \"" + item + "\"");
    }
}

// JSON config file mirroring RunConfig; explicit command-line flags win.
// Returns true when the file pinned the input format.
bool apply_config_file(RunConfig& config, const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config file " + path.string());
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        throw ConfigError("invalid JSON in config file " + path.string());

    bool format_set = false;
    if (j.contains("input")) config.input = j["input"].get<std::string>();
    if (j.contains("format")) {
        config.format = format_from_name(j["format"]);
        format_set = true;
    }
    if (j.contains("csv_has_header")) config.csv_has_header = j["csv_has_header"].get<bool>();
    if (j.contains("k")) config.k = j["k"].get<std::size_t>();
    if (j.contains("min_count")) config.min_count = j["min_count"].get<std::uint64_t>();
    if (j.contains("threads")) config.threads = j["threads"].get<int>();
    if (j.contains("out")) config.out_dir = j["out"].get<std::string>();
    if (j.contains("emit")) {
        std::string joined;
        for (const auto& item : j["emit"]) {
            if (!joined.empty()) joined += ',';
            joined += item.get<std::string>();
        }
        apply_emit(config, joined);
    }
    if (j.contains("topic_dictionary"))
        config.topic_dictionary_path = j["topic_dictionary"].get<std::string>();
    if (j.contains("seven_s_mapping"))
        config.seven_s_mapping_path = j["seven_s_mapping"].get<std::string>();
    if (j.contains("strength_threshold"))
        config.strength_threshold = j["strength_threshold"].get<double>();
    if (j.contains("weakness_threshold"))
        config.weakness_threshold = j["weakness_threshold"].get<double>();
    if (j.contains("pipeline")) {
        const nlohmann::json& p = j["pipeline"];
        if (p.contains("stemmer"))
            config.pipeline.stemmer = stemmer_from_name(p["stemmer"]);
        if (p.contains("min_token_length"))
            config.pipeline.min_token_length = p["min_token_length"].get<int>();
        if (p.contains("stop_words"))
            config.pipeline.stop_words = load_word_list(p["stop_words"].get<std::string>());
        if (p.contains("abbreviations"))
            config.pipeline.sentence_abbreviations =
                load_word_list(p["abbreviations"].get<std::string>());
    }
    return format_set;
}

struct CommonOptions {
    std::string input;
    std::string format;
    bool no_header = false;
    std::string config_file;
    std::string stopwords_path;
    std::string abbrev_path;
    std::string stemmer;
    int min_token_length = -1;
    std::size_t k = 0;
    std::uint64_t min_count = 0;
    int threads = -1;
};

void add_common_options(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--input", opts.input, "input reviews file");
    cmd->add_option("--format", opts.format, "input format: csv or jsonl");
    cmd->add_flag("--no-header", opts.no_header, "CSV input has no header row");
    cmd->add_option("--config", opts.config_file,
                    "JSON config file (also read from $" + std::string(kConfigEnvVar) + ")");
    cmd->add_option("--stopwords", opts.stopwords_path, "stop-word list file");
    cmd->add_option("--abbrev", opts.abbrev_path, "sentence abbreviation list file");
    cmd->add_option("--stemmer", opts.stemmer, "stemmer: porter or none");
    cmd->add_option("--min-token-length", opts.min_token_length,
                    "drop tokens shorter than this");
    cmd->add_option("--k", opts.k, "top n-gram cutoff per order");
    cmd->add_option("--min-count", opts.min_count, "minimum n-gram count");
    cmd->add_option("--threads", opts.threads, "worker threads, 0 = auto");
}

struct UsageError : Error {
    using Error::Error;
};

RunConfig build_run_config(const CLI::App* cmd, const CommonOptions& opts) {
    RunConfig config;

    std::string config_file = opts.config_file;
    if (config_file.empty()) {
        if (const char* env = std::getenv(kConfigEnvVar); env && *env) config_file = env;
    }
    bool format_pinned = false;
    if (!config_file.empty()) format_pinned = apply_config_file(config, config_file);

    if (!opts.input.empty()) config.input = opts.input;
    if (config.input.empty())
        throw UsageError("no input file: pass --input or set it in the config file");

    if (cmd->count("--format")) config.format = format_from_name(opts.format);
    else if (!format_pinned) config.format = sniff_format(config.input);
    if (opts.no_header) config.csv_has_header = false;
    if (cmd->count("--k")) config.k = opts.k;
    if (cmd->count("--min-count")) config.min_count = opts.min_count;
    if (cmd->count("--threads")) config.threads = opts.threads;
    if (cmd->count("--stemmer")) config.pipeline.stemmer = stemmer_from_name(opts.stemmer);
    if (cmd->count("--min-token-length"))
        config.pipeline.min_token_length = opts.min_token_length;
    if (cmd->count("--stopwords"))
        config.pipeline.stop_words = load_word_list(opts.stopwords_path);
    if (cmd->count("--abbrev"))
        config.pipeline.sentence_abbreviations = load_word_list(opts.abbrev_path);
    return config;
}

int run_analyze(const CLI::App* cmd, const CommonOptions& opts, const std::string& out_dir,
                const std::string& emit, const std::string& dict_path,
                const std::string& map_path, double strength, double weakness) {
    RunConfig config = build_run_config(cmd, opts);
    if (cmd->count("--out")) config.out_dir = out_dir;
    if (cmd->count("--emit")) apply_emit(config, emit);
    if (cmd->count("--dict")) config.topic_dictionary_path = dict_path;
    if (cmd->count("--map")) config.seven_s_mapping_path = map_path;
    if (cmd->count("--strength-threshold")) config.strength_threshold = strength;
    if (cmd->count("--weakness-threshold")) config.weakness_threshold = weakness;

    const Report report = run_pipeline(config);
    write_report_files(report, config);

    std::uint64_t total_sentences = 0;
    for (std::uint64_t n : report.sentences_per_segment) total_sentences += n;
    std::cout << "analyzed " << report.records_kept << " reviews ("
              << report.records_rejected << " rejected), " << total_sentences
              << " sentences; wrote ";
    bool first = true;
    if (config.emit_json) {
        std::cout << (config.out_dir / "report.json").string();
        first = false;
    }
    if (config.emit_markdown)
        std::cout << (first ? "" : " and ") << (config.out_dir / "report.md").string();
    std::cout << "\n";
    return 0;
}

int run_ngrams(const CLI::App* cmd, const CommonOptions& opts, int order) {
    RunConfig config = build_run_config(cmd, opts);
    config.validate();

    Corpus corpus = config.format == InputFormat::csv
                        ? ingest_csv(config.input, config.csv_has_header)
                        : ingest_jsonl(config.input);
    corpus = dedup(std::move(corpus));

    std::vector<ProcessedSentence> sentences;
    for (const ReviewRecord& rec : corpus.records)
        for (ProcessedSentence& s : preprocess(rec, config.pipeline))
            sentences.push_back(std::move(s));
    const SegmentedSentences segments = segment(sentences, corpus);

    for (SentimentClass c : kSentimentClasses) {
        const NgramTable table = build_table(segments.of(c));
        std::cout << "== " << to_string(c) << " (" << table.sentence_count
                  << " sentences) ==\n";
        for (int n : {2, 3}) {
            if (order != 0 && order != n) continue;
            std::cout << (n == 2 ? "bigrams:" : "trigrams:") << "\n";
            const auto ranked = top_ngrams(table, n, config.k, config.min_count);
            if (ranked.empty()) std::cout << "  (none)\n";
            for (const RankedNgram& rn : ranked)
                std::cout << "  " << rn.count << "\t" << rn.ngram << "\n";
        }
    }
    return 0;
}

int run_gen_fixture(const std::string& out_dir, int reviews, std::uint64_t seed) {
    FixtureSpec spec;
    spec.reviews = reviews;
    spec.seed = seed;
    const std::vector<ReviewRecord> records = generate_fixture(spec);

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    const std::filesystem::path dir(out_dir);
    write_fixture_csv(records, dir / "reviews.csv");
    write_fixture_jsonl(records, dir / "reviews.jsonl");
    std::cout << "wrote " << records.size() << " reviews to " << out_dir
              << "/reviews.{csv,jsonl}\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"review mining toolkit: rated-review ingestion, n-gram "
                 "analysis, topic extraction and 7S assessment"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    CommonOptions analyze_opts;
    std::string out_dir = "report";
    std::string emit = "json,markdown";
    std::string dict_path;
    std::string map_path;
    double strength = 0.2;
    double weakness = -0.2;
    CLI::App* analyze = app.add_subcommand("analyze", "run the full pipeline");
    add_common_options(analyze, analyze_opts);
    analyze->add_option("--out", out_dir, "output directory");
    analyze->add_option("--emit", emit, "comma list of json,markdown");
    analyze->add_option("--dict", dict_path, "topic dictionary JSON file");
    analyze->add_option("--map", map_path, "topic to 7S element mapping JSON file");
    analyze->add_option("--strength-threshold", strength, "polarity above = strength");
    analyze->add_option("--weakness-threshold", weakness, "polarity below = weakness");

    CommonOptions ngrams_opts;
    int order = 0;
    CLI::App* ngrams = app.add_subcommand("ngrams", "print top n-grams per segment");
    add_common_options(ngrams, ngrams_opts);
    ngrams->add_option("--n", order, "restrict to one order: 2 or 3")
        ->check(CLI::IsMember({0, 2, 3}));

    std::string fixture_out;
    int fixture_reviews = 200;
    std::uint64_t fixture_seed = 42;
    CLI::App* gen = app.add_subcommand("gen-fixture", "write a synthetic review corpus");
    gen->add_option("--out", fixture_out, "output directory")->required();
    gen->add_option("--reviews", fixture_reviews, "number of reviews");
    gen->add_option("--seed", fixture_seed, "generator seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (analyze->parsed())
            return run_analyze(analyze, analyze_opts, out_dir, emit, dict_path,
                               map_path, strength, weakness);
        if (ngrams->parsed()) return run_ngrams(ngrams, ngrams_opts, order);
        if (gen->parsed())
            return run_gen_fixture(fixture_out, fixture_reviews, fixture_seed);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 3;
    } catch (const EmptyCorpusError& e) {
        std::cerr << "empty corpus: " << e.what() << "\n";
        return 4;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 5;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
