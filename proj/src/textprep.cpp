#include "revmine/textprep.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "default_data.hpp"
#include "revmine/errors.hpp"
#include "revmine/porter.hpp"
#include "revmine/text_util.hpp"

namespace revmine {
namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

// The word ending at the '.' at position i, walking back over letters and
// dots, lowercased: "5 p.m." -> "p.m.".
std::string word_ending_at(const std::string& text, std::size_t i) {
    std::size_t b = i;
    while (b > 0) {
        const char c = text[b - 1];
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '.')
            --b;
        else
            break;
    }
    return ascii_lower(std::string_view(text).substr(b, i - b + 1));
}

std::size_t codepoint_length(std::string_view token) {
    std::size_t n = 0;
    for (char c : token)
        if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
    return n;
}

}  // namespace

PipelineConfig PipelineConfig::defaults() {
    PipelineConfig config;
    config.stop_words = parse_word_list(default_data::stopwords_en);
    config.sentence_abbreviations = parse_word_list(default_data::abbreviations_en);
    config.stemmer = StemmerKind::porter;
    config.min_token_length = 2;
    return config;
}

std::set<std::string> parse_word_list(std::string_view content) {
    std::set<std::string> words;
    std::size_t pos = 0;
    while (pos <= content.size()) {
        std::size_t eol = content.find('\n', pos);
        if (eol == std::string_view::npos) eol = content.size();
        std::string line = trim(content.substr(pos, eol - pos));
        pos = eol + 1;
        if (line.empty() || line[0] == '#') continue;
        words.insert(std::move(line));
    }
    return words;
}

std::set<std::string> load_word_list(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open word list " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_word_list(buf.str());
}

std::vector<std::string> split_sentences(const std::string& text,
                                         const PipelineConfig& config) {
    std::vector<std::string> sentences;
    auto flush = [&](std::size_t begin, std::size_t end) {
        std::string s = trim(std::string_view(text).substr(begin, end - begin));
        if (!s.empty()) sentences.push_back(std::move(s));
    };

    std::size_t start = 0;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        if (!is_terminator(text[i])) {
            ++i;
            continue;
        }
        std::size_t run_end = i;  // last terminator of the run
        while (run_end + 1 < n && is_terminator(text[run_end + 1])) ++run_end;
        const bool at_boundary = run_end + 1 >= n || is_space(text[run_end + 1]);
        if (!at_boundary) {
            i = run_end + 1;
            continue;
        }
        if (text[i] == '.' && run_end == i &&
            config.sentence_abbreviations.count(word_ending_at(text, i))) {
            ++i;
            continue;
        }
        flush(start, run_end + 1);
        i = run_end + 1;
        while (i < n && is_space(text[i])) ++i;
        start = i;
    }
    flush(start, n);
    return sentences;
}

std::vector<std::string> tokenize(const std::string& sentence) {
    // decode once so the apostrophe rule can look one codepoint ahead
    std::vector<char32_t> cps;
    cps.reserve(sentence.size());
    std::size_t pos = 0;
    while (pos < sentence.size()) cps.push_back(utf8_decode(sentence, pos));

    auto is_token_char = [](char32_t cp) { return is_letter(cp) || is_digit(cp); };
    auto is_apostrophe = [](char32_t cp) { return cp == '\'' || cp == 0x2019; };

    std::vector<std::string> tokens;
    std::string current;
    for (std::size_t i = 0; i < cps.size(); ++i) {
        const char32_t cp = cps[i];
        if (is_token_char(cp)) {
            utf8_append(current, cp);
        } else if (is_apostrophe(cp) && i > 0 && i + 1 < cps.size() &&
                   is_letter(cps[i - 1]) && is_letter(cps[i + 1])) {
            current.push_back('\'');
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

std::string stem(const std::string& token, StemmerKind kind) {
    return kind == StemmerKind::porter ? porter_stem(token) : token;
}

std::vector<ProcessedSentence> preprocess(const ReviewRecord& record,
                                          const PipelineConfig& config) {
    std::vector<ProcessedSentence> out;
    std::unordered_set<std::string> seen_token_lists;

    const std::vector<std::string> sentences = split_sentences(record.text, config);
    for (std::size_t idx = 0; idx < sentences.size(); ++idx) {
        std::vector<std::string> tokens;
        for (const std::string& raw_token : tokenize(sentences[idx])) {
            std::string token = lowercase(raw_token);
            if (config.stop_words.count(token)) continue;
            if (codepoint_length(token) <
                static_cast<std::size_t>(config.min_token_length))
                continue;
            tokens.push_back(stem(token, config.stemmer));
        }
        if (tokens.empty()) continue;

        std::string key;
        for (const std::string& t : tokens) {
            key += t;
            key += ' ';
        }
        if (!seen_token_lists.insert(key).second) continue;

        out.push_back({record.review_id, static_cast<int>(idx), std::move(tokens),
                       sentences[idx]});
    }
    return out;
}

}  // namespace revmine
