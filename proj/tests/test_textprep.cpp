#include <doctest.h>

#include <algorithm>
#include <cctype>
#include <set>
#include <string>

#include "revmine/textprep.hpp"
#include "revmine/porter.hpp"

using namespace revmine;

namespace {

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

ReviewRecord record(const std::string& text, int rating = 5) {
    return {"r1", rating, text, {}, {}};
}

}  // namespace

TEST_CASE("split_sentences: terminator-based splitting") {
    const PipelineConfig config = PipelineConfig::defaults();
    CHECK(split_sentences("Great pilot. Long wait.", config) ==
          std::vector<std::string>{"Great pilot.", "Long wait."});
    CHECK(split_sentences("no punctuation at all", config) ==
          std::vector<std::string>{"no punctuation at all"});
    CHECK(split_sentences("Nice! Really? Yes.", config) ==
          std::vector<std::string>{"Nice!", "Really?", "Yes."});
    CHECK(split_sentences("Wow!!! Great.", config) ==
          std::vector<std::string>{"Wow!!!", "Great."});
}

TEST_CASE("split_sentences: abbreviation exemptions") {
    const PipelineConfig config = PipelineConfig::defaults();
    REQUIRE(config.sentence_abbreviations.count("p.m.") == 1);
    CHECK(split_sentences("We flew at 5 p.m. and loved it", config) ==
          std::vector<std::string>{"We flew at 5 p.m. and loved it"});
    CHECK(split_sentences("Ask Dr. Reed. She knows.", config) ==
          std::vector<std::string>{"Ask Dr. Reed.", "She knows."});
    // '.' not followed by whitespace never splits
    CHECK(split_sentences("version 2.5 flew fine", config) ==
          std::vector<std::string>{"version 2.5 flew fine"});
}

TEST_CASE("split_sentences: non-boundary characters are preserved in order") {
    const PipelineConfig config = PipelineConfig::defaults();
    const std::string texts[] = {
        "One. Two!  Three?   Four",
        "Mr. Smith waited... then left.",
        "  leading space. trailing  ",
        "just one sentence",
    };
    for (const std::string& text : texts) {
        std::string joined;
        for (const std::string& s : split_sentences(text, config)) {
            CHECK(!s.empty());
            joined += s;
        }
        CHECK(strip_spaces(joined) == strip_spaces(text));
    }
}

TEST_CASE("tokenize: grammar") {
    CHECK(tokenize("Friendly, helpful staff!") ==
          std::vector<std::string>{"Friendly", "helpful", "staff"});
    CHECK(tokenize("don't") == std::vector<std::string>{"don't"});
    CHECK(tokenize("A380-style cabin") ==
          std::vector<std::string>{"A380", "style", "cabin"});
    CHECK(tokenize("dogs' toys") == std::vector<std::string>{"dogs", "toys"});
    CHECK(tokenize("(wow)") == std::vector<std::string>{"wow"});
    CHECK(tokenize("...") == std::vector<std::string>{});
    // right single quote counts as an apostrophe and is normalized
    CHECK(tokenize("don’t stop") == std::vector<std::string>{"don't", "stop"});
    // non-ASCII letters stay inside tokens
    CHECK(tokenize("café nearby") == std::vector<std::string>{"café", "nearby"});
}

TEST_CASE("stem: porter and identity kinds") {
    CHECK(stem("flying", StemmerKind::porter) == "fly");
    CHECK(stem("staff", StemmerKind::porter) == "staff");
    CHECK(stem("a", StemmerKind::porter) == "a");
    CHECK(stem("flying", StemmerKind::none) == "flying");
}

TEST_CASE("preprocess: stop words, stemming, short tokens") {
    PipelineConfig config = PipelineConfig::defaults();
    const auto sentences = preprocess(record("The staff was very friendly."), config);
    REQUIRE(sentences.size() == 1);
    CHECK(sentences[0].tokens == std::vector<std::string>{"staff", "friendli"});
    CHECK(sentences[0].review_id == "r1");
    CHECK(sentences[0].sentence_index == 0);
    CHECK(sentences[0].raw == "The staff was very friendly.");

    // all-stop-word sentences are dropped
    CHECK(preprocess(record("The the the."), config).empty());

    // identity stemmer
    config.stemmer = StemmerKind::none;
    const auto plain = preprocess(record("friendly staff"), config);
    REQUIRE(plain.size() == 1);
    CHECK(plain[0].tokens == std::vector<std::string>{"friendly", "staff"});

    // min_token_length drops short tokens before stemming
    config = PipelineConfig::defaults();
    config.min_token_length = 5;
    const auto lengthy = preprocess(record("tiny word extravaganza today"), config);
    REQUIRE(lengthy.size() == 1);
    CHECK(lengthy[0].tokens == std::vector<std::string>{"extravaganza", "todai"});
}

TEST_CASE("preprocess: duplicate sentences within a review are dropped, first wins") {
    const PipelineConfig config = PipelineConfig::defaults();
    const auto sentences =
        preprocess(record("Great pilot. Long wait. Great pilot."), config);
    REQUIRE(sentences.size() == 2);
    CHECK(sentences[0].tokens == std::vector<std::string>{"great", "pilot"});
    CHECK(sentences[0].sentence_index == 0);
    CHECK(sentences[1].tokens == std::vector<std::string>{"long", "wait"});
    CHECK(sentences[1].sentence_index == 1);
}

TEST_CASE("preprocess: indices refer to original sentence positions") {
    const PipelineConfig config = PipelineConfig::defaults();
    // middle sentence is all stop words and vanishes; the third keeps index 2
    const auto sentences =
        preprocess(record("Great pilot. It was. Long wait."), config);
    REQUIRE(sentences.size() == 2);
    CHECK(sentences[0].sentence_index == 0);
    CHECK(sentences[1].sentence_index == 2);
}

TEST_CASE("preprocess invariants on varied inputs") {
    const PipelineConfig config = PipelineConfig::defaults();
    const std::string texts[] = {
        "The friendly staff made the whole trip feel easy.",
        "We waited and waited... then the WAITING continued!",
        "Booking online was quick; the website was simple.",
        "Don't stop believing. DON'T STOP!",
        "A380-style cabin, amazing views, 5 p.m. departure.",
    };
    for (const std::string& text : texts) {
        for (const ProcessedSentence& s : preprocess(record(text), config)) {
            CHECK(!s.tokens.empty());
            for (const std::string& token : s.tokens) {
                CHECK(!token.empty());
                CHECK(config.stop_words.count(token) == 0);
                // lowercase: no ASCII uppercase bytes survive
                for (char c : token) CHECK(!(c >= 'A' && c <= 'Z'));
            }
        }
        // determinism
        CHECK(preprocess(record(text), config) == preprocess(record(text), config));
    }
}

TEST_CASE("pipeline idempotence at the token level") {
    // Re-preprocessing the space-joined token output must reproduce the
    // token list, except where a stem is itself not a Porter fixed point
    // (or stems into a stop word). No such token arises from these inputs
    // or the shipped fixture corpus; the exception set is pinned empty.
    const std::set<std::string> pinned_exceptions = {};
    const PipelineConfig config = PipelineConfig::defaults();
    const std::string texts[] = {
        "The friendly staff made the whole trip feel easy.",
        "Scratched windows made photos impossible.",
        "Still chasing my cancellation refund weeks later.",
        "The safety briefing before the flight was clear and thorough.",
        "The guided tour pointed out every landmark below.",
    };
    for (const std::string& text : texts) {
        for (const ProcessedSentence& s : preprocess(record(text), config)) {
            std::string joined;
            for (const std::string& t : s.tokens) joined += t + " ";
            const auto again = preprocess(record(joined), config);
            REQUIRE(again.size() == 1);
            REQUIRE(again[0].tokens.size() == s.tokens.size());
            for (std::size_t i = 0; i < s.tokens.size(); ++i) {
                if (again[0].tokens[i] == s.tokens[i]) continue;
                CHECK(pinned_exceptions.count(s.tokens[i]) == 1);
            }
        }
    }
}

TEST_CASE("word list parsing: comments and blanks") {
    const auto words = parse_word_list("# comment\nalpha\n\n  beta  \n#x\ngamma");
    CHECK(words == std::set<std::string>{"alpha", "beta", "gamma"});
}

TEST_CASE("defaults: bundled lists are loaded") {
    const PipelineConfig config = PipelineConfig::defaults();
    CHECK(config.stop_words.size() > 150);
    CHECK(config.stop_words.count("the") == 1);
    CHECK(config.stop_words.count("don't") == 1);
    CHECK(config.sentence_abbreviations.count("e.g.") == 1);
    CHECK(config.min_token_length == 2);
    CHECK(config.stemmer == StemmerKind::porter);
}
