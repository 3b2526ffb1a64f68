#include "revmine/fixture.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <string>

#include <json.hpp>

#include "revmine/errors.hpp"
#include "revmine/text_util.hpp"

namespace revmine {
namespace {

// splitmix64: tiny, seedable, identical everywhere. The standard <random>
// distributions are not pinned across library implementations, which would
// break byte-identical fixtures.
struct Rng {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
    bool chance(int percent) { return below(100) < static_cast<std::size_t>(percent); }

    template <typename T>
    const T& pick(const std::vector<T>& pool) {
        return pool[below(pool.size())];
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }
};

const std::vector<std::string>& friendly_staff_lines() {
    static const std::vector<std::string> lines = {
        "The friendly staff made the whole trip feel easy.",
        "Friendly staff greeted us at the front desk.",
        "Such friendly staff and a smooth ride.",
    };
    return lines;
}

const std::vector<std::string>& great_pilot_lines() {
    static const std::vector<std::string> lines = {
        "Our great pilot kept everyone calm and informed.",
        "What a great pilot, the landing was gentle.",
        "A great pilot who clearly loves the job.",
    };
    return lines;
}

const std::vector<std::string>& long_wait_lines() {
    static const std::vector<std::string> lines = {
        "The long wait at the helipad ruined the mood.",
        "A long wait with no updates from anyone.",
        "We endured a long wait before boarding even started.",
    };
    return lines;
}

const std::vector<std::string>& cancellation_refund_lines() {
    static const std::vector<std::string> lines = {
        "Still chasing my cancellation refund weeks later.",
        "The cancellation refund policy is a joke.",
        "No cancellation refund after weather scrubbed our slot.",
    };
    return lines;
}

const std::vector<std::string>& positive_pool() {
    static const std::vector<std::string> lines = {
        "The views over the harbor were breathtaking.",
        "Booking online was quick and the website was simple.",
        "The safety briefing before the flight was clear and thorough.",
        "The helicopter looked spotless and well maintained.",
        "The guided tour pointed out every landmark below.",
        "Amazing views from the window the entire time.",
        "The ride felt safe from start to finish.",
        "Check in was fast and the crew loaded us quickly.",
        "Worth every dollar for the sunset tour.",
        "The cabin headsets made the narration easy to follow.",
        "The weekend discount made it an easy yes.",
    };
    return lines;
}

const std::vector<std::string>& negative_pool() {
    static const std::vector<std::string> lines = {
        "The flight was delayed twice without explanation.",
        "The waiting room was cramped and stuffy.",
        "Scratched windows made photos impossible.",
        "The schedule slipped by almost an hour.",
        "Felt rushed and unsafe during boarding.",
        "The front desk seemed overwhelmed and slow.",
        "Hidden fees pushed the price way up.",
        "The cabin smelled of fuel and looked worn.",
    };
    return lines;
}

const std::vector<std::string>& neutral_pool() {
    static const std::vector<std::string> lines = {
        "The ride was okay overall.",
        "Average experience, nothing memorable.",
        "The tour was fine but shorter than expected.",
        "Standard safety briefing, standard flight.",
        "It was acceptable for the price.",
        "Neither great nor terrible, just fine.",
    };
    return lines;
}

enum class Mood { positive, negative, neutral };

std::string compose_text(Mood mood, Rng& rng) {
    std::vector<std::string> sentences;
    auto add_unique = [&](const std::string& s) {
        if (std::find(sentences.begin(), sentences.end(), s) == sentences.end())
            sentences.push_back(s);
    };

    if (mood == Mood::positive) {
        if (rng.chance(40)) add_unique(rng.pick(friendly_staff_lines()));
        if (rng.chance(30)) add_unique(rng.pick(great_pilot_lines()));
    } else if (mood == Mood::negative) {
        if (rng.chance(45)) add_unique(rng.pick(long_wait_lines()));
        if (rng.chance(25)) add_unique(rng.pick(cancellation_refund_lines()));
    }

    const std::vector<std::string>& pool = mood == Mood::positive  ? positive_pool()
                                           : mood == Mood::negative ? negative_pool()
                                                                    : neutral_pool();
    const std::size_t target = 1 + rng.below(3);
    int guard = 0;
    while (sentences.size() < target && ++guard < 32) add_unique(rng.pick(pool));

    rng.shuffle(sentences);
    std::string text;
    for (std::size_t i = 0; i < sentences.size(); ++i) {
        if (i) text += ' ';
        text += sentences[i];
    }
    return text;
}

// Perturbations that the dedup normalization cancels out.
std::string perturb(const std::string& text, Rng& rng) {
    switch (rng.below(3)) {
        case 0: return text;
        case 1: {
            std::string upper = text;
            for (char& c : upper)
                if (c >= 'a' && c <= 'z') c -= 0x20;
            return upper;
        }
        default: {
            std::string padded = text;
            const std::size_t sp = padded.find(' ');
            if (sp != std::string::npos) padded.insert(sp, " ");
            padded += ' ';
            return padded;
        }
    }
}

std::string csv_field(const std::string& value) {
    const bool needs_quotes =
        value.find_first_of(",\"\n\r") != std::string::npos ||
        (!value.empty() && (value.front() == ' ' || value.back() == ' '));
    if (!needs_quotes) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::vector<ReviewRecord> generate_fixture(const FixtureSpec& spec) {
    if (spec.reviews < 1) throw ValidationError("fixture needs at least 1 review");
    const std::size_t n = static_cast<std::size_t>(spec.reviews);
    Rng rng{spec.seed};

    // class slots: 50% positive, 30% negative, rest neutral
    const std::size_t n_pos = n / 2;
    const std::size_t n_neg = n * 3 / 10;
    std::vector<Mood> moods;
    moods.insert(moods.end(), n_pos, Mood::positive);
    moods.insert(moods.end(), n_neg, Mood::negative);
    moods.insert(moods.end(), n - n_pos - n_neg, Mood::neutral);
    rng.shuffle(moods);

    // duplicate slots: 6%, never in the first fifth so a same-mood original
    // is (all but certainly) available
    const std::size_t n_dup = n * 6 / 100;
    std::vector<std::size_t> dup_candidates;
    for (std::size_t i = n / 5; i < n; ++i) dup_candidates.push_back(i);
    rng.shuffle(dup_candidates);
    std::set<std::size_t> dup_slots(dup_candidates.begin(),
                                    dup_candidates.begin() +
                                        std::min(n_dup, dup_candidates.size()));

    std::vector<ReviewRecord> records;
    records.reserve(n);
    std::set<std::string> seen_keys;
    std::vector<std::size_t> unique_of_mood[3];

    const std::vector<std::string> sources = {"heliview", "skytrips", "airloop"};

    for (std::size_t i = 0; i < n; ++i) {
        const Mood mood = moods[i];
        const std::size_t mi = static_cast<std::size_t>(mood);
        ReviewRecord rec;
        char id[16];
        std::snprintf(id, sizeof(id), "r%03zu", i + 1);
        rec.review_id = id;

        if (dup_slots.count(i) && !unique_of_mood[mi].empty()) {
            const ReviewRecord& base =
                records[rng.pick(unique_of_mood[mi])];
            rec.rating = base.rating;
            rec.text = perturb(base.text, rng);
        } else {
            switch (mood) {
                case Mood::positive: rec.rating = 4 + static_cast<int>(rng.below(2)); break;
                case Mood::negative: rec.rating = 1 + static_cast<int>(rng.below(2)); break;
                case Mood::neutral: rec.rating = 3; break;
            }
            std::string text = compose_text(mood, rng);
            int attempts = 0;
            while (seen_keys.count(std::to_string(rec.rating) + '\x1f' +
                                   normalize_for_dedup(text)) &&
                   ++attempts < 50)
                text = compose_text(mood, rng);
            if (attempts >= 50)
                text += " Trip number " + std::to_string(i + 1) + " for our group.";
            seen_keys.insert(std::to_string(rec.rating) + '\x1f' +
                             normalize_for_dedup(text));
            rec.text = std::move(text);
            unique_of_mood[mi].push_back(records.size());
        }

        if (rng.chance(40)) rec.source = rng.pick(sources);
        if (rng.chance(50)) {
            char date[16];
            std::snprintf(date, sizeof(date), "%04zu-%02zu-%02zu",
                          2016 + rng.below(8), 1 + rng.below(12), 1 + rng.below(28));
            rec.date = date;
        }
        records.push_back(std::move(rec));
    }
    return records;
}

void write_fixture_csv(std::span<const ReviewRecord> records,
                       const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out << "review_id,rating,text,source,date\n";
    for (const ReviewRecord& rec : records) {
        out << csv_field(rec.review_id) << ',' << rec.rating << ','
            << csv_field(rec.text) << ',' << csv_field(rec.source.value_or(""))
            << ',' << csv_field(rec.date.value_or("")) << '\n';
    }
    if (!out) throw IoError("cannot write " + path.string());
}

void write_fixture_jsonl(std::span<const ReviewRecord> records,
                         const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    for (const ReviewRecord& rec : records) {
        nlohmann::json j;
        j["review_id"] = rec.review_id;
        j["rating"] = rec.rating;
        j["text"] = rec.text;
        if (rec.source) j["source"] = *rec.source;
        if (rec.date) j["date"] = *rec.date;
        out << j.dump() << '\n';
    }
    if (!out) throw IoError("cannot write " + path.string());
}

}  // namespace revmine
