#include "revmine/corpus.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "revmine/errors.hpp"
#include "revmine/text_util.hpp"

namespace revmine {
namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("cannot read " + path.string());
    return buf.str();
}

// One CSV record per RFC 4180: quoted fields may contain commas, quotes
// (doubled) and line breaks. Returns false at end of input.
bool read_csv_record(std::string_view data, std::size_t& pos,
                     std::vector<std::string>& fields, std::string& raw) {
    fields.clear();
    raw.clear();
    if (pos >= data.size()) return false;

    std::string field;
    bool quoted = false;
    const std::size_t start = pos;
    while (pos < data.size()) {
        const char c = data[pos];
        if (quoted) {
            if (c == '"') {
                if (pos + 1 < data.size() && data[pos + 1] == '"') {
                    field.push_back('"');
                    pos += 2;
                } else {
                    quoted = false;
                    ++pos;
                }
            } else {
                field.push_back(c);
                ++pos;
            }
            continue;
        }
        if (c == '"' && field.empty()) {
            quoted = true;
            ++pos;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
            ++pos;
        } else if (c == '\n' || c == '\r') {
            break;
        } else {
            field.push_back(c);
            ++pos;
        }
    }
    fields.push_back(std::move(field));
    raw.assign(data.substr(start, pos - start));
    // consume one line break (\n, \r\n or \r)
    if (pos < data.size() && data[pos] == '\r') ++pos;
    if (pos < data.size() && data[pos] == '\n') ++pos;
    return true;
}

std::optional<std::string> optional_field(const std::string& value) {
    std::string t = trim(value);
    if (t.empty()) return std::nullopt;
    return t;
}

// Shared row validation; returns the rejection reason or builds the record.
struct RowInput {
    std::optional<std::string> review_id;
    std::optional<std::string> rating_text;  // unparsed; absent when missing
    std::optional<long long> rating_value;   // parsed by the JSON loader
    std::optional<std::string> text;
    std::optional<std::string> source;
    std::optional<std::string> date;
};

std::optional<std::string> validate_row(const RowInput& in, ReviewRecord& out) {
    if (!in.review_id || trim(*in.review_id).empty()) return "missing review_id";
    long long rating;
    if (in.rating_value) {
        rating = *in.rating_value;
    } else if (in.rating_text) {
        const std::string t = trim(*in.rating_text);
        std::size_t used = 0;
        try {
            rating = std::stoll(t, &used);
        } catch (const std::exception&) {
            return "rating not an integer";
        }
        if (used != t.size()) return "rating not an integer";
    } else {
        return "missing rating";
    }
    if (rating < 1 || rating > 5) return "rating out of range";
    if (!in.text || trim(*in.text).empty()) return "missing text";

    out.review_id = trim(*in.review_id);
    out.rating = static_cast<int>(rating);
    out.text = *in.text;
    out.source = in.source;
    out.date = in.date;
    return std::nullopt;
}

class CorpusBuilder {
public:
    void add(const RowInput& in, const std::string& raw) {
        if (!utf8_valid(raw)) {
            reject(raw, "invalid utf-8");
            return;
        }
        ReviewRecord rec;
        if (auto reason = validate_row(in, rec)) {
            reject(raw, *reason);
            return;
        }
        if (!seen_ids_.insert(rec.review_id).second) {
            reject(raw, "duplicate review_id");
            return;
        }
        corpus_.records.push_back(std::move(rec));
    }

    void reject(const std::string& raw, const std::string& reason) {
        corpus_.rejected.push_back({raw, reason});
    }

    Corpus finish(const std::filesystem::path& path) {
        if (corpus_.records.empty())
            throw EmptyCorpusError("no valid records in " + path.string());
        return std::move(corpus_);
    }

private:
    Corpus corpus_;
    std::unordered_set<std::string> seen_ids_;
};

}  // namespace

Corpus ingest_csv(const std::filesystem::path& path, bool has_header) {
    const std::string data = read_file(path);
    CorpusBuilder builder;

    std::size_t pos = 0;
    std::vector<std::string> fields;
    std::string raw;
    bool first = true;
    while (read_csv_record(data, pos, fields, raw)) {
        if (fields.size() == 1 && trim(fields[0]).empty()) continue;  // blank line
        if (first && has_header) {
            first = false;
            continue;
        }
        first = false;
        if (fields.size() < 3 || fields.size() > 5) {
            builder.reject(raw, "wrong column count");
            continue;
        }
        RowInput in;
        in.review_id = fields[0];
        in.rating_text = fields[1];
        in.text = fields[2];
        if (fields.size() > 3) in.source = optional_field(fields[3]);
        if (fields.size() > 4) in.date = optional_field(fields[4]);
        builder.add(in, raw);
    }
    return builder.finish(path);
}

Corpus ingest_jsonl(const std::filesystem::path& path) {
    const std::string data = read_file(path);
    CorpusBuilder builder;

    std::size_t pos = 0;
    while (pos < data.size()) {
        std::size_t eol = data.find('\n', pos);
        if (eol == std::string::npos) eol = data.size();
        std::string line = data.substr(pos, eol - pos);
        pos = eol + 1;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;

        if (!utf8_valid(line)) {
            builder.reject(line, "invalid utf-8");
            continue;
        }
        nlohmann::json obj = nlohmann::json::parse(line, nullptr, false);
        if (obj.is_discarded() || !obj.is_object()) {
            builder.reject(line, "parse error");
            continue;
        }

        RowInput in;
        if (obj.contains("review_id") && obj["review_id"].is_string())
            in.review_id = obj["review_id"].get<std::string>();
        if (obj.contains("rating")) {
            if (obj["rating"].is_number_integer())
                in.rating_value = obj["rating"].get<long long>();
            else
                in.rating_text = obj["rating"].dump();  // force "not an integer"
        }
        if (obj.contains("text") && obj["text"].is_string())
            in.text = obj["text"].get<std::string>();
        if (obj.contains("source") && obj["source"].is_string())
            in.source = optional_field(obj["source"].get<std::string>());
        if (obj.contains("date") && obj["date"].is_string())
            in.date = optional_field(obj["date"].get<std::string>());
        builder.add(in, line);
    }
    return builder.finish(path);
}

std::string dedup_key(const ReviewRecord& record) {
    return std::to_string(record.rating) + '\x1f' + normalize_for_dedup(record.text);
}

Corpus dedup(Corpus corpus) {
    Corpus out;
    out.rejected = std::move(corpus.rejected);
    std::unordered_set<std::string> seen;
    for (ReviewRecord& rec : corpus.records) {
        if (seen.insert(dedup_key(rec)).second)
            out.records.push_back(std::move(rec));
        else
            out.rejected.push_back({rec.review_id + ": " + rec.text, "duplicate"});
    }
    return out;
}

}  // namespace revmine
