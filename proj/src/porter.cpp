#include "revmine/porter.hpp"

#include <array>
#include <cstddef>

namespace revmine {
namespace {

bool is_vowel_letter(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// A consonant is a letter other than a,e,i,o,u and other than y preceded
// by a consonant; y at position 0 counts as a consonant.
bool is_cons(std::string_view w, std::size_t i) {
    const char c = w[i];
    if (is_vowel_letter(c)) return false;
    if (c == 'y') return i == 0 ? true : !is_cons(w, i - 1);
    return true;
}

// m in [C](VC)^m[V]
int measure(std::string_view stem) {
    const std::size_t n = stem.size();
    std::size_t i = 0;
    int m = 0;
    while (i < n && is_cons(stem, i)) ++i;
    while (i < n) {
        while (i < n && !is_cons(stem, i)) ++i;
        if (i >= n) break;
        ++m;
        while (i < n && is_cons(stem, i)) ++i;
    }
    return m;
}

bool contains_vowel(std::string_view stem) {
    for (std::size_t i = 0; i < stem.size(); ++i)
        if (!is_cons(stem, i)) return true;
    return false;
}

bool ends_double_cons(std::string_view w) {
    const std::size_t n = w.size();
    return n >= 2 && w[n - 1] == w[n - 2] && is_cons(w, n - 1);
}

// *o: ends cvc where the final consonant is not w, x or y
bool ends_cvc(std::string_view w) {
    const std::size_t n = w.size();
    if (n < 3) return false;
    const char last = w[n - 1];
    return is_cons(w, n - 3) && !is_cons(w, n - 2) && is_cons(w, n - 1) &&
           last != 'w' && last != 'x' && last != 'y';
}

bool ends_with(std::string_view w, std::string_view suf) {
    return w.size() >= suf.size() && w.substr(w.size() - suf.size()) == suf;
}

struct Rule {
    std::string_view suffix;
    std::string_view replacement;
};

// Longest matching suffix wins; nullptr when none matches.
template <std::size_t N>
const Rule* longest_rule(std::string_view w, const std::array<Rule, N>& rules) {
    const Rule* best = nullptr;
    for (const Rule& r : rules)
        if (ends_with(w, r.suffix) && (!best || r.suffix.size() > best->suffix.size()))
            best = &r;
    return best;
}

std::string step1a(std::string_view w) {
    static constexpr std::array<Rule, 4> rules{
        Rule{"sses", "ss"}, Rule{"ies", "i"}, Rule{"ss", "ss"}, Rule{"s", ""}};
    const Rule* r = longest_rule(w, rules);
    if (!r) return std::string(w);
    return std::string(w.substr(0, w.size() - r->suffix.size())) +
           std::string(r->replacement);
}

std::string step1b_extra(std::string w) {
    if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz"))
        return w + "e";
    if (ends_double_cons(w)) {
        const char c = w.back();
        if (c != 'l' && c != 's' && c != 'z') {
            w.pop_back();
            return w;
        }
        return w;
    }
    if (measure(w) == 1 && ends_cvc(w)) return w + "e";
    return w;
}

std::string step1b(std::string_view w) {
    if (ends_with(w, "eed")) {
        std::string_view stem = w.substr(0, w.size() - 3);
        if (measure(stem) > 0) return std::string(stem) + "ee";
        return std::string(w);
    }
    if (ends_with(w, "ed")) {
        std::string_view stem = w.substr(0, w.size() - 2);
        if (contains_vowel(stem)) return step1b_extra(std::string(stem));
        return std::string(w);
    }
    if (ends_with(w, "ing")) {
        std::string_view stem = w.substr(0, w.size() - 3);
        if (contains_vowel(stem)) return step1b_extra(std::string(stem));
        return std::string(w);
    }
    return std::string(w);
}

std::string step1c(std::string_view w) {
    if (ends_with(w, "y") && contains_vowel(w.substr(0, w.size() - 1)))
        return std::string(w.substr(0, w.size() - 1)) + "i";
    return std::string(w);
}

template <std::size_t N>
std::string map_rules_m0(std::string_view w, const std::array<Rule, N>& rules) {
    const Rule* r = longest_rule(w, rules);
    if (!r) return std::string(w);
    std::string_view stem = w.substr(0, w.size() - r->suffix.size());
    if (measure(stem) > 0) return std::string(stem) + std::string(r->replacement);
    return std::string(w);
}

std::string step2(std::string_view w) {
    static constexpr std::array<Rule, 20> rules{
        Rule{"ational", "ate"}, Rule{"tional", "tion"}, Rule{"enci", "ence"},
        Rule{"anci", "ance"},   Rule{"izer", "ize"},    Rule{"abli", "able"},
        Rule{"alli", "al"},     Rule{"entli", "ent"},   Rule{"eli", "e"},
        Rule{"ousli", "ous"},   Rule{"ization", "ize"}, Rule{"ation", "ate"},
        Rule{"ator", "ate"},    Rule{"alism", "al"},    Rule{"iveness", "ive"},
        Rule{"fulness", "ful"}, Rule{"ousness", "ous"}, Rule{"aliti", "al"},
        Rule{"iviti", "ive"},   Rule{"biliti", "ble"}};
    return map_rules_m0(w, rules);
}

std::string step3(std::string_view w) {
    static constexpr std::array<Rule, 7> rules{
        Rule{"icate", "ic"}, Rule{"ative", ""}, Rule{"alize", "al"},
        Rule{"iciti", "ic"}, Rule{"ical", "ic"}, Rule{"ful", ""},
        Rule{"ness", ""}};
    return map_rules_m0(w, rules);
}

std::string step4(std::string_view w) {
    static constexpr std::array<Rule, 19> rules{
        Rule{"al", ""},    Rule{"ance", ""}, Rule{"ence", ""}, Rule{"er", ""},
        Rule{"ic", ""},    Rule{"able", ""}, Rule{"ible", ""}, Rule{"ant", ""},
        Rule{"ement", ""}, Rule{"ment", ""}, Rule{"ent", ""},  Rule{"ion", ""},
        Rule{"ou", ""},    Rule{"ism", ""},  Rule{"ate", ""},  Rule{"iti", ""},
        Rule{"ous", ""},   Rule{"ive", ""},  Rule{"ize", ""}};
    const Rule* r = longest_rule(w, rules);
    if (!r) return std::string(w);
    std::string_view stem = w.substr(0, w.size() - r->suffix.size());
    bool ok = measure(stem) > 1;
    if (r->suffix == "ion")
        ok = ok && !stem.empty() && (stem.back() == 's' || stem.back() == 't');
    return ok ? std::string(stem) : std::string(w);
}

std::string step5a(std::string_view w) {
    if (ends_with(w, "e")) {
        std::string_view stem = w.substr(0, w.size() - 1);
        const int m = measure(stem);
        if (m > 1 || (m == 1 && !ends_cvc(stem))) return std::string(stem);
    }
    return std::string(w);
}

std::string step5b(std::string_view w) {
    if (w.size() >= 2 && w.back() == 'l' && ends_double_cons(w) && measure(w) > 1)
        return std::string(w.substr(0, w.size() - 1));
    return std::string(w);
}

}  // namespace

std::string porter_stem(std::string_view word) {
    if (word.empty()) return std::string(word);
    for (char c : word)
        if (static_cast<unsigned char>(c) >= 0x80) return std::string(word);
    std::string w = step1a(word);
    w = step1b(w);
    w = step1c(w);
    w = step2(w);
    w = step3(w);
    w = step4(w);
    w = step5a(w);
    w = step5b(w);
    return w;
}

}  // namespace revmine
