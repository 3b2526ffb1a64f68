#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace revmine {

// Byte-level UTF-8 helpers and a small, fixed codepoint classifier.
//
// The classifier covers ASCII plus the Latin-1/Latin-Extended, Greek and
// Cyrillic letter ranges; anything outside is treated as a separator. This
// keeps tokenization deterministic everywhere with no locale or ICU
// dependency, which matters more here than full Unicode coverage.

bool utf8_valid(std::string_view bytes);

// Decodes one codepoint starting at `pos`; advances `pos` past it.
// Must only be called on text that passed utf8_valid().
char32_t utf8_decode(std::string_view bytes, std::size_t& pos);

void utf8_append(std::string& out, char32_t cp);

bool is_letter(char32_t cp);
bool is_digit(char32_t cp);

// Simple (one-to-one) lowercase mapping for the covered ranges.
char32_t to_lower(char32_t cp);
std::string lowercase(std::string_view text);

// ASCII-only helpers used for file formats and keys.
std::string ascii_lower(std::string_view text);
std::string trim(std::string_view text);

// Trims, collapses internal whitespace runs to one space, casefolds.
// This is the text half of the corpus dedup key.
std::string normalize_for_dedup(std::string_view text);

// FNV-1a 64-bit, rendered as "fnv1a64:<16 hex digits>".
std::string content_digest(std::string_view bytes);

}  // namespace revmine
