#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace attrib {

// Strict UTF-8 decoding. Rejects overlong forms, surrogates and truncated
// sequences with a validation error; the byte offset is named in the message.
std::u32string decode_utf8(std::string_view text);

// Decodes the code point starting at `pos` and advances it.
char32_t next_codepoint(std::string_view text, std::size_t& pos);

void append_utf8(std::string& out, char32_t cp);
std::string encode_utf8(std::u32string_view text);

// Unicode White_Space code points.
bool is_unicode_space(char32_t cp);

// Simple case mapping covering ASCII, Latin-1 Supplement, Latin Extended-A
// and the comma-below S/T pairs. Sufficient for Romanian and general Latin
// text; other scripts pass through unchanged.
char32_t to_lower(char32_t cp);

// Punctuation trimmed from word edges when matching function words.
bool is_edge_punct(char32_t cp);

std::string lower_utf8(std::string_view word);

// Strips leading/trailing punctuation from a word token; the core may be
// empty when the token is punctuation-only.
std::string trim_word_punct(std::string_view word);

}  // namespace attrib
