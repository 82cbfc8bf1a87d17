#pragma once

// UTF-8 helpers. All offsets and lengths in the document model are counted
// in Unicode scalar values, not bytes, so every piece of code that slices
// text goes through these.

#include <cstdint>
#include <string>
#include <vector>

namespace radtext::uni {

// Decodes UTF-8 into code points. Throws ParseError on invalid sequences.
std::u32string to_u32(const std::string& utf8);

std::string to_utf8(const std::u32string& text);
std::string to_utf8(char32_t cp);

// Number of code points in a UTF-8 string.
std::size_t length(const std::string& utf8);

// Substring by code-point index; pos/len semantics like std::string::substr.
std::string substr(const std::string& utf8, std::size_t pos,
                   std::size_t len = std::string::npos);

// byte_to_cp[i] = index of the code point that byte i belongs to; the
// vector has one extra entry mapping end-of-string. Used to translate
// std::regex byte positions into code-point offsets.
std::vector<std::size_t> byte_to_cp_map(const std::string& utf8);

// cp_to_byte[i] = byte offset where code point i starts (plus end sentinel).
std::vector<std::size_t> cp_to_byte_map(const std::string& utf8);

} // namespace radtext::uni
