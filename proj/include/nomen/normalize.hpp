#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>

#include "nomen/detail/unicode_data.hpp"

namespace nomen {

// Normalized name: nonempty, lowercase ASCII letters only. Doubles as the
// join key between query names and reference data.
using NameKey = std::string;

namespace detail {

inline const char32_t* decomposition_of(char32_t cp, std::size_t& len) {
  const DecompEntry* begin = std::begin(kDecompEntries);
  const DecompEntry* end = std::end(kDecompEntries);
  const DecompEntry* it = std::lower_bound(
      begin, end, cp, [](const DecompEntry& e, char32_t v) { return e.cp < v; });
  if (it == end || it->cp != cp) return nullptr;
  len = it->length;
  return kDecompPool + it->offset;
}

inline bool is_nonspacing_mark(char32_t cp) {
  auto begin = std::begin(kMarkRanges);
  auto end = std::end(kMarkRanges);
  auto it = std::upper_bound(begin, end, cp,
                             [](char32_t v, const char32_t(&r)[2]) { return v < r[0]; });
  return it != begin && cp <= (*(it - 1))[1];
}

// Decodes one UTF-8 codepoint; malformed bytes decode to U+FFFD and consume
// a single byte, so bad input degrades to dropped characters.
inline char32_t decode_utf8(std::string_view s, std::size_t& i) {
  const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
  unsigned char b0 = byte(i);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int extra;
  char32_t cp;
  if ((b0 & 0xE0) == 0xC0) {
    extra = 1;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    extra = 2;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    extra = 3;
    cp = b0 & 0x07;
  } else {
    ++i;
    return 0xFFFD;
  }
  if (i + 1 + extra > s.size()) {
    ++i;
    return 0xFFFD;
  }
  char32_t out = cp;
  for (int k = 1; k <= extra; ++k) {
    unsigned char b = byte(i + k);
    if ((b & 0xC0) != 0x80) {
      ++i;
      return 0xFFFD;
    }
    out = (out << 6) | (b & 0x3F);
  }
  i += 1 + extra;
  return out;
}

inline bool is_token_separator(char32_t cp) {
  switch (cp) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case U'\f':
    case U'\v':
    case U'-':
    case U'\'':
    case U'.':
    case 0x2019:  // right single quotation mark, the common apostrophe glyph
      return true;
    default:
      return cp >= 0x2010 && cp <= 0x2015;  // hyphen/dash block
  }
}

}  // namespace detail

// Maps an arbitrary Unicode name to its NameKey, or nullopt (NoName) when no
// ASCII letters survive. Steps, in order: compatibility-decompose, drop
// nonspacing marks, lowercase, split on whitespace/hyphen/apostrophe/period,
// keep the first token, drop every remaining non-[a-z] character.
// Idempotent: the image is exactly the set of [a-z]+ strings.
inline std::optional<NameKey> normalize_name(std::string_view raw) {
  std::u32string decomposed;
  decomposed.reserve(raw.size());
  std::size_t i = 0;
  while (i < raw.size()) {
    char32_t cp = detail::decode_utf8(raw, i);
    std::size_t len = 0;
    if (const char32_t* exp = detail::decomposition_of(cp, len)) {
      decomposed.append(exp, len);
    } else {
      decomposed.push_back(cp);
    }
  }

  NameKey token;
  bool in_leading_separators = true;
  for (char32_t cp : decomposed) {
    if (detail::is_nonspacing_mark(cp)) continue;
    if (detail::is_token_separator(cp)) {
      if (in_leading_separators) continue;  // "  Anna" still yields "anna"
      break;                                // end of first token
    }
    in_leading_separators = false;
    if (cp >= U'A' && cp <= U'Z') cp = cp - U'A' + U'a';
    if (cp >= U'a' && cp <= U'z') token.push_back(static_cast<char>(cp));
  }
  if (token.empty()) return std::nullopt;
  return token;
}

}  // namespace nomen
