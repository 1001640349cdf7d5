#pragma once
// Shared tokenizer for document text and gazetteer surfaces. Dictionary
// phrases can only line up with text spans if both sides agree on token
// boundaries, so this is the single tokenizer used everywhere.
//
// Rules: ASCII letters are lowercased; whitespace and the separator set
// . , / ( ) ; : ' " - & split tokens and are dropped; every other byte is
// token material. Hyphens separate, so "DOE-funded" yields "doe","funded".

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace scngen {

struct Token {
  std::string text;            // lowercased
  std::size_t start_char = 0;  // byte offset into the original text
  std::size_t end_char = 0;    // one past the last byte

  friend bool operator==(const Token&, const Token&) = default;
};

constexpr bool is_token_separator(char c) {
  switch (c) {
    case ' ':
    case '\t':
    case '\n':
    case '\r':
    case '\f':
    case '\v':
    case '.':
    case ',':
    case '/':
    case '(':
    case ')':
    case ';':
    case ':':
    case '\'':
    case '"':
    case '-':
    case '&':
      return true;
    default:
      return false;
  }
}

constexpr char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? char(c + ('a' - 'A')) : c;
}

inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_token_separator(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    std::string word;
    while (i < text.size() && !is_token_separator(text[i])) {
      word.push_back(ascii_lower(text[i]));
      ++i;
    }
    tokens.push_back(Token{std::move(word), start, i});
  }
  return tokens;
}

inline std::vector<std::string> token_texts(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.text);
  return out;
}

}  // namespace scngen
