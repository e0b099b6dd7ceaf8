// Copyright 2026 The Webskill Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>

namespace webskill::dsl::detail {
namespace {

constexpr std::array<std::string_view, 35> kKeywords = {
    "False", "None",   "True",  "and",    "as",       "assert", "async",
    "await", "break",  "class", "continue", "def",    "del",    "elif",
    "else",  "except", "finally", "for",  "from",     "global", "if",
    "import", "in",    "is",    "lambda", "nonlocal", "not",    "or",
    "pass",  "raise",  "return", "try",   "while",    "with",   "yield"};

constexpr std::array<std::string_view, 14> kTwoCharOps = {
    "->", "**", "//", "==", "!=", "<=", ">=", ":=", "+=", "-=", "*=", "/=", "<<", ">>"};

class Lexer {
 public:
  Lexer(std::string_view src, int first_line) : src_(src), line_(first_line) {}

  std::vector<Token> run() {
    indents_.push_back(0);
    at_line_start_ = true;
    while (pos_ < src_.size()) {
      if (at_line_start_ && depth_ == 0) {
        if (!handle_indentation()) continue;
      }
      char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\f') {
        advance();
      } else if (c == '\r') {
        advance();
      } else if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (c == '\\' && peek(1) == '\n') {
        advance();
        advance();
      } else if (c == '\n') {
        if (depth_ == 0 && !tokens_.empty() && tokens_.back().kind != Tok::newline &&
            tokens_.back().kind != Tok::indent && tokens_.back().kind != Tok::dedent) {
          emit(Tok::newline, "\n", here());
        }
        advance();
        if (depth_ == 0) at_line_start_ = true;
      } else if (c == '"' || c == '\'') {
        lex_string(false);
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
        lex_number();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        lex_name();
      } else {
        lex_op();
      }
    }
    if (!tokens_.empty() && tokens_.back().kind != Tok::newline &&
        tokens_.back().kind != Tok::dedent && tokens_.back().kind != Tok::indent) {
      emit(Tok::newline, "\n", here());
    }
    while (indents_.size() > 1) {
      indents_.pop_back();
      emit(Tok::dedent, "", here());
    }
    emit(Tok::end, "", here());
    return std::move(tokens_);
  }

 private:
  char peek(std::size_t k) const { return pos_ + k < src_.size() ? src_[pos_ + k] : '\0'; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  SourceLoc here() const { return {line_, col_}; }

  void emit(Tok kind, std::string text, SourceLoc loc) {
    Token t;
    t.kind = kind;
    t.text = std::move(text);
    t.loc = loc;
    tokens_.push_back(std::move(t));
  }

  [[noreturn]] void fail(const std::string& msg, SourceLoc loc) const {
    throw ParseError(ParseErrorKind::syntax_error, loc, msg);
  }

  // Returns false if the line was blank (consumed entirely).
  bool handle_indentation() {
    int width = 0;
    std::size_t p = pos_;
    while (p < src_.size() && (src_[p] == ' ' || src_[p] == '\t' || src_[p] == '\f')) {
      width = src_[p] == '\t' ? (width / 8 + 1) * 8 : width + 1;
      ++p;
    }
    if (p >= src_.size() || src_[p] == '\n' || src_[p] == '#' || src_[p] == '\r') {
      while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      if (pos_ < src_.size()) advance();
      return false;
    }
    while (pos_ < p) advance();
    at_line_start_ = false;
    if (width > indents_.back()) {
      indents_.push_back(width);
      emit(Tok::indent, "", here());
    } else {
      while (width < indents_.back()) {
        indents_.pop_back();
        emit(Tok::dedent, "", here());
      }
      if (width != indents_.back()) fail("inconsistent dedent", here());
    }
    return true;
  }

  void lex_string(bool raw) {
    SourceLoc loc = here();
    char quote = src_[pos_];
    bool triple = peek(1) == quote && peek(2) == quote;
    for (int i = 0; i < (triple ? 3 : 1); ++i) advance();
    std::string out;
    while (true) {
      if (pos_ >= src_.size()) fail("unterminated string literal", loc);
      char c = src_[pos_];
      if (triple) {
        if (c == quote && peek(1) == quote && peek(2) == quote) {
          advance();
          advance();
          advance();
          break;
        }
      } else {
        if (c == quote) {
          advance();
          break;
        }
        if (c == '\n') fail("unterminated string literal", loc);
      }
      if (c == '\\' && !raw) {
        advance();
        if (pos_ >= src_.size()) fail("unterminated string literal", loc);
        char e = src_[pos_];
        switch (e) {
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case 'r': out += '\r'; break;
          case '\\': out += '\\'; break;
          case '\'': out += '\''; break;
          case '"': out += '"'; break;
          case '\n': break;  // line continuation inside a string
          default:
            out += '\\';
            out += e;
        }
        advance();
        continue;
      }
      out += c;
      advance();
    }
    Token t;
    t.kind = Tok::string;
    t.text = std::move(out);
    t.loc = loc;
    tokens_.push_back(std::move(t));
  }

  void lex_number() {
    SourceLoc loc = here();
    std::size_t start = pos_;
    bool integral = true;
    while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) ||
                                  src_[pos_] == '_')) {
      advance();
    }
    if (pos_ < src_.size() && src_[pos_] == '.') {
      integral = false;
      advance();
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      integral = false;
      advance();
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) advance();
      if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        fail("malformed number literal", loc);
      }
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
    }
    std::string spelling(src_.substr(start, pos_ - start));
    spelling.erase(std::remove(spelling.begin(), spelling.end(), '_'), spelling.end());
    if (pos_ < src_.size() &&
        (std::isalpha(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      fail("malformed number literal", loc);
    }
    Token t;
    t.kind = Tok::number;
    t.number = std::strtod(spelling.c_str(), nullptr);
    t.integral = integral;
    t.text = spelling;
    t.loc = loc;
    tokens_.push_back(std::move(t));
  }

  void lex_name() {
    SourceLoc loc = here();
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      advance();
    }
    std::string word(src_.substr(start, pos_ - start));
    if (pos_ < src_.size() && (src_[pos_] == '\'' || src_[pos_] == '"')) {
      std::string lower = word;
      std::transform(lower.begin(), lower.end(), lower.begin(),
                     [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
      if (lower == "r") {
        lex_string(true);
        tokens_.back().loc = loc;
        return;
      }
      if (lower == "u") {
        lex_string(false);
        tokens_.back().loc = loc;
        return;
      }
      if (lower.find('f') != std::string::npos) {
        throw ParseError(ParseErrorKind::unsupported_construct, loc,
                         "string interpolation (f-strings) is not supported");
      }
      if (lower.find('b') != std::string::npos) {
        throw ParseError(ParseErrorKind::unsupported_construct, loc,
                         "byte strings are not supported");
      }
    }
    emit(Tok::name, std::move(word), loc);
  }

  void lex_op() {
    SourceLoc loc = here();
    std::string two{src_.substr(pos_, 2)};
    if (two.size() == 2 &&
        std::find(kTwoCharOps.begin(), kTwoCharOps.end(), two) != kTwoCharOps.end()) {
      advance();
      advance();
      emit(Tok::op, two, loc);
      return;
    }
    char c = src_[pos_];
    static constexpr std::string_view kSingle = "()[]{},:.;=+-*/%<>|&@~^!";
    if (kSingle.find(c) == std::string_view::npos) {
      fail(std::string("unexpected character '") + c + "'", loc);
    }
    if (c == '(' || c == '[' || c == '{') ++depth_;
    if ((c == ')' || c == ']' || c == '}') && depth_ > 0) --depth_;
    advance();
    emit(Tok::op, std::string(1, c), loc);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_;
  int col_ = 1;
  int depth_ = 0;
  bool at_line_start_ = true;
  std::vector<int> indents_;
  std::vector<Token> tokens_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source, int first_line) {
  return Lexer(source, first_line).run();
}

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

}  // namespace webskill::dsl::detail
