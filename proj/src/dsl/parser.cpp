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

#include "webskill/dsl/parser.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <sstream>

#include "lexer.hpp"

namespace webskill::dsl {

using detail::Tok;
using detail::Token;

std::string_view to_string(ParseErrorKind kind) {
  return kind == ParseErrorKind::syntax_error ? "SyntaxError" : "UnsupportedConstruct";
}

namespace {

std::string format_loc_message(ParseErrorKind kind, SourceLoc loc, const std::string& msg) {
  std::ostringstream os;
  os << to_string(kind) << " at line " << loc.line << ", column " << loc.column << ": " << msg;
  return os.str();
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, SourceLoc loc, const std::string& message)
    : Error(format_loc_message(kind, loc, message)), kind_(kind), loc_(loc) {}

std::string clean_docstring(std::string_view raw) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : raw) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  lines.push_back(cur);
  for (auto& l : lines) {
    while (!l.empty() && (l.back() == ' ' || l.back() == '\t')) l.pop_back();
  }
  // The first line keeps no indentation; the rest share a common margin.
  std::size_t margin = std::string::npos;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.empty()) continue;
    std::size_t indent = l.find_first_not_of(' ');
    margin = std::min(margin, indent);
  }
  std::size_t first = lines[0].find_first_not_of(' ');
  lines[0] = first == std::string::npos ? "" : lines[0].substr(first);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (margin != std::string::npos && lines[i].size() >= margin) lines[i] = lines[i].substr(margin);
  }
  while (!lines.empty() && lines.front().empty()) lines.erase(lines.begin());
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i) out += '\n';
    out += lines[i];
  }
  return out;
}

namespace {

[[noreturn]] void unsupported(SourceLoc loc, const std::string& what) {
  throw ParseError(ParseErrorKind::unsupported_construct, loc, what);
}
[[noreturn]] void syntax(SourceLoc loc, const std::string& what) {
  throw ParseError(ParseErrorKind::syntax_error, loc, what);
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::name: return "'" + t.text + "'";
    case Tok::string: return "string literal";
    case Tok::number: return "number";
    case Tok::op: return "'" + t.text + "'";
    case Tok::newline: return "end of line";
    case Tok::indent: return "indent";
    case Tok::dedent: return "dedent";
    case Tok::end: return "end of input";
  }
  return "token";
}

bool is_operator_continuation(const Token& t) {
  static constexpr std::string_view kOps[] = {"+",  "-",  "*",  "/",  "%",  "//", "**", "==",
                                              "!=", "<",  ">",  "<=", ">=", "&",  "|",  "^",
                                              "<<", ">>", "@",  "~"};
  if (t.kind == Tok::op) {
    return std::find(std::begin(kOps), std::end(kOps), t.text) != std::end(kOps);
  }
  return t.kind == Tok::name &&
         (t.text == "and" || t.text == "or" || t.text == "in" || t.text == "not" ||
          t.text == "is" || t.text == "if");
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  SkillProgram parse_definition() {
    SkillProgram prog;
    const Token& def = next();
    if (!def.is_name("def")) syntax(def.loc, "expected 'def'");
    const Token& name = next();
    if (name.kind != Tok::name || detail::is_keyword(name.text)) {
      syntax(name.loc, "expected function name");
    }
    prog.name = name.text;
    expect_op("(");
    parse_params(prog);
    if (peek().is_op("->")) {
      next();
      parse_type();  // return annotations are accepted and dropped
    }
    expect_op(":");
    if (peek().kind != Tok::newline) syntax(peek().loc, "function body must start on a new line");
    next();
    if (peek().kind != Tok::indent) syntax(peek().loc, "expected an indented function body");
    next();
    if (peek().kind == Tok::string) {
      std::size_t save = pos_;
      std::string doc = next().text;
      while (peek().kind == Tok::string) doc += next().text;
      if (peek().kind == Tok::newline) {
        next();
        prog.docstring = clean_docstring(doc);
      } else {
        pos_ = save;
      }
    }
    while (peek().kind != Tok::dedent && peek().kind != Tok::end) {
      prog.body.push_back(parse_statement());
    }
    if (prog.body.empty()) syntax(peek().loc, "function body has no statements");
    if (peek().kind == Tok::dedent) next();
    if (peek().kind != Tok::end) {
      const Token& t = peek();
      if (t.kind == Tok::indent) syntax(t.loc, "unexpected indent");
      unsupported(t.loc, "top-level code after a function definition");
    }
    return prog;
  }

  Action parse_call_only() {
    const Token& name = next();
    if (name.kind != Tok::name || detail::is_keyword(name.text)) {
      syntax(name.loc, "expected an action name");
    }
    Action action;
    action.name = name.text;
    if (peek().is_op(".")) unsupported(peek().loc, "attribute access is not supported");
    expect_op("(");
    std::vector<Expr> args = parse_args(")");
    for (const auto& a : args) {
      auto v = literal_value(a);
      if (!v) unsupported(a.loc, "action arguments must be literals");
      action.args.push_back(std::move(*v));
    }
    while (peek().kind == Tok::newline) next();
    if (peek().kind != Tok::end) syntax(peek().loc, "unexpected " + describe(peek()) + " after call");
    return action;
  }

 private:
  const Token& peek(std::size_t k = 0) const {
    std::size_t i = std::min(pos_ + k, toks_.size() - 1);
    return toks_[i];
  }
  const Token& next() {
    const Token& t = toks_[std::min(pos_, toks_.size() - 1)];
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  void expect_op(std::string_view op) {
    const Token& t = next();
    if (!t.is_op(op)) {
      syntax(t.loc, "expected '" + std::string(op) + "' but found " + describe(t));
    }
  }
  void expect_newline() {
    const Token& t = peek();
    if (t.kind == Tok::newline) {
      next();
      return;
    }
    if (t.is_op(";")) unsupported(t.loc, "multiple statements on one line");
    if (t.is_op("=") || t.is_op("+=") || t.is_op("-=")) unsupported(t.loc, "assignment");
    if (t.is_op(".")) unsupported(t.loc, "attribute access is not supported");
    if (is_operator_continuation(t)) unsupported(t.loc, "operators are not supported");
    syntax(t.loc, "expected end of line but found " + describe(t));
  }

  void parse_params(SkillProgram& prog) {
    while (!peek().is_op(")")) {
      const Token& t = next();
      if (t.is_op("*") || t.is_op("**") || t.is_op("/")) {
        unsupported(t.loc, "variadic or positional-only parameters");
      }
      if (t.kind != Tok::name || detail::is_keyword(t.text)) syntax(t.loc, "expected parameter name");
      Param p;
      p.name = t.text;
      for (const auto& other : prog.params) {
        if (other.name == p.name) syntax(t.loc, "duplicate parameter '" + p.name + "'");
      }
      if (peek().is_op(":")) {
        next();
        p.type_hint = parse_type();
      }
      if (peek().is_op("=")) {
        next();
        Expr e = parse_expr();
        auto v = literal_value(e);
        if (!v) unsupported(e.loc, "parameter defaults must be literals");
        p.default_value = std::move(*v);
      } else if (!prog.params.empty() && prog.params.back().default_value) {
        syntax(t.loc, "parameter without default follows a parameter with a default");
      }
      prog.params.push_back(std::move(p));
      if (peek().is_op(",")) {
        next();
      } else if (!peek().is_op(")")) {
        syntax(peek().loc, "expected ',' or ')' in parameter list");
      }
    }
    next();
  }

  // Type hints are kept as canonical text: `str | None`, `list[str]`.
  std::string parse_type() {
    std::string out = parse_type_atom();
    while (peek().is_op("|")) {
      next();
      out += " | " + parse_type_atom();
    }
    return out;
  }
  std::string parse_type_atom() {
    const Token& t = next();
    std::string out;
    if (t.kind == Tok::name) {
      out = t.text;
      while (peek().is_op(".")) {
        next();
        const Token& part = next();
        if (part.kind != Tok::name) syntax(part.loc, "malformed type annotation");
        out += "." + part.text;
      }
    } else if (t.kind == Tok::string) {
      out = quote_string(t.text);
    } else {
      syntax(t.loc, "malformed type annotation");
    }
    if (peek().is_op("[")) {
      next();
      out += "[";
      bool first = true;
      while (!peek().is_op("]")) {
        if (!first) {
          expect_op(",");
          out += ", ";
          if (peek().is_op("]")) break;
        }
        out += parse_type();
        first = false;
      }
      next();
      out += "]";
    }
    return out;
  }

  std::vector<Statement> parse_block() {
    expect_op(":");
    std::vector<Statement> body;
    if (peek().kind != Tok::newline) {
      body.push_back(parse_simple_statement());
      return body;
    }
    next();
    if (peek().kind != Tok::indent) syntax(peek().loc, "expected an indented block");
    next();
    while (peek().kind != Tok::dedent && peek().kind != Tok::end) {
      body.push_back(parse_statement());
    }
    if (peek().kind == Tok::dedent) next();
    return body;
  }

  Statement parse_statement() {
    const Token& t = peek();
    if (t.kind == Tok::indent) syntax(t.loc, "unexpected indent");
    if (t.is_name("if")) return parse_if();
    if (t.is_name("for")) return parse_for();
    return parse_simple_statement();
  }

  Statement parse_simple_statement() {
    const Token& t = peek();
    SourceLoc loc = t.loc;
    if (t.kind == Tok::name && detail::is_keyword(t.text)) {
      if (t.text == "elif" || t.text == "else") syntax(loc, "'" + t.text + "' without matching 'if'");
      if (t.text == "if" || t.text == "for") {
        syntax(loc, "compound statement not allowed here");
      }
      if (t.text == "try" || t.text == "except" || t.text == "finally") {
        unsupported(loc, "try/except blocks are not supported");
      }
      if (t.text == "while") unsupported(loc, "while loops are not supported");
      if (t.text == "def") unsupported(loc, "nested function definitions are not supported");
      if (t.text == "return") unsupported(loc, "return statements are not supported");
      unsupported(loc, "'" + t.text + "' statements are not supported");
    }
    if (t.kind == Tok::string) unsupported(loc, "bare expression statements are not supported");
    if (t.kind != Tok::name) syntax(loc, "expected a statement but found " + describe(t));
    const Token& after = peek(1);
    if (after.is_op("=") || after.is_op("+=") || after.is_op("-=") || after.is_op(":=") ||
        after.is_op(",") || after.is_op(":")) {
      unsupported(loc, "assignment is not supported");
    }
    if (after.is_op(".")) unsupported(after.loc, "attribute access is not supported");
    if (!after.is_op("(")) unsupported(loc, "bare expression statements are not supported");
    std::string name = next().text;
    next();  // (
    if (find_predicate(name)) {
      unsupported(loc, "predicate '" + name + "' can only appear in a condition");
    }
    std::vector<Expr> args = parse_args(")");
    if (peek().is_op(".") || peek().is_op("(") || peek().is_op("[")) {
      unsupported(peek().loc, "call results cannot be used");
    }
    expect_newline();
    Statement st;
    st.loc = loc;
    if (auto kind = find_primitive(name)) {
      const auto& sig = signature_of(*kind);
      if (args.size() < sig.min_arity() || args.size() > sig.max_arity()) {
        std::ostringstream os;
        os << name << " expects ";
        if (sig.min_arity() == sig.max_arity()) {
          os << sig.max_arity();
        } else {
          os << sig.min_arity() << " to " << sig.max_arity();
        }
        os << " argument(s), got " << args.size();
        syntax(loc, os.str());
      }
      st.node = PrimitiveCall{*kind, std::move(args)};
    } else {
      st.node = SkillCall{std::move(name), std::move(args)};
    }
    return st;
  }

  Statement parse_if() {
    SourceLoc loc = next().loc;  // if / elif
    IfStmt node;
    node.condition = parse_condition();
    node.then_body = parse_block();
    if (peek().is_name("elif")) {
      node.else_body.push_back(parse_if());
    } else if (peek().is_name("else")) {
      next();
      node.else_body = parse_block();
    }
    Statement st;
    st.loc = loc;
    st.node = std::move(node);
    return st;
  }

  Statement parse_for() {
    SourceLoc loc = next().loc;
    ForStmt node;
    bool parens = false;
    if (peek().is_op("(")) {
      parens = true;
      next();
    }
    while (true) {
      const Token& v = next();
      if (v.kind != Tok::name || detail::is_keyword(v.text)) syntax(v.loc, "expected loop variable");
      node.vars.push_back(v.text);
      if (!peek().is_op(",")) break;
      next();
    }
    if (parens) expect_op(")");
    if (node.vars.size() > 2) unsupported(loc, "tuple unpacking beyond enumerate pairs");
    if (node.vars.size() == 2 && node.vars[0] == node.vars[1]) {
      syntax(loc, "duplicate loop variable");
    }
    const Token& in = next();
    if (!in.is_name("in")) syntax(in.loc, "expected 'in'");
    if (peek().is_name("enumerate") && peek(1).is_op("(")) {
      next();
      next();
      node.enumerate = true;
      node.iterable = parse_expr();
      if (peek().is_op(",")) unsupported(peek().loc, "enumerate start offsets are not supported");
      expect_op(")");
    } else {
      node.iterable = parse_expr();
    }
    if (node.enumerate && node.vars.size() != 2) {
      unsupported(loc, "enumerate requires an (index, item) pair");
    }
    if (!node.enumerate && node.vars.size() != 1) unsupported(loc, "tuple unpacking");
    const auto& it = node.iterable.node;
    if (!std::holds_alternative<VarRef>(it) && !std::holds_alternative<ListLit>(it) &&
        !std::holds_alternative<SliceExpr>(it)) {
      unsupported(node.iterable.loc, "loops must iterate a list parameter, list literal, or slice");
    }
    if (peek().is_name("else")) unsupported(peek().loc, "for/else is not supported");
    node.body = parse_block();
    if (peek().is_name("else")) unsupported(peek().loc, "for/else is not supported");
    Statement st;
    st.loc = loc;
    st.node = std::move(node);
    return st;
  }

  Condition parse_condition() {
    Condition c = parse_condition_term();
    const Token& t = peek();
    if (t.is_name("and") || t.is_name("or")) unsupported(t.loc, "boolean operators are not supported");
    if (is_operator_continuation(t) && !t.is_op("|")) unsupported(t.loc, "comparisons are not supported");
    return c;
  }

  Condition parse_condition_term() {
    const Token& t = peek();
    Condition c;
    if (t.is_name("not")) {
      next();
      NotCond n;
      n.inner.push_back(parse_condition_term());
      c.node = std::move(n);
      return c;
    }
    if (t.is_op("(")) {
      next();
      c = parse_condition();
      expect_op(")");
      return c;
    }
    if (t.kind == Tok::name && peek(1).is_op("(")) {
      auto pred = find_predicate(t.text);
      if (!pred) unsupported(t.loc, "call to '" + t.text + "' in a condition");
      std::string name = next().text;
      next();
      std::vector<Expr> args = parse_args(")");
      if (args.size() != pred->arity) {
        syntax(t.loc, name + " expects " + std::to_string(pred->arity) + " argument(s)");
      }
      c.node = PredicateCall{std::move(name), std::move(args)};
      return c;
    }
    Expr e = parse_expr();
    if (peek().is_name("is")) {
      next();
      bool negated = false;
      if (peek().is_name("not")) {
        next();
        negated = true;
      }
      const Token& none = next();
      if (!none.is_name("None")) unsupported(none.loc, "'is' comparisons other than None");
      c.node = NoneTest{std::move(e), negated};
      return c;
    }
    c.node = TruthTest{std::move(e)};
    return c;
  }

  std::vector<Expr> parse_args(std::string_view close) {
    std::vector<Expr> args;
    while (!peek().is_op(close)) {
      if (peek().kind == Tok::name && peek(1).is_op("=")) {
        unsupported(peek().loc, "keyword arguments are not supported");
      }
      if (peek().is_op("*") || peek().is_op("**")) unsupported(peek().loc, "argument unpacking");
      args.push_back(parse_expr());
      if (peek().is_op(",")) {
        next();
      } else if (!peek().is_op(close)) {
        const Token& t = peek();
        if (is_operator_continuation(t)) unsupported(t.loc, "operators are not supported");
        if (t.is_op(".")) unsupported(t.loc, "attribute access is not supported");
        if (t.is_name("for")) unsupported(t.loc, "comprehensions are not supported");
        syntax(t.loc, "expected ',' or '" + std::string(close) + "' but found " + describe(t));
      }
    }
    next();
    return args;
  }

  std::int64_t parse_int_literal() {
    bool neg = false;
    SourceLoc loc = peek().loc;
    if (peek().is_op("-")) {
      next();
      neg = true;
    }
    const Token& t = next();
    if (t.kind != Tok::number) unsupported(loc, "index and slice bounds must be integer literals");
    if (!t.integral) syntax(t.loc, "index must be an integer");
    auto v = static_cast<std::int64_t>(t.number);
    return neg ? -v : v;
  }

  Expr parse_expr() {
    const Token& t = peek();
    Expr e;
    e.loc = t.loc;
    if (t.kind == Tok::string) {
      std::string s = next().text;
      while (peek().kind == Tok::string) s += next().text;
      e.node = StringLit{std::move(s)};
    } else if (t.kind == Tok::number) {
      e.node = NumberLit{next().number};
    } else if (t.is_op("-") && peek(1).kind == Tok::number) {
      next();
      e.node = NumberLit{-next().number};
    } else if (t.is_name("True") || t.is_name("False")) {
      e.node = BoolLit{next().text == "True"};
    } else if (t.is_name("None")) {
      next();
      e.node = NoneLit{};
    } else if (t.is_op("[")) {
      next();
      if (peek(1).is_name("for")) unsupported(peek(1).loc, "comprehensions are not supported");
      ListLit list;
      list.items = parse_args("]");
      e.node = std::move(list);
    } else if (t.kind == Tok::name && !detail::is_keyword(t.text)) {
      std::string name = next().text;
      if (peek().is_op("(")) unsupported(t.loc, "nested calls are not supported in arguments");
      if (peek().is_op(".")) unsupported(peek().loc, "attribute access is not supported");
      if (peek().is_op("[")) {
        next();
        if (peek().is_op(":")) {
          next();
          SliceExpr s{name, std::nullopt, std::nullopt};
          if (!peek().is_op("]")) s.stop = parse_int_literal();
          expect_op("]");
          e.node = std::move(s);
        } else {
          std::int64_t first = parse_int_literal();
          if (peek().is_op(":")) {
            next();
            SliceExpr s{name, first, std::nullopt};
            if (!peek().is_op("]")) s.stop = parse_int_literal();
            expect_op("]");
            e.node = std::move(s);
          } else {
            expect_op("]");
            e.node = IndexExpr{name, first};
          }
        }
        if (peek().is_op("[")) unsupported(peek().loc, "chained subscripts are not supported");
      } else {
        e.node = VarRef{std::move(name)};
      }
    } else if (t.is_op("{")) {
      unsupported(t.loc, "dictionaries and sets are not supported");
    } else if (t.is_op("(")) {
      unsupported(t.loc, "tuples and parenthesized expressions are not supported");
    } else if (t.is_name("lambda")) {
      unsupported(t.loc, "lambda expressions are not supported");
    } else if (t.is_op("-") || t.is_op("+") || t.is_op("~") || t.is_name("not")) {
      unsupported(t.loc, "operators are not supported");
    } else {
      syntax(t.loc, "expected an expression but found " + describe(t));
    }
    const Token& after = peek();
    if (is_operator_continuation(after) && !after.is_name("is") && !after.is_name("in") &&
        !after.is_name("not") && !after.is_name("if")) {
      unsupported(after.loc, "arithmetic and operators are not supported");
    }
    return e;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

struct Chunk {
  std::string text;
  int first_line = 1;
  bool is_def = false;
};

// Splits source into top-level chunks at column-0 lines, skipping lines that
// sit inside triple-quoted strings.
std::vector<Chunk> split_top_level(std::string_view text) {
  std::vector<Chunk> chunks;
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char c : text) {
      if (c == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) lines.push_back(cur);
  }
  std::string open_quote;  // non-empty while inside a triple-quoted string
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    bool starts_chunk = false;
    if (open_quote.empty() && !line.empty() && line[0] != ' ' && line[0] != '\t' &&
        line[0] != '#' && line[0] != '\r') {
      // Continuation of a bracketed or decorated construct stays in its chunk.
      bool closes = line[0] == ')' || line[0] == ']' || line[0] == '}';
      starts_chunk = !closes;
    } else if (chunks.empty() && open_quote.empty()) {
      auto first = line.find_first_not_of(" \t\r");
      starts_chunk = first != std::string::npos && line[first] != '#';
    }
    if (starts_chunk) {
      Chunk c;
      c.first_line = static_cast<int>(i) + 1;
      c.is_def = line.rfind("def ", 0) == 0 || line.rfind("async def", 0) == 0;
      chunks.push_back(std::move(c));
    }
    if (!chunks.empty()) {
      chunks.back().text += line;
      chunks.back().text += '\n';
    }
    // Track triple-quote state across the line.
    for (std::size_t p = 0; p < line.size(); ++p) {
      if (open_quote.empty()) {
        if (line[p] == '#') break;
        if (line.compare(p, 3, "\"\"\"") == 0 || line.compare(p, 3, "'''") == 0) {
          open_quote = line.substr(p, 3);
          p += 2;
        } else if (line[p] == '"' || line[p] == '\'') {
          char q = line[p++];
          while (p < line.size() && line[p] != q) {
            if (line[p] == '\\') ++p;
            ++p;
          }
        }
      } else if (line.compare(p, 3, open_quote) == 0) {
        open_quote.clear();
        p += 2;
      }
    }
  }
  for (auto& c : chunks) {
    while (c.text.size() >= 2 && c.text[c.text.size() - 1] == '\n' &&
           (c.text[c.text.size() - 2] == '\n' || c.text[c.text.size() - 2] == '\r')) {
      c.text.pop_back();
    }
  }
  return chunks;
}

std::string definition_name(const Chunk& c) {
  static const std::regex kDef(R"(^(?:async\s+)?def\s+([A-Za-z_][A-Za-z0-9_]*))");
  std::smatch m;
  std::string head = c.text.substr(0, c.text.find('\n'));
  if (std::regex_search(head, m, kDef)) return m[1];
  return "<module>";
}

}  // namespace

SkillParseResult parse_skill_source(std::string_view text) {
  SkillParseResult result;
  for (const Chunk& chunk : split_top_level(text)) {
    std::string def_name = definition_name(chunk);
    if (!chunk.is_def) {
      SourceLoc loc{chunk.first_line, 1};
      std::string what = chunk.text[0] == '@' ? "decorators are not supported"
                                              : "top-level code outside a function definition";
      result.errors.push_back({ParseErrorKind::unsupported_construct, def_name, loc, what});
      continue;
    }
    if (chunk.text.rfind("async", 0) == 0) {
      result.errors.push_back({ParseErrorKind::unsupported_construct, def_name,
                               {chunk.first_line, 1}, "async functions are not supported"});
      continue;
    }
    try {
      Parser parser(detail::tokenize(chunk.text, chunk.first_line));
      SkillProgram prog = parser.parse_definition();
      prog.source = chunk.text;
      while (!prog.source.empty() && prog.source.back() == '\n') prog.source.pop_back();
      result.skills.push_back(std::move(prog));
    } catch (const ParseError& e) {
      std::string msg = e.what();
      auto colon = msg.find(": ");
      if (colon != std::string::npos) msg = msg.substr(colon + 2);
      result.errors.push_back({e.kind(), def_name, e.loc(), msg});
    }
  }
  return result;
}

SkillProgram parse_single_skill(std::string_view text) {
  auto result = parse_skill_source(text);
  if (!result.errors.empty()) {
    const auto& e = result.errors.front();
    throw ParseError(e.kind, e.loc, e.definition + ": " + e.message);
  }
  if (result.skills.size() != 1) {
    throw ParseError(ParseErrorKind::syntax_error, {1, 1},
                     "expected exactly one function definition, found " +
                         std::to_string(result.skills.size()));
  }
  return std::move(result.skills.front());
}

Action parse_call_expression(std::string_view text) {
  Parser parser(detail::tokenize(text));
  return parser.parse_call_only();
}

}  // namespace webskill::dsl
