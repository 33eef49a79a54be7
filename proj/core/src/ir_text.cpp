#include "fabric/ir_text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace fabric {
namespace {

enum class Tok : std::uint8_t {
  Ident,     // func, return, scifr_bool.and, attribute names
  FuncName,  // @name
  Value,     // %name
  Type,      // !lwe
  Int,
  LParen,
  RParen,
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  Comma,
  Colon,
  Equal,
  Arrow,
  End,
};

std::string_view describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::FuncName: return "'@name'";
    case Tok::Value: return "value";
    case Tok::Type: return "type";
    case Tok::Int: return "integer";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Equal: return "'='";
    case Tok::Arrow: return "'->'";
    case Tok::End: return "end of input";
  }
  return "token";
}

struct Token {
  Tok kind = Tok::End;
  std::string_view text;  // payload without sigil for FuncName/Value
  SourceSpan span;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
 public:
  Lexer(std::string_view text, std::vector<Diagnostic>& diags) : text_(text), diags_(diags) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_trivia();
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, {}, {line_, col_, 0}});
        return out;
      }
      if (auto t = next()) out.push_back(*t);
    }
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < text_.size() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  Token make(Tok kind, std::size_t start, std::size_t line, std::size_t col, std::size_t skip = 0) {
    return {kind, text_.substr(start + skip, pos_ - start - skip), {line, col, pos_ - start}};
  }

  std::optional<Token> next() {
    const std::size_t start = pos_;
    const std::size_t line = line_;
    const std::size_t col = col_;
    const char c = peek();

    auto single = [&](Tok kind) {
      advance();
      return make(kind, start, line, col);
    };
    switch (c) {
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case '{': return single(Tok::LBrace);
      case '}': return single(Tok::RBrace);
      case '[': return single(Tok::LBracket);
      case ']': return single(Tok::RBracket);
      case ',': return single(Tok::Comma);
      case ':': return single(Tok::Colon);
      case '=': return single(Tok::Equal);
      default: break;
    }
    if (c == '-' && peek(1) == '>') {
      advance(2);
      return make(Tok::Arrow, start, line, col);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      advance();
      while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
      return make(Tok::Int, start, line, col);
    }
    if (c == '%' || c == '@' || c == '!') {
      advance();
      const bool value = c == '%';
      if (value ? !ident_char(peek()) : !ident_start(peek())) {
        error({line, col, 1}, std::string("expected a name after '") + c + "'");
        return std::nullopt;
      }
      while (ident_char(peek())) advance();
      return make(c == '%' ? Tok::Value : c == '@' ? Tok::FuncName : Tok::Type, start, line, col,
                  c == '!' ? 0 : 1);
    }
    if (ident_start(c)) {
      while (ident_char(peek()) || (peek() == '.' && ident_start(peek(1)))) advance();
      return make(Tok::Ident, start, line, col);
    }
    advance();
    error({line, col, 1}, std::string("unexpected character '") + c + "'");
    return std::nullopt;
  }

  void error(SourceSpan span, std::string message) { diags_.push_back({span, std::move(message)}); }

  std::string_view text_;
  std::vector<Diagnostic>& diags_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

struct RawAttr {
  Token name;
  bool is_list = false;
  std::vector<Token> values;
  SourceSpan value_span;
};

struct RawOp {
  std::vector<Token> results;
  Token opname;
  std::vector<Token> operands;
  std::vector<RawAttr> attrs;
  Token type;
};

struct RawFunc {
  Token name;
  std::vector<std::pair<Token, Token>> args;  // (value, type)
  std::vector<Token> result_types;
  std::vector<RawOp> ops;
  Token ret_keyword;
  std::vector<Token> ret_values;
  std::vector<Token> ret_types;
};

struct TooManyDiagnostics {};
struct SyntaxError {
  std::size_t line;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::vector<Diagnostic>& diags)
      : toks_(std::move(tokens)), diags_(diags) {}

  std::optional<RawFunc> run() {
    try {
      return parse_func();
    } catch (const SyntaxError&) {
      return std::nullopt;
    }
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  const Token& peek_tok(std::size_t ahead) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  Token take() {
    Token t = cur();
    if (t.kind != Tok::End) ++pos_;
    return t;
  }
  bool at(Tok k) const { return cur().kind == k; }
  bool at_keyword(std::string_view kw) const { return at(Tok::Ident) && cur().text == kw; }

  bool accept(Tok k) {
    if (!at(k)) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const std::string& message) {
    report(cur().span, message);
    throw SyntaxError{cur().span.line};
  }

  void report(SourceSpan span, std::string message) {
    diags_.push_back({span, std::move(message)});
    if (diags_.size() >= kMaxDiagnostics) throw TooManyDiagnostics{};
  }

  Token expect(Tok k, std::string_view what = {}) {
    if (!at(k)) {
      std::string msg = "expected " + std::string(what.empty() ? describe(k) : what) + ", found " +
                        (at(Tok::End) ? std::string("end of input") : "'" + std::string(cur().text) + "'");
      fail(msg);
    }
    return take();
  }

  void expect_keyword(std::string_view kw) {
    if (!at_keyword(kw)) fail("expected '" + std::string(kw) + "'");
    take();
  }

  Token parse_type() { return expect(Tok::Type, "type"); }

  // typelist, or "()" for an empty list
  std::vector<Token> parse_typelist(bool allow_empty_parens) {
    std::vector<Token> out;
    if (allow_empty_parens && at(Tok::LParen) && peek_tok(1).kind == Tok::RParen) {
      take();
      take();
      return out;
    }
    out.push_back(parse_type());
    while (accept(Tok::Comma)) out.push_back(parse_type());
    return out;
  }

  RawFunc parse_func() {
    RawFunc f;
    expect_keyword("func");
    f.name = expect(Tok::FuncName, "'@name'");
    expect(Tok::LParen);
    if (!at(Tok::RParen)) {
      do {
        Token v = expect(Tok::Value, "argument value");
        expect(Tok::Colon);
        Token t = parse_type();
        f.args.emplace_back(v, t);
      } while (accept(Tok::Comma));
    }
    expect(Tok::RParen);
    expect(Tok::Arrow);
    f.result_types = parse_typelist(true);
    expect(Tok::LBrace);

    while (!at_keyword("return")) {
      if (at(Tok::End) || at(Tok::RBrace)) fail("expected 'return' before end of function");
      try {
        f.ops.push_back(parse_stmt());
      } catch (const SyntaxError& e) {
        recover(e.line);
      }
    }
    f.ret_keyword = take();
    if (at(Tok::Value)) {
      f.ret_values.push_back(take());
      while (accept(Tok::Comma)) f.ret_values.push_back(expect(Tok::Value, "return value"));
    }
    expect(Tok::Colon);
    if (at(Tok::Type)) f.ret_types = parse_typelist(false);
    expect(Tok::RBrace);
    if (!at(Tok::End)) fail("expected end of input after function body");
    return f;
  }

  // Skip to the first token on a later line that can begin a statement.
  void recover(std::size_t error_line) {
    while (!at(Tok::End)) {
      const Token& t = cur();
      if (t.span.line > error_line &&
          (t.kind == Tok::Value || (t.kind == Tok::Ident && t.text == "return") || t.kind == Tok::RBrace))
        return;
      take();
    }
  }

  RawOp parse_stmt() {
    RawOp op;
    op.results.push_back(expect(Tok::Value, "result value or 'return'"));
    while (accept(Tok::Comma)) op.results.push_back(expect(Tok::Value, "result value"));
    expect(Tok::Equal);
    op.opname = expect(Tok::Ident, "operation name");
    if (at(Tok::Value)) {
      op.operands.push_back(take());
      while (accept(Tok::Comma)) op.operands.push_back(expect(Tok::Value, "operand value"));
    }
    if (accept(Tok::LBrace)) {
      do {
        RawAttr a;
        a.name = expect(Tok::Ident, "attribute name");
        expect(Tok::Equal);
        if (at(Tok::LBracket)) {
          const Token open = take();
          a.is_list = true;
          a.values.push_back(expect(Tok::Int));
          while (accept(Tok::Comma)) a.values.push_back(expect(Tok::Int));
          const Token close = expect(Tok::RBracket);
          a.value_span = {open.span.line, open.span.column,
                          close.span.line == open.span.line
                              ? close.span.column + close.span.length - open.span.column
                              : open.span.length};
        } else {
          a.values.push_back(expect(Tok::Int, "integer or '['"));
          a.value_span = a.values.front().span;
        }
        op.attrs.push_back(std::move(a));
      } while (accept(Tok::Comma));
      expect(Tok::RBrace);
    }
    expect(Tok::Colon);
    op.type = parse_type();
    return op;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<Diagnostic>& diags_;
};

std::optional<ValueType> type_from_token(std::string_view text) {
  if (text == "!lwe") return ValueType::LweCiphertext;
  if (text == "!ct") return ValueType::CkksCiphertext;
  if (text == "!pt") return ValueType::CkksPlaintext;
  return std::nullopt;
}

template <typename T>
std::optional<T> to_int(std::string_view text) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

// Builds a graph from the raw syntax tree, reporting semantic errors.
class Builder {
 public:
  explicit Builder(std::vector<Diagnostic>& diags) : diags_(diags) {}

  std::optional<CircuitGraph> run(const RawFunc& f) {
    graph_.name = std::string(f.name.text);

    for (const auto& [v, t] : f.args) {
      auto type = resolve_type(t);
      define(v, type.value_or(ValueType::LweCiphertext), true);
    }
    std::vector<std::optional<ValueType>> sig_types;
    for (const Token& t : f.result_types) sig_types.push_back(resolve_type(t));

    // Definitions first so operands may refer forward.
    for (const RawOp& op : f.ops) {
      const auto type = resolve_type(op.type).value_or(ValueType::LweCiphertext);
      Operator o;
      for (const Token& r : op.results) o.results.push_back(define(r, type, false));
      graph_.operators.push_back(std::move(o));
      lut_spans_.emplace_back();
    }

    for (std::size_t i = 0; i < f.ops.size(); ++i) {
      const RawOp& op = f.ops[i];
      Operator& o = graph_.operators[i];
      if (auto kind = resolve_kind(op, i)) o.kind = *kind;
      if (auto section = section_of(op)) o.section = *section;
      for (const Token& v : op.operands) o.operands.push_back(use(v));
    }

    for (const Token& v : f.ret_values) graph_.returns.push_back(use(v));
    if (f.ret_types.size() != f.ret_values.size()) {
      report(f.ret_keyword.span, "return lists " + std::to_string(f.ret_values.size()) + " values but " +
                                     std::to_string(f.ret_types.size()) + " types");
    } else {
      for (std::size_t i = 0; i < f.ret_values.size(); ++i) {
        auto declared = resolve_type(f.ret_types[i]);
        auto id = lookup(f.ret_values[i].text);
        if (declared && id && graph_.type_of(*id) != *declared)
          report(f.ret_types[i].span, "return type mismatch for %" + std::string(f.ret_values[i].text));
      }
    }
    if (sig_types.size() != f.ret_values.size()) {
      report(f.ret_keyword.span, "function @" + graph_.name + " declares " + std::to_string(sig_types.size()) +
                                     " results but returns " + std::to_string(f.ret_values.size()));
    } else {
      for (std::size_t i = 0; i < sig_types.size(); ++i) {
        auto id = lookup(f.ret_values[i].text);
        if (sig_types[i] && id && graph_.type_of(*id) != *sig_types[i])
          report(f.ret_values[i].span, "returned %" + std::string(f.ret_values[i].text) +
                                           " does not match the declared result type");
      }
    }
    if (!diags_.empty()) return std::nullopt;

    check(f);
    if (!diags_.empty()) return std::nullopt;
    return std::move(graph_);
  }

 private:
  void report(SourceSpan span, std::string message) {
    diags_.push_back({span, std::move(message)});
    if (diags_.size() >= kMaxDiagnostics) throw TooManyDiagnostics{};
  }

  std::optional<ValueType> resolve_type(const Token& t) {
    auto type = type_from_token(t.text);
    if (!type) report(t.span, "unknown type '" + std::string(t.text) + "'");
    return type;
  }

  ValueId define(const Token& tok, ValueType type, bool is_arg) {
    ValueId id{static_cast<std::uint32_t>(graph_.values.size())};
    graph_.values.push_back({std::string(tok.text), type});
    value_spans_.push_back(tok.span);
    auto [it, inserted] = names_.emplace(std::string(tok.text), id);
    if (!inserted) report(tok.span, "double-def %" + std::string(tok.text));
    if (is_arg) graph_.arguments.push_back(id);
    return id;
  }

  std::optional<ValueId> lookup(std::string_view name) const {
    auto it = names_.find(std::string(name));
    if (it == names_.end()) return std::nullopt;
    return it->second;
  }

  ValueId use(const Token& tok) {
    if (auto id = lookup(tok.text)) return *id;
    report(tok.span, "use-before-def %" + std::string(tok.text));
    return ValueId{std::numeric_limits<std::uint32_t>::max()};
  }

  std::optional<std::uint32_t> section_of(const RawOp& op) {
    for (const RawAttr& a : op.attrs)
      if (a.name.text == "section" && !a.is_list)
        if (auto v = to_int<std::uint32_t>(a.values.front().text)) return v;
    return std::nullopt;
  }

  std::optional<OpKind> resolve_kind(const RawOp& op, std::size_t index) {
    const std::string_view full = op.opname.text;
    std::optional<OpTag> tag;
    if (full.starts_with("scifr_bool.")) {
      tag = tag_from_mnemonic(full.substr(11));
      if (tag && dialect_of(*tag) != Dialect::Boolean) tag.reset();
    } else if (full.starts_with("scifr_ckks.")) {
      tag = tag_from_mnemonic(full.substr(11));
      if (tag && dialect_of(*tag) != Dialect::Ckks) tag.reset();
    }
    if (!tag) {
      report(op.opname.span, "unknown operation '" + std::string(full) + "'");
      return std::nullopt;
    }

    // Attribute names each op accepts; all but `section` are required.
    std::vector<std::string_view> wanted;
    switch (*tag) {
      case OpTag::Lut2:
      case OpTag::Lut3: wanted = {"lut"}; break;
      case OpTag::LutLinComb: wanted = {"coeffs", "lut"}; break;
      case OpTag::MultiLutLinComb: wanted = {"coeffs", "luts"}; break;
      case OpTag::Rotate: wanted = {"offset"}; break;
      case OpTag::Extract: wanted = {"index"}; break;
      default: break;
    }
    OpKind kind = make_kind(*tag);
    bool ok = true;
    std::vector<std::string_view> seen;
    for (const RawAttr& a : op.attrs) {
      const std::string name(a.name.text);
      if (std::find(seen.begin(), seen.end(), a.name.text) != seen.end()) {
        report(a.name.span, "duplicate attribute '" + name + "'");
        ok = false;
        continue;
      }
      seen.push_back(a.name.text);
      const bool is_wanted = std::find(wanted.begin(), wanted.end(), a.name.text) != wanted.end();
      if (name != "section" && !is_wanted) {
        report(a.name.span, "attribute '" + name + "' is not valid on '" + std::string(full) + "'");
        ok = false;
        continue;
      }
      const bool wants_list = name == "coeffs" || name == "luts";
      if (wants_list != a.is_list) {
        report(a.value_span, "attribute '" + name + "' expects " +
                                 (wants_list ? "a list of integers" : "an integer"));
        ok = false;
        continue;
      }
      if (name == "lut" || name == "luts") {
        for (const Token& v : a.values) {
          auto mask = to_int<std::uint64_t>(v.text);
          if (!mask) {
            report(v.span, "LUT mask out of range");
            ok = false;
          } else if (name == "lut") {
            kind.lut = *mask;
          } else {
            kind.luts.push_back(*mask);
          }
        }
        lut_spans_[index] = a.value_span;
      } else if (name == "coeffs") {
        for (const Token& v : a.values) {
          auto c = to_int<std::int64_t>(v.text);
          if (!c) {
            report(v.span, "integer out of range");
            ok = false;
          } else {
            kind.coeffs.push_back(*c);
          }
        }
      } else if (name == "offset") {
        auto v = to_int<std::int64_t>(a.values.front().text);
        if (!v) {
          report(a.value_span, "integer out of range");
          ok = false;
        } else {
          kind.offset = *v;
        }
      } else if (name == "index") {
        auto v = to_int<std::uint64_t>(a.values.front().text);
        if (!v) {
          report(a.value_span, "extract index must be a non-negative integer");
          ok = false;
        } else {
          kind.index = *v;
        }
      } else if (name == "section") {
        if (!to_int<std::uint32_t>(a.values.front().text)) {
          report(a.value_span, "section must be a non-negative integer");
          ok = false;
        }
      }
    }
    for (std::string_view w : wanted)
      if (std::find(seen.begin(), seen.end(), w) == seen.end()) {
        report(op.opname.span, "missing required attribute '" + std::string(w) + "' on '" +
                                   std::string(full) + "'");
        ok = false;
      }
    if (!ok) return std::nullopt;
    return kind;
  }

  // Runs validate() and maps each violation back to source.
  void check(const RawFunc& f) {
    for (const Violation& v : validate(graph_)) {
      SourceSpan span = f.ret_keyword.span;
      if (v.op) {
        const RawOp& op = f.ops[*v.op];
        span = op.opname.span;
        if (v.operand && *v.operand < op.operands.size()) {
          span = op.operands[*v.operand].span;
        } else if (v.kind == ViolationKind::LutMaskOutOfRange) {
          if (lut_spans_[*v.op]) span = *lut_spans_[*v.op];
        } else if (v.kind == ViolationKind::TypeMismatch) {
          span = op.type.span;
        } else if ((v.kind == ViolationKind::DoubleDef || v.kind == ViolationKind::DuplicateName) && v.value &&
                   v.value->index < value_spans_.size()) {
          span = value_spans_[v.value->index];
        }
      } else if (v.value && v.value->index < value_spans_.size() && v.kind != ViolationKind::UseBeforeDef) {
        span = value_spans_[v.value->index];
      }
      report(span, v.message);
    }
  }

  CircuitGraph graph_;
  std::unordered_map<std::string, ValueId> names_;
  std::vector<SourceSpan> value_spans_;
  std::vector<std::optional<SourceSpan>> lut_spans_;  // per op
  std::vector<Diagnostic>& diags_;
};

}  // namespace

ParseResult parse(std::string_view text) {
  std::vector<Diagnostic> diags;
  try {
    std::vector<Token> tokens = Lexer(text, diags).run();
    if (diags.size() >= kMaxDiagnostics) throw TooManyDiagnostics{};
    std::optional<RawFunc> func = Parser(std::move(tokens), diags).run();
    if (func && diags.empty()) {
      if (auto graph = Builder(diags).run(*func)) return {std::move(*graph)};
    }
  } catch (const TooManyDiagnostics&) {
  }
  if (diags.size() > kMaxDiagnostics) diags.resize(kMaxDiagnostics);
  if (diags.empty()) diags.push_back({{1, 1, 0}, "invalid input"});
  return {std::move(diags)};
}

namespace {

std::string ref(const CircuitGraph& g, ValueId v) {
  if (v.index < g.values.size() && !g.values[v.index].name.empty()) return "%" + g.values[v.index].name;
  return "%" + std::to_string(v.index);
}

template <typename T>
std::string int_list(const std::vector<T>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(xs[i]);
  }
  return out + "]";
}

}  // namespace

std::string print(const CircuitGraph& graph) {
  std::ostringstream os;
  os << "func @" << graph.name << "(";
  for (std::size_t i = 0; i < graph.arguments.size(); ++i) {
    if (i) os << ", ";
    os << ref(graph, graph.arguments[i]) << ": " << type_token(graph.type_of(graph.arguments[i]));
  }
  os << ") -> ";
  if (graph.returns.empty()) {
    os << "()";
  } else {
    for (std::size_t i = 0; i < graph.returns.size(); ++i) {
      if (i) os << ", ";
      os << type_token(graph.type_of(graph.returns[i]));
    }
  }
  os << " {\n";

  for (const Operator& op : graph.operators) {
    os << "  ";
    for (std::size_t i = 0; i < op.results.size(); ++i) {
      if (i) os << ", ";
      os << ref(graph, op.results[i]);
    }
    const OpTag tag = op.kind.tag;
    os << " = " << (dialect_of(tag) == Dialect::Boolean ? "scifr_bool." : "scifr_ckks.") << mnemonic(tag);
    for (std::size_t i = 0; i < op.operands.size(); ++i) os << (i ? ", " : " ") << ref(graph, op.operands[i]);

    // Alphabetical: coeffs, index, lut, luts, offset, section.
    std::vector<std::string> attrs;
    if (tag == OpTag::LutLinComb || tag == OpTag::MultiLutLinComb)
      attrs.push_back("coeffs = " + int_list(op.kind.coeffs));
    if (tag == OpTag::Extract) attrs.push_back("index = " + std::to_string(op.kind.index));
    if (tag == OpTag::Lut2 || tag == OpTag::Lut3 || tag == OpTag::LutLinComb)
      attrs.push_back("lut = " + std::to_string(op.kind.lut));
    if (tag == OpTag::MultiLutLinComb) attrs.push_back("luts = " + int_list(op.kind.luts));
    if (tag == OpTag::Rotate) attrs.push_back("offset = " + std::to_string(op.kind.offset));
    if (op.section) attrs.push_back("section = " + std::to_string(*op.section));
    if (!attrs.empty()) {
      os << " {";
      for (std::size_t i = 0; i < attrs.size(); ++i) os << (i ? ", " : "") << attrs[i];
      os << "}";
    }
    const ValueType rtype = op.results.empty() ? result_type(tag) : graph.type_of(op.results.front());
    os << " : " << type_token(rtype) << "\n";
  }

  os << "  return";
  for (std::size_t i = 0; i < graph.returns.size(); ++i) os << (i ? ", " : " ") << ref(graph, graph.returns[i]);
  os << " :";
  for (std::size_t i = 0; i < graph.returns.size(); ++i)
    os << (i ? ", " : " ") << type_token(graph.type_of(graph.returns[i]));
  os << "\n}\n";
  return os.str();
}

std::string format_diagnostic(std::string_view file, const Diagnostic& diag) {
  std::ostringstream os;
  os << file << ":" << diag.span.line << ":" << diag.span.column << ": error: " << diag.message;
  return os.str();
}

ParseResult parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {std::vector<Diagnostic>{{{1, 1, 0}, "cannot read file '" + path + "'"}}};
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace fabric
