#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>

#include "squap/turtle.hpp"
#include "squap/vocab.hpp"

namespace squap {

std::string_view to_string(ParseErrorKind kind) noexcept {
  switch (kind) {
    case ParseErrorKind::unexpected_token: return "unexpected token";
    case ParseErrorKind::undeclared_prefix: return "undeclared prefix";
    case ParseErrorKind::bad_iri: return "bad IRI";
    case ParseErrorKind::bad_literal: return "bad literal";
    case ParseErrorKind::unterminated_statement: return "unterminated statement";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, int line, int column, std::string message)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
            std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column),
      detail_(std::move(message)) {}

namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
         static_cast<unsigned char>(c) >= 0x80;
}

void append_utf8(std::string& out, unsigned long cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class Parser {
 public:
  Parser(std::string_view src, std::optional<std::string> base)
      : src_(src), base_(std::move(base)) {}

  ParsedDocument run() {
    for (;;) {
      skip_ws();
      if (eof()) break;
      if (starts_with("@prefix")) {
        pos_ += 7;
        prefix_directive(true);
      } else if (starts_with("@base")) {
        pos_ += 5;
        base_directive(true);
      } else if (keyword("PREFIX")) {
        prefix_directive(false);
      } else if (keyword("BASE")) {
        base_directive(false);
      } else {
        statement();
      }
    }
    return std::move(doc_);
  }

 private:
  [[noreturn]] void fail(ParseErrorKind kind, std::size_t at, const std::string& msg) const {
    int line = 1;
    int col = 1;
    for (std::size_t i = 0; i < at && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(kind, line, col, msg);
  }

  bool eof() const { return pos_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }
  bool starts_with(std::string_view s) const { return src_.substr(pos_).starts_with(s); }

  // Case-insensitive SPARQL-style directive keyword followed by whitespace.
  bool keyword(std::string_view kw) {
    if (src_.size() - pos_ <= kw.size()) return false;
    for (std::size_t i = 0; i < kw.size(); ++i) {
      if (std::toupper(static_cast<unsigned char>(src_[pos_ + i])) != kw[i]) return false;
    }
    if (!std::isspace(static_cast<unsigned char>(src_[pos_ + kw.size()]))) return false;
    pos_ += kw.size();
    return true;
  }

  void skip_ws() {
    while (!eof()) {
      const char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        ++pos_;
      } else {
        break;
      }
    }
  }

  void expect_dot(const char* what) {
    skip_ws();
    if (peek() != '.') {
      fail(ParseErrorKind::unterminated_statement, pos_,
           std::string("expected '.' to end ") + what);
    }
    ++pos_;
  }

  void prefix_directive(bool turtle_style) {
    skip_ws();
    const std::size_t at = pos_;
    std::size_t end = pos_;
    while (end < src_.size() && (is_name_char(src_[end]) || src_[end] == '.')) ++end;
    if (end >= src_.size() || src_[end] != ':') {
      fail(ParseErrorKind::unexpected_token, at, "expected prefix label followed by ':'");
    }
    std::string label(src_.substr(pos_, end - pos_));
    if (!label.empty() && (!std::isalpha(static_cast<unsigned char>(label.front())) ||
                           label.back() == '.')) {
      fail(ParseErrorKind::unexpected_token, at, "invalid prefix label '" + label + "'");
    }
    pos_ = end + 1;
    skip_ws();
    if (peek() != '<') fail(ParseErrorKind::bad_iri, pos_, "expected <IRI> in prefix declaration");
    std::string ns = iriref();
    doc_.prefixes.set(std::move(label), std::move(ns));
    if (turtle_style) expect_dot("@prefix directive");
  }

  void base_directive(bool turtle_style) {
    skip_ws();
    if (peek() != '<') fail(ParseErrorKind::bad_iri, pos_, "expected <IRI> in base declaration");
    base_ = iriref();
    if (turtle_style) expect_dot("@base directive");
  }

  void statement() {
    Term subject = term_at_subject();
    predicate_object_list(subject);
    skip_ws();
    if (eof()) {
      fail(ParseErrorKind::unterminated_statement, pos_, "end of input before '.'");
    }
    if (peek() != '.') {
      fail(ParseErrorKind::unterminated_statement, pos_, "expected '.', ';' or ','");
    }
    ++pos_;
  }

  Term term_at_subject() {
    const char c = peek();
    if (c == '"' || c == '\'' || std::isdigit(static_cast<unsigned char>(c)) || c == '+' ||
        c == '-') {
      fail(ParseErrorKind::unexpected_token, pos_, "literal cannot be a subject");
    }
    if (c == '[' || c == '(') {
      fail(ParseErrorKind::unexpected_token, pos_,
           "blank node property lists and collections are not supported");
    }
    return iri_or_blank();
  }

  void predicate_object_list(const Term& subject) {
    for (;;) {
      skip_ws();
      Term predicate = verb();
      object_list(subject, predicate);
      skip_ws();
      if (peek() != ';') return;
      while (peek() == ';') {
        ++pos_;
        skip_ws();
      }
      if (peek() == '.' || eof()) return;
    }
  }

  void object_list(const Term& subject, const Term& predicate) {
    for (;;) {
      skip_ws();
      Term object = object_term();
      doc_.graph.insert(Triple{subject, predicate, std::move(object)});
      skip_ws();
      if (peek() != ',') return;
      ++pos_;
    }
  }

  Term verb() {
    if (peek() == 'a' && !is_name_char(peek(1)) && peek(1) != ':' && peek(1) != '.') {
      ++pos_;
      return Term::iri(std::string(kRdfType));
    }
    if (eof()) fail(ParseErrorKind::unterminated_statement, pos_, "end of input, expected predicate");
    const char c = peek();
    if (c == '_' && peek(1) == ':') {
      fail(ParseErrorKind::unexpected_token, pos_, "blank node cannot be a predicate");
    }
    if (c != '<' && !is_name_char(c) && c != ':') {
      fail(ParseErrorKind::unexpected_token, pos_, std::string("expected predicate, found '") + c + "'");
    }
    return iri_term();
  }

  Term object_term() {
    if (eof()) fail(ParseErrorKind::unterminated_statement, pos_, "end of input, expected object");
    const char c = peek();
    if (c == '"' || c == '\'') return string_literal();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-') return number();
    if (c == '[' || c == '(') {
      fail(ParseErrorKind::unexpected_token, pos_,
           "blank node property lists and collections are not supported");
    }
    if (c != '<' && c != ':' && !is_name_char(c)) {
      fail(ParseErrorKind::unexpected_token, pos_, std::string("expected object, found '") + c + "'");
    }
    return iri_or_blank();
  }

  Term iri_or_blank() {
    if (peek() == '_' && peek(1) == ':') return blank();
    return iri_term();
  }

  Term iri_term() {
    if (peek() == '<') return Term::iri(iriref());
    return Term::iri(prefixed_name());
  }

  Term blank() {
    const std::size_t at = pos_;
    pos_ += 2;
    const std::size_t start = pos_;
    std::size_t end = start;
    while (end < src_.size() && (is_name_char(src_[end]) || src_[end] == '.')) ++end;
    while (end > start && src_[end - 1] == '.') --end;
    if (end == start) fail(ParseErrorKind::unexpected_token, at, "empty blank node label");
    pos_ = end;
    return Term::blank(std::string(src_.substr(start, end - start)));
  }

  std::string iriref() {
    const std::size_t at = pos_;
    ++pos_;  // '<'
    std::string iri;
    for (;;) {
      if (eof()) fail(ParseErrorKind::bad_iri, at, "unterminated IRI");
      const char c = peek();
      if (c == '>') break;
      if (c == ' ' || c == '\n' || c == '\t' || c == '<' || c == '"' || c == '{' || c == '}' ||
          c == '|' || c == '^' || c == '`' || c == '\\') {
        fail(ParseErrorKind::bad_iri, pos_, std::string("illegal character '") + c + "' in IRI");
      }
      iri += c;
      ++pos_;
    }
    ++pos_;  // '>'
    return resolve(iri, at);
  }

  std::string resolve(const std::string& iri, std::size_t at) const {
    if (is_absolute_iri(iri)) return iri;
    if (!base_) fail(ParseErrorKind::bad_iri, at, "relative IRI <" + iri + "> without a base");
    if (iri.empty()) return *base_;
    if (iri.front() == '#') return base_->substr(0, base_->find('#')) + iri;
    const auto slash = base_->rfind('/');
    return (slash == std::string::npos ? *base_ : base_->substr(0, slash + 1)) + iri;
  }

  std::string prefixed_name() {
    const std::size_t at = pos_;
    std::size_t end = pos_;
    while (end < src_.size() && (is_name_char(src_[end]) || src_[end] == '.')) ++end;
    if (end >= src_.size() || src_[end] != ':') {
      fail(ParseErrorKind::unexpected_token, at,
           "expected IRI or prefixed name, found '" + std::string(src_.substr(at, end - at + 1)) +
               "'");
    }
    const std::string label(src_.substr(pos_, end - pos_));
    auto ns = doc_.prefixes.namespace_of(label);
    if (!ns) fail(ParseErrorKind::undeclared_prefix, at, "prefix '" + label + ":' is not declared");
    pos_ = end + 1;

    std::string local;
    std::size_t committed = pos_;  // end of the local part, excluding trailing dots
    std::string committed_local;
    while (!eof()) {
      const char c = peek();
      if (is_name_char(c) || c == ':' || c == '.') {
        local += c;
        ++pos_;
      } else if (c == '%' && std::isxdigit(static_cast<unsigned char>(peek(1))) &&
                 std::isxdigit(static_cast<unsigned char>(peek(2)))) {
        local += src_.substr(pos_, 3);
        pos_ += 3;
      } else if (c == '\\' && peek(1) != '\0' &&
                 std::string_view("_~.-!$&'()*+,;=/?#@%").find(peek(1)) != std::string_view::npos) {
        local += peek(1);
        pos_ += 2;
      } else {
        break;
      }
      if (local.back() != '.') {
        committed = pos_;
        committed_local = local;
      }
    }
    pos_ = committed;
    std::string iri = *ns + committed_local;
    if (!is_absolute_iri(iri)) fail(ParseErrorKind::bad_iri, at, "expansion is not absolute: " + iri);
    return iri;
  }

  Term string_literal() {
    const std::size_t at = pos_;
    const char quote = peek();
    if (peek(1) == quote && peek(2) == quote) {
      fail(ParseErrorKind::bad_literal, at, "long (triple-quoted) strings are not supported");
    }
    ++pos_;
    std::string lexical;
    for (;;) {
      if (eof()) fail(ParseErrorKind::bad_literal, at, "unterminated string");
      const char c = peek();
      if (c == quote) break;
      if (c == '\n' || c == '\r') fail(ParseErrorKind::bad_literal, pos_, "newline in string");
      if (c == '\\') {
        lexical += escape();
        continue;
      }
      lexical += c;
      ++pos_;
    }
    ++pos_;
    if (peek() == '@') {
      ++pos_;
      const std::size_t start = pos_;
      while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-')) ++pos_;
      const std::string lang(src_.substr(start, pos_ - start));
      if (lang.empty() || !std::isalpha(static_cast<unsigned char>(lang.front())) ||
          lang.back() == '-') {
        fail(ParseErrorKind::bad_literal, start - 1, "malformed language tag");
      }
      return Term::lang_literal(std::move(lexical), lang);
    }
    if (peek() == '^' && peek(1) == '^') {
      pos_ += 2;
      if (peek() != '<' && peek() != ':' && !is_name_char(peek())) {
        fail(ParseErrorKind::bad_literal, pos_, "expected datatype IRI after '^^'");
      }
      return Term::literal(std::move(lexical), iri_term().value);
    }
    return Term::literal(std::move(lexical));
  }

  std::string escape() {
    const std::size_t at = pos_;
    ++pos_;
    const char c = peek();
    ++pos_;
    switch (c) {
      case 't': return "\t";
      case 'n': return "\n";
      case 'r': return "\r";
      case 'b': return "\b";
      case 'f': return "\f";
      case '"': return "\"";
      case '\'': return "'";
      case '\\': return "\\";
      case 'u':
      case 'U': {
        const std::size_t digits = c == 'u' ? 4 : 8;
        if (src_.size() - pos_ < digits) fail(ParseErrorKind::bad_literal, at, "short \\u escape");
        unsigned long cp = 0;
        for (std::size_t i = 0; i < digits; ++i) {
          const char h = src_[pos_ + i];
          if (!std::isxdigit(static_cast<unsigned char>(h))) {
            fail(ParseErrorKind::bad_literal, at, "bad hex digit in escape");
          }
          cp = cp * 16 + static_cast<unsigned long>(
                             std::isdigit(static_cast<unsigned char>(h))
                                 ? h - '0'
                                 : std::tolower(static_cast<unsigned char>(h)) - 'a' + 10);
        }
        pos_ += digits;
        std::string out;
        append_utf8(out, cp);
        return out;
      }
      default:
        fail(ParseErrorKind::bad_literal, at, std::string("unknown escape '\\") + c + "'");
    }
  }

  Term number() {
    const std::size_t at = pos_;
    std::size_t end = pos_;
    if (src_[end] == '+' || src_[end] == '-') ++end;
    const std::size_t digits_start = end;
    while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
    if (end == digits_start) fail(ParseErrorKind::bad_literal, at, "sign without digits");
    const char next = end < src_.size() ? src_[end] : '\0';
    const char after = end + 1 < src_.size() ? src_[end + 1] : '\0';
    if ((next == '.' && std::isdigit(static_cast<unsigned char>(after))) || next == 'e' ||
        next == 'E') {
      fail(ParseErrorKind::bad_literal, at, "only integer numerals are supported");
    }
    if (is_name_char(next) || next == ':') {
      fail(ParseErrorKind::bad_literal, at, "malformed numeral");
    }
    pos_ = end;
    return Term::literal(std::string(src_.substr(at, end - at)), std::string(kXsdInteger));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::optional<std::string> base_;
  ParsedDocument doc_;
};

}  // namespace

ParsedDocument parse_turtle(std::string_view source, const std::optional<std::string>& base) {
  return Parser(source, base).run();
}

ParsedDocument parse_turtle_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_turtle(buf.str());
}

}  // namespace squap
