#include "cob2/dsl.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace cob2 {

std::string_view to_string(ParseErrorKind kind) noexcept {
  switch (kind) {
    case ParseErrorKind::UnknownToken: return "UnknownToken";
    case ParseErrorKind::ArityMismatch: return "ArityMismatch";
    case ParseErrorKind::EmptyLayer: return "EmptyLayer";
    case ParseErrorKind::BadRepetition: return "BadRepetition";
  }
  return "?";
}

ParseError::ParseError(ParseErrorKind kind, SourceSpan span, std::string message)
    : Error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": " +
            std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      span_(span),
      message_(std::move(message)) {}

namespace {

enum class TokenType { Ident, Number, Semicolon, Bar, Caret, Unknown, End };

struct Token {
  TokenType type;
  std::string_view text;
  SourceSpan span;
};

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_continuation_byte(char c) { return (static_cast<unsigned char>(c) & 0xC0U) == 0x80U; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_trivia();
    const SourceSpan start{line_, column_, 0};
    if (pos_ >= text_.size()) return {TokenType::End, {}, start};
    const std::size_t begin = pos_;
    const char c = text_[pos_];
    TokenType type = TokenType::Unknown;
    if (is_ident_start(c)) {
      type = TokenType::Ident;
      while (pos_ < text_.size() && (is_ident_start(text_[pos_]) || is_digit(text_[pos_]))) advance();
    } else if (is_digit(c)) {
      type = TokenType::Number;
      while (pos_ < text_.size() && is_digit(text_[pos_])) advance();
    } else {
      if (c == ';') type = TokenType::Semicolon;
      if (c == '|') type = TokenType::Bar;
      if (c == '^') type = TokenType::Caret;
      advance();
      // Keep a multi-byte code point together in the error span.
      while (pos_ < text_.size() && is_continuation_byte(text_[pos_])) ++pos_;
    }
    SourceSpan span = start;
    span.length = column_ - start.column;
    return {type, text_.substr(begin, pos_ - begin), span};
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else if (!is_continuation_byte(text_[pos_])) {
      ++column_;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
        advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

std::optional<Generator> lookup_keyword(std::string_view word) {
  if (word == "cap") return Generator::Cap;
  if (word == "cup") return Generator::Cup;
  if (word == "id" || word == "cyl") return Generator::Id;
  if (word == "mu" || word == "copants") return Generator::Merge;
  if (word == "delta" || word == "pants") return Generator::Split;
  if (word == "swap" || word == "twist") return Generator::Swap;
  return std::nullopt;
}

std::string describe(const Token& t) {
  if (t.type == TokenType::End) return "end of input";
  return "'" + std::string(t.text) + "'";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { current_ = lexer_.next(); }

  CobordismWord parse_word() {
    if (current_.type == TokenType::End) return CobordismWord::empty(0);
    std::vector<Layer> layers;
    std::optional<Token> separator;
    while (true) {
      Layer layer = parse_layer();
      if (!layers.empty() && layers.back().outputs() != layer.inputs()) {
        throw ParseError(ParseErrorKind::ArityMismatch, separator->span,
                         "layer " + std::to_string(layers.size() + 1) + " needs " +
                             std::to_string(layer.inputs()) + " inputs, gets " +
                             std::to_string(layers.back().outputs()));
      }
      layers.push_back(std::move(layer));
      if (current_.type == TokenType::End) break;
      if (current_.type != TokenType::Semicolon) {
        throw ParseError(ParseErrorKind::UnknownToken, current_.span,
                         "expected '|' or ';', found " + describe(current_));
      }
      separator = current_;
      bump();
    }
    return CobordismWord(std::move(layers));
  }

 private:
  void bump() { current_ = lexer_.next(); }

  Layer parse_layer() {
    if (current_.type == TokenType::Semicolon || current_.type == TokenType::End) {
      throw ParseError(ParseErrorKind::EmptyLayer, current_.span,
                       "empty layer before " + describe(current_));
    }
    std::vector<Generator> gens;
    parse_generator(gens);
    while (current_.type == TokenType::Bar) {
      bump();
      parse_generator(gens);
    }
    return Layer(std::move(gens));
  }

  void parse_generator(std::vector<Generator>& out) {
    const Token tok = current_;
    if (tok.type != TokenType::Ident) {
      throw ParseError(ParseErrorKind::UnknownToken, tok.span,
                       "expected a generator, found " + describe(tok));
    }
    const auto g = lookup_keyword(tok.text);
    if (!g) {
      throw ParseError(ParseErrorKind::UnknownToken, tok.span,
                       "unknown generator '" + std::string(tok.text) + "'");
    }
    bump();
    std::size_t count = 1;
    if (current_.type == TokenType::Caret) {
      const Token caret = current_;
      bump();
      if (current_.type != TokenType::Number) {
        throw ParseError(ParseErrorKind::BadRepetition, caret.span,
                         "expected a repetition count after '^', found " + describe(current_));
      }
      count = 0;
      for (char c : current_.text) {
        count = count * 10 + static_cast<std::size_t>(c - '0');
        if (count > kMaxRepetition) break;
      }
      if (count == 0 || count > kMaxRepetition) {
        throw ParseError(ParseErrorKind::BadRepetition, current_.span,
                         "repetition count must be between 1 and " +
                             std::to_string(kMaxRepetition));
      }
      bump();
    }
    out.insert(out.end(), count, *g);
  }

  Lexer lexer_;
  Token current_{TokenType::End, {}, {}};
};

void format_layer(const Layer& layer, std::string& out) {
  const auto& gens = layer.generators();
  bool first = true;
  for (std::size_t i = 0; i < gens.size();) {
    if (!first) out += " | ";
    first = false;
    if (gens[i] == Generator::Id) {
      std::size_t run = 1;
      while (i + run < gens.size() && gens[i + run] == Generator::Id) ++run;
      out += "id";
      if (run >= 2) out += "^" + std::to_string(run);
      i += run;
    } else {
      out += keyword(gens[i]);
      ++i;
    }
  }
}

}  // namespace

CobordismWord parse(std::string_view text) { return Parser(text).parse_word(); }

std::string format(const CobordismWord& w) {
  if (w.layers().empty()) {
    if (w.source() == 0) return "";
    return w.source() == 1 ? "id" : "id^" + std::to_string(w.source());
  }
  std::string out;
  for (std::size_t i = 0; i < w.layers().size(); ++i) {
    if (i > 0) out += " ; ";
    format_layer(w.layers()[i], out);
  }
  return out;
}

}  // namespace cob2
