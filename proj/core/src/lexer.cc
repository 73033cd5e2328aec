//===- lexer.cc - Tokenizer ----------------------------------------------===//
#include <array>
#include <cctype>
#include <string>

#include "flowgraph/frontend.h"

namespace flowgraph {
namespace {

constexpr std::array<std::string_view, 8> kKeywords = {
    "public", "class", "static", "void", "int", "if", "else", "while",
};

// Longest first so maximal munch is a simple prefix scan.
constexpr std::array<std::string_view, 15> kOperators = {
    "<=", ">=", "==", "!=", "&&", "||",
    "+", "-", "*", "/", "%", "<", ">", "!", "=",
};

constexpr std::string_view kPunctuation = "(){}[];,.";

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}
bool is_ident_char(char c) {
  return is_ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (skip_trivia(), pos_ < src_.size()) out.push_back(next());
    return out;
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
      if (src_[pos_++] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
    }
  }

  void skip_trivia() {
    for (;;) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && peek() != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        SourceLoc start{line_, col_};
        advance(2);
        while (pos_ < src_.size() && !(peek() == '*' && peek(1) == '/')) advance();
        // An unterminated comment is reported at its opening slash.
        if (pos_ >= src_.size()) throw LexError(start, '/');
        advance(2);
      } else {
        return;
      }
    }
  }

  Token next() {
    Token tok{TokenKind::kPunctuation, "", line_, col_};
    std::size_t start = pos_;
    char c = peek();
    if (is_ident_start(c)) {
      while (is_ident_char(peek())) advance();
      tok.lexeme = std::string(src_.substr(start, pos_ - start));
      tok.kind = TokenKind::kIdentifier;
      for (auto kw : kKeywords) {
        if (tok.lexeme == kw) tok.kind = TokenKind::kKeyword;
      }
      return tok;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
      tok.lexeme = std::string(src_.substr(start, pos_ - start));
      tok.kind = TokenKind::kIntegerLiteral;
      return tok;
    }
    for (auto op : kOperators) {
      if (src_.substr(pos_, op.size()) == op) {
        advance(op.size());
        tok.lexeme = std::string(op);
        tok.kind = TokenKind::kOperator;
        return tok;
      }
    }
    if (kPunctuation.find(c) != std::string_view::npos) {
      advance();
      tok.lexeme = std::string(1, c);
      return tok;
    }
    throw LexError({line_, col_}, c);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::uint32_t line_ = 1;
  std::uint32_t col_ = 1;
};

std::string describe_char(char c) {
  auto u = static_cast<unsigned char>(c);
  if (std::isprint(u)) return std::string("'") + c + "'";
  static constexpr char kHex[] = "0123456789abcdef";
  return std::string("byte 0x") + kHex[u >> 4] + kHex[u & 0xf];
}

}  // namespace

LexError::LexError(SourceLoc loc, char offending)
    : FrontendError(std::to_string(loc.line) + ":" + std::to_string(loc.column) +
                        ": unexpected character " + describe_char(offending),
                    loc),
      offending_(offending) {}

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace flowgraph
