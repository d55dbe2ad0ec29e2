#include "qhsing/parse.hpp"

#include <cctype>
#include <map>

namespace qhsing {

namespace {

enum class Tok { Plus, Minus, Star, Slash, Caret, Integer, Ident, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      tok_ = {Tok::End, "", start};
      return;
    }
    char c = text_[pos_];
    switch (c) {
      case '+': ++pos_; tok_ = {Tok::Plus, "+", start}; return;
      case '-': ++pos_; tok_ = {Tok::Minus, "-", start}; return;
      case '*': ++pos_; tok_ = {Tok::Star, "*", start}; return;
      case '/': ++pos_; tok_ = {Tok::Slash, "/", start}; return;
      case '^': ++pos_; tok_ = {Tok::Caret, "^", start}; return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      tok_ = {Tok::Integer, text_.substr(start, pos_ - start), start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        ++pos_;
      }
      tok_ = {Tok::Ident, text_.substr(start, pos_ - start), start};
      return;
    }
    throw Error(errc::parse_error,
                "unexpected character '" + std::string(1, c) + "' at offset " +
                    std::to_string(start),
                start);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  Token tok_{Tok::End, "", 0};
};

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars)
      : lex_(text), nvars_(static_cast<int>(vars.size())) {
    for (int i = 0; i < nvars_; ++i) {
      auto [it, fresh] = index_.emplace(vars[i], i);
      (void)it;
      if (!fresh) {
        throw Error(errc::parse_error, "duplicate variable name: " + vars[i]);
      }
    }
  }

  Poly run() {
    Poly p(nvars_);
    int sign = 1;
    if (lex_.peek().kind == Tok::Plus) {
      lex_.take();
    } else if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      sign = -1;
    }
    term(p, sign);
    while (lex_.peek().kind != Tok::End) {
      Token op = lex_.take();
      if (op.kind == Tok::Plus) {
        term(p, 1);
      } else if (op.kind == Tok::Minus) {
        term(p, -1);
      } else {
        throw Error(errc::parse_error,
                    "expected '+' or '-' at offset " + std::to_string(op.pos),
                    op.pos);
      }
    }
    return p;
  }

 private:
  void term(Poly& p, int sign) {
    Rat coeff = sign;
    Monomial m{std::vector<int>(nvars_, 0)};
    const Token& first = lex_.peek();
    if (first.kind == Tok::Integer) {
      coeff *= coefficient();
    } else if (first.kind == Tok::Ident) {
      factor(m);
    } else {
      throw Error(errc::parse_error,
                  "expected a coefficient or variable at offset " +
                      std::to_string(first.pos),
                  first.pos);
    }
    while (lex_.peek().kind == Tok::Star) {
      lex_.take();
      factor(m);
    }
    p.add_term(m, coeff);
  }

  Rat coefficient() {
    Token num = lex_.take();
    Int n(num.text);
    if (lex_.peek().kind != Tok::Slash) return Rat(n);
    lex_.take();
    Token den = expect(Tok::Integer, "denominator");
    Int d(den.text);
    if (d == 0) {
      throw Error(errc::parse_error,
                  "zero denominator at offset " + std::to_string(den.pos),
                  den.pos);
    }
    return Rat(n, d);
  }

  void factor(Monomial& m) {
    Token name = expect(Tok::Ident, "variable");
    auto it = index_.find(name.text);
    if (it == index_.end()) {
      throw Error(errc::unknown_variable,
                  "unknown variable '" + name.text + "' at offset " +
                      std::to_string(name.pos),
                  name.pos);
    }
    int exp = 1;
    if (lex_.peek().kind == Tok::Caret) {
      lex_.take();
      const Token& next = lex_.peek();
      if (next.kind == Tok::Minus) {
        throw Error(errc::bad_exponent,
                    "exponent must be >= 0 at offset " + std::to_string(next.pos),
                    next.pos);
      }
      if (next.kind != Tok::Integer) {
        throw Error(errc::bad_exponent,
                    "exponent must be a non-negative integer at offset " +
                        std::to_string(next.pos),
                    next.pos);
      }
      Token e = lex_.take();
      if (e.text.size() > 6) {
        throw Error(errc::bad_exponent,
                    "exponent too large at offset " + std::to_string(e.pos),
                    e.pos);
      }
      exp = std::stoi(e.text);
    }
    m.k[it->second] += exp;
  }

  Token expect(Tok kind, const std::string& what) {
    const Token& t = lex_.peek();
    if (t.kind != kind) {
      throw Error(errc::parse_error,
                  "expected " + what + " at offset " + std::to_string(t.pos),
                  t.pos);
    }
    return lex_.take();
  }

  Lexer lex_;
  int nvars_;
  std::map<std::string, int> index_;
};

}  // namespace

Poly parse_polynomial(const std::string& text,
                      const std::vector<std::string>& vars) {
  return Parser(text, vars).run();
}

std::string to_string(const Poly& p, const std::vector<std::string>& vars) {
  if (static_cast<int>(vars.size()) != p.nvars()) {
    throw Error(errc::dimension_mismatch, "variable list arity mismatch");
  }
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    bool neg = c < 0;
    Rat mag = neg ? Rat(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string factors;
    for (int i = 0; i < p.nvars(); ++i) {
      if (m.k[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += vars[i];
      if (m.k[i] > 1) factors += "^" + std::to_string(m.k[i]);
    }
    if (factors.empty()) {
      out += rat_str(mag);
    } else if (mag == 1) {
      out += factors;
    } else {
      out += rat_str(mag) + "*" + factors;
    }
  }
  return out;
}

std::vector<std::string> default_vars(int count) {
  std::vector<std::string> vars;
  vars.reserve(count);
  for (int i = 1; i <= count; ++i) vars.push_back("z" + std::to_string(i));
  return vars;
}

}  // namespace qhsing
