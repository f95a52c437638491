#include "parser.hpp"

#include <cctype>

#include "errors.hpp"

namespace msokit {

namespace {

struct Token {
  enum class Type {
    kw_true, kw_false, kw_at, kw_ex, kw_all, kw_empty,
    identifier, label,  // label carries the symbol name after P_
    lparen, rparen, dot,
    bang, amp, pipe, arrow, iff,
    eq, subseteq, less,
    end,
  };
  Type type;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& message, std::size_t pos) const {
    throw InputError("syntax error at position " + std::to_string(pos) + ": " + message);
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = {Token::Type::end, "", start};
      return;
    }
    char c = text_[pos_];
    auto make = [&](Token::Type type, std::size_t len) {
      current_ = {type, text_.substr(start, len), start};
      pos_ += len;
    };
    switch (c) {
      case '(': make(Token::Type::lparen, 1); return;
      case ')': make(Token::Type::rparen, 1); return;
      case '.': make(Token::Type::dot, 1); return;
      case '!': make(Token::Type::bang, 1); return;
      case '&': make(Token::Type::amp, 1); return;
      case '|': make(Token::Type::pipe, 1); return;
      case '=': make(Token::Type::eq, 1); return;
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          make(Token::Type::arrow, 2);
          return;
        }
        fail("expected '->'", start);
      case '<':
        if (pos_ + 2 < text_.size() && text_[pos_ + 1] == '-' && text_[pos_ + 2] == '>') {
          make(Token::Type::iff, 3);
          return;
        }
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
          make(Token::Type::subseteq, 2);
          return;
        }
        make(Token::Type::less, 1);
        return;
      default:
        break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
        ++end;
      }
      std::string word = text_.substr(start, end - start);
      pos_ = end;
      if (word == "true") current_ = {Token::Type::kw_true, word, start};
      else if (word == "false") current_ = {Token::Type::kw_false, word, start};
      else if (word == "at") current_ = {Token::Type::kw_at, word, start};
      else if (word == "ex") current_ = {Token::Type::kw_ex, word, start};
      else if (word == "all") current_ = {Token::Type::kw_all, word, start};
      else if (word == "empty") current_ = {Token::Type::kw_empty, word, start};
      else if (word.size() > 2 && word[0] == 'P' && word[1] == '_') {
        current_ = {Token::Type::label, word.substr(2), start};
      } else {
        current_ = {Token::Type::identifier, word, start};
      }
      return;
    }
    fail(std::string("unexpected character '") + c + "'", start);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  Token current_{Token::Type::end, "", 0};
};

class Parser {
 public:
  Parser(const std::string& text, const Alphabet& alphabet)
      : lexer_(text), alphabet_(alphabet) {}

  Formula parse() {
    Formula f = parse_iff();
    const Token& t = lexer_.peek();
    if (t.type != Token::Type::end) lexer_.fail("trailing input", t.pos);
    return f;
  }

 private:
  // iff is lowest precedence, right associative.
  Formula parse_iff() {
    Formula left = parse_implies();
    if (lexer_.peek().type == Token::Type::iff) {
      lexer_.next();
      return f_iff(left, parse_iff());
    }
    return left;
  }

  Formula parse_implies() {
    Formula left = parse_or();
    if (lexer_.peek().type == Token::Type::arrow) {
      lexer_.next();
      return f_implies(left, parse_implies());
    }
    return left;
  }

  Formula parse_or() {
    Formula left = parse_and();
    while (lexer_.peek().type == Token::Type::pipe) {
      lexer_.next();
      left = f_or(left, parse_and());
    }
    return left;
  }

  Formula parse_and() {
    Formula left = parse_unary();
    while (lexer_.peek().type == Token::Type::amp) {
      lexer_.next();
      left = f_and(left, parse_unary());
    }
    return left;
  }

  Formula parse_unary() {
    const Token& t = lexer_.peek();
    switch (t.type) {
      case Token::Type::bang:
        lexer_.next();
        return f_not(parse_unary());
      case Token::Type::kw_ex:
      case Token::Type::kw_all: {
        bool universal = t.type == Token::Type::kw_all;
        lexer_.next();
        Token var = expect(Token::Type::identifier, "variable name");
        expect(Token::Type::dot, "'.'");
        Formula body = parse_iff();  // scope extends maximally right
        return universal ? f_forall(var.text, body) : f_exists(var.text, body);
      }
      default:
        return parse_atomic();
    }
  }

  Formula parse_atomic() {
    const Token& t = lexer_.peek();
    switch (t.type) {
      case Token::Type::kw_true:
        lexer_.next();
        return f_true();
      case Token::Type::kw_false:
        lexer_.next();
        return f_false();
      case Token::Type::lparen: {
        lexer_.next();
        Formula inner = parse_iff();
        expect(Token::Type::rparen, "')'");
        return inner;
      }
      case Token::Type::kw_at: {
        lexer_.next();
        expect(Token::Type::lparen, "'('");
        Term arg = parse_term();
        expect(Token::Type::rparen, "')'");
        return f_at(arg);
      }
      case Token::Type::label: {
        Token tok = lexer_.next();
        if (alphabet_.index_of(tok.text) < 0) {
          lexer_.fail("unknown symbol '" + tok.text + "'", tok.pos);
        }
        expect(Token::Type::lparen, "'('");
        Term arg = parse_term();
        expect(Token::Type::rparen, "')'");
        return f_label(tok.text, arg);
      }
      default:
        break;
    }
    // term-led alternatives: relation or the X(x) application sugar
    Token lead = lexer_.peek();
    Term lhs = parse_term();
    const Token& op = lexer_.peek();
    switch (op.type) {
      case Token::Type::eq:
        lexer_.next();
        return f_eq(lhs, parse_term());
      case Token::Type::subseteq:
        lexer_.next();
        return f_sub(lhs, parse_term());
      case Token::Type::less:
        lexer_.next();
        return f_before(lhs, parse_term());
      case Token::Type::lparen: {
        if (lhs.is_bottom()) lexer_.fail("'empty' cannot be applied", op.pos);
        lexer_.next();
        Term arg = parse_term();
        expect(Token::Type::rparen, "')'");
        return f_sub(arg, lhs);  // X(x) is shorthand for x <= X
      }
      default:
        lexer_.fail("expected a relation after term", lead.pos);
    }
  }

  Term parse_term() {
    const Token& t = lexer_.peek();
    if (t.type == Token::Type::kw_empty) {
      lexer_.next();
      return Term::bottom();
    }
    if (t.type == Token::Type::identifier) {
      Token tok = lexer_.next();
      return Term::var(tok.text);
    }
    lexer_.fail("expected a term", t.pos);
  }

  Token expect(Token::Type type, const std::string& what) {
    const Token& t = lexer_.peek();
    if (t.type != type) lexer_.fail("expected " + what, t.pos);
    return lexer_.next();
  }

  Lexer lexer_;
  const Alphabet& alphabet_;
};

int precedence(Kind kind) {
  switch (kind) {
    case Kind::equivalence: return 1;
    case Kind::implication: return 2;
    case Kind::disjunction: return 3;
    case Kind::conjunction: return 4;
    case Kind::negation: return 5;
    case Kind::exists:
    case Kind::forall: return 0;
    default: return 6;  // atomic
  }
}

std::string render_term(const Term& t) { return t.is_bottom() ? "empty" : t.name(); }

void render_rec(const Formula& f, int min_prec, std::string& out) {
  int prec = precedence(f->kind);
  bool parens = prec < min_prec;
  if (parens) out += "(";
  switch (f->kind) {
    case Kind::constant:
      out += f->truth ? "true" : "false";
      break;
    case Kind::equal:
      out += render_term(f->lhs) + " = " + render_term(f->rhs);
      break;
    case Kind::subset:
      out += render_term(f->lhs) + " <= " + render_term(f->rhs);
      break;
    case Kind::before:
      out += render_term(f->lhs) + " < " + render_term(f->rhs);
      break;
    case Kind::atom:
      out += "at(" + render_term(f->lhs) + ")";
      break;
    case Kind::label:
      out += "P_" + f->symbol + "(" + render_term(f->lhs) + ")";
      break;
    case Kind::negation:
      out += "!";
      render_rec(f->left, 5, out);
      break;
    case Kind::conjunction:
      render_rec(f->left, 4, out);
      out += " & ";
      render_rec(f->right, 5, out);
      break;
    case Kind::disjunction:
      render_rec(f->left, 3, out);
      out += " | ";
      render_rec(f->right, 4, out);
      break;
    case Kind::implication:
      render_rec(f->left, 3, out);
      out += " -> ";
      render_rec(f->right, 2, out);
      break;
    case Kind::equivalence:
      render_rec(f->left, 2, out);
      out += " <-> ";
      render_rec(f->right, 1, out);
      break;
    case Kind::exists:
    case Kind::forall:
      out += (f->kind == Kind::exists) ? "ex " : "all ";
      out += f->var + ". ";
      render_rec(f->body, 0, out);
      break;
  }
  if (parens) out += ")";
}

}  // namespace

Formula parse_formula(const std::string& text, const Alphabet& alphabet) {
  Parser parser(text, alphabet);
  return parser.parse();
}

std::string render_formula(const Formula& f) {
  std::string out;
  render_rec(f, 0, out);
  return out;
}

}  // namespace msokit
