#include "dalg/expr.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "dalg/error.hpp"

namespace dalg {

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, prime, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

[[noreturn]] void fail(std::size_t line, std::size_t col, const std::string& msg) {
  throw Error(ErrorCode::parse_error, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < s.size();) {
    const char ch = s[i];
    const std::size_t start_col = col;
    if (ch == '\n') {
      ++line, col = 1, ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++col, ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && (s[j] == '.' || s[j] == 'e' || s[j] == 'E'))
        fail(line, col + (j - i), "floating-point literals are not allowed; use p/q");
      out.push_back({Tok::number, s.substr(i, j - i), line, start_col});
      col += j - i, i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::ident, s.substr(i, j - i), line, start_col});
      col += j - i, i = j;
      continue;
    }
    Tok kind;
    switch (ch) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '/': kind = Tok::slash; break;
      case '^': kind = Tok::caret; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case '\'': kind = Tok::prime; break;
      default: fail(line, col, std::string("unexpected character '") + ch + "'");
    }
    out.push_back({kind, std::string(1, ch), line, start_col});
    ++col, ++i;
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, SignaturePtr sig) : toks_(std::move(toks)), sig_(std::move(sig)) {}

  DiffRational parse() {
    DiffRational r = expr();
    if (peek().kind != Tok::end) fail(peek().line, peek().col, "unexpected '" + peek().text + "'");
    return r;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) {
      const Token& t = peek();
      fail(t.line, t.col, std::string("expected ") + what + (t.kind == Tok::end ? " at end of input" : ", found '" + t.text + "'"));
    }
    return next();
  }

  std::uint32_t integer(bool allow_zero) {
    const Token& t = expect(Tok::number, "an integer");
    if (t.text.size() > 6) fail(t.line, t.col, "integer too large: " + t.text);
    auto v = static_cast<std::uint32_t>(std::stoul(t.text));
    if (!allow_zero && v == 0) fail(t.line, t.col, "exponent must be a positive integer");
    return v;
  }

  DiffRational expr() {
    DiffRational acc = term();
    for (;;) {
      if (accept(Tok::plus))
        acc = acc + term();
      else if (accept(Tok::minus))
        acc = acc - term();
      else
        return acc;
    }
  }

  DiffRational term() {
    DiffRational acc = factor();
    for (;;) {
      if (accept(Tok::star)) {
        acc = acc * factor();
      } else if (peek().kind == Tok::slash) {
        const Token& t = next();
        DiffRational d = factor();
        if (d.is_zero()) fail(t.line, t.col, "division by zero");
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  DiffRational factor() {
    DiffRational b = base();
    if (accept(Tok::caret)) {
      std::uint32_t e;
      if (accept(Tok::lparen)) {
        e = integer(false);
        expect(Tok::rparen, "')'");
      } else {
        e = integer(false);
      }
      b = b.pow(e);
    }
    return b;
  }

  DiffRational base() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::number: {
        next();
        return DiffRational(DiffPoly::constant(sig_, parse_rat(t.text)));
      }
      case Tok::lparen: {
        next();
        DiffRational r = expr();
        expect(Tok::rparen, "')'");
        return r;
      }
      case Tok::minus: {
        next();
        return -factor();
      }
      case Tok::ident: return identifier();
      default:
        fail(t.line, t.col, t.kind == Tok::end ? "unexpected end of input" : "unexpected '" + t.text + "'");
    }
  }

  DiffRational identifier() {
    const Token& t = next();
    if (auto ind = sig_->find_indeterminate(t.text)) {
      std::uint32_t k = 0;
      if (peek().kind == Tok::prime) {
        while (accept(Tok::prime)) ++k;
      } else if (peek().kind == Tok::caret && peek(1).kind == Tok::lparen) {
        next(), next();
        k = integer(true);
        expect(Tok::rparen, "')'");
      }
      return DiffRational(DiffPoly::jet(sig_, *ind, k));
    }
    if (auto p = sig_->find_parameter(t.text)) {
      if (peek().kind == Tok::prime) fail(peek().line, peek().col, "parameter '" + t.text + "' cannot be differentiated");
      return DiffRational(DiffPoly::parameter(sig_, *p));
    }
    fail(t.line, t.col, "unknown identifier '" + t.text + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  SignaturePtr sig_;
};

}  // namespace

std::vector<DiffRational> parse_exprs(const std::vector<std::string>& texts, const std::vector<std::string>& vars,
                                      const std::vector<std::string>& extra_parameters) {
  if (vars.empty()) throw Error(ErrorCode::parse_error, "no differential variables declared");
  std::vector<std::vector<Token>> tokens;
  std::set<std::string> params(extra_parameters.begin(), extra_parameters.end());
  for (const auto& text : texts) {
    tokens.push_back(tokenize(text));
    for (const auto& t : tokens.back())
      if (t.kind == Tok::ident && std::find(vars.begin(), vars.end(), t.text) == vars.end()) params.insert(t.text);
  }
  SignaturePtr sig = make_signature(vars, std::vector<std::string>(params.begin(), params.end()));
  std::vector<DiffRational> out;
  for (auto& toks : tokens) out.push_back(Parser(std::move(toks), sig).parse());
  return out;
}

DiffRational parse_expr(const std::string& text, const std::vector<std::string>& vars) {
  return parse_exprs({text}, vars).front();
}

DiffRational parse_expr_in(const std::string& text, const SignaturePtr& sig) { return Parser(tokenize(text), sig).parse(); }

std::string print_expr(const DiffRational& r) {
  const DiffPoly& d = r.denom();
  if (d.body().is_constant() && d.body().constant_term() == 1) return r.numer().to_string();
  return "(" + r.numer().to_string() + ")/(" + d.to_string() + ")";
}

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : list + ",") {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  return out;
}

}  // namespace dalg
