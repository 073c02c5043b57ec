#include "monader/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "monader/error.hpp"

namespace monader {

namespace {

class Parser {
 public:
  Parser(std::string_view text, SemiringId sr, const FnRegistry& reg)
      : s_(text), sr_(sr), reg_(reg) {}

  Expr run() {
    Expr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(pos_, msg); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!eat(c)) {
      if (pos_ >= s_.size()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "', found '" + s_[pos_] + "'");
    }
  }

  static Expr fold_right(std::vector<Expr> items, Expr (*join)(Expr, Expr)) {
    Expr acc = items.back();
    for (auto it = items.rbegin() + 1; it != items.rend(); ++it) acc = join(*it, acc);
    return acc;
  }

  Expr expr() {
    std::vector<Expr> terms{term()};
    while (eat('+')) terms.push_back(term());
    return fold_right(std::move(terms), &Expr::sum);
  }

  Expr term() {
    std::vector<Expr> factors{factor()};
    while (eat('.')) factors.push_back(factor());
    return fold_right(std::move(factors), &Expr::cat);
  }

  Weight weight_literal() {
    std::size_t open = pos_;
    expect('{');
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != '}') ++pos_;
    if (pos_ >= s_.size()) {
      pos_ = open;
      fail("unterminated weight");
    }
    std::string_view lit = s_.substr(start, pos_ - start);
    ++pos_;
    // Trim surrounding blanks inside the braces.
    while (!lit.empty() && std::isspace(static_cast<unsigned char>(lit.front()))) lit.remove_prefix(1);
    while (!lit.empty() && std::isspace(static_cast<unsigned char>(lit.back()))) lit.remove_suffix(1);
    return Weight::parse(sr_, lit);
  }

  Expr factor() {
    std::optional<Weight> prefix;
    if (peek() == '{') prefix = weight_literal();
    Expr e = atom();
    while (eat('*')) e = Expr::star(std::move(e));
    if (peek() == '{') e = Expr::ract(std::move(e), weight_literal());
    if (prefix) e = Expr::lact(std::move(*prefix), std::move(e));
    return e;
  }

  Expr atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string_view word = s_.substr(start, pos_ - start);
      if (word == "eps") return Expr::epsilon(sr_);
      if (word == "nil") return Expr::empty(sr_);
      if (word.size() == 1) return Expr::sym(word.front(), sr_);
      pos_ = start;
      fail("'" + std::string(word) + "' is not a symbol (symbols are single letters; use '.')");
    }
    if (std::isupper(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(s_.substr(start, pos_ - start));
      FnRef f = reg_.lookup(name);
      expect('(');
      std::vector<Expr> args{expr()};
      while (eat(',')) args.push_back(expr());
      expect(')');
      if (args.size() != f.arity()) {
        throw ArityMismatch(name + " expects " + std::to_string(f.arity()) +
                            " arguments, got " + std::to_string(args.size()));
      }
      return Expr::apply(std::move(f), std::move(args));
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  SemiringId sr_;
  const FnRegistry& reg_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text, SemiringId semiring, const FnRegistry& registry) {
  if (registry.semiring() != semiring) {
    throw SemiringMismatch("function registry is over " +
                           std::string(semiring_name(registry.semiring())));
  }
  return Parser(text, semiring, registry).run();
}

}  // namespace monader
