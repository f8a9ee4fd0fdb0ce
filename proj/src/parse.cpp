#include "bang/parse.hpp"

#include <cctype>

namespace bang {

namespace {

class Parser {
public:
  explicit Parser(std::string_view src) : src_(src) {}

  TermPtr parseTerm() {
    TermPtr t = term();
    skipWs();
    if (pos_ != src_.size()) fail("trailing input");
    return t;
  }

private:
  std::string_view src_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

  void skipWs() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skipWs();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skipWs();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  std::string ident() {
    skipWs();
    if (pos_ >= src_.size() || !std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
      fail("expected identifier");
    }
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(src_.substr(start, pos_ - start));
  }

  bool startsItem() {
    char c = peek();
    return c == '!' || c == '(' || c == '#' || c == '[' ||
           std::isalpha(static_cast<unsigned char>(c));
  }

  // term := lambda | item+ [lambda]
  TermPtr term() {
    if (peek() == '\\') return lambda();
    TermPtr t = item();
    for (;;) {
      if (peek() == '\\') return mkApp(t, lambda());
      if (!startsItem()) return t;
      t = mkApp(t, item());
    }
  }

  TermPtr lambda() {
    eat('\\');
    std::string x = ident();
    if (!eat('.')) fail("expected '.' after binder");
    return mkAbs(std::move(x), term());
  }

  // item := "!" (lambda | item) | atom
  TermPtr item() {
    if (eat('!')) {
      if (peek() == '\\') return mkBang(lambda());
      return mkBang(item());
    }
    return atom();
  }

  TermPtr atom() {
    char c = peek();
    if (c == '(') {
      eat('(');
      TermPtr t = term();
      if (!eat(')')) fail("expected ')'");
      return t;
    }
    if (c == '[') {
      eat('[');
      if (!eat(']')) fail("expected ']'");
      return mkHole();
    }
    if (c == '#') {
      eat('#');
      std::string op = ident();
      if (!eat('(')) fail("expected '(' after operator name");
      std::vector<TermPtr> args;
      args.push_back(term());
      while (eat(',')) args.push_back(term());
      if (!eat(')')) fail("expected ')'");
      return mkOp(std::move(op), std::move(args));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return mkVar(ident());
    fail("expected term");
  }
};

enum class Ctx { Top, AppLeft, AppRight, BangBody };

void printTo(const TermPtr& t, Ctx ctx, std::string& out) {
  switch (t->kind) {
    case Kind::Var:
      out += t->name;
      return;
    case Kind::Hole:
      out += "[]";
      return;
    case Kind::Op: {
      out += '#';
      out += t->name;
      out += '(';
      for (std::size_t i = 0; i < t->args.size(); ++i) {
        if (i) out += ", ";
        printTo(t->args[i], Ctx::Top, out);
      }
      out += ')';
      return;
    }
    case Kind::Abs: {
      bool paren = ctx != Ctx::Top;
      if (paren) out += '(';
      out += '\\';
      out += t->name;
      out += '.';
      printTo(t->sub0, Ctx::Top, out);
      if (paren) out += ')';
      return;
    }
    case Kind::Bang:
      out += '!';
      printTo(t->sub0, Ctx::BangBody, out);
      return;
    case Kind::App: {
      bool paren = ctx == Ctx::AppRight || ctx == Ctx::BangBody;
      if (paren) out += '(';
      printTo(t->sub0, Ctx::AppLeft, out);
      out += ' ';
      printTo(t->sub1, Ctx::AppRight, out);
      if (paren) out += ')';
      return;
    }
  }
}

}  // namespace

TermPtr parse(std::string_view src) { return Parser(src).parseTerm(); }

std::string print(const TermPtr& t) {
  std::string out;
  out.reserve(t->size * 4);
  printTo(t, Ctx::Top, out);
  return out;
}

}  // namespace bang
