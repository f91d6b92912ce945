#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

namespace qrep {

// Parses field elements written as arithmetic expressions: "3/4", "-2",
// "t^2+1", "(t^2+1)/t", "2*x+1".  The variable symbol (t or x) resolves
// through F::var(); fields without one reject it.
template <class F>
class ElemParser {
 public:
  explicit ElemParser(const F& f) : f_(f) {}

  typename F::Elem parse(const std::string& s) {
    s_ = &s;
    pos_ = 0;
    auto v = expr();
    skip_ws();
    if (pos_ != s.size()) throw std::invalid_argument("trailing characters in element '" + s + "'");
    return v;
  }

 private:
  using Elem = typename F::Elem;

  Elem expr() {
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = (get() == '-');
    Elem v = term();
    if (neg) v = f_.neg(v);
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '+' || c == '-') {
        get();
        Elem t = term();
        v = (c == '+') ? f_.add(v, t) : f_.sub(v, t);
      } else {
        return v;
      }
    }
  }

  Elem term() {
    Elem v = power();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '*' || c == '/') {
        get();
        Elem t = power();
        v = (c == '*') ? f_.mul(v, t) : f_.div(v, t);
      } else {
        return v;
      }
    }
  }

  Elem power() {
    Elem base = atom();
    skip_ws();
    if (peek() == '^') {
      get();
      skip_ws();
      long e = integer();
      if (e < 0) throw std::invalid_argument("negative exponent");
      Elem r = f_.one();
      for (long i = 0; i < e; ++i) r = f_.mul(r, base);
      return r;
    }
    return base;
  }

  Elem atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      get();
      Elem v = expr();
      skip_ws();
      if (get() != ')') throw std::invalid_argument("missing ')'");
      return v;
    }
    if (c == 't' || c == 'x') {
      get();
      auto v = f_.var();
      if (!v) throw std::invalid_argument(std::string("field ") + f_.name() + " has no element '" + c + "'");
      return *v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return f_.from_int(integer());
    throw std::invalid_argument("unexpected character in element string");
  }

  long integer() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      get();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw std::invalid_argument("expected an integer");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (get() - '0');
    return neg ? -v : v;
  }

  void skip_ws() {
    while (pos_ < s_->size() && std::isspace(static_cast<unsigned char>((*s_)[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_->size() ? (*s_)[pos_] : '\0'; }
  char get() { return pos_ < s_->size() ? (*s_)[pos_++] : '\0'; }

  const F& f_;
  const std::string* s_ = nullptr;
  std::size_t pos_ = 0;
};

template <class F>
typename F::Elem parse_elem(const F& f, const std::string& s) {
  return ElemParser<F>(f).parse(s);
}

}  // namespace qrep
