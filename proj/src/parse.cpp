#include <cctype>

#include "symres/poly.hpp"

namespace symres {

namespace {

// recursive-descent parser over the documented grammar
class Parser {
 public:
  Parser(const std::string& text, const GradedRing& ring) : s_(text), ring_(ring) {}

  Poly run() {
    Poly p = expr(true);
    skip_ws();
    if (pos_ != s_.size())
      fail(ErrorCode::SyntaxError, "trailing input at offset " + std::to_string(pos_),
           static_cast<long>(pos_));
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Poly expr(bool allow_unary_minus) {
    bool neg = false;
    if (allow_unary_minus && peek() == '-') {
      ++pos_;
      neg = true;
    }
    Poly p = term();
    if (neg) p = -p;
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        p += term();
      } else if (c == '-') {
        ++pos_;
        p -= term();
      } else {
        break;
      }
    }
    return p;
  }

  Poly term() {
    Poly p = factor();
    while (peek() == '*') {
      ++pos_;
      p *= factor();
    }
    return p;
  }

  Poly factor() {
    Poly b = base();
    if (peek() == '^') {
      ++pos_;
      long long e = uint_lit();
      Poly r = Poly::from_int(ring_, 1);
      for (long long i = 0; i < e; ++i) r *= b;
      return r;
    }
    return b;
  }

  Poly base() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Poly p = expr(true);
      if (!eat(')'))
        fail(ErrorCode::SyntaxError, "expected ')' at offset " + std::to_string(pos_),
             static_cast<long>(pos_));
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      BigInt v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        v = v * 10 + (s_[pos_] - '0');
        ++pos_;
      }
      (void)start;
      return Poly::constant(ring_, Scalar::from_big(v, ring_.field()));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                  s_[pos_] == '_'))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      auto idx = ring_.var_index(name);
      if (!idx)
        fail(ErrorCode::UnknownVariable,
             "'" + name + "' at offset " + std::to_string(start), static_cast<long>(start));
      return Poly::variable(ring_, *idx);
    }
    fail(ErrorCode::SyntaxError,
         std::string("unexpected character '") + c + "' at offset " + std::to_string(pos_),
         static_cast<long>(pos_));
  }

  long long uint_lit() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail(ErrorCode::SyntaxError, "expected exponent at offset " + std::to_string(pos_),
           static_cast<long>(pos_));
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000)
        fail(ErrorCode::SyntaxError, "exponent too large", static_cast<long>(pos_));
      ++pos_;
    }
    return v;
  }

  const std::string& s_;
  const GradedRing& ring_;
  size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, const GradedRing& ring) {
  return Parser(text, ring).run();
}

}  // namespace symres
