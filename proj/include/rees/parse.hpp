#pragma once

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "rees/errors.hpp"
#include "rees/poly.hpp"
#include "rees/rational.hpp"

namespace rees {

/// Resolves identifiers that are not ring variables to field constants (alpha, t, tstar...).
template <class K>
using ConstantResolver = std::function<std::optional<K>(std::string_view)>;

namespace detail {

template <class K>
class PolyParser {
 public:
  PolyParser(std::string_view src, Vars vars, ConstantResolver<K> consts)
      : s_(src), vars_(std::move(vars)), consts_(std::move(consts)) {}

  Poly<K> run() {
    Poly<K> p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw error(errc::parse_error, why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly<K> expr() {
    Poly<K> acc = term();
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }

  Poly<K> term() {
    Poly<K> acc = unary();
    for (;;) {
      if (eat('*')) {
        acc = acc * unary();
      } else if (eat('/')) {
        Poly<K> d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc *= K(1) / d.constant_term();
      } else {
        return acc;
      }
    }
  }

  Poly<K> unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Poly<K> power() {
    Poly<K> base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent expected");
      unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (e > 4096) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Poly<K> atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly<K> p = expr();
      if (!eat(')')) fail("')' expected");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Rational r = Rational::parse(std::string(s_.substr(start, pos_ - start)));
      return Poly<K>::constant(vars_, K(r));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
        ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      if (vars_)
        for (std::size_t i = 0; i < vars_->size(); ++i)
          if ((*vars_)[i] == name) return Poly<K>::variable(vars_, i);
      if (consts_)
        if (auto k = consts_(name)) return Poly<K>::constant(vars_, *k);
      fail("unknown symbol '" + std::string(name) + "'");
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  Vars vars_;
  ConstantResolver<K> consts_;
};

}  // namespace detail

/// Parses the plain-text grammar `c*X^a*Y^b`, `+`, `-`, `^`, parentheses, division by constants.
template <class K>
Poly<K> parse_poly(std::string_view text, const Vars& vars, ConstantResolver<K> consts = {}) {
  return detail::PolyParser<K>(text, vars, std::move(consts)).run();
}

template <class K>
K parse_constant(std::string_view text, ConstantResolver<K> consts = {}) {
  static const Vars none = make_vars({});
  Poly<K> p = parse_poly<K>(text, none, std::move(consts));
  return p.constant_term();
}

}  // namespace rees
