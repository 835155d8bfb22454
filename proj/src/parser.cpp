#include "lsb/parser.hpp"

#include <cctype>
#include <string>

#include "lsb/errors.hpp"

namespace lsb {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring, std::size_t offset)
      : text_(text), ring_(ring), offset_(offset) {}

  Polynomial parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, offset_ + pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    Polynomial acc = product();
    for (;;) {
      if (accept('+')) {
        acc += product();
      } else if (accept('-')) {
        acc -= product();
      } else {
        return acc;
      }
    }
  }

  Polynomial product() {
    Polynomial acc = unary();
    while (accept('*')) acc = acc * unary();
    skip_space();
    if (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                text_[pos_] == '(' || text_[pos_] == '_')) {
      fail("expected an operator (multiplication needs an explicit '*')");
    }
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (!accept('^')) return base;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 6) fail("exponent too large");
    return base.pow(static_cast<unsigned>(std::stoul(digits)));
  }

  Polynomial primary() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
    fail(std::string("unexpected '") + c + "'");
  }

  Polynomial number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string literal(text_.substr(start, pos_ - start));
    if (pos_ < text_.size() && text_[pos_] == '/') {
      const std::size_t slash = pos_++;
      const std::size_t den_start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (den_start == pos_) {
        pos_ = slash;
        fail("expected a denominator after '/'");
      }
      const std::string den(text_.substr(den_start, pos_ - den_start));
      if (den.find_first_not_of('0') == std::string::npos) {
        pos_ = den_start;
        fail("zero denominator");
      }
      literal += "/" + den;
    }
    Rational q(literal, 10);
    q.canonicalize();
    return Polynomial::constant(ring_, q);
  }

  Polynomial variable() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = text_.substr(start, pos_ - start);
    const std::size_t idx = ring_->index_of(name);
    if (idx == ring_->num_vars()) {
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    return Polynomial::variable(ring_, idx);
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

std::vector<std::pair<std::string_view, std::size_t>> split_top_level(std::string_view text) {
  std::vector<std::pair<std::string_view, std::size_t>> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == ',' && depth == 0) {
      parts.emplace_back(text.substr(start, i - start), start);
      start = i + 1;
    }
  }
  parts.emplace_back(text.substr(start), start);
  return parts;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
  return Parser(text, ring, 0).parse();
}

std::vector<Polynomial> parse_ideal(std::string_view text, const Ring& ring) {
  std::vector<Polynomial> gens;
  for (const auto& [part, offset] : split_top_level(text)) {
    gens.push_back(Parser(part, ring, offset).parse());
  }
  return gens;
}

MonomialIdeal parse_monomial_ideal(std::string_view text, const Ring& ring) {
  std::vector<Monomial> monos;
  for (const auto& [part, offset] : split_top_level(text)) {
    const Polynomial p = Parser(part, ring, offset).parse();
    if (p.size() != 1) {
      throw ParseError("expected a single monomial, got " + p.to_string(), offset);
    }
    monos.push_back(p.lead_monomial());
  }
  return MonomialIdeal(ring, std::move(monos));
}

}  // namespace lsb
