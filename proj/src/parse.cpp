#include "cuntzlab/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <vector>

#include "cuntzlab/errors.hpp"

namespace cuntzlab {

namespace {

class ElementParser {
 public:
  ElementParser(std::string_view text, int n_gens) : text_(text), n_gens_(n_gens) {}

  AlgebraElement parse() {
    AlgebraElement result(n_gens_);
    skip_ws();
    if (at_end()) throw ParseError("empty element", pos_);
    // A leading '-' before digits is the sign of the real part, so that
    // "-3+1/2i" reads as -3 + i/2.
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      std::size_t next = pos_ + 1;
      while (next < text_.size() && std::isspace(static_cast<unsigned char>(text_[next]))) ++next;
      const bool digit_follows = next < text_.size() && std::isdigit(static_cast<unsigned char>(text_[next]));
      if (peek() == '+' || !digit_follows) {
        negate = peek() == '-';
        ++pos_;
      }
    }
    add(result, parse_term(), negate);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char op = peek();
      if (op != '+' && op != '-') throw ParseError("expected '+' or '-'", pos_);
      ++pos_;
      add(result, parse_term(), op == '-');
    }
    return result;
  }

 private:
  static void add(AlgebraElement& acc, const AlgebraElement& term, bool negate) {
    if (negate) {
      acc -= term;
    } else {
      acc += term;
    }
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_ws();
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  bool at_factor() {
    skip_ws();
    return peek() == 's' || peek() == 't';
  }

  AlgebraElement parse_term() {
    skip_ws();
    if (at_factor()) return parse_factors();
    Scalar coeff = parse_coeff();
    skip_ws();
    if (peek() == '*') {
      ++pos_;
      if (!at_factor()) throw ParseError("expected factor after '*'", pos_);
      return parse_factors() * coeff;
    }
    return AlgebraElement::scalar(n_gens_, coeff);
  }

  AlgebraElement parse_factors() {
    AlgebraElement acc = AlgebraElement::identity(n_gens_);
    while (at_factor()) acc = mul(acc, parse_factor());
    return acc;
  }

  AlgebraElement parse_factor() {
    const bool star = peek() == 't';
    ++pos_;
    expect('[');
    skip_ws();
    MultiIndex word;
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      int letter = peek() - '0';
      if (letter < 1 || letter > n_gens_) {
        throw ParseError("letter " + std::to_string(letter) + " outside 1.." +
                             std::to_string(n_gens_),
                         pos_);
      }
      word.push_back(letter);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected letters", pos_);
    expect(']');
    return star ? AlgebraElement::monomial(n_gens_, {}, word)
                : AlgebraElement::monomial(n_gens_, word, {});
  }

  std::optional<Rational> try_unsigned_rational() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) return std::nullopt;
    std::string num(text_.substr(start, pos_ - start));
    std::string den = "1";
    const std::size_t after_num = pos_;
    skip_ws();
    if (peek() != '/') pos_ = after_num;
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t dstart = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (pos_ == dstart) throw ParseError("expected denominator", pos_);
      den = std::string(text_.substr(dstart, pos_ - dstart));
      if (std::all_of(den.begin(), den.end(), [](char c) { return c == '0'; })) {
        throw ParseError("zero denominator", dstart);
      }
    }
    Rational r{mpz_class(num), mpz_class(den)};
    r.canonicalize();
    return r;
  }

  Rational parse_rational() {
    skip_ws();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    auto r = try_unsigned_rational();
    if (!r) throw ParseError("expected coefficient or factor", pos_);
    return negative ? Rational(-*r) : *r;
  }

  // The imaginary part must follow the real part without spaces: "3+1/2i" is
  // one coefficient, "3 + 1/2i" two terms.
  Scalar parse_coeff() {
    Rational re = parse_rational();
    if (peek() == 'i') {
      ++pos_;
      return Scalar(Rational(0), re);
    }
    if ((peek() == '+' || peek() == '-') && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      const std::size_t save = pos_;
      const bool negative = peek() == '-';
      ++pos_;
      auto im = try_unsigned_rational();
      if (im && peek() == 'i') {
        ++pos_;
        return Scalar(re, negative ? Rational(-*im) : *im);
      }
      pos_ = save;
    }
    return Scalar(re);
  }

  std::string_view text_;
  int n_gens_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Monomial& m) {
  std::string out;
  if (!m.left.empty()) out += "s[" + m.left.digits() + "]";
  if (!m.right.empty()) {
    if (!out.empty()) out += ' ';
    out += "t[" + m.right.digits() + "]";
  }
  return out;
}

std::string format_terms(const AlgebraElement& a) {
  if (a.empty()) return "0";
  std::vector<std::pair<const Monomial*, const Scalar*>> sorted;
  for (const auto& [m, c] : a.terms()) sorted.emplace_back(&m, &c);
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    if (x.first->left != y.first->left) return x.first->left < y.first->left;
    return x.first->right < y.first->right;
  });

  std::string out;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    std::string body = monomial_text(*m);
    Scalar coeff = *c;
    if (first) {
      if (coeff.is_real() && sgn(coeff.re()) < 0) {
        out += '-';
        coeff = -coeff;
      }
    } else if (coeff.is_real() && sgn(coeff.re()) < 0) {
      out += " - ";
      coeff = -coeff;
    } else {
      out += " + ";
    }
    first = false;
    if (body.empty()) {
      out += coeff.to_string();
    } else if (coeff.is_one()) {
      out += body;
    } else {
      out += coeff.to_string() + " * " + body;
    }
  }
  return out;
}

}  // namespace

AlgebraElement parse_element(std::string_view text, int n_gens) {
  if (n_gens < 2 || n_gens > 9) {
    throw DomainError("element text supports alphabet sizes 2..9");
  }
  return ElementParser(text, n_gens).parse();
}

std::string format_element(const AlgebraElement& a) { return format_terms(canonicalize(a)); }

std::string format_raw(const AlgebraElement& a) { return format_terms(a); }

}  // namespace cuntzlab
