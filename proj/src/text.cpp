#include "braidkit/ncalg.hpp"

#include <cctype>

namespace braidkit {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<const Alphabet*>& legs) : text_(text), legs_(legs) {}

  ParsedExpression parse() {
    ParsedExpression out;
    bool first = true;
    bool arity_set = false;
    for (;;) {
      skip_space();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
      } else if (!first) {
        break;
      }
      first = false;
      Tensor t = tensor_term();
      if (!arity_set) {
        out.arity = t.arity();
        arity_set = true;
      } else if (t.arity() != out.arity) {
        fail("terms with different tensor arity");
      }
      for (const auto& [k, c] : t.terms()) add(out.terms, k, sign > 0 ? c : -c);
    }
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  static void add(Tensor::Terms& terms, const Tensor::Key& k, const Scalar& c) {
    auto [it, inserted] = terms.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw AlgebraError("parse error at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "': " + msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  char get() {
    char c = peek();
    if (c != '\0') ++pos_;
    return c;
  }
  void expect(char c) {
    if (get() != c) fail(std::string("expected '") + c + "'");
  }

  const Alphabet* leg(std::size_t i) const {
    if (legs_.empty()) return nullptr;
    return legs_[std::min(i, legs_.size() - 1)];
  }

  Tensor tensor_term() {
    std::vector<NCPoly> factors;
    factors.push_back(product(0));
    while (peek() == '@') {
      get();
      factors.push_back(product(factors.size()));
    }
    return Tensor::of(factors);
  }

  NCPoly sum(std::size_t leg_index) {
    NCPoly out;
    bool first = true;
    for (;;) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
      } else if (!first) {
        break;
      }
      first = false;
      NCPoly p = product(leg_index);
      if (sign > 0) {
        out += p;
      } else {
        out -= p;
      }
    }
    return out;
  }

  NCPoly product(std::size_t leg_index) {
    NCPoly out = power(leg_index);
    while (peek() == '*') {
      get();
      out = nc_mul(out, power(leg_index));
    }
    return out;
  }

  NCPoly power(std::size_t leg_index) {
    NCPoly base = primary(leg_index);
    if (peek() != '^') return base;
    get();
    bool negative = false;
    if (peek() == '-') {
      get();
      negative = true;
    }
    skip_space();
    auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    long e = std::stol(std::string(text_.substr(start, pos_ - start)));
    if (negative) {
      if (base.size() != 1 || !base.terms().begin()->first.empty() || !base.terms().begin()->second.is_unit())
        fail("negative exponent on a non-unit");
      base = NCPoly(base.terms().begin()->second.unit_inverse());
    }
    NCPoly out(1);
    for (long i = 0; i < e; ++i) out = nc_mul(out, base);
    return out;
  }

  NCPoly primary(std::size_t leg_index) {
    char c = peek();
    if (c == '(') {
      get();
      NCPoly inner = sum(leg_index);
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Rational value(std::string(text_.substr(start, pos_ - start)));
      if (peek() == '/') {
        get();
        skip_space();
        auto dstart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (dstart == pos_) fail("expected denominator");
        Rational den(std::string(text_.substr(dstart, pos_ - dstart)));
        if (den == 0) fail("zero denominator");
        value /= den;
      }
      value.canonicalize();
      return NCPoly(Scalar(value));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      auto start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      auto name = text_.substr(start, pos_ - start);
      if (const Alphabet* a = leg(leg_index)) {
        if (auto letter = a->find(name)) return NCPoly::word(Word(1, static_cast<char>(*letter)));
      }
      return NCPoly(Scalar::sym(name));
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const std::vector<const Alphabet*>& legs_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedExpression parse_expression(std::string_view text, const std::vector<const Alphabet*>& legs) {
  return Parser(text, legs).parse();
}

NCPoly parse_poly(std::string_view text, const Alphabet& alphabet) {
  auto parsed = parse_expression(text, {&alphabet});
  if (parsed.arity != 1) throw AlgebraError("expected a polynomial, got a tensor: '" + std::string(text) + "'");
  NCPoly out;
  for (const auto& [k, c] : parsed.terms) out.add(k[0], c);
  return out;
}

Tensor parse_tensor(std::string_view text, const std::vector<const Alphabet*>& legs) {
  auto parsed = parse_expression(text, legs);
  Tensor out(parsed.arity);
  for (const auto& [k, c] : parsed.terms) out.add(k, c);
  return out;
}

Tensor parse_tensor(std::string_view text, const Alphabet& alphabet, std::size_t arity) {
  Tensor t = parse_tensor(text, std::vector{&alphabet});
  if (t.is_zero()) return Tensor(arity);
  if (t.arity() != arity)
    throw AlgebraError("expected a tensor of arity " + std::to_string(arity) + ": '" + std::string(text) + "'");
  return t;
}

Scalar Scalar::parse(std::string_view text) {
  ParsedExpression parsed;
  try {
    parsed = parse_expression(text, {});
  } catch (const AlgebraError& e) {
    throw ScalarError(e.what());
  }
  if (parsed.arity != 1) throw ScalarError("expected a scalar: '" + std::string(text) + "'");
  Scalar out;
  for (const auto& [k, c] : parsed.terms) {
    if (!k[0].empty()) throw ScalarError("expected a scalar: '" + std::string(text) + "'");
    out += c;
  }
  return out;
}

}  // namespace braidkit
