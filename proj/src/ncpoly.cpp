#include "braidkit/ncalg.hpp"

#include <algorithm>

namespace braidkit {

Alphabet::Alphabet(std::vector<Generator> gens) : gens_(std::move(gens)) {
  if (gens_.size() > 64) throw AlgebraError("too many generators");
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].weight <= 0) throw AlgebraError("generator '" + gens_[i].name + "' needs a positive weight");
    if (!is_symbol_name(gens_[i].name)) throw AlgebraError("invalid generator name '" + gens_[i].name + "'");
    if (gens_[i].name == "q" || gens_[i].name == "r")
      throw AlgebraError("generator name '" + gens_[i].name + "' is reserved for a parameter");
    for (std::size_t j = 0; j < i; ++j)
      if (gens_[j].name == gens_[i].name) throw AlgebraError("duplicate generator '" + gens_[i].name + "'");
  }
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return static_cast<Letter>(i);
  return std::nullopt;
}

Letter Alphabet::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw AlgebraError("unknown generator '" + std::string(name) + "'");
}

Word Alphabet::word(std::initializer_list<std::string_view> names) const {
  Word w;
  for (auto n : names) w.push_back(static_cast<char>(index(n)));
  return w;
}

int Alphabet::weight(const Word& w) const {
  int total = 0;
  for (char c : w) total += gens_.at(static_cast<Letter>(c)).weight;
  return total;
}

std::strong_ordering Alphabet::compare(const Word& x, const Word& y) const {
  if (auto c = weight(x) <=> weight(y); c != 0) return c;
  auto n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto a = static_cast<Letter>(x[i]);
    auto b = static_cast<Letter>(y[i]);
    if (a != b) return a <=> b;
  }
  return x.size() <=> y.size();
}

bool Alphabet::same_names(const Alphabet& o) const {
  if (gens_.size() != o.gens_.size()) return false;
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name != o.gens_[i].name) return false;
  return true;
}

std::string Alphabet::to_string(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (char c : w) {
    if (!out.empty()) out += '*';
    out += gens_.at(static_cast<Letter>(c)).name;
  }
  return out;
}

// ---------------------------------------------------------------------------

NCPoly::NCPoly(Scalar c) {
  if (!c.is_zero()) terms_.emplace(Word{}, std::move(c));
}

NCPoly NCPoly::word(Word w, Scalar c) {
  NCPoly p;
  if (!c.is_zero()) p.terms_.emplace(std::move(w), std::move(c));
  return p;
}

Scalar NCPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

void NCPoly::add(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::size_t NCPoly::max_length() const {
  std::size_t n = 0;
  for (const auto& [w, c] : terms_) n = std::max(n, w.size());
  return n;
}

NCPoly NCPoly::operator-() const {
  NCPoly out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

NCPoly NCPoly::substitute(const Bindings& b) const {
  NCPoly out;
  for (const auto& [w, c] : terms_) out.add(w, c.substitute(b));
  return out;
}

std::vector<std::pair<Word, Scalar>> NCPoly::sorted_terms(const Alphabet& alphabet) const {
  std::vector<std::pair<Word, Scalar>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [&](const auto& x, const auto& y) { return alphabet.compare(x.first, y.first) > 0; });
  return out;
}

NCPoly nc_mul(const NCPoly& x, const NCPoly& y) {
  NCPoly out;
  for (const auto& [u, a] : x.terms())
    for (const auto& [v, b] : y.terms()) out.add(u + v, a * b);
  return out;
}

namespace {

// Appends `coef*body` to `out`, pulling the sign of single-term coefficients
// into the separator.
void append_term(std::string& out, const Scalar& coef, const std::string& body, bool body_is_unit) {
  bool single = coef.terms().size() == 1;
  bool negative = single && sgn(coef.terms()[0].coef) < 0;
  Scalar magnitude = negative ? -coef : coef;
  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  std::string c = single ? magnitude.to_string() : "(" + magnitude.to_string() + ")";
  if (body_is_unit) {
    out += c;
  } else if (magnitude.is_one()) {
    out += body;
  } else {
    out += c + "*" + body;
  }
}

}  // namespace

std::string NCPoly::to_string(const Alphabet& alphabet) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : sorted_terms(alphabet)) append_term(out, c, alphabet.to_string(w), w.empty());
  return out;
}

// ---------------------------------------------------------------------------

Tensor Tensor::unit(std::size_t arity) {
  Tensor t(arity);
  t.terms_.emplace(Key(arity), Scalar(1));
  return t;
}

Tensor Tensor::word(Key k, Scalar c) {
  Tensor t(k.size());
  t.add(std::move(k), c);
  return t;
}

Tensor Tensor::of(const std::vector<NCPoly>& legs) {
  Tensor t = unit(0);
  for (const auto& leg : legs) {
    Tensor next(t.arity_ + 1);
    for (const auto& [k, c] : t.terms_)
      for (const auto& [w, d] : leg.terms()) {
        Key key = k;
        key.push_back(w);
        next.add(std::move(key), c * d);
      }
    t = std::move(next);
  }
  return t;
}

Scalar Tensor::coefficient(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Scalar() : it->second;
}

void Tensor::add(const Key& k, const Scalar& c) {
  if (c.is_zero()) return;
  if (k.size() != arity_) throw AlgebraError("tensor arity mismatch");
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Tensor::add(Key&& k, const Scalar& c) {
  if (c.is_zero()) return;
  if (k.size() != arity_) throw AlgebraError("tensor arity mismatch");
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(std::move(k), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Tensor Tensor::operator-() const {
  Tensor out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (o.arity_ != arity_) throw AlgebraError("tensor arity mismatch");
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  if (o.arity_ != arity_) throw AlgebraError("tensor arity mismatch");
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

Tensor& Tensor::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, x] : terms_) x *= c;
  return *this;
}

Tensor Tensor::substitute(const Bindings& b) const {
  Tensor out(arity_);
  for (const auto& [k, c] : terms_) out.add(k, c.substitute(b));
  return out;
}

Tensor Tensor::flipped() const {
  Tensor out(arity_);
  for (const auto& [k, c] : terms_) out.add(Key(k.rbegin(), k.rend()), c);
  return out;
}

std::string Tensor::to_string(const std::vector<const Alphabet*>& legs) const {
  if (terms_.empty()) return "0";
  auto leg_alphabet = [&](std::size_t i) -> const Alphabet& { return *legs.at(std::min(i, legs.size() - 1)); };
  std::vector<std::pair<Key, Scalar>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [&](const auto& x, const auto& y) {
    for (std::size_t i = 0; i < arity_; ++i) {
      auto c = leg_alphabet(i).compare(x.first[i], y.first[i]);
      if (c != 0) return c > 0;
    }
    return false;
  });
  std::string out;
  for (const auto& [k, c] : sorted) {
    std::string body;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (i > 0) body += '@';
      body += leg_alphabet(i).to_string(k[i]);
    }
    // A bare unit tensor 1@1 still needs its legs printed.
    append_term(out, c, body, arity_ == 0);
  }
  return out;
}

std::string Tensor::to_string(const Alphabet& alphabet) const { return to_string(std::vector{&alphabet}); }

}  // namespace braidkit
