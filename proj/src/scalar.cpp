#include "braidkit/scalar.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <mutex>
#include <unordered_map>

namespace braidkit {

std::string rational_to_string(const Rational& x) { return x.get_str(); }

namespace {

struct SymbolTable {
  std::mutex mutex;
  std::deque<std::string> names;
  std::vector<SymbolKind> kinds;
  std::unordered_map<std::string, SymbolId> ids;

  SymbolTable() {
    add("q", SymbolKind::parameter);
    add("r", SymbolKind::parameter);
  }

  SymbolId add(const std::string& name, SymbolKind kind) {
    auto id = static_cast<SymbolId>(names.size());
    names.push_back(name);
    kinds.push_back(kind);
    ids.emplace(name, id);
    return id;
  }
};

SymbolTable& table() {
  static SymbolTable t;
  return t;
}

bool valid_identifier(std::string_view name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

SymbolId symbol(std::string_view name) {
  auto& t = table();
  std::lock_guard lock(t.mutex);
  std::string key(name);
  if (auto it = t.ids.find(key); it != t.ids.end()) return it->second;
  if (!valid_identifier(name)) throw ScalarError("invalid symbol name '" + key + "'");
  if (t.names.size() >= 0xffff) throw ScalarError("symbol table full");
  return t.add(key, SymbolKind::unknown);
}

const std::string& symbol_name(SymbolId id) {
  auto& t = table();
  std::lock_guard lock(t.mutex);
  return t.names.at(id);
}

SymbolKind symbol_kind(SymbolId id) {
  auto& t = table();
  std::lock_guard lock(t.mutex);
  return t.kinds.at(id);
}

bool is_symbol_name(std::string_view name) { return valid_identifier(name); }

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::power(SymbolId s, std::int32_t e) {
  Monomial m;
  if (e != 0) m.factors_.emplace_back(s, e);
  return m;
}

std::int32_t Monomial::exponent(SymbolId s) const {
  for (const auto& [id, e] : factors_)
    if (id == s) return e;
  return 0;
}

std::int64_t Monomial::degree() const {
  std::int64_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

bool Monomial::has_unknowns() const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [](const Factor& f) { return f.first != kQ && f.first != kR; });
}

bool Monomial::has_negative_exponents() const {
  return std::any_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.second < 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + o.factors_.size());
  auto i = factors_.begin();
  auto j = o.factors_.begin();
  while (i != factors_.end() || j != o.factors_.end()) {
    if (j == o.factors_.end() || (i != factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      auto e = i->second + j->second;
      if (e != 0) out.factors_.emplace_back(i->first, e);
      ++i;
      ++j;
    }
  }
  return out;
}

Monomial Monomial::inverse() const {
  Monomial out = *this;
  for (auto& f : out.factors_) f.second = -f.second;
  return out;
}

Monomial Monomial::without(SymbolId s) const {
  Monomial out;
  for (const auto& f : factors_)
    if (f.first != s) out.factors_.push_back(f);
  return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  if (auto c = degree() <=> o.degree(); c != 0) return c;
  // Lexicographic on the exponent vector, smaller symbol ids most significant.
  auto i = factors_.begin();
  auto j = o.factors_.begin();
  while (i != factors_.end() || j != o.factors_.end()) {
    if (j == o.factors_.end()) return i->second <=> 0;
    if (i == factors_.end()) return 0 <=> j->second;
    if (i->first < j->first) return i->second <=> 0;
    if (j->first < i->first) return 0 <=> j->second;
    if (auto c = i->second <=> j->second; c != 0) return c;
    ++i;
    ++j;
  }
  return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
  std::string out;
  for (const auto& [id, e] : factors_) {
    if (!out.empty()) out += '*';
    out += symbol_name(id);
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(long n) {
  if (n != 0) terms_.push_back({Monomial{}, Rational(n)});
}

Scalar::Scalar(Rational c) {
  if (c != 0) terms_.push_back({Monomial{}, std::move(c)});
}

Scalar::Scalar(Monomial m, Rational c) {
  if (m.has_negative_exponents() && m.has_unknowns()) {
    for (const auto& [id, e] : m.factors())
      if (e < 0 && id != kQ && id != kR)
        throw ScalarError("negative exponent on unknown '" + symbol_name(id) + "'");
  }
  if (c != 0) terms_.push_back({std::move(m), std::move(c)});
}

Scalar Scalar::sym(SymbolId s, std::int32_t e) { return Scalar(Monomial::power(s, e), Rational(1)); }

Scalar Scalar::sym(std::string_view name, std::int32_t e) { return sym(symbol(name), e); }

void Scalar::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    std::size_t j = i + 1;
    Rational c = terms_[i].coef;
    while (j < terms_.size() && terms_[j].mono == terms_[i].mono) c += terms_[j++].coef;
    if (c != 0) {
      if (out != i) terms_[out].mono = std::move(terms_[i].mono);
      terms_[out].coef = std::move(c);
      ++out;
    }
    i = j;
  }
  terms_.resize(out);
}

bool Scalar::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coef == 1;
}

bool Scalar::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

Rational Scalar::constant() const {
  if (!is_constant()) throw ScalarError("scalar '" + to_string() + "' is not a constant");
  return terms_.empty() ? Rational(0) : terms_[0].coef;
}

bool Scalar::has_unknowns() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.mono.has_unknowns(); });
}

bool Scalar::has_symbol(SymbolId s) const {
  return std::any_of(terms_.begin(), terms_.end(), [s](const Term& t) { return t.mono.exponent(s) != 0; });
}

bool Scalar::is_unit() const { return terms_.size() == 1 && !terms_[0].mono.has_unknowns(); }

Scalar Scalar::unit_inverse() const {
  if (!is_unit()) throw ScalarError("'" + to_string() + "' is not a unit");
  Scalar out;
  out.terms_.push_back({terms_[0].mono.inverse(), 1 / terms_[0].coef});
  return out;
}

Scalar Scalar::divide_by_unit(const Scalar& u) const {
  if (!u.is_unit()) throw ScalarError("division by non-unit '" + u.to_string() + "'");
  return *this * u.unit_inverse();
}

std::int32_t Scalar::max_exponent(SymbolId s) const {
  std::int32_t best = 0;
  bool first = true;
  for (const auto& t : terms_) {
    auto e = t.mono.exponent(s);
    if (first || e > best) best = e;
    first = false;
  }
  return best;
}

std::int32_t Scalar::min_exponent(SymbolId s) const {
  std::int32_t best = 0;
  bool first = true;
  for (const auto& t : terms_) {
    auto e = t.mono.exponent(s);
    if (first || e < best) best = e;
    first = false;
  }
  return best;
}

Scalar Scalar::coefficient(SymbolId s, std::int32_t e) const {
  Scalar out;
  for (const auto& t : terms_)
    if (t.mono.exponent(s) == e) out.terms_.push_back({t.mono.without(s), t.coef});
  out.canonicalize();
  return out;
}

std::vector<SymbolId> Scalar::symbols() const {
  std::vector<SymbolId> out;
  for (const auto& t : terms_)
    for (const auto& f : t.mono.factors()) out.push_back(f.first);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Scalar Scalar::substitute(SymbolId s, const Scalar& value) const {
  if (!has_symbol(s) && symbol_kind(s) != SymbolKind::parameter) return *this;
  return substitute(Bindings{{s, value}});
}

Scalar Scalar::substitute(const Bindings& bindings) const {
  for (const auto& [id, value] : bindings) {
    if (symbol_kind(id) == SymbolKind::parameter) {
      if (value.is_zero()) throw ScalarError("cannot substitute 0 for parameter '" + symbol_name(id) + "'");
      if (!value.is_unit())
        throw ScalarError("parameter '" + symbol_name(id) + "' must be bound to a unit, got '" +
                          value.to_string() + "'");
    }
  }
  // Powers are memoized per (symbol, exponent) within this call.
  std::map<std::pair<SymbolId, std::int32_t>, Scalar> powers;
  auto power_of = [&](SymbolId id, const Scalar& value, std::int32_t e) -> const Scalar& {
    auto key = std::make_pair(id, e);
    if (auto it = powers.find(key); it != powers.end()) return it->second;
    Scalar p = e >= 0 ? value.pow(static_cast<unsigned>(e)) : value.unit_inverse().pow(static_cast<unsigned>(-e));
    return powers.emplace(key, std::move(p)).first->second;
  };
  Scalar out;
  for (const auto& t : terms_) {
    Monomial kept;
    Scalar factor(t.coef);
    for (const auto& [id, e] : t.mono.factors()) {
      if (auto it = bindings.find(id); it != bindings.end()) {
        factor *= power_of(id, it->second, e);
      } else {
        kept = kept * Monomial::power(id, e);
      }
    }
    if (!kept.is_one()) factor *= Scalar(kept, Rational(1));
    out += factor;
  }
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& t : out.terms_) t.coef = -t.coef;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->mono > j->mono)) {
      merged.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->mono > i->mono) {
      merged.push_back(*j++);
    } else {
      Rational c = i->coef + j->coef;
      if (c != 0) merged.push_back({std::move(i->mono), std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  if (a.terms_.empty() || b.terms_.empty()) return out;
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) out.terms_.push_back({x.mono * y.mono, x.coef * y.coef});
  out.canonicalize();
  return out;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar Scalar::pow(unsigned n) const {
  Scalar result(1);
  Scalar base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

std::strong_ordering Scalar::operator<=>(const Scalar& o) const {
  auto n = std::min(terms_.size(), o.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = terms_[i].mono <=> o.terms_[i].mono; c != 0) return c;
    int cmp_value = cmp(terms_[i].coef, o.terms_[i].coef);
    if (cmp_value != 0) return cmp_value < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return terms_.size() <=> o.terms_.size();
}

std::size_t Scalar::hash() const {
  std::size_t h = terms_.size();
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& t : terms_) {
    for (const auto& [id, e] : t.mono.factors()) {
      mix(id);
      mix(static_cast<std::size_t>(e));
    }
    mix(std::hash<std::string>{}(t.coef.get_str()));
  }
  return h;
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += c.get_str();
    } else if (c == 1) {
      out += t.mono.to_string();
    } else {
      out += c.get_str() + "*" + t.mono.to_string();
    }
  }
  return out;
}

Bindings parse_binding(std::string_view text, Bindings into) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos) throw ScalarError("binding '" + std::string(text) + "' lacks '='");
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto name = trim(text.substr(0, eq));
  if (!is_symbol_name(name)) throw ScalarError("invalid symbol in binding '" + std::string(text) + "'");
  into[symbol(name)] = Scalar::parse(trim(text.substr(eq + 1)));
  return into;
}

}  // namespace braidkit
