#pragma once

// Exact coefficient ring: polynomials with rational coefficients, Laurent in
// the deformation parameters q and r, ordinary in every other symbol.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace braidkit {

using Rational = mpq_class;

std::string rational_to_string(const Rational& x);

enum class SymbolKind { parameter, unknown };

using SymbolId = std::uint16_t;

/// Interns `name` and returns its id. `q` and `r` are the only parameters.
SymbolId symbol(std::string_view name);
const std::string& symbol_name(SymbolId id);
SymbolKind symbol_kind(SymbolId id);
bool is_symbol_name(std::string_view name);

inline constexpr SymbolId kQ = 0;
inline constexpr SymbolId kR = 1;

class ScalarError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Product of symbol powers, kept sorted by symbol id with no zero exponents.
class Monomial {
 public:
  using Factor = std::pair<SymbolId, std::int32_t>;

  Monomial() = default;
  static Monomial power(SymbolId s, std::int32_t e);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::int32_t exponent(SymbolId s) const;
  std::int64_t degree() const;
  bool has_unknowns() const;
  bool has_negative_exponents() const;

  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;
  /// Drops symbol `s` from the monomial.
  Monomial without(SymbolId s) const;

  bool operator==(const Monomial&) const = default;
  /// Graded lexicographic order on exponent vectors.
  std::strong_ordering operator<=>(const Monomial& o) const;

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
};

class Scalar {
 public:
  struct Term {
    Monomial mono;
    Rational coef;
    bool operator==(const Term& o) const { return mono == o.mono && coef == o.coef; }
  };

  Scalar() = default;
  Scalar(long n);  // NOLINT: integers promote implicitly
  Scalar(Rational c);  // NOLINT
  Scalar(Monomial m, Rational c);

  static Scalar sym(SymbolId s, std::int32_t e = 1);
  static Scalar sym(std::string_view name, std::int32_t e = 1);
  static Scalar q(std::int32_t e = 1) { return sym(kQ, e); }
  static Scalar r(std::int32_t e = 1) { return sym(kR, e); }
  static Scalar parse(std::string_view text);

  /// Terms in descending monomial order.
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  /// Constant term value; throws unless is_constant().
  Rational constant() const;
  bool has_unknowns() const;
  bool has_symbol(SymbolId s) const;
  /// Single term with no unknown symbols.
  bool is_unit() const;
  /// Exact quotient by a unit.
  Scalar divide_by_unit(const Scalar& u) const;
  /// Multiplicative inverse of a unit.
  Scalar unit_inverse() const;

  std::int32_t max_exponent(SymbolId s) const;
  std::int32_t min_exponent(SymbolId s) const;
  /// Coefficient of s^e, as a Scalar free of s.
  Scalar coefficient(SymbolId s, std::int32_t e) const;
  /// Symbols occurring in the scalar, ascending by id.
  std::vector<SymbolId> symbols() const;

  Scalar substitute(const std::map<SymbolId, Scalar>& bindings) const;
  Scalar substitute(SymbolId s, const Scalar& value) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar pow(unsigned n) const;

  bool operator==(const Scalar& o) const = default;
  std::strong_ordering operator<=>(const Scalar& o) const;
  std::size_t hash() const;

  std::string to_string() const;

 private:
  void canonicalize();
  std::vector<Term> terms_;
};

using Bindings = std::map<SymbolId, Scalar>;

/// Parses bindings written as `r=q`, `q=3`, `A1=1/2`.
Bindings parse_binding(std::string_view text, Bindings into = {});

}  // namespace braidkit
