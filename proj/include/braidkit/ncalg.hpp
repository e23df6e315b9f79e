#pragma once

// Free noncommutative polynomials over Scalar, tensors of them, and
// presentations: quotient algebras given by oriented rewrite rules.

#include "braidkit/scalar.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace braidkit {

/// A word is a sequence of generator indices, one per char. The empty word is 1.
using Word = std::string;
using Letter = unsigned char;

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rewriting exceeded its step budget; usually a mis-oriented rule set.
class RewriteBudgetExceeded : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

struct Generator {
  std::string name;
  int weight = 1;
  bool operator==(const Generator&) const = default;
};

/// Ordered generator list. Words compare by total weight, then
/// lexicographically in alphabet order.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Generator> gens);

  std::size_t size() const { return gens_.size(); }
  const std::vector<Generator>& generators() const { return gens_; }
  const Generator& operator[](std::size_t i) const { return gens_.at(i); }
  std::optional<Letter> find(std::string_view name) const;
  Letter index(std::string_view name) const;
  Word word(std::initializer_list<std::string_view> names) const;

  int weight(const Word& w) const;
  std::strong_ordering compare(const Word& x, const Word& y) const;
  bool same_names(const Alphabet& o) const;
  std::string to_string(const Word& w) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<Generator> gens_;
};

/// Shortlex storage order; presentation-aware ordering is used for printing.
struct ShortLex {
  bool operator()(const Word& a, const Word& b) const {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }
};

class NCPoly {
 public:
  using Terms = std::map<Word, Scalar, ShortLex>;

  NCPoly() = default;
  NCPoly(Scalar c);  // NOLINT: scalars embed as multiples of 1
  NCPoly(long c) : NCPoly(Scalar(c)) {}  // NOLINT
  static NCPoly word(Word w, Scalar c = Scalar(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Word& w) const;
  void add(const Word& w, const Scalar& c);
  std::size_t max_length() const;

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Scalar& c);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const Scalar& c) { return a *= c; }
  friend NCPoly operator*(const Scalar& c, NCPoly a) { return a *= c; }

  NCPoly substitute(const Bindings& b) const;
  bool operator==(const NCPoly&) const = default;

  /// Terms in descending order under `alphabet`'s monomial order.
  std::vector<std::pair<Word, Scalar>> sorted_terms(const Alphabet& alphabet) const;
  std::string to_string(const Alphabet& alphabet) const;

 private:
  Terms terms_;
};

/// Free (unreduced) concatenation product.
NCPoly nc_mul(const NCPoly& x, const NCPoly& y);

/// Finite Scalar-linear combination of word tuples (elements of A^{⊗n}).
class Tensor {
 public:
  using Key = std::vector<Word>;
  using Terms = std::map<Key, Scalar>;

  explicit Tensor(std::size_t arity = 2) : arity_(arity) {}
  static Tensor unit(std::size_t arity);
  static Tensor of(const std::vector<NCPoly>& legs);
  static Tensor of(const NCPoly& x, const NCPoly& y) { return of(std::vector<NCPoly>{x, y}); }
  static Tensor word(Key k, Scalar c = Scalar(1));

  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Key& k) const;
  void add(const Key& k, const Scalar& c);
  void add(Key&& k, const Scalar& c);

  Tensor operator-() const;
  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(const Scalar& c);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, const Scalar& c) { return a *= c; }
  friend Tensor operator*(const Scalar& c, Tensor a) { return a *= c; }

  Tensor substitute(const Bindings& b) const;
  /// Reverses the order of the tensor legs.
  Tensor flipped() const;
  bool operator==(const Tensor&) const = default;

  std::string to_string(const std::vector<const Alphabet*>& legs) const;
  std::string to_string(const Alphabet& alphabet) const;

 private:
  std::size_t arity_;
  Terms terms_;
};

struct ParsedExpression {
  std::size_t arity = 1;
  Tensor::Terms terms;
};

/// Parses sums of products of numbers, parameters/unknowns and generators.
/// `@` separates tensor legs; leg i resolves generator names in legs[i]
/// (the last alphabet is reused for further legs).
ParsedExpression parse_expression(std::string_view text, const std::vector<const Alphabet*>& legs);
NCPoly parse_poly(std::string_view text, const Alphabet& alphabet);
Tensor parse_tensor(std::string_view text, const std::vector<const Alphabet*>& legs);
Tensor parse_tensor(std::string_view text, const Alphabet& alphabet, std::size_t arity = 2);

// ---------------------------------------------------------------------------
// Presentations

struct Relation {
  NCPoly lhs;
  NCPoly rhs;
  std::string text;
};

struct RewriteRule {
  Word lhs;
  NCPoly rhs;
  /// Which relation produced the rule: "relation N", "central g" or "completion".
  std::string origin;
};

struct PresentationSpec {
  std::string name;
  std::vector<Generator> generators;
  std::vector<std::string> parameters;
  /// Generators commuting with every other generator.
  std::vector<std::string> central;
  /// Relation strings of the form `lhs = rhs`.
  std::vector<std::string> relations;
};

class Presentation;
using PresentationPtr = std::shared_ptr<const Presentation>;

struct Overlap {
  Word word;
  std::size_t first_rule;
  std::size_t second_rule;
  bool resolves;
  NCPoly difference;
};

struct ConfluenceReport {
  std::string presentation;
  std::size_t samples = 0;
  std::size_t max_len = 0;
  std::uint64_t seed = 0;
  /// Words whose two randomized reductions disagree.
  std::vector<std::pair<Word, NCPoly>> counterexamples;
  std::vector<Overlap> overlaps;
  bool confluent() const;
};

class Presentation {
 public:
  static constexpr std::uint64_t kDefaultStepBudget = 1'000'000;

  /// Orients the relations into rewrite rules; runs bounded completion if needed.
  static PresentationPtr build(PresentationSpec spec);
  /// Uses `rules` verbatim, without orientation or completion.
  static PresentationPtr from_rules(std::string name, Alphabet alphabet, std::vector<RewriteRule> rules);

  const std::string& name() const { return spec_.name; }
  const PresentationSpec& spec() const { return spec_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Relation>& relations() const { return relations_; }
  /// Relations including the commutators of central generators.
  const std::vector<Relation>& all_relations() const { return all_relations_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  std::vector<RewriteRule> completion_rules() const;

  /// Leftmost rule occurrence in `w`: (position, rule index).
  std::optional<std::pair<std::size_t, std::size_t>> find_redex(const Word& w) const;
  bool is_normal(const Word& w) const { return !find_redex(w); }

  NCPoly normal_form(const Word& w) const;
  NCPoly normal_form(const NCPoly& x) const;
  /// Normal form of the product of two elements.
  NCPoly multiply(const NCPoly& x, const NCPoly& y) const;
  bool equal(const NCPoly& x, const NCPoly& y) const;

  /// Irreducible words of length at most `max_len`, in shortlex order.
  std::vector<Word> basis_words(std::size_t max_len) const;

  /// Same relations with the bindings substituted into every coefficient.
  PresentationPtr specialize(const Bindings& b, std::string new_name = {}) const;

  void set_step_budget(std::uint64_t steps) { step_budget_ = steps; }

  ConfluenceReport confluence_probe(std::size_t samples, std::size_t max_len, std::uint64_t seed) const;

  std::string rule_to_string(const RewriteRule& r) const;

 private:
  Presentation() = default;
  void index_rules();
  NCPoly reduce_uncached(const NCPoly& x) const;

  PresentationSpec spec_;
  Alphabet alphabet_;
  std::vector<Relation> relations_;
  std::vector<Relation> all_relations_;
  std::vector<RewriteRule> rules_;
  std::vector<std::vector<std::size_t>> rules_by_first_letter_;
  std::size_t min_lhs_ = 2;
  std::uint64_t step_budget_ = kDefaultStepBudget;

  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<Word, NCPoly> cache_;
};

NCPoly normal_form(const NCPoly& x, const Presentation& p);
bool alg_equal(const NCPoly& x, const NCPoly& y, const Presentation& p);

}  // namespace braidkit
