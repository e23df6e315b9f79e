#pragma once

// Coproduct, counit, antipode, star and braiding given on generators, their
// extensions to the whole algebra, and the (braided) Hopf axiom checks.

#include "braidkit/ncalg.hpp"
#include "braidkit/presentations.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace braidkit {

/// plain: the tensor square is the ordinary one and ψ is the flip.
/// braided: ψ comes from the braiding table.
enum class Mode { plain, braided };

std::string to_string(Mode m);
Mode parse_mode(std::string_view text);

struct StructureMaps {
  std::string name;
  PresentationPtr base;
  Mode mode = Mode::plain;
  /// One entry per generator, in alphabet order.
  std::vector<Tensor> delta;
  std::vector<Scalar> counit;
  std::vector<NCPoly> antipode;
  std::optional<std::vector<NCPoly>> star;
  /// braiding[x * n + y] = ψ(x⊗y) for generators x, y.
  std::optional<std::vector<Tensor>> braiding;

  /// Throws AlgebraError unless the tables are complete and match the mode.
  void validate() const;
  StructureMaps substitute(const Bindings& b) const;
};

struct Witness {
  /// Printable inputs, e.g. {"b", "a"} for a pair.
  std::vector<std::string> inputs;
  /// Normalized lhs - rhs. Arity 0 for scalars, 1 for algebra elements.
  Tensor residual{0};
  std::string residual_text;
};

struct CheckReport {
  std::string axiom;
  std::string structure;
  std::size_t word_length_bound = 0;
  /// Number of inputs evaluated.
  std::size_t cases = 0;
  /// Failing inputs; only the first kMaxWitnesses are kept.
  std::size_t failures = 0;
  std::vector<Witness> witnesses;
  /// Free-form remarks (skipped inputs, conventions).
  std::vector<std::string> notes;

  static constexpr std::size_t kMaxWitnesses = 16;

  bool holds() const { return failures == 0; }
  void record(std::vector<std::string> inputs, Tensor residual, const std::vector<const Alphabet*>& legs);
};

/// Every axiom name accepted by check_axiom, in canonical order.
const std::vector<std::string>& axiom_names();
/// The braided Hopf axioms (ψ axioms need braided mode).
const std::vector<std::string>& hopf_axiom_names();
const std::vector<std::string>& star_axiom_names();
bool axiom_needs_braiding(const std::string& axiom);
bool axiom_needs_star(const std::string& axiom);
/// Number of inputs an axiom takes (1, 2 or 3).
std::size_t axiom_arity(const std::string& axiom);
/// Axioms that apply to `s`: braided-only ones dropped in plain mode, star
/// ones dropped without a star table.
std::vector<std::string> applicable_axioms(const StructureMaps& s);

/// Structure maps with memoized extensions. Immutable after construction;
/// the caches are internally synchronized.
class Structure {
 public:
  explicit Structure(StructureMaps maps);

  const StructureMaps& maps() const { return maps_; }
  const std::string& name() const { return maps_.name; }
  const Presentation& algebra() const { return *maps_.base; }
  const Alphabet& alphabet() const { return maps_.base->alphabet(); }
  Mode mode() const { return maps_.mode; }
  bool has_star() const { return maps_.star.has_value(); }

  NCPoly generator(Letter g) const { return NCPoly::word(Word(1, static_cast<char>(g))); }
  NCPoly parse(std::string_view text) const { return parse_poly(text, alphabet()); }
  Tensor parse_tensor(std::string_view text, std::size_t arity = 2) const;
  std::string str(const NCPoly& x) const { return x.to_string(alphabet()); }
  std::string str(const Tensor& t) const;

  /// Normal form of every leg.
  Tensor normalize(const Tensor& t) const;
  NCPoly multiply(const NCPoly& x, const NCPoly& y) const { return algebra().multiply(x, y); }
  /// Product in the (braided) tensor square: (u⊗v)(w⊗z) = Σ u·w_i ⊗ v_i·z
  /// with ψ(v⊗w) = Σ w_i⊗v_i.
  Tensor tensor_mul(const Tensor& x, const Tensor& y) const;

  Tensor delta(const NCPoly& x) const;
  Scalar counit(const NCPoly& x) const;
  NCPoly antipode(const NCPoly& x) const;
  NCPoly star(const NCPoly& x) const;
  /// ψ(x⊗y); the flip in plain mode.
  Tensor psi(const NCPoly& x, const NCPoly& y) const;
  Tensor psi(const Tensor& xy) const;

  // Leg-wise maps on tensors of any arity; `leg` is 0-based.
  Tensor apply_delta(const Tensor& t, std::size_t leg) const;
  Tensor apply_counit(const Tensor& t, std::size_t leg) const;
  Tensor apply_antipode(const Tensor& t, std::size_t leg) const;
  Tensor apply_star(const Tensor& t, std::size_t leg) const;
  /// ψ on legs (leg, leg+1).
  Tensor apply_psi(const Tensor& t, std::size_t leg) const;
  /// Multiplies legs (leg, leg+1) in the algebra.
  Tensor apply_m(const Tensor& t, std::size_t leg) const;

  /// ψ^{-1} on generator pairs, solved over the span of {1, generators}^{⊗2}.
  /// nullopt if the table leaves that span or no unit pivot exists.
  std::optional<std::vector<Tensor>> psi_inverse_table() const;

 private:
  Tensor delta_word(const Word& w) const;
  NCPoly antipode_word(const Word& w) const;
  Tensor psi_words(const Word& u, const Word& w) const;
  const Tensor& braiding_entry(Letter x, Letter y) const;

  StructureMaps maps_;
  struct Caches;
  std::shared_ptr<Caches> caches_;
};

using StructurePtr = std::shared_ptr<const Structure>;

Tensor tensor_mul(const Tensor& x, const Tensor& y, const Structure& s);
Tensor delta_extend(const NCPoly& x, const Structure& s);
Scalar counit_extend(const NCPoly& x, const Structure& s);
NCPoly antipode_extend(const NCPoly& x, const Structure& s);
NCPoly star_extend(const NCPoly& x, const Structure& s);
Tensor psi_extend(const NCPoly& x, const NCPoly& y, const Structure& s);

/// Evaluates `axiom` on all normal words (pairs, triples) of total length at
/// most L. Throws AlgebraError for unknown axioms or a mode/star mismatch.
/// `well-defined` applies every map to lhs - rhs of each defining relation.
/// `sink`, when set, receives every nonzero residual (the report keeps only
/// the first kMaxWitnesses).
using ResidualSink = std::function<void(const std::vector<std::string>& inputs, const Tensor& residual)>;
CheckReport check_axiom(const std::string& axiom, const Structure& s, std::size_t max_word_len,
                        const ResidualSink& sink = {});

/// t·g = g·t, ψ(t⊗g) = g⊗t and ψ(g⊗t) = t⊗g for every generator g.
CheckReport check_bosonic_central(const NCPoly& t, const Structure& s);

/// Transports the tables along `m` (from m.from to m.to): every map is
/// conjugated by the generator substitution.
StructureMaps transport(const StructureMaps& s, const BasisMap& m, std::string new_name);

/// τ(u⊗v) = v*⊗u* on a two-leg tensor, with star given on generators.
Tensor star_flip(const Tensor& t, const std::vector<NCPoly>& star, const Presentation& p);

/// Completes a partial braiding table. Entries for pairs involving a generator
/// in `trivial` become flips; every other missing entry is ψ(x⊗y) =
/// τ(ψ(y*⊗x*)), which needs y*⊗x* to expand over known entries.
std::vector<Tensor> complete_braiding(const Presentation& p, const std::map<std::pair<Letter, Letter>, Tensor>& known,
                                      const std::vector<NCPoly>& star, const std::vector<Letter>& trivial);

/// Table-by-table comparison; each line names a differing entry.
std::vector<std::string> compare_tables(const StructureMaps& x, const StructureMaps& y);

/// Normal words of the algebra with length at most `max_len`, plus all
/// ordered tuples of them whose total length is at most `max_len`.
std::vector<std::vector<Word>> word_tuples(const Presentation& p, std::size_t arity, std::size_t max_len);

}  // namespace braidkit
