#pragma once

// Right coactions β: H → H⊗A given on generators, the adjoint coaction of a
// plain Hopf structure, comodule and comodule-algebra checks, ψ-naturality,
// and verification of multiplication tables that realize one algebra inside
// another.

#include "braidkit/hopfstruct.hpp"

#include <string>
#include <vector>

namespace braidkit {

struct CoactionMap {
  std::string name;
  /// Left legs live here (H).
  PresentationPtr coacted;
  /// Right legs live here (A).
  PresentationPtr coacting;
  /// table[g] = β(g), one entry per coacted generator.
  std::vector<Tensor> table;
  /// Set by adjoint_coaction. β on words of the coacted algebra is then the
  /// adjoint formula itself rather than the multiplicative extension.
  StructurePtr source;

  /// Substitutes into the table and specializes both presentations.
  CoactionMap substitute(const Bindings& b) const;
  std::vector<const Alphabet*> legs() const { return {&coacted->alphabet(), &coacting->alphabet()}; }
};

/// β(h) = Σ h₍₂₎ ⊗ S(h₍₁₎)h₍₃₎ with Δ² = (Δ⊗id)Δ. Plain structures only.
CoactionMap adjoint_coaction(StructurePtr s, std::string name = {});
/// The adjoint formula evaluated on an arbitrary element of s's algebra.
Tensor adjoint_apply(const NCPoly& x, const Structure& s);

/// h ↦ h⊗1 on every generator.
CoactionMap trivial_coaction(PresentationPtr coacted, PresentationPtr coacting);

/// Parses a table "g" -> "x@y" with left legs over `coacted` and right legs
/// over `coacting`; every generator must be present.
CoactionMap coaction_from_text(std::string name, PresentationPtr coacted, PresentationPtr coacting,
                               const std::vector<std::pair<std::string, std::string>>& entries);

/// Multiplicative extension: left legs multiplied in `coacted_mult`, right legs
/// in beta.coacting. `x` is read letter by letter without normalizing first.
Tensor coaction_extend(const NCPoly& x, const CoactionMap& beta, const Presentation& coacted_mult);

/// β on the coacted algebra: adjoint_apply when beta.source is set, otherwise
/// the multiplicative extension in beta.coacted.
Tensor coaction_apply(const NCPoly& x, const CoactionMap& beta);

/// Product of two tensors of equal arity, leg i multiplied in legs[i].
Tensor leg_product(const Tensor& x, const Tensor& y, const std::vector<const Presentation*>& legs);

/// (β⊗id)β = (id⊗Δ)β and (id⊗ε)β = id on normal words of length ≤ L.
CheckReport check_comodule(const CoactionMap& beta, const Structure& coacting, std::size_t max_word_len);

/// β(nf(uw)) = β(u)β(w) for normal words u, w of total length ≤ L, and
/// β(lhs) = β(rhs) for every relation of `coacted_mult`.
CheckReport check_comodule_algebra(const CoactionMap& beta, const Presentation& coacted_mult, std::size_t max_word_len);

/// (ψ⊗id)β(x⊗y) = β(ψ(x⊗y)) for all generator pairs, with
/// β(x⊗y) = Σ x₍₀₎⊗y₍₀₎⊗x₍₁₎y₍₁₎.
CheckReport check_psi_naturality(const CoactionMap& beta, const Structure& s);

/// table[x * n + y] = x∘y written over `host`, for generators of the target.
struct MultiplicationTable {
  std::string name;
  PresentationPtr host;
  /// Alphabet of the target algebra whose products the table realizes.
  Alphabet target_alphabet;
  std::vector<NCPoly> table;

  MultiplicationTable substitute(const Bindings& b) const;
};

MultiplicationTable table_from_text(std::string name, PresentationPtr host, const Alphabet& target,
                                    const std::vector<std::pair<std::string, std::string>>& entries);

struct TransmutationReport {
  /// Every target relation rewritten through the table vanishes in the host.
  CheckReport relations;
  /// (x∘y)∘z = x∘(y∘z) on generator triples, computed by pulling the
  /// degree ≤ 2 products back to the target.
  CheckReport associativity;
  /// The table induces a bijection between the degree ≤ 2 parts.
  CheckReport bijectivity;

  bool holds() const { return relations.holds() && associativity.holds() && bijectivity.holds(); }
};

TransmutationReport verify_transmutation(const MultiplicationTable& table, const Presentation& target);

}  // namespace braidkit
