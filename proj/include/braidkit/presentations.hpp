#pragma once

// The four shipped algebras and the change of generators between the
// (a,b,c,d) and (a,b,c,p) descriptions of the braided algebra.

#include "braidkit/ncalg.hpp"

#include <string>
#include <vector>

namespace braidkit {

/// Names accepted by builtin(): AR, BR_abcd, BR_abcp, TQR.
const std::vector<std::string>& builtin_presentation_names();

/// Relations as shipped; exposed so that files and tests can compare against them.
PresentationSpec builtin_spec(const std::string& name);

/// Built and cached presentation. Throws AlgebraError for unknown names.
PresentationPtr builtin(const std::string& name);

/// Generator substitution between two presentations. `forward[i]` is the
/// image of generator i of `from`, written over `to`; `backward` goes the
/// other way.
struct BasisMap {
  std::string name;
  PresentationPtr from;
  PresentationPtr to;
  std::vector<NCPoly> forward;
  std::vector<NCPoly> backward;

  BasisMap inverse() const;
};

/// Substitutes every generator of `x` by its image and normalizes in `target`.
/// `images` has one entry per source generator.
NCPoly substitute_generators(const NCPoly& x, const std::vector<NCPoly>& images, const Presentation& target);

/// change_basis with the direction picked from the alphabets: `x` must be over
/// m.from (result over m.to) or over m.to (result over m.from); `target` must
/// be the presentation on the result side.
NCPoly change_basis(const NCPoly& x, const BasisMap& m, const Presentation& target);

/// Applies `images` leg by leg, normalizing each leg in `target`.
Tensor substitute_generators(const Tensor& t, const std::vector<NCPoly>& images, const Presentation& target);

/// p = q^-2 a + d, from BR_abcp to BR_abcd.
const BasisMap& abcp_to_abcd();

/// Checks that forward∘backward and backward∘forward fix every generator and
/// that each relation of either side maps to zero on the other. Returns the
/// failures as human-readable lines; empty means the map is an isomorphism on
/// generators and relations.
std::vector<std::string> validate_basis_map(const BasisMap& m);

struct RuleLimit {
  std::string rule;
  /// "commutativity": lhs - rhs at q = r = 1 vanishes once letters commute.
  /// "identity": it keeps a constant term (a scalar identity such as a
  /// determinant). "other": neither.
  std::string kind;
  /// lhs - rhs at q = r = 1 with letters sorted.
  NCPoly commutative_residue;
};

struct ClassicalLimitReport {
  std::vector<RuleLimit> rules;
  /// Generator pairs (x, y) with xy != yx in the presentation rebuilt at q = r = 1.
  std::vector<std::string> noncommuting;
  bool holds() const;
};

/// Every parameter set to 1 in every rewrite rule.
ClassicalLimitReport classical_limit(const Presentation& p);

}  // namespace braidkit
