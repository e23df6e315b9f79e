#pragma once

// Shipped structures: the Hopf algebra A(R), the two braided solutions on the
// braided algebra in both bases, and the two-parameter Hopf algebra.

#include "braidkit/coaction.hpp"
#include "braidkit/hopfstruct.hpp"

#include <map>
#include <string>
#include <vector>

namespace braidkit {

/// Structure tables as text, keyed by generator name. Braiding keys are
/// "x@y". Missing braiding entries are filled by complete_braiding with the
/// generators in `flip_rows` as trivial.
struct StructureTable {
  std::string name;
  std::string presentation;
  Mode mode = Mode::plain;
  std::map<std::string, std::string> delta;
  std::map<std::string, std::string> counit;
  std::map<std::string, std::string> antipode;
  std::map<std::string, std::string> star;
  std::map<std::string, std::string> braiding;
  std::vector<std::string> flip_rows;
};

/// Parses a table over `base`; throws AlgebraError on missing or unknown
/// generators and on unparsable entries.
StructureMaps build_structure(const StructureTable& t, PresentationPtr base);

/// ar_hopf, br_sol1_abcp, br_sol1_abcd, br_sol2_abcp, br_sol2_abcd, tqr_hopf.
const std::vector<std::string>& builtin_structure_names();
StructureTable builtin_structure_table(const std::string& name);
/// Built and cached. Throws AlgebraError for unknown names.
StructurePtr builtin_structure(const std::string& name);

/// Central element expected to be bosonic in the braided solutions.
NCPoly quantum_trace(const std::string& structure_name);

/// adjoint_ar and adjoint_tqr, computed from ar_hopf and tqr_hopf.
const std::vector<std::string>& builtin_coaction_names();
CoactionMap builtin_coaction(const std::string& name);

/// transmute_ar: products of the braided algebra written in A(R).
/// transmute_tqr: the same over the two-parameter algebra at r = q.
const std::vector<std::string>& builtin_table_names();
MultiplicationTable builtin_table(const std::string& name);

}  // namespace braidkit
