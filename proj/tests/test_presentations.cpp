#include "braidkit/presentations.hpp"

#include <doctest.h>

#include <algorithm>

using namespace braidkit;

namespace {

NCPoly P(const char* text, const Presentation& p) { return parse_poly(text, p.alphabet()); }

bool has_relation(const Presentation& p, const char* lhs, const char* rhs) {
  NCPoly want = P(lhs, p) - P(rhs, p);
  return std::any_of(p.relations().begin(), p.relations().end(),
                     [&](const Relation& r) { return r.lhs - r.rhs == want || r.rhs - r.lhs == want; });
}

}  // namespace

TEST_CASE("catalog sizes") {
  CHECK(builtin_presentation_names() == std::vector<std::string>{"AR", "BR_abcd", "BR_abcp", "TQR"});
  CHECK(builtin("AR")->alphabet().size() == 4);
  CHECK(builtin("AR")->relations().size() == 7);
  const auto& p = *builtin("BR_abcp");
  CHECK(p.alphabet().size() == 4);
  CHECK(p.alphabet()[3].name == "p");
  CHECK(p.relations().size() == 4);
  // p is central: its commutators come in through all_relations
  CHECK(p.all_relations().size() == 7);
  CHECK(builtin("TQR")->spec().parameters == std::vector<std::string>{"q", "r"});
  CHECK_THROWS_AS(builtin("XYZ"), AlgebraError);
}

TEST_CASE("expected relations are present") {
  const auto& tqr = *builtin("TQR");
  CHECK(has_relation(tqr, "a*d - d*a", "(r - r^-1)*q^2*b*c"));
  const auto& ar = *builtin("AR");
  CHECK(has_relation(ar, "a*d - q^-1*b*c", "1"));
  CHECK(has_relation(ar, "a*b", "q^-1*b*a"));
  const auto& br = *builtin("BR_abcd");
  CHECK(has_relation(br, "b*a", "q^2*a*b"));
  CHECK(has_relation(br, "a*d - q^2*c*b", "1"));
}

TEST_CASE("basis change between the two descriptions") {
  const BasisMap& m = abcp_to_abcd();
  const auto& abcd = *builtin("BR_abcd");
  const auto& abcp = *builtin("BR_abcp");
  CHECK(change_basis(P("p", abcp), m, abcd) == P("q^-2*a + d", abcd));
  CHECK(change_basis(P("d", abcd), m, abcp) == P("p - q^-2*a", abcp));
  CHECK(change_basis(P("b*c - c*b - (1 - q^-2)*a*(d - a)", abcd), m, abcp).is_zero());
  CHECK(validate_basis_map(m).empty());
  CHECK(validate_basis_map(m.inverse()).empty());

  for (const char* g : {"a", "b", "c", "d"}) {
    NCPoly there = change_basis(P(g, abcd), m, abcp);
    CHECK(change_basis(there, m, abcd) == P(g, abcd));
  }
  for (const auto& r : abcd.all_relations()) CHECK(change_basis(r.lhs - r.rhs, m, abcp).is_zero());
  for (const auto& r : abcp.all_relations()) CHECK(change_basis(r.lhs - r.rhs, m, abcd).is_zero());
}

TEST_CASE("a wrong basis map is caught") {
  BasisMap bad = abcp_to_abcd();
  bad.forward[3] = P("q^-2*a + d", *bad.to) * Scalar::q();
  CHECK_FALSE(validate_basis_map(bad).empty());
}

TEST_CASE("two-parameter algebra degenerates") {
  auto tqr = builtin("TQR");
  auto classical = tqr->specialize(parse_binding("q=1", parse_binding("r=1")));
  const auto& a = classical->alphabet();
  for (Letter x = 0; x < a.size(); ++x)
    for (Letter y = 0; y < a.size(); ++y) {
      NCPoly xy = NCPoly::word(Word{static_cast<char>(x), static_cast<char>(y)});
      NCPoly yx = NCPoly::word(Word{static_cast<char>(y), static_cast<char>(x)});
      CHECK(alg_equal(xy, yx, *classical));
    }
  // not commutative before the limit
  CHECK_FALSE(alg_equal(P("a*b", *tqr), P("b*a", *tqr), *tqr));
}

TEST_CASE("specialize keeps the relation count") {
  auto s = builtin("TQR")->specialize(parse_binding("r=q"), "TQR|r=q");
  CHECK(s->name() == "TQR|r=q");
  CHECK(s->relations().size() == 7);
  CHECK(s->normal_form(P("b*a", *s)) == s->normal_form(P("q^-1*a*b", *s)));
}
