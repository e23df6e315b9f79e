#include "braidkit/ncalg.hpp"
#include "braidkit/presentations.hpp"

#include <doctest.h>

#include <random>

using namespace braidkit;

namespace {

NCPoly P(const char* text, const Presentation& p) { return parse_poly(text, p.alphabet()); }

NCPoly random_poly(std::mt19937_64& rng, const Alphabet& alphabet, std::size_t max_len) {
  std::uniform_int_distribution<int> coef(-3, 3), count(1, 3), expo(-2, 2);
  std::uniform_int_distribution<std::size_t> len(0, max_len), letter(0, alphabet.size() - 1);
  NCPoly x;
  for (int i = count(rng); i > 0; --i) {
    Word w;
    for (std::size_t n = len(rng); n > 0; --n) w.push_back(static_cast<char>(letter(rng)));
    x.add(w, Scalar(coef(rng)) * Scalar::q(expo(rng)));
  }
  return x;
}

}  // namespace

TEST_CASE("free product") {
  const auto& ar = *builtin("AR");
  CHECK(nc_mul(P("a", ar), P("b", ar)) == NCPoly::word(ar.alphabet().word({"a", "b"})));
  CHECK(nc_mul(P("a + b", ar), P("c", ar)) == P("a*c + b*c", ar));
  CHECK(nc_mul(NCPoly(1), P("q*d*a - 2", ar)) == P("q*d*a - 2", ar));
  // unreduced
  CHECK(nc_mul(P("b", ar), P("a", ar)).coefficient(ar.alphabet().word({"b", "a"})) == Scalar(1));
}

TEST_CASE("normal forms") {
  const auto& ar = *builtin("AR");
  CHECK(ar.normal_form(P("b*a", ar)) == P("q*a*b", ar));
  // bc is the eliminated word under this order, so 1 + q*bc is not itself normal
  CHECK(alg_equal(P("d*a", ar), P("1 + q*b*c", ar), ar));
  CHECK(ar.normal_form(P("d*a", ar)) == P("q^2*a*d + 1 - q^2", ar));
  CHECK(alg_equal(P("a*d - q^-1*b*c", ar), NCPoly(1), ar));
  CHECK(alg_equal(P("d*c*b*a", ar), P("d*c*b*a", ar), ar));

  const auto& br = *builtin("BR_abcd");
  CHECK(br.normal_form(P("b*a", br)) == P("q^2*a*b", br));
  CHECK(alg_equal(P("a*d - q^2*c*b", br), NCPoly(1), br));
}

TEST_CASE("normal forms have no redex") {
  std::mt19937_64 rng(3);
  for (const auto& name : builtin_presentation_names()) {
    const auto& p = *builtin(name);
    for (int i = 0; i < 100; ++i) {
      NCPoly nf = p.normal_form(random_poly(rng, p.alphabet(), 6));
      for (const auto& [w, c] : nf.terms()) CHECK(p.is_normal(w));
    }
  }
}

TEST_CASE("confluence probe") {
  CHECK(builtin("AR")->confluence_probe(1000, 5, 0).counterexamples.empty());

  Alphabet abc({{"a", 1}, {"b", 1}, {"c", 1}});
  auto disjoint = Presentation::from_rules("disjoint", abc,
      {{abc.word({"b", "a"}), NCPoly::word(abc.word({"a", "b"})), "relation 1"},
       {abc.word({"c", "a"}), NCPoly::word(abc.word({"a", "c"}), 2), "relation 2"}});
  auto report = disjoint->confluence_probe(200, 3, 1);
  CHECK(report.confluent());
  CHECK(disjoint->normal_form(NCPoly::word(abc.word({"c", "b", "a"}))) ==
        NCPoly::word(abc.word({"a", "c", "b"}), 2));

  auto bad = Presentation::from_rules("inconsistent", abc,
      {{abc.word({"b", "a"}), NCPoly::word(abc.word({"a", "b"})), "relation 1"},
       {abc.word({"b", "a"}), NCPoly::word(abc.word({"a", "b"}), 2), "relation 2"}});
  auto bad_report = bad->confluence_probe(200, 3, 1);
  CHECK_FALSE(bad_report.confluent());
  CHECK_FALSE(bad_report.counterexamples.empty());
}

TEST_CASE("shipped presentations are confluent and consistent") {
  for (const auto& name : builtin_presentation_names()) {
    CAPTURE(name);
    const auto& p = *builtin(name);
    auto report = p.confluence_probe(300, 5, 11);
    CHECK(report.counterexamples.empty());
    for (const auto& o : report.overlaps) CHECK(o.resolves);
    for (const auto& r : p.all_relations()) CHECK(p.normal_form(r.lhs - r.rhs).is_zero());
    CHECK(p.normal_form(NCPoly(1)) == NCPoly(1));
    for (const auto& rule : p.rules()) {
      for (const auto& [w, c] : rule.rhs.terms()) CHECK(p.alphabet().compare(w, rule.lhs) < 0);
    }
  }
}

TEST_CASE("reduction is idempotent and multiplicative") {
  std::mt19937_64 rng(5);
  for (const auto& name : builtin_presentation_names()) {
    CAPTURE(name);
    const auto& p = *builtin(name);
    for (int i = 0; i < 100; ++i) {
      NCPoly x = random_poly(rng, p.alphabet(), 3), y = random_poly(rng, p.alphabet(), 3);
      NCPoly nx = p.normal_form(x), ny = p.normal_form(y);
      CHECK(p.normal_form(nx) == nx);
      CHECK(p.normal_form(nc_mul(x, y)) == p.normal_form(nc_mul(nx, ny)));
      CHECK(p.multiply(x, y) == p.normal_form(nc_mul(x, y)));
      // linearity
      CHECK(p.normal_form(x * Scalar::q(2) - y) == nx * Scalar::q(2) - ny);
    }
  }
}

TEST_CASE("step budget") {
  Alphabet ab({{"a", 1}, {"b", 1}});
  // ab -> ba and ba -> ab loop forever
  auto loop = Presentation::from_rules("loop", ab,
      {{ab.word({"a", "b"}), NCPoly::word(ab.word({"b", "a"})), "relation 1"},
       {ab.word({"b", "a"}), NCPoly::word(ab.word({"a", "b"})), "relation 2"}});
  CHECK_THROWS_AS(loop->normal_form(NCPoly::word(ab.word({"a", "b"}))), RewriteBudgetExceeded);
}

TEST_CASE("classical limit") {
  for (const auto& name : builtin_presentation_names()) {
    CAPTURE(name);
    auto report = classical_limit(*builtin(name));
    CHECK(report.holds());
    CHECK(report.noncommuting.empty());
    for (const auto& r : report.rules) CHECK(r.kind != "other");
  }
  // TQR at r = q first, then q = 1
  auto tqr = builtin("TQR")->specialize(parse_binding("r=q"));
  CHECK(classical_limit(*tqr).holds());
}

TEST_CASE("parser") {
  const auto& ar = *builtin("AR");
  CHECK_THROWS_AS(P("a*(b", ar), AlgebraError);
  CHECK_THROWS_AS(P("a@b", ar), AlgebraError);
  CHECK_THROWS_AS(P("a +", ar), AlgebraError);
  NCPoly x = P("(q - q^-1)*b*c + 3/2*a^2", ar);
  CHECK(P(x.to_string(ar.alphabet()).c_str(), ar) == x);
  Tensor t = parse_tensor("a@b + q*c@d", ar.alphabet());
  CHECK(t.arity() == 2);
  CHECK(t.flipped() == parse_tensor("b@a + q*d@c", ar.alphabet()));
}
