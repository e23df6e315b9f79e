#include "braidkit/ansatz.hpp"
#include "braidkit/catalog.hpp"

#include <doctest.h>

#include <algorithm>

using namespace braidkit;

namespace {

const AnsatzSpec& ansatz() {
  static const AnsatzSpec spec = build_ansatz();
  return spec;
}

const EquationSystem& full_system() {
  static const EquationSystem sys = generate_equations(ansatz(), default_ansatz_axioms());
  return sys;
}

// Reads each template coefficient that is a bare unknown off the shipped
// tables: the unknown takes the coefficient of its own tensor word.
Bindings read_off(const StructureMaps& shipped) {
  const StructureMaps& t = ansatz().maps;
  Bindings out;
  auto bind = [&](const Scalar& coef, const Scalar& value) {
    if (coef.terms().size() != 1 || coef.terms()[0].coef != 1) return;
    const auto& f = coef.terms()[0].mono.factors();
    if (f.size() != 1 || f[0].second != 1 || symbol_kind(f[0].first) != SymbolKind::unknown) return;
    auto [it, fresh] = out.emplace(f[0].first, value);
    // an unknown shared between two entries must read the same value twice
    CHECK(it->second == value);
  };
  auto tensors = [&](const std::vector<Tensor>& tmpl, const std::vector<Tensor>& real) {
    for (std::size_t g = 0; g < tmpl.size(); ++g)
      for (const auto& [k, c] : tmpl[g].terms()) bind(c, real[g].coefficient(k));
  };
  tensors(t.delta, shipped.delta);
  tensors(*t.braiding, *shipped.braiding);
  for (std::size_t g = 0; g < t.counit.size(); ++g) bind(t.counit[g], shipped.counit[g]);
  for (std::size_t g = 0; g < t.antipode.size(); ++g)
    for (const auto& [w, c] : t.antipode[g].terms()) bind(c, shipped.antipode[g].coefficient(w));
  return out;
}

SolutionBranch as_branch(const Bindings& b) {
  SolutionBranch out;
  for (const auto& [s, v] : b) out.assignment[symbol_name(s)] = v;
  return out;
}

}  // namespace

TEST_CASE("templates") {
  const AnsatzSpec& spec = ansatz();
  CHECK(spec.unknowns.size() == 92);
  const Alphabet& a = spec.base->alphabet();
  CHECK(spec.maps.delta[a.index("a")].size() == 11);
  CHECK(spec.maps.delta[a.index("b")].size() == 6);
  CHECK(spec.maps.delta[a.index("c")].size() == 6);
  CHECK(spec.maps.delta[a.index("p")].size() == 11);
  CHECK(spec.maps.delta[a.index("a")].coefficient({a.word({"a"}), a.word({"a"})}) == Scalar::sym("A1"));
  CHECK(spec.maps.counit[a.index("b")] == Scalar::sym("e2"));
  CHECK(spec.maps.counit[a.index("c")] == Scalar::sym("e2"));
  CHECK(spec.maps.antipode[a.index("a")].size() == 5);
  // Δ(b) and Δ(c) share their unknowns, mirrored
  CHECK(spec.maps.delta[a.index("b")].coefficient({a.word({"a"}), a.word({"b"})}) == Scalar::sym("B1"));
  CHECK(spec.maps.delta[a.index("c")].coefficient({a.word({"c"}), a.word({"a"})}) == Scalar::sym("B1"));
  std::size_t n = a.size();
  Letter b = a.index("b"), p = a.index("p");
  CHECK((*spec.maps.braiding)[b * n + b] == parse_tensor("z1*b@b", a));
  for (Letter x = 0; x < n; ++x) {
    CHECK((*spec.maps.braiding)[p * n + x] == Tensor::word({Word(1, static_cast<char>(x)), Word(1, static_cast<char>(p))}));
    CHECK((*spec.maps.braiding)[x * n + p] == Tensor::word({Word(1, static_cast<char>(p)), Word(1, static_cast<char>(x))}));
  }
}

TEST_CASE("one counit instance by hand") {
  // (ε⊗id)Δ(b) - b with Δ(b) = B1 a@b + B2 b@a + B3 b@p + B4 p@b + B5 1@b + B6 b@1
  EquationSystem sys = generate_equations(ansatz(), {"counit"});
  Scalar coef_b = Scalar::parse("B1*e1 + B4*e3 + B5 - 1");
  Scalar coef_a = Scalar::parse("B2*e2");
  auto has = [&](const Scalar& x) {
    return std::any_of(sys.equations.begin(), sys.equations.end(),
                       [&](const Equation& e) { return e.value == x || e.value == -x; });
  };
  CHECK(has(coef_b));
  CHECK(has(coef_a));
  for (const auto& e : sys.equations) {
    CHECK_FALSE(e.value.is_zero());
    CHECK_FALSE(e.axiom.empty());
  }
}

std::int32_t unknown_degree(const Scalar& x) {
  std::int32_t top = 0;
  for (const auto& t : x.terms()) {
    std::int32_t deg = 0;
    for (const auto& [s, k] : t.mono.factors())
      if (symbol_kind(s) == SymbolKind::unknown) deg += k;
    top = std::max(top, deg);
  }
  return top;
}

TEST_CASE("coassociativity equation degrees") {
  // on generators each term is one Δ coefficient times one Δ coefficient of a leg
  EquationSystem sys = generate_equations(ansatz(), {"coassociativity"});
  std::int32_t top = 0;
  for (const auto& e : sys.equations) top = std::max(top, unknown_degree(e.value));
  CHECK(top == 2);
  // on two-letter words the braided product Δ(x)Δ(y) brings in ψ coefficients
  Structure s(ansatz().maps);
  std::int32_t longer = 0;
  check_axiom("coassociativity", s, 2, [&](const std::vector<std::string>&, const Tensor& r) {
    for (const auto& [k, c] : r.terms()) longer = std::max(longer, unknown_degree(c));
  });
  CHECK(longer >= 3);
}

TEST_CASE("the shipped solutions satisfy the generated system") {
  const auto& sys = full_system();
  CHECK(sys.equations.size() > 1000);
  for (const char* name : {"br_sol1_abcp", "br_sol2_abcp"}) {
    CAPTURE(name);
    Bindings b = read_off(builtin_structure(name)->maps());
    CHECK(b.size() == ansatz().unknowns.size());
    // the read-off values reproduce the shipped tables
    SolutionBranch branch = as_branch(b);
    CHECK(compare_tables(instantiate(ansatz(), branch, name), builtin_structure(name)->maps()).empty());
    CHECK(match_known_solution(branch, ansatz()) == std::optional<std::string>(name));
    std::size_t nonzero = 0;
    for (const auto& e : sys.equations)
      if (!e.value.substitute(b).is_zero()) ++nonzero;
    CHECK(nonzero == 0);
  }
}

TEST_CASE("a perturbed solution fails its checks") {
  Bindings b = read_off(builtin_structure("br_sol1_abcp")->maps());
  b[symbol("z1")] = -b[symbol("z1")];
  std::size_t nonzero = 0;
  for (const auto& e : full_system().equations)
    if (!e.value.substitute(b).is_zero()) ++nonzero;
  CHECK(nonzero > 0);
  auto reports = verify_branch(as_branch(b), ansatz(), 1);
  CHECK(std::any_of(reports.begin(), reports.end(), [](const CheckReport& r) { return !r.holds(); }));
}

TEST_CASE("small systems") {
  SymbolId x = symbol("X1"), y = symbol("Y1");
  auto one = solve({Scalar::parse("q*X1 - q")}, {"X1"});
  REQUIRE(one.branches.size() == 1);
  CHECK(one.branches[0].solved());
  CHECK(one.branches[0].assignment.at("X1") == Scalar(1));

  auto two = solve({Scalar::sym(x) * Scalar::sym(y)}, {"X1", "Y1"});
  REQUIRE(two.branches.size() == 2);
  std::vector<std::string> zeroed;
  for (const auto& br : two.branches) {
    CHECK(br.solved());
    for (const auto& [name, v] : br.assignment)
      if (v.is_zero()) zeroed.push_back(name);
  }
  std::sort(zeroed.begin(), zeroed.end());
  CHECK(zeroed == std::vector<std::string>{"X1", "Y1"});

  auto roots = solve({Scalar::parse("X1^2 - q^2")}, {"X1"});
  REQUIRE(roots.branches.size() == 2);
  std::vector<Scalar> values{roots.branches[0].assignment.at("X1"), roots.branches[1].assignment.at("X1")};
  std::sort(values.begin(), values.end());
  std::vector<Scalar> expected{Scalar::q(), -Scalar::q()};
  std::sort(expected.begin(), expected.end());
  CHECK(values == expected);

  // X1 = 0 forces 1 = 0; (q^2 - 1) X1 = q^2 - 1 divides exactly
  auto none = solve({Scalar::sym(x), Scalar::parse("X1 - 1")}, {"X1"});
  CHECK(std::none_of(none.branches.begin(), none.branches.end(), [](const SolutionBranch& b) { return b.solved(); }));
  auto exact = solve({Scalar::parse("(q^2 - 1)*X1 - q^2 + 1")}, {"X1"});
  REQUIRE(exact.branches.size() == 1);
  CHECK(exact.branches[0].assignment.at("X1") == Scalar(1));

  // a q-only condition prunes the branch
  auto pruned = solve({Scalar::parse("q^2 - 1")}, {"X1"});
  CHECK(pruned.branches.empty());
  CHECK_FALSE(pruned.pruned.empty());

  auto budget = solve({Scalar::sym(x) * Scalar::sym(y), Scalar::parse("X1 - Y1")}, {"X1", "Y1"}, 0);
  CHECK(budget.budget_exhausted);
}

TEST_CASE("assumptions never contradict assignments") {
  auto r = solve({Scalar::parse("X1*Y1"), Scalar::parse("X1*Z1 - Y1*Z1")}, {"X1", "Y1", "Z1"});
  for (const auto& b : r.branches) {
    Bindings bind = b.bindings();
    for (const auto& a : b.assumptions) CHECK_FALSE(a.substitute(bind).is_zero());
  }
}

TEST_CASE("full solve is sound, finds both solutions and is deterministic") {
  const auto& sys = full_system();
  std::vector<Scalar> values = sys.values();
  SolveResult first = solve(values, ansatz().unknowns);
  CHECK_FALSE(first.budget_exhausted);
  std::vector<std::string> matched;
  std::size_t solved = 0;
  for (const auto& b : first.branches) {
    if (!b.solved()) continue;
    ++solved;
    Bindings bind = b.bindings();
    for (const auto& v : values) CHECK(v.substitute(bind).is_zero());
    for (const auto& a : b.assumptions) CHECK_FALSE(a.substitute(bind).is_zero());
    if (auto m = match_known_solution(b, ansatz())) matched.push_back(*m);
  }
  std::sort(matched.begin(), matched.end());
  CHECK(matched == std::vector<std::string>{"br_sol1_abcp", "br_sol2_abcp"});
  CHECK(solved == 4);

  SolveResult second = solve(values, ansatz().unknowns);
  REQUIRE(second.branches.size() == first.branches.size());
  for (std::size_t i = 0; i < first.branches.size(); ++i) CHECK(first.branches[i].key() == second.branches[i].key());
  CHECK(first.steps == second.steps);
}
