#include "braidkit/ansatz.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace braidkit {

namespace {

// X1 a@a + X2 b@c + ... + X11 p@1
std::string eleven(const std::string& x) {
  static const char* legs[] = {"a@a", "b@c", "c@b", "p@a", "a@p", "1@a", "a@1", "1@1", "p@p", "1@p", "p@1"};
  std::string out;
  for (int i = 0; i < 11; ++i) out += std::string(i ? " + " : "") + x + std::to_string(i + 1) + "*" + legs[i];
  return out;
}

std::string six(const std::string& x, const std::vector<const char*>& legs) {
  std::string out;
  for (std::size_t i = 0; i < legs.size(); ++i) out += std::string(i ? " + " : "") + x + std::to_string(i + 1) + "*" + legs[i];
  return out;
}

std::string five(const std::string& x, const char* second, const char* third) {
  return x + "1*a + " + x + "2*" + second + " + " + x + "3*" + third + " + " + x + "4*p + " + x + "5";
}

bool is_unknown(SymbolId s) { return symbol_kind(s) == SymbolKind::unknown; }

std::vector<SymbolId> unknowns_of(const Scalar& x) {
  std::vector<SymbolId> out;
  for (SymbolId s : x.symbols())
    if (is_unknown(s)) out.push_back(s);
  return out;
}

std::int64_t unknown_degree(const Scalar& x) {
  std::int64_t best = 0;
  for (const auto& t : x.terms()) {
    std::int64_t d = 0;
    for (const auto& [s, e] : t.mono.factors())
      if (is_unknown(s)) d += e;
    best = std::max(best, d);
  }
  return best;
}

// Divides out the unit content: lowest powers of q and r and the leading rational.
Scalar unit_normalize(const Scalar& x) {
  if (x.is_zero()) return x;
  Monomial m;
  for (SymbolId s : {kQ, kR})
    if (x.has_symbol(s)) m = m * Monomial::power(s, x.min_exponent(s));
  return x.divide_by_unit(Scalar(m, x.terms()[0].coef));
}

// Exact quotient num / den where den involves q only; nullopt if inexact.
std::optional<Scalar> divide_q(const Scalar& num, const Scalar& den) {
  if (den.is_unit()) return num.divide_by_unit(den);
  for (SymbolId s : den.symbols())
    if (s != kQ) return std::nullopt;
  // Group num by its q-free part; divide each univariate slice.
  std::map<Monomial, std::map<std::int32_t, Rational>> slices;
  for (const auto& t : num.terms()) slices[t.mono.without(kQ)][t.mono.exponent(kQ)] += t.coef;
  std::map<std::int32_t, Rational> d;
  for (const auto& t : den.terms()) d[t.mono.exponent(kQ)] += t.coef;
  std::int32_t dlow = d.begin()->first, dlead_e = d.rbegin()->first;
  Rational dlead = d.rbegin()->second;
  Scalar out;
  for (auto& [rest, poly] : slices) {
    std::map<std::int32_t, Rational> rem = poly;
    while (!rem.empty()) {
      auto [e, c] = *rem.rbegin();
      if (e - dlead_e < (rem.begin()->first - dlow)) return std::nullopt;
      std::int32_t shift = e - dlead_e;
      Rational f = c / dlead;
      out += Scalar(rest * Monomial::power(kQ, shift), f);
      for (const auto& [de, dc] : d) {
        Rational& slot = rem[de + shift];
        slot -= f * dc;
        if (slot == 0) rem.erase(de + shift);
      }
    }
  }
  return out;
}

// Square root of a unit whose rational coefficient is a square and whose
// q, r exponents are even.
std::optional<Scalar> unit_sqrt(const Scalar& x) {
  if (!x.is_unit()) return std::nullopt;
  const auto& t = x.terms()[0];
  if (t.coef < 0) return std::nullopt;
  mpz_class n = t.coef.get_num(), d = t.coef.get_den();
  mpz_class rn = sqrt(n), rd = sqrt(d);
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  Monomial m;
  for (const auto& [s, e] : t.mono.factors()) {
    if (e % 2 != 0) return std::nullopt;
    m = m * Monomial::power(s, e / 2);
  }
  return Scalar(m, Rational(rn, rd));
}

constexpr std::size_t kShortPivot = 3;

struct State {
  std::vector<Scalar> eqs;
  std::map<SymbolId, Scalar> assign;
  std::vector<Scalar> assumptions;
  std::vector<std::string> trace;
};

void assign_value(State& st, SymbolId x, const Scalar& v) {
  for (auto& e : st.eqs)
    if (e.has_symbol(x)) e = e.substitute(x, v);
  for (auto& [k, val] : st.assign)
    if (val.has_symbol(x)) val = val.substitute(x, v);
  for (auto& a : st.assumptions)
    if (a.has_symbol(x)) a = a.substitute(x, v);
  st.assign[x] = v;
  st.trace.push_back(symbol_name(x) + " = " + v.to_string());
}

}  // namespace

AnsatzSpec build_ansatz() {
  AnsatzSpec spec;
  spec.base = builtin("BR_abcp");
  auto add = [&](const std::string& stem, int n) {
    for (int i = 1; i <= n; ++i) spec.unknowns.push_back(stem + std::to_string(i));
  };
  add("A", 11);
  add("B", 6);
  add("C", 11);
  add("e", 3);
  add("k", 5);
  add("m", 5);
  add("n", 5);
  add("g", 11);
  add("d", 6);
  add("f", 6);
  add("z", 1);
  add("c", 11);
  add("a", 11);
  // Interning in template order keeps symbol ids, and so scalar ordering, stable.
  for (const auto& u : spec.unknowns) symbol(u);

  StructureTable& t = spec.templates;
  t.name = "ansatz";
  t.presentation = "BR_abcp";
  t.mode = Mode::braided;
  t.delta = {{"a", eleven("A")},
             {"b", six("B", {"a@b", "b@a", "b@p", "p@b", "1@b", "b@1"})},
             {"c", six("B", {"c@a", "a@c", "p@c", "c@p", "c@1", "1@c"})},
             {"p", eleven("C")}};
  t.counit = {{"a", "e1"}, {"b", "e2"}, {"c", "e2"}, {"p", "e3"}};
  t.antipode = {{"a", five("k", "b", "c")}, {"b", five("m", "b", "c")}, {"c", five("m", "c", "b")}, {"p", five("n", "b", "c")}};
  t.star = {{"a", "a"}, {"b", "c"}, {"c", "b"}, {"p", "p"}};
  t.braiding = {{"a@a", eleven("g")},
                {"a@b", six("d", {"b@a", "a@b", "p@b", "b@p", "1@b", "b@1"})},
                {"a@c", six("f", {"c@a", "a@c", "p@c", "c@p", "1@c", "c@1"})},
                {"b@b", "z1*b@b"},
                {"c@b", eleven("c")},
                {"b@c", eleven("a")}};
  t.flip_rows = {"p"};
  spec.maps = build_structure(t, spec.base);
  return spec;
}

std::vector<Scalar> EquationSystem::values() const {
  std::vector<Scalar> out;
  out.reserve(equations.size());
  for (const auto& e : equations) out.push_back(e.value);
  return out;
}

std::vector<std::string> default_ansatz_axioms(bool include_star) {
  std::vector<std::string> out = hopf_axiom_names();
  if (include_star)
    for (const auto& a : star_axiom_names()) out.push_back(a);
  out.push_back("well-defined");
  return out;
}

EquationSystem generate_equations(const AnsatzSpec& spec, const std::vector<std::string>& axioms) {
  if (axioms.empty()) throw AlgebraError("generate_equations needs at least one axiom");
  Structure s(spec.maps);
  const Alphabet& A = s.alphabet();
  EquationSystem sys;
  std::set<Scalar> seen;
  for (const auto& axiom : axioms) {
    check_axiom(axiom, s, axiom_arity(axiom), [&](const std::vector<std::string>& inputs, const Tensor& residual) {
      for (const auto& [key, c] : residual.terms()) {
        Scalar v = unit_normalize(c);
        if (v.is_zero() || !seen.insert(v).second) continue;
        std::string basis;
        for (const auto& w : key) basis += (basis.empty() ? "" : "@") + (w.empty() ? std::string("1") : A.to_string(w));
        sys.equations.push_back({v, axiom, inputs, basis.empty() ? "1" : basis});
      }
    });
  }
  return sys;
}

Bindings SolutionBranch::bindings() const {
  Bindings b;
  for (const auto& [name, v] : assignment) b[symbol(name)] = v;
  return b;
}

std::string SolutionBranch::key() const {
  std::string out;
  for (const auto& [name, v] : assignment) out += name + "=" + v.to_string() + ";";
  return out;
}

SolveResult solve(const std::vector<Scalar>& equations, const std::vector<std::string>& unknowns, std::size_t budget) {
  std::map<SymbolId, std::size_t> rank;
  for (std::size_t i = 0; i < unknowns.size(); ++i) rank[symbol(unknowns[i])] = i;
  auto rank_of = [&](SymbolId s) {
    auto it = rank.find(s);
    return it == rank.end() ? unknowns.size() + s : it->second;
  };

  SolveResult result;
  std::vector<SolutionBranch> solved, stuck;
  std::vector<State> stack;
  stack.push_back({equations, {}, {}, {}});

  auto finish = [&](State& st, bool done) {
    SolutionBranch b;
    for (const auto& [s, v] : st.assign) b.assignment[symbol_name(s)] = v;
    b.assumptions = st.assumptions;
    b.trace = std::move(st.trace);
    std::set<SymbolId> free;
    for (const auto& [s, v] : st.assign)
      for (SymbolId u : unknowns_of(v)) free.insert(u);
    for (const auto& e : st.eqs)
      for (SymbolId u : unknowns_of(e)) free.insert(u);
    for (SymbolId u : free)
      if (!st.assign.count(u)) b.free_unknowns.push_back(symbol_name(u));
    if (!done) b.residual = st.eqs;
    (done ? solved : stuck).push_back(std::move(b));
  };

  struct Info {
    std::vector<SymbolId> us;
    std::size_t terms;
    std::int64_t deg;
  };

  while (!stack.empty()) {
    State st = std::move(stack.back());
    stack.pop_back();
    bool dead = false;
    while (true) {
      if (++result.steps > budget) {
        result.budget_exhausted = true;
        st.trace.push_back("budget exhausted");
        finish(st, false);
        break;
      }
      // Simplify: drop assumed-nonzero unknown factors, normalize, dedupe,
      // prune q-only conditions.
      std::vector<SymbolId> nonzero;
      for (const auto& a : st.assumptions)
        if (a.terms().size() == 1) {
          for (const auto& [s, e] : a.terms()[0].mono.factors())
            if (is_unknown(s)) nonzero.push_back(s);
        }
      std::set<Scalar> uniq;
      for (auto e : st.eqs) {
        if (e.is_zero()) continue;
        for (SymbolId x : nonzero)
          if (std::int32_t k = e.has_symbol(x) ? e.min_exponent(x) : 0; k > 0) {
            Scalar q;
            for (const auto& t : e.terms()) q += Scalar(t.mono * Monomial::power(x, -k), t.coef);
            e = std::move(q);
          }
        if (!e.has_unknowns()) {
          result.pruned.push_back("needs " + e.to_string() + " = 0 after " + std::to_string(st.trace.size()) + " steps");
          dead = true;
          break;
        }
        uniq.insert(unit_normalize(e));
      }
      if (dead) break;
      std::vector<Scalar> kept;
      for (const auto& a : st.assumptions) {
        if (a.is_zero()) {
          result.pruned.push_back("contradicts assumption after " + std::to_string(st.trace.size()) + " steps");
          dead = true;
          break;
        }
        if (a.has_unknowns()) kept.push_back(a);
      }
      if (dead) break;
      st.assumptions = std::move(kept);
      if (uniq.empty()) {
        st.eqs.clear();
        finish(st, true);
        break;
      }

      // Sparsest equations first.
      std::vector<std::pair<Scalar, Info>> sorted;
      sorted.reserve(uniq.size());
      for (const auto& e : uniq) sorted.push_back({e, Info{unknowns_of(e), e.terms().size(), unknown_degree(e)}});
      std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
        return std::make_pair(x.second.us.size(), x.second.terms) < std::make_pair(y.second.us.size(), y.second.terms);
      });
      st.eqs.clear();
      for (const auto& [e, info] : sorted) st.eqs.push_back(e);

      // Linear pivots: x = value wherever x occurs linearly with a coefficient
      // in q alone that divides the rest. Shortest value first.
      std::optional<std::pair<SymbolId, Scalar>> pivot;
      for (const auto& [e, info] : sorted) {
        if (pivot && info.terms > pivot->second.terms().size() + 1) continue;
        for (SymbolId x : info.us) {
          if (e.max_exponent(x) != 1) continue;
          Scalar coef = e.coefficient(x, 1);
          if (coef.has_unknowns()) continue;
          auto v = divide_q(-e.coefficient(x, 0), coef);
          if (!v) continue;
          if (pivot && std::make_pair(v->terms().size(), rank_of(x)) >=
                           std::make_pair(pivot->second.terms().size(), rank_of(pivot->first)))
            continue;
          pivot = {x, *v};
        }
      }

      // Unknown factors: prefer the unknown occurring in the most monomial
      // equations, so both branches shrink.
      std::optional<SymbolId> factor;
      std::map<SymbolId, std::size_t> hits;
      for (const auto& [e, info] : sorted)
        if (info.terms == 1)
          for (SymbolId x : info.us) ++hits[x];
      for (const auto& [x, n] : hits)
        if (!factor || n > hits[*factor] || (n == hits[*factor] && rank_of(x) < rank_of(*factor))) factor = x;
      bool monomial_factor = factor.has_value();
      for (std::size_t i = 0; i < sorted.size() && !factor; ++i)
        for (SymbolId x : sorted[i].second.us)
          if (sorted[i].first.min_exponent(x) >= 1) {
            factor = x;
            break;
          }

      // (a) short pivot, (b) monomial split, (c) any pivot, (d) any split.
      bool take_pivot = pivot && (pivot->second.terms().size() <= kShortPivot || !monomial_factor);
      if (take_pivot) {
        assign_value(st, pivot->first, pivot->second);
        continue;
      }
      if (factor) {
        SymbolId x = *factor;
        State other = st;
        other.assumptions.push_back(Scalar::sym(x));
        other.trace.push_back("branch " + symbol_name(x) + " != 0");
        st.trace.push_back("branch " + symbol_name(x) + " = 0");
        assign_value(st, x, Scalar());
        stack.push_back(std::move(other));
        stack.push_back(std::move(st));
        break;
      }

      // (e) quadratic in a single unknown with a unit square discriminant.
      bool split = false;
      for (std::size_t i = 0; i < sorted.size() && !split; ++i) {
        const auto& us = sorted[i].second.us;
        const Scalar& e = sorted[i].first;
        if (us.size() != 1 || e.max_exponent(us[0]) != 2) continue;
        SymbolId x = us[0];
        Scalar a = e.coefficient(x, 2), b = e.coefficient(x, 1), c = e.coefficient(x, 0);
        if (!a.is_unit()) continue;
        Scalar disc = b * b - Scalar(4) * a * c;
        Scalar two_a_inv = (Scalar(2) * a).unit_inverse();
        std::vector<Scalar> roots;
        if (disc.is_zero()) {
          roots.push_back(-b * two_a_inv);
        } else if (auto s = unit_sqrt(disc)) {
          roots.push_back((-b + *s) * two_a_inv);
          roots.push_back((-b - *s) * two_a_inv);
        } else {
          continue;
        }
        split = true;
        for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
          State next = st;
          next.trace.push_back("root of " + e.to_string());
          assign_value(next, x, *it);
          stack.push_back(std::move(next));
        }
      }
      if (split) break;

      st.trace.push_back("stuck");
      finish(st, false);
      break;
    }
  }

  auto by_key = [](const SolutionBranch& x, const SolutionBranch& y) { return x.key() < y.key(); };
  std::sort(solved.begin(), solved.end(), by_key);
  std::sort(stuck.begin(), stuck.end(), by_key);
  auto same = [](const SolutionBranch& x, const SolutionBranch& y) { return x.key() == y.key() && x.residual == y.residual; };
  solved.erase(std::unique(solved.begin(), solved.end(), same), solved.end());
  stuck.erase(std::unique(stuck.begin(), stuck.end(), same), stuck.end());
  result.branches = std::move(solved);
  for (auto& b : stuck) result.branches.push_back(std::move(b));
  return result;
}

StructureMaps instantiate(const AnsatzSpec& spec, const SolutionBranch& branch, std::string name) {
  Bindings b = branch.bindings();
  StructureMaps m = spec.maps;
  m.name = std::move(name);
  for (auto& t : m.delta) t = t.substitute(b);
  for (auto& c : m.counit) c = c.substitute(b);
  for (auto& x : m.antipode) x = spec.base->normal_form(x.substitute(b));
  if (m.braiding)
    for (auto& t : *m.braiding) t = t.substitute(b);
  return m;
}

std::vector<CheckReport> verify_branch(const SolutionBranch& branch, const AnsatzSpec& spec, std::size_t max_word_len) {
  if (!branch.solved()) throw AlgebraError("verify_branch needs a fully solved branch");
  Structure s(instantiate(spec, branch, "branch"));
  std::vector<CheckReport> out;
  for (const auto& axiom : applicable_axioms(s.maps())) out.push_back(check_axiom(axiom, s, max_word_len));
  return out;
}

std::optional<std::string> match_known_solution(const SolutionBranch& branch, const AnsatzSpec& spec) {
  if (!branch.solved() || !branch.free_unknowns.empty()) return std::nullopt;
  StructureMaps m = instantiate(spec, branch, "branch");
  for (const char* name : {"br_sol1_abcp", "br_sol2_abcp"})
    if (compare_tables(m, builtin_structure(name)->maps()).empty()) return std::string(name);
  return std::nullopt;
}

}  // namespace braidkit
