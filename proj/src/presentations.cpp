#include "braidkit/presentations.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace braidkit {

namespace {

std::vector<Generator> gens(std::initializer_list<const char*> names) {
  std::vector<Generator> out;
  for (const char* n : names) out.push_back({n, 1});
  return out;
}

}  // namespace

const std::vector<std::string>& builtin_presentation_names() {
  static const std::vector<std::string> names{"AR", "BR_abcd", "BR_abcp", "TQR"};
  return names;
}

PresentationSpec builtin_spec(const std::string& name) {
  if (name == "AR") {
    return {"AR",
            gens({"a", "b", "c", "d"}),
            {"q"},
            {},
            {"a*b = q^-1*b*a", "a*c = q^-1*c*a", "b*d = q^-1*d*b", "c*d = q^-1*d*c", "b*c = c*b",
             "a*d - d*a = (q^-1 - q)*b*c", "a*d - q^-1*b*c = 1"}};
  }
  if (name == "BR_abcd") {
    return {"BR_abcd",
            gens({"a", "b", "c", "d"}),
            {"q"},
            {},
            {"b*a = q^2*a*b", "c*a = q^-2*a*c", "a*d = d*a", "b*c = c*b + (1 - q^-2)*a*(d - a)",
             "d*b = b*d + (1 - q^-2)*a*b", "c*d = d*c + (1 - q^-2)*c*a", "a*d - q^2*c*b = 1"}};
  }
  if (name == "BR_abcp") {
    return {"BR_abcp",
            gens({"a", "b", "c", "p"}),
            {"q"},
            {"p"},
            {"b*a = q^2*a*b", "a*c = q^2*c*a", "b*c = c*b - (1 - q^-4)*a^2 + (1 - q^-2)*p*a",
             "-q^-2*a*a + a*p - q^2*c*b = 1"}};
  }
  if (name == "TQR") {
    return {"TQR",
            gens({"a", "b", "c", "d"}),
            {"q", "r"},
            {},
            {"a*b = r*b*a", "a*c = r*c*a", "b*c = c*b", "b*d = r*d*b + (q^-2 - 1)*(r^2 - 1)*b*a",
             "c*d = r*d*c + (q^-2 - 1)*(r^2 - 1)*c*a", "a*d - d*a = (r - r^-1)*q^2*b*c",
             "q^2*d*a + (1 - q^2)*a*a - r^-1*q^4*c*b = 1"}};
  }
  throw AlgebraError("unknown presentation '" + name + "'");
}

PresentationPtr builtin(const std::string& name) {
  static std::mutex mutex;
  static std::map<std::string, PresentationPtr> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  auto p = Presentation::build(builtin_spec(name));
  cache.emplace(name, p);
  return p;
}

BasisMap BasisMap::inverse() const { return {name.empty() ? name : name + "^-1", to, from, backward, forward}; }

NCPoly substitute_generators(const NCPoly& x, const std::vector<NCPoly>& images, const Presentation& target) {
  NCPoly out;
  for (const auto& [w, c] : x.terms()) {
    NCPoly term(c);
    for (char g : w) {
      auto i = static_cast<Letter>(g);
      if (i >= images.size()) throw AlgebraError("generator substitution misses letter " + std::to_string(i));
      term = target.multiply(term, images[i]);
    }
    out += term;
  }
  return target.normal_form(out);
}

NCPoly change_basis(const NCPoly& x, const BasisMap& m, const Presentation& target) {
  if (target.alphabet() == m.to->alphabet()) return substitute_generators(x, m.forward, target);
  if (target.alphabet() == m.from->alphabet()) return substitute_generators(x, m.backward, target);
  throw AlgebraError("basis map '" + m.name + "' does not target presentation '" + target.name() + "'");
}

Tensor substitute_generators(const Tensor& t, const std::vector<NCPoly>& images, const Presentation& target) {
  Tensor out(t.arity());
  std::vector<NCPoly> legs(t.arity());
  for (const auto& [key, c] : t.terms()) {
    for (std::size_t i = 0; i < key.size(); ++i) legs[i] = substitute_generators(NCPoly::word(key[i]), images, target);
    Tensor piece = Tensor::of(legs);
    out += piece * c;
  }
  return out;
}

const BasisMap& abcp_to_abcd() {
  static const BasisMap m = [] {
    auto abcp = builtin("BR_abcp");
    auto abcd = builtin("BR_abcd");
    BasisMap out;
    out.name = "p=q^-2*a+d";
    out.from = abcp;
    out.to = abcd;
    for (const char* g : {"a", "b", "c"}) {
      out.forward.push_back(parse_poly(g, abcd->alphabet()));
      out.backward.push_back(parse_poly(g, abcp->alphabet()));
    }
    out.forward.push_back(parse_poly("q^-2*a + d", abcd->alphabet()));
    out.backward.push_back(parse_poly("p - q^-2*a", abcp->alphabet()));
    return out;
  }();
  return m;
}

std::vector<std::string> validate_basis_map(const BasisMap& m) {
  std::vector<std::string> failures;
  auto round_trip = [&](const Presentation& p, const std::vector<NCPoly>& there, const std::vector<NCPoly>& back,
                        const Presentation& other) {
    for (std::size_t i = 0; i < p.alphabet().size(); ++i) {
      NCPoly g = NCPoly::word(Word(1, static_cast<char>(i)));
      NCPoly image = substitute_generators(substitute_generators(g, there, other), back, p);
      if (!p.equal(image, g))
        failures.push_back("round trip of " + p.alphabet()[i].name + " gives " + image.to_string(p.alphabet()));
    }
  };
  auto transport = [&](const Presentation& p, const std::vector<NCPoly>& there, const Presentation& other) {
    for (const auto& rel : p.all_relations()) {
      NCPoly image = substitute_generators(rel.lhs - rel.rhs, there, other);
      if (!image.is_zero())
        failures.push_back("relation '" + rel.text + "' of " + p.name() + " maps to " +
                           image.to_string(other.alphabet()) + " in " + other.name());
    }
  };
  round_trip(*m.from, m.forward, m.backward, *m.to);
  round_trip(*m.to, m.backward, m.forward, *m.from);
  transport(*m.from, m.forward, *m.to);
  transport(*m.to, m.backward, *m.from);
  return failures;
}

bool ClassicalLimitReport::holds() const {
  return noncommuting.empty() &&
         std::all_of(rules.begin(), rules.end(), [](const RuleLimit& r) { return r.kind != "other"; });
}

ClassicalLimitReport classical_limit(const Presentation& p) {
  Bindings ones;
  for (const auto& name : p.spec().parameters) ones[symbol(name)] = Scalar(1);
  ClassicalLimitReport report;
  for (const auto& rule : p.rules()) {
    NCPoly diff = (NCPoly::word(rule.lhs) - rule.rhs).substitute(ones);
    NCPoly sorted;
    for (const auto& [w, c] : diff.terms()) {
      Word u = w;
      std::sort(u.begin(), u.end());
      sorted.add(u, c);
    }
    std::string kind = sorted.is_zero() ? "commutativity" : !sorted.coefficient(Word()).is_zero() ? "identity" : "other";
    report.rules.push_back({p.rule_to_string(rule), kind, sorted});
  }
  PresentationPtr limit = p.specialize(ones, p.name() + "|classical");
  const Alphabet& A = limit->alphabet();
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = i + 1; j < A.size(); ++j) {
      Word xy{static_cast<char>(i), static_cast<char>(j)}, yx{static_cast<char>(j), static_cast<char>(i)};
      if (!limit->equal(NCPoly::word(xy), NCPoly::word(yx))) report.noncommuting.push_back(A[i].name + A[j].name);
    }
  return report;
}

}  // namespace braidkit
