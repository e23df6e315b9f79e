#include "braidkit/catalog.hpp"

#include <mutex>

namespace braidkit {

namespace {

const std::string& entry(const std::map<std::string, std::string>& m, const std::string& g, const std::string& what,
                         const std::string& table) {
  auto it = m.find(g);
  if (it == m.end()) throw AlgebraError(table + ": " + what + " has no entry for generator " + g);
  return it->second;
}

void reject_unknown(const std::map<std::string, std::string>& m, const Alphabet& a, const std::string& what,
                    const std::string& table) {
  for (const auto& [g, text] : m)
    if (!a.find(g)) throw AlgebraError(table + ": " + what + " names unknown generator " + g);
}

}  // namespace

StructureMaps build_structure(const StructureTable& t, PresentationPtr base) {
  const Alphabet& a = base->alphabet();
  StructureMaps s;
  s.name = t.name;
  s.base = base;
  s.mode = t.mode;
  reject_unknown(t.delta, a, "delta", t.name);
  reject_unknown(t.counit, a, "counit", t.name);
  reject_unknown(t.antipode, a, "antipode", t.name);
  reject_unknown(t.star, a, "star", t.name);
  for (const auto& gen : a.generators()) {
    s.delta.push_back(parse_tensor(entry(t.delta, gen.name, "delta", t.name), a, 2));
    s.counit.push_back(Scalar::parse(entry(t.counit, gen.name, "counit", t.name)));
    s.antipode.push_back(parse_poly(entry(t.antipode, gen.name, "antipode", t.name), a));
  }
  if (!t.star.empty()) {
    std::vector<NCPoly> star;
    for (const auto& gen : a.generators()) star.push_back(parse_poly(entry(t.star, gen.name, "star", t.name), a));
    s.star = std::move(star);
  }
  if (t.mode == Mode::braided) {
    std::map<std::pair<Letter, Letter>, Tensor> known;
    for (const auto& [key, text] : t.braiding) {
      auto at = key.find('@');
      if (at == std::string::npos) throw AlgebraError(t.name + ": braiding key '" + key + "' is not of the form x@y");
      auto x = a.find(key.substr(0, at));
      auto y = a.find(key.substr(at + 1));
      if (!x || !y) throw AlgebraError(t.name + ": braiding key '" + key + "' names an unknown generator");
      known[{*x, *y}] = parse_tensor(text, a, 2);
    }
    std::vector<Letter> trivial;
    for (const auto& g : t.flip_rows) trivial.push_back(a.index(g));
    std::size_t n = a.size();
    if (known.size() == n * n || s.star) {
      s.braiding = complete_braiding(*base, known, s.star ? *s.star : std::vector<NCPoly>{}, trivial);
    } else if (!trivial.empty()) {
      s.braiding = complete_braiding(*base, known, {}, trivial);
    } else {
      throw AlgebraError(t.name + ": braiding table is incomplete and there is no star to complete it");
    }
  } else if (!t.braiding.empty()) {
    throw AlgebraError(t.name + ": a plain structure cannot carry a braiding table");
  }
  s.validate();
  return s;
}

const std::vector<std::string>& builtin_structure_names() {
  static const std::vector<std::string> names{"ar_hopf",      "br_sol1_abcp", "br_sol1_abcd",
                                              "br_sol2_abcp", "br_sol2_abcd", "tqr_hopf"};
  return names;
}

StructureTable builtin_structure_table(const std::string& name) {
  StructureTable t;
  t.name = name;
  const std::map<std::string, std::string> matrix_delta{
      {"a", "a@a + b@c"}, {"b", "a@b + b@d"}, {"c", "c@a + d@c"}, {"d", "c@b + d@d"}};
  const std::map<std::string, std::string> matrix_counit{{"a", "1"}, {"b", "0"}, {"c", "0"}, {"d", "1"}};
  const std::map<std::string, std::string> p_counit{{"a", "1"}, {"b", "0"}, {"c", "0"}, {"p", "1 + q^-2"}};
  const std::map<std::string, std::string> swap_bc{{"a", "a"}, {"b", "c"}, {"c", "b"}, {"d", "d"}};
  const std::map<std::string, std::string> swap_bc_p{{"a", "a"}, {"b", "c"}, {"c", "b"}, {"p", "p"}};
  // second coproduct in the (a,b,c,d) generators, shared by sol2 and TQR
  const std::map<std::string, std::string> delta2{
      {"a", "a@a + q^4*c@b"},
      {"b", "(1 - q^2)*a@b + b@a + q^2*d@b"},
      {"c", "(1 - q^2)*c@a + a@c + q^2*c@d"},
      {"d", "(q^2 - 1)*a@a + (q^4 - q^2)*c@b + q^2*b@c + (1 - q^2)*a@d + (1 - q^2)*d@a + q^2*d@d"}};

  if (name == "ar_hopf") {
    t.presentation = "AR";
    t.delta = matrix_delta;
    t.counit = matrix_counit;
    t.antipode = {{"a", "d"}, {"b", "-q*b"}, {"c", "-q^-1*c"}, {"d", "a"}};
    t.star = {{"a", "d"}, {"b", "-q*b"}, {"c", "-q^-1*c"}, {"d", "a"}};
  } else if (name == "br_sol1_abcd") {
    t.presentation = "BR_abcd";
    t.mode = Mode::braided;
    t.delta = matrix_delta;
    t.counit = matrix_counit;
    t.antipode = {{"a", "q^2*d + (1 - q^2)*a"}, {"b", "-q^2*b"}, {"c", "-q^2*c"}, {"d", "a"}};
    t.star = swap_bc;
    t.braiding = {
        {"a@a", "a@a + (1 - q^2)*b@c"},
        {"a@b", "b@a"},
        {"a@c", "c@a + (1 - q^2)*(d - a)@c"},
        {"a@d", "d@a + (1 - q^-2)*b@c"},
        {"b@a", "a@b + (1 - q^2)*b@(d - a)"},
        {"b@b", "q^2*b@b"},
        {"b@c", "q^-2*c@b + q^-4*(1 + q^2)*(1 - q^2)^2*b@c - (1 - q^-2)*(d - a)@(d - a)"},
        {"b@d", "d@b + (1 - q^-2)*b@(d - a)"},
        {"c@a", "a@c"},
        {"c@b", "q^-2*b@c"},
        {"c@c", "q^2*c@c"},
        {"c@d", "d@c"},
        {"d@a", "a@d + (1 - q^-2)*b@c"},
        {"d@b", "b@d"},
        {"d@c", "c@d + (1 - q^-2)*(d - a)@c"},
        {"d@d", "d@d - q^-2*(1 - q^-2)*b@c"},
    };
  } else if (name == "br_sol1_abcp") {
    t.presentation = "BR_abcp";
    t.mode = Mode::braided;
    t.delta = {{"a", "a@a + b@c"},
               {"b", "a@b - q^-2*b@a + b@p"},
               {"c", "c@a - q^-2*a@c + p@c"},
               {"p", "(q^-2 + q^-4)*a@a + q^-2*b@c + c@b - q^-2*p@a - q^-2*a@p + p@p"}};
    t.counit = p_counit;
    t.antipode = {{"a", "q^2*(p - a)"}, {"b", "-q^2*b"}, {"c", "-q^2*c"}, {"p", "p"}};
    t.star = swap_bc_p;
    t.braiding = {
        {"a@a", "a@a + (1 - q^2)*b@c"},
        {"a@b", "b@a"},
        {"a@c", "c@a + (q^2 - q^-2)*a@c + (1 - q^2)*p@c"},
        {"b@b", "q^2*b@b"},
        {"c@b", "q^-2*b@c"},
        {"b@c", "(-1 - q^-2 + q^-4 + q^-6)*a@a + (q^2 - 1 - q^-2 + q^-4)*b@c + q^-2*c@b + (1 - q^-4)*a@p + "
                "(1 - q^-4)*p@a + (q^-2 - 1)*p@p"},
    };
    t.flip_rows = {"p"};
  } else if (name == "br_sol2_abcp") {
    t.presentation = "BR_abcp";
    t.mode = Mode::braided;
    t.delta = {{"a", "a@a + q^4*c@b"},
               {"b", "-q^2*a@b + b@a + q^2*p@b"},
               {"c", "-q^2*c@a + a@c + q^2*c@p"},
               {"p", "(1 + q^2)*a@a + q^2*b@c + q^4*c@b - q^2*p@a - q^2*a@p + q^2*p@p"}};
    t.counit = p_counit;
    t.antipode = {{"a", "-q^-2*a + p"}, {"b", "-q^-2*b"}, {"c", "-q^-2*c"}, {"p", "p"}};
    t.star = swap_bc_p;
    t.braiding = {
        {"a@a", "a@a + (q^4 - q^2)*c@b"},
        {"a@b", "b@a + (q^-2 - q^2)*a@b + (q^2 - 1)*p@b"},
        {"a@c", "c@a"},
        {"b@b", "q^-2*b@b"},
        {"b@c", "q^2*c@b"},
        {"c@b", "(q^2 + 1 - q^-2 - q^-4)*a@a + q^2*b@c + (q^4 - q^2 + q^-2 - 1)*c@b + (q^-2 - q^2)*a@p + "
                "(q^-2 - q^2)*p@a + (q^2 - 1)*p@p"},
    };
    t.flip_rows = {"p"};
  } else if (name == "br_sol2_abcd") {
    t.presentation = "BR_abcd";
    t.mode = Mode::braided;
    t.delta = delta2;
    t.counit = matrix_counit;
    t.antipode = {{"a", "d"}, {"b", "-q^-2*b"}, {"c", "-q^-2*c"}, {"d", "q^-2*a + (1 - q^-2)*d"}};
    t.star = swap_bc;
    t.braiding = {
        {"a@a", "a@a + (q^4 - q^2)*c@b"},
        {"a@b", "b@a + (1 - q^2)*a@b + (q^2 - 1)*d@b"},
        {"a@c", "c@a"},
        {"a@d", "d@a + (1 - q^2)*c@b"},
        {"b@a", "a@b"},
        {"b@b", "q^-2*b@b"},
        {"b@c", "q^2*c@b"},
        {"b@d", "d@b"},
        {"c@a", "a@c + (1 - q^2)*c@a + (q^2 - 1)*c@d"},
        {"c@b", "(q^2 - 1)*a@a + q^2*b@c + (q^4 - q^2 + q^-2 - 1)*c@b + (1 - q^2)*a@d + (1 - q^2)*d@a + "
                "(q^2 - 1)*d@d"},
        {"c@c", "q^-2*c@c"},
        {"c@d", "d@c + (1 - q^-2)*c@a + (q^-2 - 1)*c@d"},
        {"d@a", "a@d + (1 - q^2)*c@b"},
        {"d@b", "b@d + (1 - q^-2)*a@b + (q^-2 - 1)*d@b"},
        {"d@c", "c@d"},
        {"d@d", "d@d + (1 - q^-2)*c@b"},
    };
  } else if (name == "tqr_hopf") {
    t.presentation = "TQR";
    t.delta = delta2;
    t.counit = matrix_counit;
    t.antipode = {{"a", "(1 - q^2)*a + q^2*d"}, {"b", "-r*b"}, {"c", "-r^-1*c"}, {"d", "(2 - q^2)*a + (q^2 - 1)*d"}};
    t.star = {{"a", "(1 - q^2)*a + q^2*d"}, {"b", "-r^-1*c"}, {"c", "-r*b"}, {"d", "(2 - q^2)*a + (q^2 - 1)*d"}};
  } else {
    throw AlgebraError("unknown structure '" + name + "'");
  }
  return t;
}

StructurePtr builtin_structure(const std::string& name) {
  static std::mutex mutex;
  static std::map<std::string, StructurePtr> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(name); it != cache.end()) return it->second;
  }
  StructureTable t = builtin_structure_table(name);
  auto s = std::make_shared<const Structure>(build_structure(t, builtin(t.presentation)));
  std::lock_guard lock(mutex);
  return cache.emplace(name, s).first->second;
}

NCPoly quantum_trace(const std::string& structure_name) {
  StructurePtr s = builtin_structure(structure_name);
  if (s->alphabet().find("p")) return s->parse("p");
  return s->parse("q^-1*a + q*d");
}

}  // namespace braidkit

namespace braidkit {

const std::vector<std::string>& builtin_coaction_names() {
  static const std::vector<std::string> names{"adjoint_ar", "adjoint_tqr"};
  return names;
}

CoactionMap builtin_coaction(const std::string& name) {
  if (name == "adjoint_ar") return adjoint_coaction(builtin_structure("ar_hopf"), name);
  if (name == "adjoint_tqr") return adjoint_coaction(builtin_structure("tqr_hopf"), name);
  throw AlgebraError("unknown coaction '" + name + "'");
}

const std::vector<std::string>& builtin_table_names() {
  static const std::vector<std::string> names{"transmute_ar", "transmute_tqr"};
  return names;
}

MultiplicationTable builtin_table(const std::string& name) {
  const Alphabet& target = builtin("BR_abcd")->alphabet();
  if (name == "transmute_ar") {
    return table_from_text(name, builtin("AR"), target,
                           {{"a@a", "a*a"},
                            {"a@b", "a*b"},
                            {"a@c", "q*c*a"},
                            {"a@d", "a*d + (q - q^-1)*c*b"},
                            {"b@a", "q^2*a*b"},
                            {"b@b", "q*b*b"},
                            {"b@c", "q^-1*b*c + (1 - q^-2)*(d - a)*a"},
                            {"b@d", "q*b*d - (1 - q^-2)*a*b"},
                            {"c@a", "q^-1*c*a"},
                            {"c@b", "q^-1*c*b"},
                            {"c@c", "q*c*c"},
                            {"c@d", "q*c*d"},
                            {"d@a", "d*a"},
                            {"d@b", "d*b"},
                            {"d@c", "d*c - q^-1*(1 - q^-2)*c*a"},
                            {"d@d", "d*d - q^-1*(1 - q^-2)*c*b"}});
  }
  if (name == "transmute_tqr") {
    return table_from_text(name, builtin("TQR")->specialize(parse_binding("r=q"), "TQR|r=q"), target,
                           {{"a@a", "a*a"},
                            {"a@b", "q^-1*b*a"},
                            {"a@c", "a*c"},
                            {"a@d", "a*d + (q - q^3)*b*c"},
                            {"b@a", "q*b*a"},
                            {"b@b", "q^-1*b*b"},
                            {"b@c", "q*b*c"},
                            {"b@d", "q^-1*b*d + q*(1 - q^-2)^2*b*a"},
                            {"c@a", "q^-2*a*c"},
                            {"c@b", "q*c*b + (q^-2 - 1)*(d - a)*a"},
                            {"c@c", "q^-1*c*c"},
                            {"c@d", "q^-1*c*d + (1 - q^-2)*a*c"},
                            {"d@a", "d*a"},
                            {"d@b", "d*b + (q^-2 - q^-4)*a*b"},
                            {"d@c", "d*c"},
                            {"d@d", "d*d + (q - q^-1)*b*c"}});
  }
  throw AlgebraError("unknown multiplication table '" + name + "'");
}

}  // namespace braidkit
