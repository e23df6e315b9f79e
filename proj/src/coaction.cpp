#include "braidkit/coaction.hpp"

#include <algorithm>

namespace braidkit {

namespace {

using Matrix = std::vector<std::vector<Scalar>>;

Tensor as_tensor(const NCPoly& x) {
  Tensor t(1);
  for (const auto& [w, c] : x.terms()) t.add(Tensor::Key{w}, c);
  return t;
}

NCPoly gen_poly(Letter g) { return NCPoly::word(Word(1, static_cast<char>(g))); }

PresentationPtr specialize_shared(const PresentationPtr& p, const Bindings& b) {
  return p->specialize(b, p->name());
}

// Gauss-Jordan on [m | I] with unit pivots only; nullopt if some column has none.
std::optional<Matrix> unit_pivot_inverse(Matrix m) {
  std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) return std::nullopt;
    m[i].resize(2 * n);
    m[i][n + i] = Scalar(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t row = col; row < n; ++row)
      if (m[row][col].is_unit()) {
        pivot = row;
        break;
      }
    if (pivot == n) return std::nullopt;
    std::swap(m[col], m[pivot]);
    Scalar inv = m[col][col].unit_inverse();
    for (auto& e : m[col]) e *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      Scalar f = m[row][col];
      for (std::size_t k = col; k < 2 * n; ++k)
        if (!m[col][k].is_zero()) m[row][k] -= f * m[col][k];
    }
  }
  Matrix out(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = m[i][n + j];
  return out;
}

// Rank over Q after substituting a rational point; nullopt if an entry stays symbolic.
std::optional<std::size_t> rank_at(const Matrix& m, const Bindings& point) {
  std::vector<std::vector<Rational>> a;
  for (const auto& row : m) {
    std::vector<Rational> r;
    for (const auto& e : row) {
      Scalar v = e.substitute(point);
      if (!v.is_constant()) return std::nullopt;
      r.push_back(v.constant());
    }
    a.push_back(std::move(r));
  }
  std::size_t rank = 0;
  std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t col = 0; col < cols && rank < a.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[rank], a[pivot]);
    for (std::size_t row = rank + 1; row < a.size(); ++row) {
      if (a[row][col] == 0) continue;
      Rational f = a[row][col] / a[rank][col];
      for (std::size_t k = col; k < cols; ++k) a[row][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

CoactionMap CoactionMap::substitute(const Bindings& b) const {
  CoactionMap out = *this;
  out.coacted = specialize_shared(coacted, b);
  out.coacting = coacting == coacted ? out.coacted : specialize_shared(coacting, b);
  for (auto& t : out.table) t = t.substitute(b);
  if (source) {
    StructureMaps m = source->maps().substitute(b);
    m.base = out.coacting;
    out.source = std::make_shared<const Structure>(std::move(m));
  }
  return out;
}

Tensor leg_product(const Tensor& x, const Tensor& y, const std::vector<const Presentation*>& legs) {
  if (x.arity() != y.arity() || legs.size() != x.arity()) throw AlgebraError("leg_product: arity mismatch");
  Tensor out(x.arity());
  std::vector<NCPoly> parts(x.arity());
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      bool zero = false;
      for (std::size_t i = 0; i < parts.size() && !zero; ++i) {
        parts[i] = legs[i]->multiply(NCPoly::word(kx[i]), NCPoly::word(ky[i]));
        zero = parts[i].is_zero();
      }
      if (zero) continue;
      out += Tensor::of(parts) * (cx * cy);
    }
  return out;
}

Tensor adjoint_apply(const NCPoly& x, const Structure& s) {
  if (s.mode() != Mode::plain)
    throw AlgebraError("adjoint coaction is only defined here for plain structures; '" + s.name() + "' is braided");
  Tensor d2 = s.apply_delta(s.delta(x), 0);
  Tensor out(2);
  for (const auto& [k, c] : d2.terms()) {
    NCPoly right = s.multiply(s.antipode(NCPoly::word(k[0])), NCPoly::word(k[2]));
    out += Tensor::of(NCPoly::word(k[1]), right) * c;
  }
  return out;
}

CoactionMap adjoint_coaction(StructurePtr s, std::string name) {
  CoactionMap beta;
  beta.name = name.empty() ? "adjoint(" + s->name() + ")" : std::move(name);
  beta.coacted = s->maps().base;
  beta.coacting = s->maps().base;
  for (std::size_t g = 0; g < s->alphabet().size(); ++g)
    beta.table.push_back(adjoint_apply(gen_poly(static_cast<Letter>(g)), *s));
  beta.source = std::move(s);
  return beta;
}

CoactionMap trivial_coaction(PresentationPtr coacted, PresentationPtr coacting) {
  CoactionMap beta;
  beta.name = "trivial";
  beta.coacted = std::move(coacted);
  beta.coacting = std::move(coacting);
  for (std::size_t g = 0; g < beta.coacted->alphabet().size(); ++g)
    beta.table.push_back(Tensor::of(gen_poly(static_cast<Letter>(g)), NCPoly(1)));
  return beta;
}

CoactionMap coaction_from_text(std::string name, PresentationPtr coacted, PresentationPtr coacting,
                               const std::vector<std::pair<std::string, std::string>>& entries) {
  CoactionMap beta;
  beta.name = std::move(name);
  beta.coacted = std::move(coacted);
  beta.coacting = std::move(coacting);
  const Alphabet& h = beta.coacted->alphabet();
  std::vector<std::optional<Tensor>> table(h.size());
  for (const auto& [g, text] : entries) {
    auto i = h.find(g);
    if (!i) throw AlgebraError(beta.name + ": coaction names unknown generator " + g);
    Tensor raw = parse_tensor(text, beta.legs());
    Tensor t(2);
    for (const auto& [k, c] : raw.terms())
      t += Tensor::of(beta.coacted->normal_form(NCPoly::word(k[0])), beta.coacting->normal_form(NCPoly::word(k[1]))) * c;
    table[*i] = std::move(t);
  }
  for (std::size_t g = 0; g < h.size(); ++g) {
    if (!table[g]) throw AlgebraError(beta.name + ": coaction has no entry for generator " + h[g].name);
    beta.table.push_back(std::move(*table[g]));
  }
  return beta;
}

Tensor coaction_extend(const NCPoly& x, const CoactionMap& beta, const Presentation& coacted_mult) {
  if (!coacted_mult.alphabet().same_names(beta.coacted->alphabet()))
    throw AlgebraError("coacted multiplication '" + coacted_mult.name() + "' does not share the generators of '" +
                       beta.coacted->name() + "'");
  std::vector<const Presentation*> legs{&coacted_mult, beta.coacting.get()};
  Tensor out(2);
  for (const auto& [w, c] : x.terms()) {
    Tensor acc = Tensor::unit(2);
    for (char g : w) acc = leg_product(acc, beta.table.at(static_cast<Letter>(g)), legs);
    out += acc * c;
  }
  return out;
}

Tensor coaction_apply(const NCPoly& x, const CoactionMap& beta) {
  if (beta.source) return adjoint_apply(x, *beta.source);
  return coaction_extend(x, beta, *beta.coacted);
}

CheckReport check_comodule(const CoactionMap& beta, const Structure& coacting, std::size_t max_word_len) {
  if (!coacting.alphabet().same_names(beta.coacting->alphabet()))
    throw AlgebraError("structure '" + coacting.name() + "' does not act on the right legs of '" + beta.name + "'");
  CheckReport report;
  report.axiom = "comodule";
  report.structure = beta.name;
  report.word_length_bound = max_word_len;
  if (beta.source) report.notes.push_back("beta on words: adjoint formula");
  else report.notes.push_back("beta on words: multiplicative extension in " + beta.coacted->name());
  const Alphabet* H = &beta.coacted->alphabet();
  const Alphabet* A = &beta.coacting->alphabet();
  for (const auto& u : beta.coacted->basis_words(max_word_len)) {
    NCPoly x = NCPoly::word(u);
    std::string label = H->to_string(u);
    Tensor b = coaction_apply(x, beta);
    Tensor twice(3);
    for (const auto& [k, c] : b.terms()) {
      Tensor inner = coaction_apply(NCPoly::word(k[0]), beta);
      for (const auto& [ik, ic] : inner.terms()) twice.add(Tensor::Key{ik[0], ik[1], k[1]}, c * ic);
    }
    Tensor diff = twice - coacting.apply_delta(b, 1);
    ++report.cases;
    if (!diff.is_zero()) report.record({label, "(beta@id)beta - (id@delta)beta"}, diff, {H, A, A});
    Tensor counit = coacting.apply_counit(b, 1) - as_tensor(beta.coacted->normal_form(x));
    ++report.cases;
    if (!counit.is_zero()) report.record({label, "(id@eps)beta - id"}, counit, {H});
  }
  return report;
}

CheckReport check_comodule_algebra(const CoactionMap& beta, const Presentation& coacted_mult, std::size_t max_word_len) {
  CheckReport report;
  report.axiom = "comodule-algebra";
  report.structure = beta.name;
  report.word_length_bound = max_word_len;
  report.notes.push_back("coacted multiplication: " + coacted_mult.name());
  std::vector<const Presentation*> legs{&coacted_mult, beta.coacting.get()};
  std::vector<const Alphabet*> alphabets{&coacted_mult.alphabet(), &beta.coacting->alphabet()};
  const Alphabet& H = coacted_mult.alphabet();
  for (const auto& t : word_tuples(coacted_mult, 2, max_word_len)) {
    if (t[0].empty() || t[1].empty()) continue;
    NCPoly u = NCPoly::word(t[0]), w = NCPoly::word(t[1]);
    Tensor lhs = coaction_extend(coacted_mult.multiply(u, w), beta, coacted_mult);
    Tensor rhs = leg_product(coaction_extend(u, beta, coacted_mult), coaction_extend(w, beta, coacted_mult), legs);
    ++report.cases;
    Tensor diff = lhs - rhs;
    if (!diff.is_zero()) report.record({H.to_string(t[0]), H.to_string(t[1])}, diff, alphabets);
  }
  for (const auto& rel : coacted_mult.all_relations()) {
    ++report.cases;
    Tensor diff = coaction_extend(rel.lhs - rel.rhs, beta, coacted_mult);
    if (!diff.is_zero()) report.record({"relation", rel.text}, diff, alphabets);
  }
  return report;
}

CheckReport check_psi_naturality(const CoactionMap& beta, const Structure& s) {
  if (s.mode() != Mode::braided) throw AlgebraError("psi-naturality needs a braided structure");
  if (!s.alphabet().same_names(beta.coacted->alphabet()))
    throw AlgebraError("structure '" + s.name() + "' does not share the generators of '" + beta.name + "'");
  CheckReport report;
  report.axiom = "psi-naturality";
  report.structure = beta.name + " / " + s.name();
  report.word_length_bound = 2;
  const Presentation& B = s.algebra();
  const Presentation& A = *beta.coacting;
  const Alphabet* BA = &s.alphabet();
  std::vector<const Alphabet*> alphabets{BA, BA, &A.alphabet()};
  // β(u⊗v) = Σ u₍₀₎⊗v₍₀₎⊗u₍₁₎v₍₁₎
  auto coact_pair = [&](const Tensor& uv) {
    Tensor out(3);
    for (const auto& [k, c] : uv.terms()) {
      Tensor bu = coaction_extend(NCPoly::word(k[0]), beta, B);
      Tensor bv = coaction_extend(NCPoly::word(k[1]), beta, B);
      for (const auto& [ku, cu] : bu.terms())
        for (const auto& [kv, cv] : bv.terms()) {
          NCPoly right = A.multiply(NCPoly::word(ku[1]), NCPoly::word(kv[1]));
          for (const auto& [w, cw] : right.terms()) out.add(Tensor::Key{ku[0], kv[0], w}, c * cu * cv * cw);
        }
    }
    return out;
  };
  std::size_t n = BA->size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Tensor xy = Tensor::of(gen_poly(static_cast<Letter>(x)), gen_poly(static_cast<Letter>(y)));
      Tensor lhs = s.apply_psi(coact_pair(xy), 0);
      Tensor rhs = coact_pair(s.psi(xy));
      ++report.cases;
      Tensor diff = lhs - rhs;
      if (!diff.is_zero()) report.record({(*BA)[x].name, (*BA)[y].name}, diff, alphabets);
    }
  return report;
}

MultiplicationTable MultiplicationTable::substitute(const Bindings& b) const {
  MultiplicationTable out = *this;
  out.host = specialize_shared(host, b);
  for (auto& x : out.table) x = out.host->normal_form(x.substitute(b));
  return out;
}

MultiplicationTable table_from_text(std::string name, PresentationPtr host, const Alphabet& target,
                                    const std::vector<std::pair<std::string, std::string>>& entries) {
  MultiplicationTable t;
  t.name = std::move(name);
  t.host = std::move(host);
  t.target_alphabet = target;
  std::size_t n = target.size();
  std::vector<std::optional<NCPoly>> table(n * n);
  for (const auto& [key, text] : entries) {
    auto at = key.find('@');
    auto x = at == std::string::npos ? std::nullopt : target.find(key.substr(0, at));
    auto y = at == std::string::npos ? std::nullopt : target.find(key.substr(at + 1));
    if (!x || !y) throw AlgebraError(t.name + ": bad product key '" + key + "'");
    table[*x * n + *y] = t.host->normal_form(parse_poly(text, t.host->alphabet()));
  }
  for (std::size_t i = 0; i < n * n; ++i) {
    if (!table[i]) throw AlgebraError(t.name + ": product table has no entry for " + target[i / n].name + "@" +
                                      target[i % n].name);
    t.table.push_back(std::move(*table[i]));
  }
  return t;
}

TransmutationReport verify_transmutation(const MultiplicationTable& mt, const Presentation& target) {
  const Presentation& host = *mt.host;
  const Alphabet& TA = target.alphabet();
  const Alphabet& HA = host.alphabet();
  if (!TA.same_names(mt.target_alphabet))
    throw AlgebraError("table '" + mt.name + "' is not written for the generators of '" + target.name() + "'");
  std::size_t n = TA.size();
  // target letter -> host letter, by name
  std::vector<Letter> to_host;
  for (const auto& g : TA.generators()) {
    auto h = HA.find(g.name);
    if (!h) throw AlgebraError("host '" + host.name() + "' has no generator " + g.name);
    to_host.push_back(*h);
  }

  TransmutationReport rep;
  for (CheckReport* r : {&rep.relations, &rep.associativity, &rep.bijectivity}) {
    r->structure = mt.name;
    r->word_length_bound = 2;
  }
  rep.relations.axiom = "transmutation-relations";
  rep.associativity.axiom = "transmutation-associativity";
  rep.bijectivity.axiom = "transmutation-bijectivity";
  std::vector<const Alphabet*> host_legs{&HA};
  std::vector<const Alphabet*> target_legs{&TA};

  // Φ on words of length ≤ 2: letters go to host letters, pairs through the table.
  auto phi_word = [&](const Word& w) -> std::optional<NCPoly> {
    if (w.empty()) return NCPoly(1);
    if (w.size() == 1) return gen_poly(to_host[static_cast<Letter>(w[0])]);
    if (w.size() == 2) return mt.table[static_cast<Letter>(w[0]) * n + static_cast<Letter>(w[1])];
    return std::nullopt;
  };
  auto phi = [&](const NCPoly& x) -> std::optional<NCPoly> {
    NCPoly out;
    for (const auto& [w, c] : x.terms()) {
      auto img = phi_word(w);
      if (!img) return std::nullopt;
      out += *img * c;
    }
    return host.normal_form(out);
  };

  // (i) relations
  for (const auto& rel : target.all_relations()) {
    ++rep.relations.cases;
    auto img = phi(rel.lhs - rel.rhs);
    if (!img) {
      rep.relations.notes.push_back("relation '" + rel.text + "' has words longer than 2; skipped");
      continue;
    }
    if (!img->is_zero()) rep.relations.record({rel.text}, as_tensor(*img), host_legs);
  }

  // (iii) Φ as a matrix from target normal words of length ≤ 2 to host ones.
  auto tw = target.basis_words(2);
  auto hw = host.basis_words(2);
  Matrix m(hw.size(), std::vector<Scalar>(tw.size()));
  bool closed = true;
  for (std::size_t j = 0; j < tw.size(); ++j) {
    NCPoly img = *phi(NCPoly::word(tw[j]));
    for (const auto& [w, c] : img.terms()) {
      auto it = std::find(hw.begin(), hw.end(), w);
      if (it == hw.end()) {
        closed = false;
        rep.bijectivity.record({TA.to_string(tw[j]), "image leaves degree <= 2"}, as_tensor(img), host_legs);
        break;
      }
      m[static_cast<std::size_t>(it - hw.begin())][j] = c;
    }
  }
  ++rep.bijectivity.cases;
  if (tw.size() != hw.size())
    rep.bijectivity.record({"dimension", std::to_string(tw.size()) + " target words vs " + std::to_string(hw.size()) +
                                             " host words"},
                           Tensor(0), host_legs);
  std::optional<Matrix> inv;
  if (closed && tw.size() == hw.size()) {
    inv = unit_pivot_inverse(m);
    if (inv) {
      rep.bijectivity.notes.push_back("inverse found symbolically with unit pivots");
    } else {
      rep.bijectivity.notes.push_back("no unit-pivot inverse; rank checked at rational points");
      for (const char* pt : {"q=3,r=2", "q=5,r=7", "q=7/2,r=5/3"}) {
        ++rep.bijectivity.cases;
        Bindings b;
        std::string text(pt);
        for (std::size_t pos = 0; pos < text.size();) {
          auto comma = text.find(',', pos);
          b = parse_binding(text.substr(pos, comma - pos), b);
          pos = comma == std::string::npos ? text.size() : comma + 1;
        }
        auto rank = rank_at(m, b);
        if (!rank || *rank != tw.size())
          rep.bijectivity.record({"rank", pt, rank ? std::to_string(*rank) : "symbolic"}, Tensor(0), host_legs);
      }
    }
  }

  // (ii) associativity through the pullback Φ⁻¹
  if (!inv) {
    rep.associativity.notes.push_back("not evaluated: no symbolic inverse of the degree <= 2 map");
    ++rep.associativity.cases;
    rep.associativity.record({"pullback unavailable"}, Tensor(0), host_legs);
    return rep;
  }
  auto pull = [&](const NCPoly& h) {
    NCPoly out;
    for (const auto& [w, c] : h.terms()) {
      auto row = static_cast<std::size_t>(std::find(hw.begin(), hw.end(), w) - hw.begin());
      for (std::size_t i = 0; i < tw.size(); ++i)
        if (!(*inv)[i][row].is_zero()) out.add(tw[i], c * (*inv)[i][row]);
    }
    return out;
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        NCPoly gx = gen_poly(static_cast<Letter>(x)), gy = gen_poly(static_cast<Letter>(y)),
               gz = gen_poly(static_cast<Letter>(z));
        NCPoly left = target.multiply(pull(mt.table[x * n + y]), gz);
        NCPoly right = target.multiply(gx, pull(mt.table[y * n + z]));
        ++rep.associativity.cases;
        NCPoly diff = left - right;
        if (!diff.is_zero())
          rep.associativity.record({TA[x].name, TA[y].name, TA[z].name}, as_tensor(diff), target_legs);
      }
  return rep;
}

}  // namespace braidkit
