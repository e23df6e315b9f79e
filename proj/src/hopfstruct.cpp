#include "braidkit/hopfstruct.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace braidkit {

std::string to_string(Mode m) { return m == Mode::plain ? "plain" : "braided"; }

Mode parse_mode(std::string_view text) {
  if (text == "plain") return Mode::plain;
  if (text == "braided") return Mode::braided;
  throw AlgebraError("unknown mode '" + std::string(text) + "'");
}

void StructureMaps::validate() const {
  if (!base) throw AlgebraError("structure '" + name + "' has no presentation");
  std::size_t n = base->alphabet().size();
  auto need = [&](std::size_t got, std::size_t want, const char* what) {
    if (got != want)
      throw AlgebraError("structure '" + name + "': " + what + " table has " + std::to_string(got) +
                         " entries, expected " + std::to_string(want));
  };
  need(delta.size(), n, "coproduct");
  need(counit.size(), n, "counit");
  need(antipode.size(), n, "antipode");
  if (star) need(star->size(), n, "star");
  for (const auto& t : delta)
    if (t.arity() != 2) throw AlgebraError("structure '" + name + "': coproduct images must have two legs");
  if (mode == Mode::braided && !braiding)
    throw AlgebraError("structure '" + name + "': braided mode requires a braiding table");
  if (mode == Mode::plain && braiding)
    throw AlgebraError("structure '" + name + "': plain mode uses the flip and takes no braiding table");
  if (braiding) {
    need(braiding->size(), n * n, "braiding");
    for (const auto& t : *braiding)
      if (t.arity() != 2) throw AlgebraError("structure '" + name + "': braiding images must have two legs");
  }
}

StructureMaps StructureMaps::substitute(const Bindings& b) const {
  StructureMaps out = *this;
  out.base = base->specialize(b);
  for (auto& t : out.delta) t = t.substitute(b);
  for (auto& c : out.counit) c = c.substitute(b);
  for (auto& x : out.antipode) x = x.substitute(b);
  if (out.star)
    for (auto& x : *out.star) x = x.substitute(b);
  if (out.braiding)
    for (auto& t : *out.braiding) t = t.substitute(b);
  return out;
}

void CheckReport::record(std::vector<std::string> inputs, Tensor residual, const std::vector<const Alphabet*>& legs) {
  ++failures;
  if (witnesses.size() >= kMaxWitnesses) return;
  Witness w;
  w.inputs = std::move(inputs);
  w.residual_text = residual.arity() == 0 ? residual.coefficient({}).to_string() : residual.to_string(legs);
  w.residual = std::move(residual);
  witnesses.push_back(std::move(w));
}

const std::vector<std::string>& hopf_axiom_names() {
  static const std::vector<std::string> names{
      "associativity", "unit",       "coassociativity", "counit",          "antipode-left",
      "antipode-right", "psi-m-left", "psi-m-right",     "psi-delta-left",  "psi-delta-right",
      "bialgebra",     "antipode-m", "delta-S",         "counit-m",        "yang-baxter"};
  return names;
}

const std::vector<std::string>& star_axiom_names() {
  static const std::vector<std::string> names{"star-delta", "star-S", "star-involution", "star-braiding"};
  return names;
}

const std::vector<std::string>& axiom_names() {
  static const std::vector<std::string> names = [] {
    auto out = hopf_axiom_names();
    for (const auto& s : star_axiom_names()) out.push_back(s);
    out.push_back("well-defined");
    return out;
  }();
  return names;
}

bool axiom_needs_braiding(const std::string& axiom) {
  return axiom == "psi-m-left" || axiom == "psi-m-right" || axiom == "psi-delta-left" ||
         axiom == "psi-delta-right" || axiom == "yang-baxter" || axiom == "star-braiding";
}

bool axiom_needs_star(const std::string& axiom) { return axiom.rfind("star-", 0) == 0; }

std::vector<std::string> applicable_axioms(const StructureMaps& s) {
  std::vector<std::string> out;
  for (const auto& a : axiom_names()) {
    if (axiom_needs_braiding(a) && s.mode != Mode::braided) continue;
    if (axiom_needs_star(a) && !s.star) continue;
    out.push_back(a);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Tensor as_tensor(const NCPoly& x) {
  Tensor t(1);
  for (const auto& [w, c] : x.terms()) t.add(Tensor::Key{w}, c);
  return t;
}

NCPoly as_poly(const Tensor& t) {
  if (t.arity() != 1) throw AlgebraError("expected a single-leg tensor");
  NCPoly out;
  for (const auto& [k, c] : t.terms()) out.add(k[0], c);
  return out;
}

Tensor scalar_tensor(const Scalar& c) {
  Tensor t(0);
  t.add(Tensor::Key{}, c);
  return t;
}

// out += c * (x ⊗ y)
void add_product(Tensor& out, const NCPoly& x, const NCPoly& y, const Scalar& c) {
  for (const auto& [u, a] : x.terms())
    for (const auto& [v, b] : y.terms()) out.add(Tensor::Key{u, v}, c * a * b);
}

// Replaces legs [leg, leg + width) of each term by the legs of f(term legs).
template <typename F>
Tensor map_legs(const Tensor& t, std::size_t leg, std::size_t width, std::size_t piece_arity, F f) {
  if (leg + width > t.arity()) throw AlgebraError("leg index out of range");
  Tensor out(t.arity() - width + piece_arity);
  for (const auto& [key, c] : t.terms()) {
    Tensor piece = f(key.begin() + static_cast<std::ptrdiff_t>(leg));
    for (const auto& [pk, pc] : piece.terms()) {
      Tensor::Key k;
      k.reserve(out.arity());
      k.insert(k.end(), key.begin(), key.begin() + static_cast<std::ptrdiff_t>(leg));
      k.insert(k.end(), pk.begin(), pk.end());
      k.insert(k.end(), key.begin() + static_cast<std::ptrdiff_t>(leg + width), key.end());
      out.add(std::move(k), c * pc);
    }
  }
  return out;
}

Tensor flip(const Tensor& t) { return t.flipped(); }

}  // namespace

struct Structure::Caches {
  std::mutex mutex;
  std::map<Word, Tensor> delta;
  std::map<Word, NCPoly> antipode;
  std::map<Word, NCPoly> star;
  std::map<std::pair<Word, Word>, Tensor> psi;
};

Structure::Structure(StructureMaps maps) : maps_(std::move(maps)), caches_(std::make_shared<Caches>()) {
  maps_.validate();
  for (auto& t : maps_.delta) t = normalize(t);
  for (auto& x : maps_.antipode) x = algebra().normal_form(x);
  if (maps_.star)
    for (auto& x : *maps_.star) x = algebra().normal_form(x);
  if (maps_.braiding)
    for (auto& t : *maps_.braiding) t = normalize(t);
}

Tensor Structure::parse_tensor(std::string_view text, std::size_t arity) const {
  return braidkit::parse_tensor(text, alphabet(), arity);
}

std::string Structure::str(const Tensor& t) const {
  if (t.arity() == 0) return t.coefficient({}).to_string();
  return t.to_string(alphabet());
}

Tensor Structure::normalize(const Tensor& t) const {
  Tensor out(t.arity());
  std::vector<NCPoly> legs(t.arity());
  for (const auto& [key, c] : t.terms()) {
    for (std::size_t i = 0; i < key.size(); ++i) legs[i] = algebra().normal_form(NCPoly::word(key[i]));
    out += Tensor::of(legs) * c;
  }
  return out;
}

const Tensor& Structure::braiding_entry(Letter x, Letter y) const {
  return (*maps_.braiding)[x * alphabet().size() + y];
}

Tensor Structure::psi_words(const Word& u, const Word& w) const {
  const auto& alg = algebra();
  if (maps_.mode == Mode::plain || u.empty() || w.empty()) {
    Tensor out(2);
    add_product(out, alg.normal_form(NCPoly::word(w)), alg.normal_form(NCPoly::word(u)), Scalar(1));
    return out;
  }
  if (u.size() == 1 && w.size() == 1) return braiding_entry(static_cast<Letter>(u[0]), static_cast<Letter>(w[0]));
  auto key = std::make_pair(u, w);
  {
    std::lock_guard lock(caches_->mutex);
    if (auto it = caches_->psi.find(key); it != caches_->psi.end()) return it->second;
  }
  Tensor out(2);
  if (u.size() > 1) {
    // ψ∘(m⊗id) = (id⊗m)(ψ⊗id)(id⊗ψ), splitting u = g·rest.
    Word g = u.substr(0, 1);
    Tensor inner = psi_words(u.substr(1), w);
    for (const auto& [k, c] : inner.terms()) {
      Tensor outer = psi_words(g, k[0]);
      for (const auto& [k2, d] : outer.terms())
        add_product(out, NCPoly::word(k2[0]), alg.normal_form(NCPoly::word(k2[1] + k[1])), c * d);
    }
  } else {
    // ψ∘(id⊗m) = (m⊗id)(id⊗ψ)(ψ⊗id), splitting w = h·rest.
    const Tensor& first = braiding_entry(static_cast<Letter>(u[0]), static_cast<Letter>(w[0]));
    Word rest = w.substr(1);
    for (const auto& [k, c] : first.terms()) {
      Tensor second = psi_words(k[1], rest);
      for (const auto& [k2, d] : second.terms())
        add_product(out, alg.normal_form(NCPoly::word(k[0] + k2[0])), NCPoly::word(k2[1]), c * d);
    }
  }
  std::lock_guard lock(caches_->mutex);
  return caches_->psi.emplace(std::move(key), std::move(out)).first->second;
}

Tensor Structure::tensor_mul(const Tensor& x, const Tensor& y) const {
  if (x.arity() != 2 || y.arity() != 2) throw AlgebraError("tensor_mul expects two-leg tensors");
  const auto& alg = algebra();
  Tensor out(2);
  for (const auto& [k1, c1] : x.terms())
    for (const auto& [k2, c2] : y.terms()) {
      Tensor crossed = psi_words(k1[1], k2[0]);
      for (const auto& [k, d] : crossed.terms())
        add_product(out, alg.normal_form(NCPoly::word(k1[0] + k[0])), alg.normal_form(NCPoly::word(k[1] + k2[1])),
                    c1 * c2 * d);
    }
  return out;
}

Tensor Structure::delta_word(const Word& w) const {
  if (w.empty()) return Tensor::unit(2);
  if (w.size() == 1) return maps_.delta.at(static_cast<Letter>(w[0]));
  {
    std::lock_guard lock(caches_->mutex);
    if (auto it = caches_->delta.find(w); it != caches_->delta.end()) return it->second;
  }
  Tensor out = tensor_mul(maps_.delta.at(static_cast<Letter>(w[0])), delta_word(w.substr(1)));
  std::lock_guard lock(caches_->mutex);
  return caches_->delta.emplace(w, std::move(out)).first->second;
}

Tensor Structure::delta(const NCPoly& x) const {
  Tensor out(2);
  for (const auto& [w, c] : x.terms()) out += delta_word(w) * c;
  return out;
}

Scalar Structure::counit(const NCPoly& x) const {
  Scalar out;
  for (const auto& [w, c] : x.terms()) {
    Scalar term = c;
    for (char g : w) term *= maps_.counit.at(static_cast<Letter>(g));
    out += term;
  }
  return out;
}

NCPoly Structure::antipode_word(const Word& w) const {
  if (w.empty()) return NCPoly(1);
  if (w.size() == 1) return maps_.antipode.at(static_cast<Letter>(w[0]));
  {
    std::lock_guard lock(caches_->mutex);
    if (auto it = caches_->antipode.find(w); it != caches_->antipode.end()) return it->second;
  }
  // S∘m = m∘ψ∘(S⊗S), splitting w = g·rest.
  NCPoly head = maps_.antipode.at(static_cast<Letter>(w[0]));
  NCPoly tail = antipode_word(w.substr(1));
  NCPoly out = as_poly(apply_m(psi(head, tail), 0));
  std::lock_guard lock(caches_->mutex);
  return caches_->antipode.emplace(w, std::move(out)).first->second;
}

NCPoly Structure::antipode(const NCPoly& x) const {
  NCPoly out;
  for (const auto& [w, c] : x.terms()) out += antipode_word(w) * c;
  return out;
}

NCPoly Structure::star(const NCPoly& x) const {
  if (!maps_.star) throw AlgebraError("structure '" + name() + "' has no star table");
  NCPoly out;
  for (const auto& [w, c] : x.terms()) {
    NCPoly image;
    bool cached = false;
    {
      std::lock_guard lock(caches_->mutex);
      if (auto it = caches_->star.find(w); it != caches_->star.end()) {
        image = it->second;
        cached = true;
      }
    }
    if (!cached) {
      image = NCPoly(1);
      for (auto it = w.rbegin(); it != w.rend(); ++it) image = multiply(image, (*maps_.star)[static_cast<Letter>(*it)]);
      std::lock_guard lock(caches_->mutex);
      caches_->star.emplace(w, image);
    }
    out += image * c;
  }
  return out;
}

Tensor Structure::psi(const NCPoly& x, const NCPoly& y) const {
  Tensor out(2);
  for (const auto& [u, a] : x.terms())
    for (const auto& [w, b] : y.terms()) out += psi_words(u, w) * (a * b);
  return out;
}

Tensor Structure::psi(const Tensor& xy) const { return apply_psi(xy, 0); }

Tensor Structure::apply_delta(const Tensor& t, std::size_t leg) const {
  return map_legs(t, leg, 1, 2, [&](auto it) { return delta_word(*it); });
}

Tensor Structure::apply_counit(const Tensor& t, std::size_t leg) const {
  return map_legs(t, leg, 1, 0, [&](auto it) { return scalar_tensor(counit(NCPoly::word(*it))); });
}

Tensor Structure::apply_antipode(const Tensor& t, std::size_t leg) const {
  return map_legs(t, leg, 1, 1, [&](auto it) { return as_tensor(antipode_word(*it)); });
}

Tensor Structure::apply_star(const Tensor& t, std::size_t leg) const {
  return map_legs(t, leg, 1, 1, [&](auto it) { return as_tensor(star(NCPoly::word(*it))); });
}

Tensor Structure::apply_psi(const Tensor& t, std::size_t leg) const {
  return map_legs(t, leg, 2, 2, [&](auto it) { return psi_words(*it, *(it + 1)); });
}

Tensor Structure::apply_m(const Tensor& t, std::size_t leg) const {
  return map_legs(t, leg, 2, 1, [&](auto it) { return as_tensor(algebra().normal_form(NCPoly::word(*it + *(it + 1)))); });
}

std::optional<std::vector<Tensor>> Structure::psi_inverse_table() const {
  std::size_t n = alphabet().size();
  // Basis of the span: index 0 is the empty word, i+1 is generator i.
  std::size_t dim = (n + 1) * (n + 1);
  auto leg_index = [&](const Word& w) -> std::optional<std::size_t> {
    if (w.empty()) return 0;
    if (w.size() == 1) return static_cast<Letter>(w[0]) + 1;
    return std::nullopt;
  };
  auto leg_word = [&](std::size_t i) { return i == 0 ? Word{} : Word(1, static_cast<char>(i - 1)); };
  // Augmented matrix [M | I], where column j of M is ψ(basis_j).
  std::vector<std::vector<Scalar>> m(dim, std::vector<Scalar>(2 * dim));
  for (std::size_t j = 0; j < dim; ++j) {
    Tensor image = psi_words(leg_word(j / (n + 1)), leg_word(j % (n + 1)));
    for (const auto& [k, c] : image.terms()) {
      auto l = leg_index(k[0]);
      auto r = leg_index(k[1]);
      if (!l || !r) return std::nullopt;
      m[*l * (n + 1) + *r][j] = c;
    }
    m[j][dim + j] = Scalar(1);
  }
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t pivot = dim;
    for (std::size_t row = col; row < dim; ++row)
      if (m[row][col].is_unit()) {
        pivot = row;
        break;
      }
    if (pivot == dim) return std::nullopt;
    std::swap(m[col], m[pivot]);
    Scalar inv = m[col][col].unit_inverse();
    for (auto& e : m[col]) e *= inv;
    for (std::size_t row = 0; row < dim; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      Scalar f = m[row][col];
      for (std::size_t k = col; k < 2 * dim; ++k)
        if (!m[col][k].is_zero()) m[row][k] -= f * m[col][k];
    }
  }
  std::vector<Tensor> out;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t j = (x + 1) * (n + 1) + (y + 1);
      Tensor t(2);
      for (std::size_t row = 0; row < dim; ++row)
        if (!m[row][dim + j].is_zero()) t.add(Tensor::Key{leg_word(row / (n + 1)), leg_word(row % (n + 1))}, m[row][dim + j]);
      out.push_back(std::move(t));
    }
  return out;
}

Tensor tensor_mul(const Tensor& x, const Tensor& y, const Structure& s) { return s.tensor_mul(x, y); }
Tensor delta_extend(const NCPoly& x, const Structure& s) { return s.delta(x); }
Scalar counit_extend(const NCPoly& x, const Structure& s) { return s.counit(x); }
NCPoly antipode_extend(const NCPoly& x, const Structure& s) { return s.antipode(x); }
NCPoly star_extend(const NCPoly& x, const Structure& s) { return s.star(x); }
Tensor psi_extend(const NCPoly& x, const NCPoly& y, const Structure& s) { return s.psi(x, y); }

// ---------------------------------------------------------------------------

std::vector<std::vector<Word>> word_tuples(const Presentation& p, std::size_t arity, std::size_t max_len) {
  auto basis = p.basis_words(max_len);
  std::vector<std::vector<Word>> out{{}};
  for (std::size_t i = 0; i < arity; ++i) {
    std::vector<std::vector<Word>> next;
    for (const auto& t : out) {
      std::size_t used = 0;
      for (const auto& w : t) used += w.size();
      for (const auto& w : basis) {
        if (used + w.size() > max_len) continue;
        auto u = t;
        u.push_back(w);
        next.push_back(std::move(u));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::size_t axiom_arity(const std::string& axiom) {
  if (axiom == "associativity" || axiom == "psi-m-left" || axiom == "psi-m-right" || axiom == "yang-baxter") return 3;
  if (axiom == "psi-delta-left" || axiom == "psi-delta-right" || axiom == "bialgebra" || axiom == "antipode-m" ||
      axiom == "counit-m" || axiom == "star-braiding")
    return 2;
  return 1;
}

CheckReport check_axiom(const std::string& axiom, const Structure& s, std::size_t max_word_len,
                        const ResidualSink& sink) {
  if (std::find(axiom_names().begin(), axiom_names().end(), axiom) == axiom_names().end())
    throw AlgebraError("unknown axiom '" + axiom + "'");
  if (axiom_needs_braiding(axiom) && s.mode() != Mode::braided)
    throw AlgebraError("axiom '" + axiom + "' needs a braided structure; '" + s.name() + "' is plain");
  if (axiom_needs_star(axiom) && !s.has_star())
    throw AlgebraError("axiom '" + axiom + "' needs a star table; '" + s.name() + "' has none");

  CheckReport report;
  report.axiom = axiom;
  report.structure = s.name();
  report.word_length_bound = max_word_len;
  const auto& alg = s.algebra();
  const Alphabet* A = &s.alphabet();
  auto legs = std::vector<const Alphabet*>{A};
  auto word_text = [&](const Word& w) { return A->to_string(w); };
  auto poly = [](const Word& w) { return NCPoly::word(w); };
  auto check = [&](std::vector<std::string> inputs, const Tensor& residual) {
    ++report.cases;
    if (residual.is_zero()) return;
    if (sink) sink(inputs, residual);
    report.record(std::move(inputs), residual, legs);
  };
  auto check_poly = [&](std::vector<std::string> inputs, const NCPoly& residual) {
    check(std::move(inputs), as_tensor(alg.normal_form(residual)));
  };

  if (axiom == "well-defined") {
    report.word_length_bound = 0;
    report.notes.push_back("maps applied to lhs - rhs of every defining relation");
    for (const auto& rel : alg.all_relations()) {
      NCPoly diff = rel.lhs - rel.rhs;
      std::string label = rel.text;
      check({"delta", label}, s.delta(diff));
      check({"counit", label}, scalar_tensor(s.counit(diff)));
      check_poly({"antipode", label}, s.antipode(diff));
      if (s.has_star()) check_poly({"star", label}, s.star(diff));
      if (s.mode() == Mode::braided) {
        for (std::size_t g = 0; g < A->size(); ++g) {
          NCPoly gen = s.generator(static_cast<Letter>(g));
          check({"psi", label, (*A)[g].name}, s.psi(diff, gen));
          check({"psi", (*A)[g].name, label}, s.psi(gen, diff));
        }
      }
    }
    return report;
  }

  auto tuples = word_tuples(alg, axiom_arity(axiom), max_word_len);
  for (const auto& t : tuples) {
    std::vector<std::string> inputs;
    for (const auto& w : t) inputs.push_back(word_text(w));
    if (axiom == "associativity") {
      NCPoly x = poly(t[0]), y = poly(t[1]), z = poly(t[2]);
      check_poly(inputs, s.multiply(s.multiply(x, y), z) - s.multiply(x, s.multiply(y, z)));
    } else if (axiom == "unit") {
      NCPoly x = poly(t[0]);
      check_poly({inputs[0], "x*1"}, s.multiply(x, NCPoly(1)) - alg.normal_form(x));
      check_poly({inputs[0], "1*x"}, s.multiply(NCPoly(1), x) - alg.normal_form(x));
    } else if (axiom == "coassociativity") {
      Tensor d = s.delta(poly(t[0]));
      check(inputs, s.apply_delta(d, 0) - s.apply_delta(d, 1));
    } else if (axiom == "counit") {
      Tensor d = s.delta(poly(t[0]));
      Tensor x = as_tensor(alg.normal_form(poly(t[0])));
      check({inputs[0], "(counit@id)"}, s.apply_counit(d, 0) - x);
      check({inputs[0], "(id@counit)"}, s.apply_counit(d, 1) - x);
    } else if (axiom == "antipode-left" || axiom == "antipode-right") {
      Tensor d = s.delta(poly(t[0]));
      Tensor lhs = s.apply_m(s.apply_antipode(d, axiom == "antipode-left" ? 0 : 1), 0);
      check(inputs, lhs - as_tensor(NCPoly(s.counit(poly(t[0])))));
    } else if (axiom == "psi-m-left") {
      Tensor xyz = Tensor::word({t[0], t[1], t[2]});
      Tensor lhs = s.psi(s.multiply(poly(t[0]), poly(t[1])), alg.normal_form(poly(t[2])));
      Tensor rhs = s.apply_m(s.apply_psi(s.apply_psi(xyz, 1), 0), 1);
      check(inputs, lhs - rhs);
    } else if (axiom == "psi-m-right") {
      Tensor xyz = Tensor::word({t[0], t[1], t[2]});
      Tensor lhs = s.psi(alg.normal_form(poly(t[0])), s.multiply(poly(t[1]), poly(t[2])));
      Tensor rhs = s.apply_m(s.apply_psi(s.apply_psi(xyz, 0), 1), 0);
      check(inputs, lhs - rhs);
    } else if (axiom == "psi-delta-left") {
      Tensor xy = Tensor::word({t[0], t[1]});
      Tensor lhs = s.apply_delta(s.psi(xy), 1);
      Tensor rhs = s.apply_psi(s.apply_psi(s.apply_delta(xy, 0), 1), 0);
      check(inputs, lhs - rhs);
    } else if (axiom == "psi-delta-right") {
      Tensor xy = Tensor::word({t[0], t[1]});
      Tensor lhs = s.apply_delta(s.psi(xy), 0);
      Tensor rhs = s.apply_psi(s.apply_psi(s.apply_delta(xy, 1), 0), 1);
      check(inputs, lhs - rhs);
    } else if (axiom == "bialgebra") {
      Tensor lhs = s.delta(s.multiply(poly(t[0]), poly(t[1])));
      Tensor rhs = s.tensor_mul(s.delta(poly(t[0])), s.delta(poly(t[1])));
      check(inputs, lhs - rhs);
    } else if (axiom == "antipode-m") {
      NCPoly lhs = s.antipode(s.multiply(poly(t[0]), poly(t[1])));
      NCPoly rhs = as_poly(s.apply_m(s.psi(s.antipode(poly(t[0])), s.antipode(poly(t[1]))), 0));
      check_poly(inputs, lhs - rhs);
    } else if (axiom == "delta-S") {
      Tensor lhs = s.delta(s.antipode(poly(t[0])));
      Tensor rhs = s.apply_antipode(s.apply_antipode(s.psi(s.delta(poly(t[0]))), 0), 1);
      check(inputs, lhs - rhs);
    } else if (axiom == "counit-m") {
      Scalar lhs = s.counit(s.multiply(poly(t[0]), poly(t[1])));
      Scalar rhs = s.counit(poly(t[0])) * s.counit(poly(t[1]));
      check(inputs, scalar_tensor(lhs - rhs));
    } else if (axiom == "yang-baxter") {
      Tensor xyz = Tensor::word({t[0], t[1], t[2]});
      Tensor lhs = s.apply_psi(s.apply_psi(s.apply_psi(xyz, 0), 1), 0);
      Tensor rhs = s.apply_psi(s.apply_psi(s.apply_psi(xyz, 1), 0), 1);
      check(inputs, lhs - rhs);
    } else if (axiom == "star-delta") {
      Tensor lhs = s.delta(s.star(poly(t[0])));
      Tensor rhs = flip(s.apply_star(s.apply_star(s.delta(poly(t[0])), 0), 1));
      check(inputs, lhs - rhs);
    } else if (axiom == "star-S") {
      check_poly(inputs, s.antipode(s.star(poly(t[0]))) - s.star(s.antipode(poly(t[0]))));
    } else if (axiom == "star-involution") {
      check_poly({inputs[0], "x**"}, s.star(s.star(poly(t[0]))) - poly(t[0]));
    } else if (axiom == "star-braiding") {
      // ψ∘τ = τ∘ψ with τ(x⊗y) = y*⊗x*.
      Tensor xy = Tensor::word({t[0], t[1]});
      Tensor tau = flip(s.apply_star(s.apply_star(xy, 0), 1));
      Tensor lhs = s.psi(tau);
      Tensor rhs = flip(s.apply_star(s.apply_star(s.psi(xy), 0), 1));
      check(inputs, lhs - rhs);
    }
  }
  if (axiom == "star-involution") {
    // Anti-multiplicativity on pairs: (xy)* = y* x*.
    for (const auto& t : word_tuples(alg, 2, max_word_len)) {
      NCPoly lhs = s.star(s.multiply(NCPoly::word(t[0]), NCPoly::word(t[1])));
      NCPoly rhs = s.multiply(s.star(NCPoly::word(t[1])), s.star(NCPoly::word(t[0])));
      check_poly({word_text(t[0]), word_text(t[1]), "(xy)*"}, lhs - rhs);
    }
  }
  return report;
}

CheckReport check_bosonic_central(const NCPoly& t, const Structure& s) {
  if (s.mode() != Mode::braided) throw AlgebraError("bosonic check needs a braided structure");
  CheckReport report;
  report.axiom = "bosonic-central";
  report.structure = s.name();
  report.word_length_bound = 1;
  const Alphabet* A = &s.alphabet();
  std::vector<const Alphabet*> legs{A};
  NCPoly tn = s.algebra().normal_form(t);
  std::string label = s.str(tn);
  for (std::size_t g = 0; g < A->size(); ++g) {
    NCPoly gen = s.generator(static_cast<Letter>(g));
    const auto& name = (*A)[g].name;
    report.cases += 3;
    NCPoly comm = s.multiply(tn, gen) - s.multiply(gen, tn);
    if (!comm.is_zero()) report.record({label, name, "commutator"}, as_tensor(comm), legs);
    Tensor left = s.psi(tn, gen) - Tensor::of(gen, tn);
    if (!left.is_zero()) report.record({label, name, "psi(t@g)"}, left, legs);
    Tensor right = s.psi(gen, tn) - Tensor::of(tn, gen);
    if (!right.is_zero()) report.record({name, label, "psi(g@t)"}, right, legs);
  }
  return report;
}

StructureMaps transport(const StructureMaps& s, const BasisMap& m, std::string new_name) {
  if (!(s.base->alphabet() == m.from->alphabet()))
    throw AlgebraError("basis map '" + m.name + "' does not start at '" + s.base->name() + "'");
  Structure src(s);
  const Presentation& to = *m.to;
  StructureMaps out;
  out.name = std::move(new_name);
  out.base = m.to;
  out.mode = s.mode;
  std::size_t n = to.alphabet().size();
  for (std::size_t g = 0; g < n; ++g) {
    const NCPoly& pre = m.backward[g];
    out.delta.push_back(substitute_generators(src.delta(pre), m.forward, to));
    out.counit.push_back(src.counit(pre));
    out.antipode.push_back(substitute_generators(src.antipode(pre), m.forward, to));
  }
  if (s.star) {
    out.star.emplace();
    for (std::size_t g = 0; g < n; ++g) out.star->push_back(substitute_generators(src.star(m.backward[g]), m.forward, to));
  }
  if (s.braiding) {
    out.braiding.emplace();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        out.braiding->push_back(substitute_generators(src.psi(m.backward[x], m.backward[y]), m.forward, to));
  }
  return out;
}

Tensor star_flip(const Tensor& t, const std::vector<NCPoly>& star, const Presentation& p) {
  auto star_word = [&](const Word& w) {
    NCPoly out(1);
    for (auto it = w.rbegin(); it != w.rend(); ++it) out = p.multiply(out, star.at(static_cast<Letter>(*it)));
    return out;
  };
  Tensor out(2);
  for (const auto& [k, c] : t.terms()) add_product(out, star_word(k[1]), star_word(k[0]), c);
  return out;
}

std::vector<Tensor> complete_braiding(const Presentation& p, const std::map<std::pair<Letter, Letter>, Tensor>& known,
                                      const std::vector<NCPoly>& star, const std::vector<Letter>& trivial) {
  std::size_t n = p.alphabet().size();
  auto is_trivial = [&](Letter g) { return std::find(trivial.begin(), trivial.end(), g) != trivial.end(); };
  auto gen = [](Letter g) { return Word(1, static_cast<char>(g)); };
  std::vector<Tensor> out(n * n, Tensor(2));
  std::vector<bool> have(n * n, false);
  for (const auto& [xy, t] : known) {
    out[xy.first * n + xy.second] = t;
    have[xy.first * n + xy.second] = true;
  }
  for (Letter x = 0; x < n; ++x)
    for (Letter y = 0; y < n; ++y) {
      if (have[x * n + y] || !(is_trivial(x) || is_trivial(y))) continue;
      out[x * n + y] = Tensor::word({gen(y), gen(x)});
      have[x * n + y] = true;
    }
  for (Letter x = 0; x < n; ++x)
    for (Letter y = 0; y < n; ++y) {
      if (have[x * n + y]) continue;
      Tensor pre = star_flip(Tensor::word({gen(x), gen(y)}), star, p);
      Tensor image(2);
      for (const auto& [k, c] : pre.terms()) {
        if (k[0].size() != 1 || k[1].size() != 1 || !have[static_cast<Letter>(k[0][0]) * n + static_cast<Letter>(k[1][0])])
          throw AlgebraError("cannot complete braiding entry " + p.alphabet()[x].name + "@" + p.alphabet()[y].name +
                             " from the star structure");
        image += out[static_cast<Letter>(k[0][0]) * n + static_cast<Letter>(k[1][0])] * c;
      }
      out[x * n + y] = star_flip(image, star, p);
      have[x * n + y] = true;
    }
  return out;
}

std::vector<std::string> compare_tables(const StructureMaps& x, const StructureMaps& y) {
  std::vector<std::string> diffs;
  const Alphabet& A = x.base->alphabet();
  if (!A.same_names(y.base->alphabet())) return {"alphabets differ"};
  const Presentation& P = *x.base;
  Structure sx(x), sy(y);
  std::size_t n = A.size();
  for (std::size_t g = 0; g < n; ++g) {
    const auto& name = A[g].name;
    NCPoly gen = sx.generator(static_cast<Letter>(g));
    if (sx.delta(gen) != sy.delta(gen))
      diffs.push_back("delta(" + name + "): " + sx.str(sx.delta(gen)) + " vs " + sy.str(sy.delta(gen)));
    if (sx.counit(gen) != sy.counit(gen))
      diffs.push_back("counit(" + name + "): " + sx.counit(gen).to_string() + " vs " + sy.counit(gen).to_string());
    if (!P.equal(sx.antipode(gen), sy.antipode(gen)))
      diffs.push_back("antipode(" + name + "): " + sx.str(sx.antipode(gen)) + " vs " + sy.str(sy.antipode(gen)));
    if (x.star.has_value() != y.star.has_value()) {
      if (g == 0) diffs.push_back("star table present on one side only");
    } else if (x.star && !P.equal(sx.star(gen), sy.star(gen))) {
      diffs.push_back("star(" + name + "): " + sx.str(sx.star(gen)) + " vs " + sy.str(sy.star(gen)));
    }
  }
  if (x.mode != y.mode) diffs.push_back("modes differ");
  if (x.braiding && y.braiding) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        NCPoly u = sx.generator(static_cast<Letter>(a)), v = sx.generator(static_cast<Letter>(b));
        Tensor l = sx.psi(u, v), r = sy.psi(u, v);
        if (l != r) diffs.push_back("psi(" + A[a].name + "@" + A[b].name + "): " + sx.str(l) + " vs " + sy.str(r));
      }
  }
  return diffs;
}

}  // namespace braidkit
