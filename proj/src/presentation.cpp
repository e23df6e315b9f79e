#include "braidkit/ncalg.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace braidkit {

namespace {

// Rewrite rules under construction, with a non-memoized reducer.
class RuleSet {
 public:
  explicit RuleSet(const Alphabet& alphabet) : alphabet_(alphabet) {}

  std::vector<RewriteRule>& rules() { return rules_; }

  std::optional<std::pair<std::size_t, std::size_t>> find(const Word& w) const {
    for (std::size_t pos = 0; pos < w.size(); ++pos)
      for (std::size_t k = 0; k < rules_.size(); ++k) {
        const auto& lhs = rules_[k].lhs;
        if (w.compare(pos, lhs.size(), lhs) == 0) return std::make_pair(pos, k);
      }
    return std::nullopt;
  }

  NCPoly apply(const Word& w, std::size_t pos, std::size_t k) const {
    const auto& rule = rules_[k];
    NCPoly out;
    Word prefix = w.substr(0, pos);
    Word suffix = w.substr(pos + rule.lhs.size());
    for (const auto& [u, c] : rule.rhs.terms()) out.add(prefix + u + suffix, c);
    return out;
  }

  NCPoly reduce(const NCPoly& x) const {
    auto cmp = [this](const Word& a, const Word& b) { return alphabet_.compare(a, b) > 0; };
    std::map<Word, Scalar, decltype(cmp)> work(cmp);
    for (const auto& [w, c] : x.terms()) work.emplace(w, c);
    NCPoly out;
    std::uint64_t steps = 0;
    while (!work.empty()) {
      auto node = work.extract(work.begin());
      if (auto hit = find(node.key())) {
        if (++steps > Presentation::kDefaultStepBudget)
          throw RewriteBudgetExceeded("step budget exceeded while orienting relations");
        NCPoly replaced = apply(node.key(), hit->first, hit->second);
        for (const auto& [u, c] : replaced.terms()) {
          Scalar add = c * node.mapped();
          auto [it, inserted] = work.try_emplace(u, add);
          if (!inserted) {
            it->second += add;
            if (it->second.is_zero()) work.erase(it);
          }
        }
      } else {
        out.add(node.key(), node.mapped());
      }
    }
    return out;
  }

  Word leading_word(const NCPoly& x) const {
    const Word* best = nullptr;
    for (const auto& [w, c] : x.terms())
      if (!best || alphabet_.compare(w, *best) > 0) best = &w;
    return *best;
  }

 private:
  const Alphabet& alphabet_;
  std::vector<RewriteRule> rules_;
};

struct Pending {
  NCPoly poly;
  std::string origin;
};

// Turns pending relations into rules; every lhs is the order-largest word of
// its relation and right-hand sides stay fully reduced.
void orient(RuleSet& rs, std::vector<Pending> pending, const std::string& presentation_name) {
  while (!pending.empty()) {
    for (auto& p : pending) p.poly = rs.reduce(p.poly);
    std::erase_if(pending, [](const Pending& p) { return p.poly.is_zero(); });
    if (pending.empty()) break;
    auto chosen = pending.end();
    for (auto it = pending.begin(); it != pending.end(); ++it) {
      if (it->poly.coefficient(rs.leading_word(it->poly)).is_unit()) {
        chosen = it;
        break;
      }
    }
    if (chosen == pending.end()) {
      const auto& p = pending.front();
      throw AlgebraError("presentation '" + presentation_name + "': cannot orient relation (" + p.origin +
                         ") with non-unit leading coefficient");
    }
    Pending p = std::move(*chosen);
    pending.erase(chosen);
    Word lhs = rs.leading_word(p.poly);
    if (lhs.empty()) {
      throw AlgebraError("presentation '" + presentation_name + "' is inconsistent: relations imply 1 = 0 (" +
                         p.origin + ")");
    }
    Scalar inv = p.poly.coefficient(lhs).unit_inverse();
    NCPoly rhs;
    for (const auto& [w, c] : p.poly.terms())
      if (w != lhs) rhs.add(w, -(c * inv));
    // Rules whose lhs now contains the new lhs go back to pending.
    auto& rules = rs.rules();
    for (auto it = rules.begin(); it != rules.end();) {
      if (it->lhs.find(lhs) != Word::npos) {
        pending.push_back({NCPoly::word(it->lhs) - it->rhs, it->origin});
        it = rules.erase(it);
      } else {
        ++it;
      }
    }
    rules.push_back({lhs, rhs, p.origin});
    for (auto& r : rules) r.rhs = rs.reduce(r.rhs);
  }
}

// Word w reduced two ways: at the two rule occurrences of an overlap.
NCPoly overlap_difference(const RuleSet& rs, const Word& w, std::size_t pos1, std::size_t k1, std::size_t pos2,
                          std::size_t k2) {
  return rs.reduce(rs.apply(w, pos1, k1)) - rs.reduce(rs.apply(w, pos2, k2));
}

struct OverlapSite {
  Word word;
  std::size_t k1, k2, pos2;
};

std::vector<OverlapSite> overlap_sites(const std::vector<RewriteRule>& rules, std::size_t max_len) {
  std::vector<OverlapSite> out;
  for (std::size_t i = 0; i < rules.size(); ++i)
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const auto& l1 = rules[i].lhs;
      const auto& l2 = rules[j].lhs;
      // Proper suffix of l1 equal to a prefix of l2.
      for (std::size_t k = 1; k < l1.size() && k < l2.size() + 1; ++k) {
        if (k >= l2.size()) break;
        if (l1.compare(l1.size() - k, k, l2, 0, k) == 0) {
          Word w = l1 + l2.substr(k);
          if (w.size() <= max_len) out.push_back({w, i, j, l1.size() - k});
        }
      }
      // Two rules sharing a left-hand side.
      if (i < j && l1 == l2) out.push_back({l1, i, j, 0});
      // l2 strictly inside l1.
      if (i != j && l2.size() < l1.size()) {
        for (std::size_t pos = 0; pos + l2.size() <= l1.size(); ++pos)
          if (l1.compare(pos, l2.size(), l2) == 0) out.push_back({l1, i, j, pos});
      }
    }
  return out;
}

}  // namespace

bool ConfluenceReport::confluent() const {
  return counterexamples.empty() &&
         std::all_of(overlaps.begin(), overlaps.end(), [](const Overlap& o) { return o.resolves; });
}

PresentationPtr Presentation::build(PresentationSpec spec) {
  std::shared_ptr<Presentation> p(new Presentation());
  p->alphabet_ = Alphabet(spec.generators);
  for (const auto& name : spec.parameters)
    if (name != "q" && name != "r") throw AlgebraError("unknown parameter '" + name + "'");

  std::vector<Pending> pending;
  for (std::size_t i = 0; i < spec.relations.size(); ++i) {
    const auto& text = spec.relations[i];
    auto eq = text.find('=');
    if (eq == std::string::npos || text.find('=', eq + 1) != std::string::npos)
      throw AlgebraError("relation '" + text + "' must contain exactly one '='");
    Relation rel{parse_poly(text.substr(0, eq), p->alphabet_), parse_poly(text.substr(eq + 1), p->alphabet_), text};
    pending.push_back({rel.lhs - rel.rhs, "relation " + std::to_string(i + 1)});
    p->relations_.push_back(rel);
  }
  p->all_relations_ = p->relations_;
  for (const auto& name : spec.central) {
    Letter g = p->alphabet_.index(name);
    for (std::size_t x = 0; x < p->alphabet_.size(); ++x) {
      if (x == g) continue;
      Word gx{static_cast<char>(g), static_cast<char>(x)};
      Word xg{static_cast<char>(x), static_cast<char>(g)};
      Relation rel{NCPoly::word(gx), NCPoly::word(xg),
                   p->alphabet_.to_string(gx) + " = " + p->alphabet_.to_string(xg)};
      pending.push_back({rel.lhs - rel.rhs, "central " + name});
      p->all_relations_.push_back(rel);
    }
  }

  RuleSet rs(p->alphabet_);
  orient(rs, pending, spec.name);

  // Bounded completion: resolve overlaps up to word length 6.
  constexpr std::size_t kCompletionLength = 6;
  constexpr int kCompletionRounds = 16;
  for (int round = 0;; ++round) {
    std::vector<Pending> fresh;
    for (const auto& site : overlap_sites(rs.rules(), kCompletionLength)) {
      NCPoly diff = overlap_difference(rs, site.word, 0, site.k1, site.pos2, site.k2);
      if (!diff.is_zero()) fresh.push_back({diff, "completion"});
    }
    if (fresh.empty()) break;
    if (round == kCompletionRounds)
      throw AlgebraError("presentation '" + spec.name + "': bounded completion did not converge");
    orient(rs, fresh, spec.name);
  }

  p->rules_ = std::move(rs.rules());
  std::stable_sort(p->rules_.begin(), p->rules_.end(), [&](const RewriteRule& a, const RewriteRule& b) {
    return p->alphabet_.compare(a.lhs, b.lhs) < 0;
  });
  p->spec_ = std::move(spec);
  p->index_rules();
  return p;
}

PresentationPtr Presentation::from_rules(std::string name, Alphabet alphabet, std::vector<RewriteRule> rules) {
  std::shared_ptr<Presentation> p(new Presentation());
  p->spec_.name = std::move(name);
  p->spec_.generators = alphabet.generators();
  p->alphabet_ = std::move(alphabet);
  for (const auto& r : rules) {
    if (r.lhs.empty()) throw AlgebraError("rule with empty left-hand side");
    p->relations_.push_back({NCPoly::word(r.lhs), r.rhs, p->rule_to_string(r)});
  }
  p->all_relations_ = p->relations_;
  p->rules_ = std::move(rules);
  p->index_rules();
  return p;
}

void Presentation::index_rules() {
  rules_by_first_letter_.assign(alphabet_.size(), {});
  min_lhs_ = rules_.empty() ? 0 : rules_.front().lhs.size();
  for (std::size_t k = 0; k < rules_.size(); ++k) {
    const auto& lhs = rules_[k].lhs;
    for (char c : lhs)
      if (static_cast<Letter>(c) >= alphabet_.size()) throw AlgebraError("rule uses a letter outside the alphabet");
    rules_by_first_letter_[static_cast<Letter>(lhs[0])].push_back(k);
    min_lhs_ = std::min(min_lhs_, lhs.size());
  }
}

std::vector<RewriteRule> Presentation::completion_rules() const {
  std::vector<RewriteRule> out;
  for (const auto& r : rules_)
    if (r.origin == "completion") out.push_back(r);
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> Presentation::find_redex(const Word& w) const {
  if (rules_.empty() || w.size() < min_lhs_) return std::nullopt;
  for (std::size_t pos = 0; pos + min_lhs_ <= w.size(); ++pos) {
    auto letter = static_cast<Letter>(w[pos]);
    if (letter >= alphabet_.size()) throw AlgebraError("word uses a letter outside the alphabet of '" + name() + "'");
    for (auto k : rules_by_first_letter_[letter]) {
      const auto& lhs = rules_[k].lhs;
      if (w.compare(pos, lhs.size(), lhs) == 0) return std::make_pair(pos, k);
    }
  }
  for (char c : w)
    if (static_cast<Letter>(c) >= alphabet_.size())
      throw AlgebraError("word uses a letter outside the alphabet of '" + name() + "'");
  return std::nullopt;
}

NCPoly Presentation::normal_form(const Word& w) const {
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = cache_.find(w); it != cache_.end()) return it->second;
  }
  NCPoly result = reduce_uncached(NCPoly::word(w));
  std::lock_guard lock(cache_mutex_);
  cache_.emplace(w, result);
  return result;
}

NCPoly Presentation::reduce_uncached(const NCPoly& x) const {
  auto cmp = [this](const Word& a, const Word& b) { return alphabet_.compare(a, b) > 0; };
  std::map<Word, Scalar, decltype(cmp)> work(cmp);
  for (const auto& [w, c] : x.terms()) work.emplace(w, c);
  NCPoly out;
  std::uint64_t steps = 0;
  auto push = [&work](const Word& u, const Scalar& c) {
    auto [it, inserted] = work.try_emplace(u, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) work.erase(it);
    }
  };
  bool top = true;
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const Word& w = node.key();
    if (!top) {
      std::unique_lock lock(cache_mutex_);
      if (auto it = cache_.find(w); it != cache_.end()) {
        NCPoly known = it->second;
        lock.unlock();
        for (const auto& [u, c] : known.terms()) out.add(u, c * node.mapped());
        continue;
      }
    }
    top = false;
    if (auto hit = find_redex(w)) {
      if (++steps > step_budget_)
        throw RewriteBudgetExceeded("normal form in '" + name() + "' exceeded " + std::to_string(step_budget_) +
                                    " rewrite steps");
      const auto& rule = rules_[hit->second];
      Word prefix = w.substr(0, hit->first);
      Word suffix = w.substr(hit->first + rule.lhs.size());
      for (const auto& [u, c] : rule.rhs.terms()) push(prefix + u + suffix, c * node.mapped());
    } else {
      out.add(w, node.mapped());
    }
  }
  return out;
}

NCPoly Presentation::normal_form(const NCPoly& x) const {
  NCPoly out;
  for (const auto& [w, c] : x.terms()) {
    if (w.size() < min_lhs_ || rules_.empty()) {
      out.add(w, c);
      continue;
    }
    NCPoly reduced = normal_form(w);
    for (const auto& [u, d] : reduced.terms()) out.add(u, c * d);
  }
  return out;
}

NCPoly Presentation::multiply(const NCPoly& x, const NCPoly& y) const { return normal_form(nc_mul(x, y)); }

bool Presentation::equal(const NCPoly& x, const NCPoly& y) const { return normal_form(x - y).is_zero(); }

std::vector<Word> Presentation::basis_words(std::size_t max_len) const {
  std::vector<Word> out{Word{}};
  std::vector<Word> frontier{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (std::size_t g = 0; g < alphabet_.size(); ++g) {
        Word v = w + static_cast<char>(g);
        if (is_normal(v)) next.push_back(v);
      }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

PresentationPtr Presentation::specialize(const Bindings& b, std::string new_name) const {
  PresentationSpec spec = spec_;
  spec.name = new_name.empty() ? spec_.name : std::move(new_name);
  spec.relations.clear();
  for (const auto& rel : relations_)
    spec.relations.push_back(rel.lhs.substitute(b).to_string(alphabet_) + " = " +
                             rel.rhs.substitute(b).to_string(alphabet_));
  std::vector<std::string> params;
  for (const auto& name : spec.parameters)
    if (!b.count(symbol(name))) params.push_back(name);
  // Parameters bound to expressions in another parameter keep that one alive.
  for (const auto& [id, value] : b)
    for (auto s : value.symbols())
      if (symbol_kind(s) == SymbolKind::parameter &&
          std::find(params.begin(), params.end(), symbol_name(s)) == params.end())
        params.push_back(symbol_name(s));
  std::sort(params.begin(), params.end());
  spec.parameters = params;
  return build(std::move(spec));
}

std::string Presentation::rule_to_string(const RewriteRule& r) const {
  return alphabet_.to_string(r.lhs) + " -> " + r.rhs.to_string(alphabet_);
}

ConfluenceReport Presentation::confluence_probe(std::size_t samples, std::size_t max_len, std::uint64_t seed) const {
  ConfluenceReport report;
  report.presentation = name();
  report.samples = samples;
  report.max_len = max_len;
  report.seed = seed;

  std::mt19937_64 rng(seed);
  auto random_reduce = [&](const Word& start, std::mt19937_64& gen) {
    NCPoly work = NCPoly::word(start);
    std::uint64_t steps = 0;
    for (;;) {
      // All (term, position, rule) redexes of the current polynomial.
      std::vector<std::tuple<const Word*, std::size_t, std::size_t>> redexes;
      for (const auto& [w, c] : work.terms())
        for (std::size_t pos = 0; pos < w.size(); ++pos)
          for (std::size_t k = 0; k < rules_.size(); ++k)
            if (w.compare(pos, rules_[k].lhs.size(), rules_[k].lhs) == 0) redexes.emplace_back(&w, pos, k);
      if (redexes.empty()) return work;
      if (++steps > step_budget_) throw RewriteBudgetExceeded("confluence probe exceeded the step budget");
      std::uniform_int_distribution<std::size_t> pick(0, redexes.size() - 1);
      auto [wp, pos, k] = redexes[pick(gen)];
      Word w = *wp;
      Scalar c = work.coefficient(w);
      work.add(w, -c);
      Word prefix = w.substr(0, pos);
      Word suffix = w.substr(pos + rules_[k].lhs.size());
      for (const auto& [u, d] : rules_[k].rhs.terms()) work.add(prefix + u + suffix, c * d);
    }
  };

  std::uniform_int_distribution<std::size_t> length(1, std::max<std::size_t>(1, max_len));
  std::uniform_int_distribution<std::size_t> letter(0, alphabet_.size() - 1);
  std::set<Word> reported;
  for (std::size_t s = 0; s < samples && alphabet_.size() > 0; ++s) {
    Word w;
    auto n = length(rng);
    for (std::size_t i = 0; i < n; ++i) w.push_back(static_cast<char>(letter(rng)));
    std::mt19937_64 left(rng()), right(rng());
    NCPoly x = random_reduce(w, left);
    NCPoly y = random_reduce(w, right);
    if (x != y && reported.insert(w).second) report.counterexamples.emplace_back(w, x - y);
  }

  std::size_t max_lhs = 0;
  for (const auto& r : rules_) max_lhs = std::max(max_lhs, r.lhs.size());
  RuleSet rs(alphabet_);
  rs.rules() = rules_;
  for (const auto& site : overlap_sites(rules_, 2 * max_lhs)) {
    NCPoly diff = overlap_difference(rs, site.word, 0, site.k1, site.pos2, site.k2);
    report.overlaps.push_back({site.word, site.k1, site.k2, diff.is_zero(), diff});
  }
  return report;
}

NCPoly normal_form(const NCPoly& x, const Presentation& p) { return p.normal_form(x); }

bool alg_equal(const NCPoly& x, const NCPoly& y, const Presentation& p) { return p.equal(x, y); }

}  // namespace braidkit
