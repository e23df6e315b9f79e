#include "braidkit/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace braidkit {

namespace {

Json header(const char* kind) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["kind"] = kind;
  return j;
}

Json object_of(const std::map<std::string, std::string>& m) {
  Json j = Json::object();
  for (const auto& [k, v] : m) j[k] = v;
  return j;
}

std::map<std::string, std::string> map_of(const Json& j, const char* field) {
  std::map<std::string, std::string> out;
  if (!j.contains(field)) return out;
  if (!j.at(field).is_object()) throw FormatError(std::string("field '") + field + "' must be an object");
  for (const auto& [k, v] : j.at(field).items()) {
    if (!v.is_string()) throw FormatError(std::string("entry '") + k + "' of '" + field + "' must be a string");
    out[k] = v.get<std::string>();
  }
  return out;
}

std::string string_of(const Json& j, const char* field, bool required = true) {
  if (!j.contains(field)) {
    if (required) throw FormatError(std::string("missing field '") + field + "'");
    return {};
  }
  if (!j.at(field).is_string()) throw FormatError(std::string("field '") + field + "' must be a string");
  return j.at(field).get<std::string>();
}

std::vector<std::string> strings_of(const Json& j, const char* field) {
  std::vector<std::string> out;
  if (!j.contains(field)) return out;
  if (!j.at(field).is_array()) throw FormatError(std::string("field '") + field + "' must be a list");
  for (const auto& v : j.at(field)) {
    if (!v.is_string()) throw FormatError(std::string("field '") + field + "' must hold strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

void expect_kind(const Json& j, const std::string& kind) {
  std::string k = document_kind(j);
  if (k != kind) throw FormatError("expected a " + kind + " document, got " + k);
}

std::string lower(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

std::optional<std::string> builtin_presentation_name(const std::string& name) {
  for (const auto& n : builtin_presentation_names())
    if (lower(n) == lower(name)) return n;
  return std::nullopt;
}

bool contains(const std::vector<std::string>& v, const std::string& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

// Builtin coactions are adjoint coactions of these structures.
std::string adjoint_source(const std::string& coaction) {
  if (coaction == "adjoint_ar") return "ar_hopf";
  if (coaction == "adjoint_tqr") return "tqr_hopf";
  return {};
}

}  // namespace

Json to_json(const PresentationSpec& p) {
  Json j = header("presentation");
  j["name"] = p.name;
  Json gens = Json::array();
  for (const auto& g : p.generators) gens.push_back(Json{{"name", g.name}, {"weight", g.weight}});
  j["generators"] = gens;
  j["parameters"] = p.parameters;
  j["central"] = p.central;
  j["relations"] = p.relations;
  return j;
}

PresentationSpec presentation_from_json(const Json& j) {
  expect_kind(j, "presentation");
  PresentationSpec p;
  p.name = string_of(j, "name");
  if (!j.contains("generators") || !j.at("generators").is_array()) throw FormatError("missing list 'generators'");
  for (const auto& g : j.at("generators")) {
    if (!g.is_object() || !g.contains("name") || !g.at("name").is_string())
      throw FormatError("each generator needs a name");
    Generator gen{g.at("name").get<std::string>(), 1};
    if (g.contains("weight")) {
      if (!g.at("weight").is_number_integer()) throw FormatError("generator weight must be an integer");
      gen.weight = g.at("weight").get<int>();
    }
    p.generators.push_back(gen);
  }
  p.parameters = strings_of(j, "parameters");
  for (const auto& s : p.parameters)
    if (s != "q" && s != "r") throw FormatError("parameters must be a subset of {q, r}, got '" + s + "'");
  p.central = strings_of(j, "central");
  p.relations = strings_of(j, "relations");
  return p;
}

Json to_json(const StructureTable& t) {
  Json j = header("structure");
  j["name"] = t.name;
  j["presentation"] = t.presentation;
  j["mode"] = to_string(t.mode);
  j["delta"] = object_of(t.delta);
  j["counit"] = object_of(t.counit);
  j["antipode"] = object_of(t.antipode);
  if (!t.star.empty()) j["star"] = object_of(t.star);
  if (!t.braiding.empty()) j["braiding"] = object_of(t.braiding);
  if (!t.flip_rows.empty()) j["flip_rows"] = t.flip_rows;
  return j;
}

StructureTable structure_from_json(const Json& j) {
  expect_kind(j, "structure");
  StructureTable t;
  t.name = string_of(j, "name");
  t.presentation = string_of(j, "presentation");
  try {
    t.mode = parse_mode(string_of(j, "mode"));
  } catch (const AlgebraError& e) {
    throw FormatError(e.what());
  }
  t.delta = map_of(j, "delta");
  t.counit = map_of(j, "counit");
  t.antipode = map_of(j, "antipode");
  t.star = map_of(j, "star");
  t.braiding = map_of(j, "braiding");
  t.flip_rows = strings_of(j, "flip_rows");
  return t;
}

Json to_json(const CoactionText& c) {
  Json j = header("coaction");
  j["name"] = c.name;
  j["coacted"] = c.coacted;
  j["coacting"] = c.coacting;
  if (!c.adjoint_of.empty()) j["adjoint_of"] = c.adjoint_of;
  j["coaction"] = object_of(c.coaction);
  return j;
}

CoactionText coaction_from_json(const Json& j) {
  expect_kind(j, "coaction");
  return {string_of(j, "name"), string_of(j, "coacted"), string_of(j, "coacting"), string_of(j, "adjoint_of", false),
          map_of(j, "coaction")};
}

Json to_json(const ProductTableText& t) {
  Json j = header("product_table");
  j["name"] = t.name;
  j["host"] = t.host;
  j["target"] = t.target;
  j["product_table"] = object_of(t.product_table);
  return j;
}

ProductTableText product_table_from_json(const Json& j) {
  expect_kind(j, "product_table");
  return {string_of(j, "name"), string_of(j, "host"), string_of(j, "target"), map_of(j, "product_table")};
}

std::string document_kind(const Json& j) {
  if (!j.is_object()) throw FormatError("document must be an object");
  if (!j.contains("format_version")) throw FormatError("missing field 'format_version'");
  if (!j.at("format_version").is_number_integer() || j.at("format_version").get<int>() != kFormatVersion)
    throw FormatError("unsupported format_version " + j.at("format_version").dump());
  return string_of(j, "kind");
}

CoactionText to_text(const CoactionMap& beta, const std::string& adjoint_of) {
  CoactionText c{beta.name, beta.coacted->name(), beta.coacting->name(), adjoint_of, {}};
  const Alphabet& h = beta.coacted->alphabet();
  for (std::size_t g = 0; g < h.size(); ++g) c.coaction[h[g].name] = beta.table[g].to_string(beta.legs());
  return c;
}

ProductTableText to_text(const MultiplicationTable& t, const std::string& target) {
  ProductTableText out{t.name, t.host->name(), target, {}};
  std::size_t n = t.target_alphabet.size();
  for (std::size_t i = 0; i < n * n; ++i)
    out.product_table[t.target_alphabet[i / n].name + "@" + t.target_alphabet[i % n].name] =
        t.table[i].to_string(t.host->alphabet());
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out << text;
}

// ---------------------------------------------------------------------------
// Library

Library::Library(std::vector<std::filesystem::path> search_dirs) : dirs_(std::move(search_dirs)) {}

std::vector<std::string> Library::builtin_names() {
  std::vector<std::string> out = builtin_presentation_names();
  for (const auto* v : {&builtin_structure_names(), &builtin_coaction_names(), &builtin_table_names()})
    out.insert(out.end(), v->begin(), v->end());
  return out;
}

Json Library::builtin_document(const std::string& name) {
  if (auto p = builtin_presentation_name(name)) return to_json(builtin_spec(*p));
  if (contains(builtin_structure_names(), name)) return to_json(builtin_structure_table(name));
  if (contains(builtin_coaction_names(), name)) return to_json(to_text(builtin_coaction(name), adjoint_source(name)));
  if (contains(builtin_table_names(), name)) return to_json(to_text(builtin_table(name), "BR_abcd"));
  throw AlgebraError("unknown name '" + name + "'");
}

std::optional<Json> Library::find_file(const std::string& name) const {
  for (const auto& dir : dirs_) {
    auto path = dir / (name + ".json");
    if (std::filesystem::is_regular_file(path)) return read_json_file(path);
  }
  if (name.size() > 5 && name.ends_with(".json") && std::filesystem::is_regular_file(name)) return read_json_file(name);
  return std::nullopt;
}

Json Library::load_kind(const std::string& name, const std::string& kind) const {
  auto j = find_file(name);
  if (!j) throw AlgebraError("unknown " + kind + " '" + name + "'");
  expect_kind(*j, kind);
  return *j;
}

PresentationPtr Library::presentation(const std::string& name) const {
  if (auto bar = name.find('|'); bar != std::string::npos) {
    PresentationPtr base = presentation(name.substr(0, bar));
    Bindings b;
    std::stringstream list(name.substr(bar + 1));
    for (std::string item; std::getline(list, item, ',');) b = parse_binding(item, b);
    return base->specialize(b, base->name() + name.substr(bar));
  }
  if (auto p = builtin_presentation_name(name)) return builtin(*p);
  return Presentation::build(presentation_from_json(load_kind(name, "presentation")));
}

StructurePtr Library::structure(const std::string& name) const {
  if (contains(builtin_structure_names(), name)) return builtin_structure(name);
  StructureTable t = structure_from_json(load_kind(name, "structure"));
  return std::make_shared<const Structure>(build_structure(t, presentation(t.presentation)));
}

CoactionMap Library::coaction(const std::string& name) const {
  if (contains(builtin_coaction_names(), name)) return builtin_coaction(name);
  CoactionText c = coaction_from_json(load_kind(name, "coaction"));
  std::vector<std::pair<std::string, std::string>> entries(c.coaction.begin(), c.coaction.end());
  CoactionMap beta = coaction_from_text(c.name, presentation(c.coacted), presentation(c.coacting), entries);
  if (!c.adjoint_of.empty()) {
    CoactionMap adj = adjoint_coaction(structure(c.adjoint_of), c.name);
    for (std::size_t g = 0; g < beta.table.size(); ++g)
      if (beta.table[g] != adj.table[g])
        throw FormatError(c.name + ": entry for " + beta.coacted->alphabet()[g].name +
                          " differs from the adjoint coaction of " + c.adjoint_of);
    beta.source = adj.source;
  }
  return beta;
}

MultiplicationTable Library::table(const std::string& name) const {
  if (contains(builtin_table_names(), name)) return builtin_table(name);
  ProductTableText t = product_table_from_json(load_kind(name, "product_table"));
  std::vector<std::pair<std::string, std::string>> entries(t.product_table.begin(), t.product_table.end());
  return table_from_text(t.name, presentation(t.host), presentation(t.target)->alphabet(), entries);
}

std::string Library::kind_of(const std::string& name) const {
  if (builtin_presentation_name(name) || name.find('|') != std::string::npos) return "presentation";
  if (contains(builtin_structure_names(), name)) return "structure";
  if (contains(builtin_coaction_names(), name)) return "coaction";
  if (contains(builtin_table_names(), name)) return "product_table";
  if (auto j = find_file(name)) return document_kind(*j);
  return {};
}

std::vector<CatalogEntry> Library::list() const {
  std::vector<CatalogEntry> out;
  for (const auto& n : builtin_presentation_names()) out.push_back({n, "presentation", "builtin"});
  for (const auto& n : builtin_structure_names()) out.push_back({n, "structure", "builtin"});
  for (const auto& n : builtin_coaction_names()) out.push_back({n, "coaction", "builtin"});
  for (const auto& n : builtin_table_names()) out.push_back({n, "product_table", "builtin"});
  for (const auto& dir : dirs_) {
    if (!std::filesystem::is_directory(dir)) continue;
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
      if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      try {
        Json j = read_json_file(f);
        std::string name = string_of(j, "name");
        bool seen = std::any_of(out.begin(), out.end(), [&](const CatalogEntry& e) { return e.name == name; });
        if (!seen) out.push_back({name, document_kind(j), f.string()});
      } catch (const FormatError&) {
        // not a braidkit document
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports

Json to_json(const CheckReport& r) {
  Json j;
  j["axiom"] = r.axiom;
  j["structure"] = r.structure;
  j["max_word_len"] = r.word_length_bound;
  j["status"] = r.holds() ? "holds" : "fails";
  j["cases"] = r.cases;
  j["failures"] = r.failures;
  Json w = Json::array();
  for (const auto& x : r.witnesses) w.push_back(Json{{"inputs", x.inputs}, {"residual", x.residual_text}});
  j["witnesses"] = w;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

Json to_json(const ConfluenceReport& r, const Presentation& p) {
  Json j;
  j["presentation"] = r.presentation;
  j["samples"] = r.samples;
  j["max_len"] = r.max_len;
  j["seed"] = r.seed;
  j["status"] = r.confluent() ? "holds" : "fails";
  Json cex = Json::array();
  for (const auto& [w, d] : r.counterexamples)
    cex.push_back(Json{{"word", p.alphabet().to_string(w)}, {"difference", d.to_string(p.alphabet())}});
  j["counterexamples"] = cex;
  std::size_t unresolved = 0;
  for (const auto& o : r.overlaps) unresolved += o.resolves ? 0 : 1;
  j["overlaps"] = r.overlaps.size();
  j["unresolved_overlaps"] = unresolved;
  return j;
}

Json to_json(const SolutionBranch& b) {
  Json j;
  j["status"] = b.solved() ? "solved" : "stuck";
  Json assign = Json::object();
  std::vector<std::string> zero;
  for (const auto& [name, v] : b.assignment) {
    if (v.is_zero())
      zero.push_back(name);
    else
      assign[name] = v.to_string();
  }
  j["assignment"] = assign;
  j["zero"] = zero;
  std::vector<std::string> assumptions;
  for (const auto& a : b.assumptions) assumptions.push_back(a.to_string() + " != 0");
  j["assumptions"] = assumptions;
  j["free_unknowns"] = b.free_unknowns;
  std::vector<std::string> residual;
  for (const auto& r : b.residual) residual.push_back(r.to_string());
  j["residual"] = residual;
  j["trace"] = b.trace;
  return j;
}

}  // namespace braidkit
