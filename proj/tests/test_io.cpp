#include "braidkit/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace braidkit;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path temp_dir(const char* tag) {
  fs::path d = fs::temp_directory_path() / (std::string("braidkit_io_") + tag);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

Json reencode(const Json& j) {
  std::string kind = document_kind(j);
  if (kind == "presentation") return to_json(presentation_from_json(j));
  if (kind == "structure") return to_json(structure_from_json(j));
  if (kind == "coaction") return to_json(coaction_from_json(j));
  return to_json(product_table_from_json(j));
}

}  // namespace

TEST_CASE("shipped files are the exported builtins") {
  fs::path dir = BRAIDKIT_PRESENTATIONS_DIR;
  for (const auto& name : Library::builtin_names()) {
    CAPTURE(name);
    fs::path file = dir / (name + ".json");
    REQUIRE(fs::exists(file));
    CHECK(slurp(file) == dump(Library::builtin_document(name)));
  }
}

TEST_CASE("round trips are byte exact") {
  for (const auto& name : Library::builtin_names()) {
    CAPTURE(name);
    Json j = Library::builtin_document(name);
    std::string text = dump(j);
    CHECK(dump(reencode(Json::parse(text))) == text);
  }
}

TEST_CASE("objects loaded from files equal the builtins") {
  fs::path dir = temp_dir("copies");
  for (const auto& name : Library::builtin_names()) {
    Json j = Library::builtin_document(name);
    j["name"] = "copy_" + name;
    write_text_file(dir / ("copy_" + name + ".json"), dump(j));
  }
  Library files({dir});
  Library builtins;
  for (const auto& name : builtin_presentation_names()) {
    auto a = files.presentation("copy_" + name);
    auto b = builtins.presentation(name);
    CHECK(a->rules().size() == b->rules().size());
    for (std::size_t i = 0; i < a->rules().size(); ++i) {
      CHECK(a->rules()[i].lhs == b->rules()[i].lhs);
      CHECK(a->rules()[i].rhs == b->rules()[i].rhs);
    }
  }
  for (const auto& name : builtin_structure_names()) {
    CAPTURE(name);
    // file structures name presentations that resolve to the builtins
    CHECK(compare_tables(files.structure("copy_" + name)->maps(), builtins.structure(name)->maps()).empty());
  }
  for (const auto& name : builtin_coaction_names()) {
    CoactionMap a = files.coaction("copy_" + name), b = builtins.coaction(name);
    CHECK(a.table == b.table);
    CHECK(a.source);
  }
  for (const auto& name : builtin_table_names()) {
    CHECK(files.table("copy_" + name).table == builtins.table(name).table);
  }
  CHECK(files.kind_of("copy_AR") == "presentation");
  CHECK(files.kind_of("copy_transmute_ar") == "product_table");
  CHECK(files.kind_of("nothing_here").empty());
  fs::remove_all(dir);
}

TEST_CASE("name resolution") {
  Library lib;
  CHECK(lib.presentation("ar")->name() == "AR");
  CHECK(lib.presentation("br_abcd")->name() == "BR_abcd");
  auto special = lib.presentation("TQR|r=q");
  CHECK_FALSE(special->spec().relations.empty());
  CHECK(special->normal_form(parse_poly("b*a", special->alphabet())) ==
        special->normal_form(parse_poly("q^-1*a*b", special->alphabet())));
  CHECK_THROWS(lib.presentation("nope"));
  CHECK_THROWS(lib.structure("nope"));
  auto entries = lib.list();
  CHECK(entries.size() == Library::builtin_names().size());
}

TEST_CASE("malformed documents") {
  Json j = Library::builtin_document("AR");
  Json no_version = j;
  no_version.erase("format_version");
  CHECK_THROWS_AS(document_kind(no_version), FormatError);
  Json future = j;
  future["format_version"] = 99;
  CHECK_THROWS_AS(document_kind(future), FormatError);
  Json bad_param = j;
  bad_param["parameters"] = Json::array({"s"});
  CHECK_THROWS_AS(presentation_from_json(bad_param), FormatError);
  Json bad_weight = j;
  bad_weight["generators"][0]["weight"] = "one";
  CHECK_THROWS_AS(presentation_from_json(bad_weight), FormatError);
  CHECK_THROWS_AS(structure_from_json(j), FormatError);

  Json s = Library::builtin_document("ar_hopf");
  s["delta"].erase("a");
  fs::path dir = temp_dir("bad");
  s["name"] = "broken";
  write_text_file(dir / "broken.json", dump(s));
  Library lib({dir});
  CHECK_THROWS(lib.structure("broken"));

  // a coaction file whose table disagrees with its adjoint formula
  Json c = Library::builtin_document("adjoint_ar");
  c["name"] = "tampered";
  c["coaction"]["b"] = "b@1";
  write_text_file(dir / "tampered.json", dump(c));
  CHECK_THROWS_AS(lib.coaction("tampered"), FormatError);
  write_text_file(dir / "garbage.json", "{ not json");
  CHECK_THROWS_AS(lib.presentation("garbage"), FormatError);
  fs::remove_all(dir);
}
